#include "gw/laurent.hpp"

#include "gw/error.hpp"

namespace gw {

LaurentPoly LaurentPoly::constant(std::size_t rank, const BigInt& c) {
  LaurentPoly out(rank);
  out.add_term(ExponentVector(rank, 0), c);
  return out;
}

LaurentPoly LaurentPoly::monomial(ExponentVector exponent, const BigInt& c) {
  LaurentPoly out(exponent.size());
  out.add_term(exponent, c);
  return out;
}

BigInt LaurentPoly::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(const ExponentVector& e, const BigInt& c) {
  if (e.size() != rank_)
    throw Error(ErrorKind::RankMismatch, "exponent vector of length " + std::to_string(e.size()) +
                                             " in rank " + std::to_string(rank_) + " ring");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_rank(const LaurentPoly& o) const {
  if (o.rank_ != rank_)
    throw Error(ErrorKind::RankMismatch,
                "rank " + std::to_string(rank_) + " vs rank " + std::to_string(o.rank_));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_rank(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_rank(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out(a);
  out += b;
  return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out(a);
  out -= b;
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_rank(b);
  LaurentPoly out(a.rank_);
  ExponentVector e(a.rank_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

BigInt LaurentPoly::augment() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::vector<std::string> default_variable_names(std::size_t rank) {
  if (rank == 2) return {"p", "q"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rank; ++i) names.push_back("t" + std::to_string(i + 1));
  return names;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names_in) const {
  if (terms_.empty()) return "0";
  const auto names = names_in.empty() ? default_variable_names(rank_) : names_in;
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    BigInt mag = abs(c);
    std::string body;
    if (mono.empty()) body = mag.get_str();
    else if (mag == 1) body = mono;
    else body = mag.get_str() + "*" + mono;
    if (first) out += (c < 0 ? "-" : "") + body;
    else out += (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

std::optional<UnitInfo> lp_unit_info(const LaurentPoly& a) {
  if (a.num_terms() != 1) return std::nullopt;
  const auto& [e, c] = *a.terms().begin();
  if (c != 1 && c != -1) return std::nullopt;
  return UnitInfo{c > 0 ? 1 : -1, e, c == 1};
}

LaurentPoly lp_unit_inverse(const LaurentPoly& a) {
  auto u = lp_unit_info(a);
  if (!u) throw Error(ErrorKind::NotInvertible, a.to_string() + " is not a unit");
  ExponentVector inv(u->exponent.size());
  for (std::size_t i = 0; i < inv.size(); ++i) inv[i] = -u->exponent[i];
  return LaurentPoly::monomial(inv, u->sign);
}

}  // namespace gw
