#include "gw/zx_poly.hpp"

#include <algorithm>

#include "gw/error.hpp"

namespace gw {
namespace {

std::string format_terms(const std::vector<std::pair<long, BigInt>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    BigInt mag = abs(c);
    std::string mono = e == 0 ? "" : (e == 1 ? "x" : "x^" + std::to_string(e));
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

}  // namespace

ZxLaurent ZxLaurent::monomial(long e, const BigInt& c) {
  ZxLaurent out;
  out.add_term(e, c);
  return out;
}

BigInt ZxLaurent::coefficient(long e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

long ZxLaurent::min_exponent() const {
  if (is_zero()) throw Error(ErrorKind::ZeroElement, "exponent range of zero");
  return terms_.begin()->first;
}

long ZxLaurent::max_exponent() const {
  if (is_zero()) throw Error(ErrorKind::ZeroElement, "exponent range of zero");
  return terms_.rbegin()->first;
}

void ZxLaurent::add_term(long e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ZxLaurent ZxLaurent::shifted(long k) const {
  ZxLaurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

ZxLaurent ZxLaurent::operator-() const {
  ZxLaurent out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

ZxLaurent operator+(const ZxLaurent& a, const ZxLaurent& b) {
  ZxLaurent out(a);
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

ZxLaurent operator-(const ZxLaurent& a, const ZxLaurent& b) { return a + (-b); }

ZxLaurent operator*(const ZxLaurent& a, const ZxLaurent& b) {
  ZxLaurent out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

std::string ZxLaurent::to_string() const {
  std::vector<std::pair<long, BigInt>> t(terms_.rbegin(), terms_.rend());
  return format_terms(t);
}

ZxPoly::ZxPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void ZxPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ZxPoly ZxPoly::from_laurent(const ZxLaurent& p) {
  if (p.is_zero()) return {};
  if (p.min_exponent() < 0)
    throw Error(ErrorKind::Precondition, p.to_string() + " has negative exponents");
  std::vector<BigInt> c(static_cast<std::size_t>(p.max_exponent()) + 1, BigInt(0));
  for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e)] = v;
  return ZxPoly(std::move(c));
}

ZxLaurent ZxPoly::to_laurent() const {
  ZxLaurent out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.add_term(static_cast<long>(i), coeffs_[i]);
  return out;
}

BigInt ZxPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) g = gcd(g, c);
  return g;
}

ZxPoly ZxPoly::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> c(coeffs_);
  for (auto& v : c) v /= g;
  return ZxPoly(std::move(c));
}

ZxPoly ZxPoly::operator-() const {
  ZxPoly out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

ZxPoly operator+(const ZxPoly& a, const ZxPoly& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return ZxPoly(std::move(c));
}

ZxPoly operator-(const ZxPoly& a, const ZxPoly& b) { return a + (-b); }

ZxPoly operator*(const ZxPoly& a, const ZxPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return ZxPoly(std::move(c));
}

ZxPoly operator*(const BigInt& k, const ZxPoly& b) {
  std::vector<BigInt> c(b.coeffs_);
  for (auto& v : c) v *= k;
  return ZxPoly(std::move(c));
}

std::string ZxPoly::to_string() const {
  std::vector<std::pair<long, BigInt>> t;
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    if (coeffs_[i] != 0) t.emplace_back(static_cast<long>(i), coeffs_[i]);
  return format_terms(t);
}

ZxLaurent pi_project(const SkewElement& w) {
  ZxLaurent out;
  for (const auto& [i, c] : w.coefficients()) out.add_term(i, c.augment());
  return out;
}

Realisation tilde_realise(const ZxLaurent& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroElement, "realisation of zero");
  long k = -p.min_exponent();
  return {ZxPoly::from_laurent(p.shifted(k)), k};
}

ZxPoly zx_pseudo_remainder(const ZxPoly& a, const ZxPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "pseudo-remainder by zero");
  std::vector<BigInt> r = a.coeffs();
  const auto& bc = b.coeffs();
  const long db = b.degree();
  const BigInt lb = b.leading();
  long dr = static_cast<long>(r.size()) - 1;
  long e = dr - db + 1;
  while (dr >= db && !r.empty()) {
    BigInt lr = r.back();
    for (auto& v : r) v *= lb;
    const long off = dr - db;
    for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(off + j)] -= lr * bc[static_cast<std::size_t>(j)];
    --e;
    while (!r.empty() && r.back() == 0) r.pop_back();
    dr = static_cast<long>(r.size()) - 1;
  }
  ZxPoly rem(std::move(r));
  if (e > 0) {
    BigInt f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    rem = f * rem;
  }
  return rem;
}

ZxPoly zx_gcd(const ZxPoly& a, const ZxPoly& b) {
  if (a.is_zero()) return b.leading() < 0 ? -b : b;
  if (b.is_zero()) return a.leading() < 0 ? -a : a;
  BigInt c = gcd(a.content(), b.content());
  ZxPoly x = a.primitive_part();
  ZxPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    ZxPoly r = zx_pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return c * x.primitive_part();
}

std::optional<std::pair<ZxPoly, ZxPoly>> zx_divmod_exact(const ZxPoly& b, const ZxPoly& a) {
  if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
  std::vector<BigInt> r = b.coeffs();
  const long da = a.degree();
  const BigInt la = a.leading();
  std::vector<BigInt> q(r.size() > static_cast<std::size_t>(da) ? r.size() - static_cast<std::size_t>(da) : 0, BigInt(0));
  while (!r.empty() && static_cast<long>(r.size()) - 1 >= da) {
    const long off = static_cast<long>(r.size()) - 1 - da;
    if (!mpz_divisible_p(r.back().get_mpz_t(), la.get_mpz_t())) return std::nullopt;
    BigInt t = r.back() / la;
    q[static_cast<std::size_t>(off)] = t;
    for (long j = 0; j <= da; ++j)
      r[static_cast<std::size_t>(off + j)] -= t * a.coeffs()[static_cast<std::size_t>(j)];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return std::make_pair(ZxPoly(std::move(q)), ZxPoly(std::move(r)));
}

std::optional<ZxPoly> zx_divides(const ZxPoly& a, const ZxPoly& b) {
  if (a.is_zero() || a.constant_term() == 0)
    throw Error(ErrorKind::Precondition, "divisor " + a.to_string() + " must have nonzero constant term");
  if (b.is_zero() || b.constant_term() == 0)
    throw Error(ErrorKind::Precondition, "dividend " + b.to_string() + " must have nonzero constant term");
  auto qr = zx_divmod_exact(b, a);
  if (!qr || !qr->second.is_zero()) return std::nullopt;
  return qr->first;
}

}  // namespace gw
