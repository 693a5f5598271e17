#pragma once

// Integral group ring Z[G] on a canonical-form basis of G.

#include <concepts>
#include <map>
#include <string>
#include <utility>

#include "gw/error.hpp"
#include "gw/exact.hpp"

namespace gw {

template <class G>
concept CanonicalGroupElement = requires(const G& g, const G& h) {
  { g * h } -> std::convertible_to<G>;
  { g.inverse() } -> std::convertible_to<G>;
  { g.identity() } -> std::convertible_to<G>;
  { g < h } -> std::convertible_to<bool>;
  { g == h } -> std::convertible_to<bool>;
  { g.to_string() } -> std::convertible_to<std::string>;
};

template <CanonicalGroupElement G>
class GroupRing {
 public:
  /// The zero element of the ring containing `prototype`.
  explicit GroupRing(const G& prototype) : identity_(prototype.identity()) {}

  static GroupRing of(const G& g, const BigInt& c = 1) {
    GroupRing out(g);
    out.add_term(g, c);
    return out;
  }

  GroupRing one() const { return of(identity_); }
  GroupRing zero() const { return GroupRing(identity_); }

  const std::map<G, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const G& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add_term(const G& g, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  GroupRing operator-() const {
    GroupRing out(*this);
    for (auto& [g, c] : out.terms_) c = -c;
    return out;
  }
  GroupRing& operator+=(const GroupRing& o) {
    for (const auto& [g, c] : o.terms_) add_term(g, c);
    return *this;
  }
  GroupRing& operator-=(const GroupRing& o) {
    for (const auto& [g, c] : o.terms_) add_term(g, -c);
    return *this;
  }
  friend GroupRing operator+(GroupRing a, const GroupRing& b) { return a += b; }
  friend GroupRing operator-(GroupRing a, const GroupRing& b) { return a -= b; }
  friend GroupRing operator*(const GroupRing& a, const GroupRing& b) {
    GroupRing out(a.identity_);
    for (const auto& [g, c] : a.terms_)
      for (const auto& [h, d] : b.terms_) out.add_term(g * h, c * d);
    return out;
  }
  friend bool operator==(const GroupRing& a, const GroupRing& b) { return a.terms_ == b.terms_; }

  /// Terms in basis order, "1 + a^2 - 2*b a".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [g, c] : terms_) {
      const bool unit = g == identity_;
      BigInt mag = abs(c);
      std::string body = unit ? mag.get_str() : (mag == 1 ? g.to_string() : mag.get_str() + "*" + g.to_string());
      if (first) out += (c < 0 ? "-" : "") + body;
      else out += (c < 0 ? " - " : " + ") + body;
      first = false;
    }
    return out;
  }

 private:
  G identity_;
  std::map<G, BigInt> terms_;
};

}  // namespace gw
