#pragma once

// Sparse Laurent polynomials over Z in k commuting variables, i.e. the
// integral group ring of a free abelian group of rank k.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gw/exact.hpp"

namespace gw {

using ExponentVector = std::vector<long>;

class LaurentPoly {
 public:
  using TermMap = std::map<ExponentVector, BigInt>;

  explicit LaurentPoly(std::size_t rank = 2) : rank_(rank) {}

  static LaurentPoly constant(std::size_t rank, const BigInt& c);
  static LaurentPoly monomial(ExponentVector exponent, const BigInt& c = 1);

  std::size_t rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const ExponentVector& e) const;

  /// Adds c * x^e in place, pruning the entry if it cancels.
  void add_term(const ExponentVector& e, const BigInt& c);

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Sum of all coefficients (the augmentation).
  BigInt augment() const;

  /// Applies `f` to every exponent vector. `f` must be injective.
  template <class F>
  LaurentPoly map_exponents(F&& f) const {
    LaurentPoly out(rank_);
    for (const auto& [e, c] : terms_) out.add_term(f(e), c);
    return out;
  }

  /// Deterministic text, terms in descending lexicographic order,
  /// e.g. "p^2*q^-1 + 3". Default names are p, q for rank 2.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void check_rank(const LaurentPoly& o) const;

  std::size_t rank_;
  TermMap terms_;
};

/// Result of the unit test: a single term with coefficient +1 or -1.
/// `group_element` is true when the coefficient is exactly +1.
struct UnitInfo {
  int sign;
  ExponentVector exponent;
  bool group_element;
};

std::optional<UnitInfo> lp_unit_info(const LaurentPoly& a);
inline bool lp_is_unit(const LaurentPoly& a) { return lp_unit_info(a).has_value(); }
inline bool lp_is_group_element(const LaurentPoly& a) {
  auto u = lp_unit_info(a);
  return u && u->group_element;
}
/// Inverse of a unit; throws Error(NotInvertible) otherwise.
LaurentPoly lp_unit_inverse(const LaurentPoly& a);

inline LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
inline LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
inline BigInt lp_augment(const LaurentPoly& a) { return a.augment(); }

std::vector<std::string> default_variable_names(std::size_t rank);

}  // namespace gw
