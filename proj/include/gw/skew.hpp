#pragma once

// The twisted Laurent ring Z[Z^k][v, v^-1; sigma]. Elements are written with
// coefficients to the right of powers of v, sum_i v^i * c_i, and a
// coefficient crosses v^j moving right as c * v^j = v^j * sigma^j(c), where
// sigma(c) = v^-1 c v acts on exponent vectors through a unimodular matrix.

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gw/laurent.hpp"

namespace gw {

using IntSquareMatrix = std::vector<std::vector<long>>;

class LatticeAutomorphism {
 public:
  /// Columns of `matrix` are the exponent vectors of the images of the
  /// coefficient variables. Throws Error(NotInvertible) unless |det| = 1.
  explicit LatticeAutomorphism(IntSquareMatrix matrix);

  std::size_t rank() const { return matrix_.size(); }
  const IntSquareMatrix& matrix() const { return matrix_; }
  const IntSquareMatrix& inverse_matrix() const { return inverse_; }
  /// Multiplicative order, or 0 if none was found up to a small bound.
  long order() const { return order_; }

  ExponentVector apply(const ExponentVector& e, long power) const;

  friend bool operator==(const LatticeAutomorphism& a, const LatticeAutomorphism& b) {
    return a.matrix_ == b.matrix_;
  }

 private:
  IntSquareMatrix matrix_;
  IntSquareMatrix inverse_;
  long order_ = 0;
};

struct SkewRing {
  LatticeAutomorphism sigma;
  std::vector<std::string> coefficient_names;
  std::string variable_name = "v";

  std::size_t rank() const { return sigma.rank(); }

  /// Z(H/H'') for the trefoil group H: coefficients Z[p, q], with
  /// sigma(p) = q and sigma(q) = q p^-1.
  static std::shared_ptr<const SkewRing> trefoil();
};

using SkewRingPtr = std::shared_ptr<const SkewRing>;

LaurentPoly sk_sigma(const SkewRing& ring, const LaurentPoly& a, long power);

enum class MonicLevel {
  GroupElement,  // extreme coefficients are monomials with coefficient +1
  SignedUnit,    // extreme coefficients are monomials with coefficient +-1
};

class SkewElement {
 public:
  using CoefficientMap = std::map<long, LaurentPoly>;

  explicit SkewElement(SkewRingPtr ring) : ring_(std::move(ring)) {}

  /// v^vexp * c
  static SkewElement term(SkewRingPtr ring, long vexp, const LaurentPoly& c);
  static SkewElement constant(SkewRingPtr ring, const BigInt& c);

  const SkewRingPtr& ring() const { return ring_; }
  const CoefficientMap& coefficients() const { return coeffs_; }
  LaurentPoly coefficient(long vexp) const;
  bool is_zero() const { return coeffs_.empty(); }

  SkewElement one() const { return constant(ring_, 1); }
  SkewElement zero() const { return SkewElement(ring_); }

  /// Top and bottom v-exponents and their difference (the degree).
  /// All throw Error(ZeroElement) on zero.
  long top() const;
  long bottom() const;
  long degree() const { return top() - bottom(); }
  bool is_monic(MonicLevel level = MonicLevel::GroupElement) const;

  void add_term(long vexp, const LaurentPoly& c);

  SkewElement operator-() const;
  friend SkewElement operator+(const SkewElement& a, const SkewElement& b);
  friend SkewElement operator-(const SkewElement& a, const SkewElement& b);
  friend SkewElement operator*(const SkewElement& a, const SkewElement& b);
  SkewElement& operator+=(const SkewElement& o);
  SkewElement& operator-=(const SkewElement& o);

  friend bool operator==(const SkewElement& a, const SkewElement& b);

  /// "v^-5*(p^2) + v^0*(-1)", ascending in the v-exponent.
  std::string to_string() const;

 private:
  void check_instance(const SkewElement& o) const;

  SkewRingPtr ring_;
  CoefficientMap coeffs_;
};

inline SkewElement sk_mul(const SkewElement& a, const SkewElement& b) { return a * b; }
inline long sk_degree(const SkewElement& w) { return w.degree(); }
inline bool sk_is_monic(const SkewElement& w, MonicLevel level = MonicLevel::GroupElement) {
  return w.is_monic(level);
}

/// One round of top-term elimination: quotient term v^shift * factor.
struct DivisionStep {
  long shift;
  LaurentPoly factor;
};

/// a = divisor * quotient + remainder, remainder zero or of smaller degree.
struct DivisionResult {
  SkewElement quotient;
  SkewElement remainder;
  std::vector<DivisionStep> steps;
};

/// Right-quotient Euclidean division killing the top term each round.
/// Accepts divisors that are monic at the SignedUnit level. Throws
/// Error(NonMonicDivisor) or Error(DivisionStalled) when the iteration cap
/// (top - bottom of a, plus deg b, plus 8) is exceeded.
DivisionResult sk_euclid_div(const SkewElement& a, const SkewElement& b);

}  // namespace gw
