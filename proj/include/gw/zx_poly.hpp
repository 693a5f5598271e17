#pragma once

// Z[x, x^-1] and Z[x]: the projection of the skew ring onto the group ring
// of the abelianization, the shift to a polynomial with nonzero constant
// term, and gcd / exact division in Z[x].

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gw/exact.hpp"
#include "gw/skew.hpp"

namespace gw {

class ZxLaurent {
 public:
  using TermMap = std::map<long, BigInt>;

  ZxLaurent() = default;
  static ZxLaurent monomial(long e, const BigInt& c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(long e) const;
  long min_exponent() const;
  long max_exponent() const;

  void add_term(long e, const BigInt& c);
  ZxLaurent shifted(long k) const;

  ZxLaurent operator-() const;
  friend ZxLaurent operator+(const ZxLaurent& a, const ZxLaurent& b);
  friend ZxLaurent operator-(const ZxLaurent& a, const ZxLaurent& b);
  friend ZxLaurent operator*(const ZxLaurent& a, const ZxLaurent& b);
  friend bool operator==(const ZxLaurent&, const ZxLaurent&) = default;

  /// Descending exponents: "x^10 - x^5 + 1", "1 - 2*x^-5" style is not used.
  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Polynomial in Z[x]; coeffs()[i] is the coefficient of x^i, with no
/// trailing zeros (the zero polynomial has no coefficients).
class ZxPoly {
 public:
  ZxPoly() = default;
  explicit ZxPoly(std::vector<BigInt> coeffs);
  static ZxPoly from_laurent(const ZxLaurent& p);  // requires no negative exponents

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  BigInt leading() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }
  BigInt constant_term() const { return coeffs_.empty() ? BigInt(0) : coeffs_.front(); }

  BigInt content() const;
  ZxPoly primitive_part() const;
  ZxLaurent to_laurent() const;

  ZxPoly operator-() const;
  friend ZxPoly operator+(const ZxPoly& a, const ZxPoly& b);
  friend ZxPoly operator-(const ZxPoly& a, const ZxPoly& b);
  friend ZxPoly operator*(const ZxPoly& a, const ZxPoly& b);
  friend ZxPoly operator*(const BigInt& c, const ZxPoly& b);
  friend bool operator==(const ZxPoly&, const ZxPoly&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// The projection sending p, q to 1 and v to x.
ZxLaurent pi_project(const SkewElement& w);

struct Realisation {
  ZxPoly poly;
  long shift;  // poly = x^shift * input
};

/// Throws Error(ZeroElement) on zero input.
Realisation tilde_realise(const ZxLaurent& p);

/// gcd in Z[x], positive leading coefficient.
ZxPoly zx_gcd(const ZxPoly& a, const ZxPoly& b);

/// Quotient b / a when a divides b exactly in Z[x]. Both inputs must have
/// nonzero constant terms (Error(Precondition) otherwise).
std::optional<ZxPoly> zx_divides(const ZxPoly& a, const ZxPoly& b);

/// Division with remainder by a polynomial whose leading coefficient
/// divides every intermediate leading coefficient; nullopt if it does not.
std::optional<std::pair<ZxPoly, ZxPoly>> zx_divmod_exact(const ZxPoly& b, const ZxPoly& a);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
ZxPoly zx_pseudo_remainder(const ZxPoly& a, const ZxPoly& b);

}  // namespace gw
