#pragma once

// Exact integers, rationals and 2x2 rational matrices.

#include <compare>
#include <string>

#include <gmpxx.h>

namespace gw {

using BigInt = mpz_class;

std::string to_string(const BigInt& v);

/// A rational number kept in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  Rational inverse() const;
  Rational pow(long e) const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string to_string() const;

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  mpq_class q_;
};

/// 2x2 matrix over the rationals, row-major.
struct Mat2Q {
  Rational a11{1}, a12{0}, a21{0}, a22{1};

  static Mat2Q identity() { return {}; }

  friend bool operator==(const Mat2Q&, const Mat2Q&) = default;
  std::string to_string() const;
};

Mat2Q mat_mul(const Mat2Q& l, const Mat2Q& r);
Rational mat_det(const Mat2Q& m);
/// Throws Error(SingularMatrix) when det(m) = 0.
Mat2Q mat_inv(const Mat2Q& m);
Mat2Q mat_pow(const Mat2Q& m, long e);

inline Mat2Q operator*(const Mat2Q& l, const Mat2Q& r) { return mat_mul(l, r); }

}  // namespace gw
