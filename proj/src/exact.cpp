#include "gw/exact.hpp"

#include "gw/error.hpp"

namespace gw {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::SingularMatrix: return "singular-matrix";
    case ErrorKind::RankMismatch: return "rank-mismatch";
    case ErrorKind::InstanceMismatch: return "instance-mismatch";
    case ErrorKind::ZeroElement: return "zero-element";
    case ErrorKind::NonMonicDivisor: return "non-monic-divisor";
    case ErrorKind::DivisionStalled: return "division-stalled";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::UndeclaredGenerator: return "undeclared-generator";
    case ErrorKind::NotInvertible: return "not-invertible";
    case ErrorKind::IdentityNotVerified: return "identity-not-verified";
    case ErrorKind::CertificateFailure: return "certificate-failure";
    case ErrorKind::AnalysisFailure: return "analysis-failure";
    case ErrorKind::Mismatch: return "mismatch";
    case ErrorKind::Overflow: return "overflow";
  }
  return "unknown";
}

std::string to_string(const BigInt& v) { return v.get_str(); }

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(long e) const {
  Rational base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rational out(1);
  while (k) {
    if (k & 1) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }
Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.q_, b.q_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const { return q_.get_str(); }

std::string Mat2Q::to_string() const {
  return "[[" + a11.to_string() + "," + a12.to_string() + "],[" + a21.to_string() + "," +
         a22.to_string() + "]]";
}

Mat2Q mat_mul(const Mat2Q& l, const Mat2Q& r) {
  return {l.a11 * r.a11 + l.a12 * r.a21, l.a11 * r.a12 + l.a12 * r.a22,
          l.a21 * r.a11 + l.a22 * r.a21, l.a21 * r.a12 + l.a22 * r.a22};
}

Rational mat_det(const Mat2Q& m) { return m.a11 * m.a22 - m.a12 * m.a21; }

Mat2Q mat_inv(const Mat2Q& m) {
  Rational d = mat_det(m);
  if (d.is_zero()) throw Error(ErrorKind::SingularMatrix, "matrix " + m.to_string() + " is singular");
  Rational id = d.inverse();
  return {m.a22 * id, -m.a12 * id, -m.a21 * id, m.a11 * id};
}

Mat2Q mat_pow(const Mat2Q& m, long e) {
  Mat2Q base = e < 0 ? mat_inv(m) : m;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Mat2Q out;
  while (k) {
    if (k & 1) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

}  // namespace gw
