#include "gw/smith.hpp"

#include <stdexcept>
#include <utility>

#include "gw/error.hpp"

namespace gw {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::Precondition, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::Precondition, "matrix dimension mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::string IntMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < cols_; ++j) out += (j ? "," : "") + (*this)(i, j).get_str();
    out += "]";
  }
  return out + "]";
}

BigInt determinant(const IntMatrix& m_in) {
  if (m_in.rows() != m_in.cols()) throw Error(ErrorKind::Precondition, "determinant of a non-square matrix");
  const std::size_t n = m_in.rows();
  if (n == 0) return 1;
  IntMatrix m = m_in;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<BigInt> SmithResult::diagonal() const {
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < d.rows() && i < d.cols(); ++i) out.push_back(d(i, i));
  return out;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row_dst += k * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& k) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += k * m(src, j);
}
void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& k) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += k * m(i, src);
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithResult res{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& d = res.d;
  const std::size_t rows = m.rows(), cols = m.cols();

  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    for (;;) {
      // Pivot: smallest nonzero magnitude in the trailing block.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 && (pi == rows || abs(d(i, j)) < abs(d(pi, pj)))) pi = i, pj = j;
      if (pi == rows) return res;

      swap_rows(d, t, pi);
      swap_rows(res.u, t, pi);
      swap_cols(d, t, pj);
      swap_cols(res.v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        BigInt q = d(i, t) / d(t, t);
        add_row(d, i, t, -q);
        add_row(res.u, i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        BigInt q = d(t, j) / d(t, t);
        add_col(d, j, t, -q);
        add_col(res.v, j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            add_row(d, t, i, 1);
            add_row(res.u, t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < rows; ++j) res.u(t, j) = -res.u(t, j);
    }
  }
  return res;
}

}  // namespace gw
