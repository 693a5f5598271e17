#include "gw/skew.hpp"

#include "gw/error.hpp"

namespace gw {
namespace {

IntSquareMatrix identity_matrix(std::size_t k) {
  IntSquareMatrix m(k, std::vector<long>(k, 0));
  for (std::size_t i = 0; i < k; ++i) m[i][i] = 1;
  return m;
}

IntSquareMatrix minor_of(const IntSquareMatrix& m, std::size_t row, std::size_t col) {
  IntSquareMatrix out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == row) continue;
    std::vector<long> r;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != col) r.push_back(m[i][j]);
    out.push_back(std::move(r));
  }
  return out;
}

// Cofactor expansion; the automorphisms here have rank 2 or so.
long det(const IntSquareMatrix& m) {
  if (m.empty()) return 1;
  if (m.size() == 1) return m[0][0];
  long d = 0;
  for (std::size_t j = 0; j < m.size(); ++j) {
    long c = m[0][j] * det(minor_of(m, 0, j));
    d += (j % 2 == 0) ? c : -c;
  }
  return d;
}

IntSquareMatrix multiply(const IntSquareMatrix& a, const IntSquareMatrix& b) {
  std::size_t k = a.size();
  IntSquareMatrix out(k, std::vector<long>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < k; ++j) out[i][j] += a[i][l] * b[l][j];
  return out;
}

}  // namespace

LatticeAutomorphism::LatticeAutomorphism(IntSquareMatrix matrix) : matrix_(std::move(matrix)) {
  const std::size_t k = matrix_.size();
  for (const auto& row : matrix_)
    if (row.size() != k) throw Error(ErrorKind::RankMismatch, "automorphism matrix is not square");
  long d = det(matrix_);
  if (d != 1 && d != -1)
    throw Error(ErrorKind::NotInvertible,
                "automorphism matrix has determinant " + std::to_string(d));
  inverse_.assign(k, std::vector<long>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      long cof = det(minor_of(matrix_, j, i));
      inverse_[i][j] = ((i + j) % 2 == 0 ? cof : -cof) * d;
    }
  const auto id = identity_matrix(k);
  auto p = matrix_;
  for (long t = 1; t <= 64; ++t) {
    if (p == id) {
      order_ = t;
      break;
    }
    p = multiply(p, matrix_);
  }
}

ExponentVector LatticeAutomorphism::apply(const ExponentVector& e, long power) const {
  if (e.size() != rank()) throw Error(ErrorKind::RankMismatch, "exponent vector length mismatch");
  if (order_ > 0) {
    power %= order_;
    if (power < 0) power += order_;
  }
  const auto& m = power < 0 ? inverse_ : matrix_;
  long steps = power < 0 ? -power : power;
  ExponentVector cur = e;
  ExponentVector next(e.size());
  for (long s = 0; s < steps; ++s) {
    for (std::size_t i = 0; i < cur.size(); ++i) {
      long acc = 0;
      for (std::size_t j = 0; j < cur.size(); ++j) acc += m[i][j] * cur[j];
      next[i] = acc;
    }
    std::swap(cur, next);
  }
  return cur;
}

std::shared_ptr<const SkewRing> SkewRing::trefoil() {
  // columns: sigma(p) = q = (0,1), sigma(q) = q p^-1 = (-1,1)
  static const auto ring = std::make_shared<const SkewRing>(
      SkewRing{LatticeAutomorphism({{0, -1}, {1, 1}}), {"p", "q"}, "v"});
  return ring;
}

LaurentPoly sk_sigma(const SkewRing& ring, const LaurentPoly& a, long power) {
  if (a.rank() != ring.rank()) throw Error(ErrorKind::RankMismatch, "coefficient rank mismatch");
  if (power == 0) return a;
  return a.map_exponents([&](const ExponentVector& e) { return ring.sigma.apply(e, power); });
}

SkewElement SkewElement::term(SkewRingPtr ring, long vexp, const LaurentPoly& c) {
  SkewElement out(std::move(ring));
  out.add_term(vexp, c);
  return out;
}

SkewElement SkewElement::constant(SkewRingPtr ring, const BigInt& c) {
  const auto k = ring->rank();
  return term(std::move(ring), 0, LaurentPoly::constant(k, c));
}

LaurentPoly SkewElement::coefficient(long vexp) const {
  auto it = coeffs_.find(vexp);
  return it == coeffs_.end() ? LaurentPoly(ring_->rank()) : it->second;
}

long SkewElement::top() const {
  if (is_zero()) throw Error(ErrorKind::ZeroElement, "degree of the zero element");
  return coeffs_.rbegin()->first;
}

long SkewElement::bottom() const {
  if (is_zero()) throw Error(ErrorKind::ZeroElement, "degree of the zero element");
  return coeffs_.begin()->first;
}

bool SkewElement::is_monic(MonicLevel level) const {
  if (is_zero()) throw Error(ErrorKind::ZeroElement, "monic test on the zero element");
  auto ok = [level](const LaurentPoly& c) {
    auto u = lp_unit_info(c);
    return u && (level == MonicLevel::SignedUnit || u->group_element);
  };
  return ok(coeffs_.begin()->second) && ok(coeffs_.rbegin()->second);
}

void SkewElement::add_term(long vexp, const LaurentPoly& c) {
  if (c.rank() != ring_->rank()) throw Error(ErrorKind::RankMismatch, "coefficient rank mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(vexp, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

void SkewElement::check_instance(const SkewElement& o) const {
  if (ring_ != o.ring_ && !(ring_->sigma == o.ring_->sigma))
    throw Error(ErrorKind::InstanceMismatch, "skew elements from different rings");
}

SkewElement SkewElement::operator-() const {
  SkewElement out(ring_);
  for (const auto& [i, c] : coeffs_) out.coeffs_.emplace(i, -c);
  return out;
}

SkewElement& SkewElement::operator+=(const SkewElement& o) {
  check_instance(o);
  for (const auto& [i, c] : o.coeffs_) add_term(i, c);
  return *this;
}

SkewElement& SkewElement::operator-=(const SkewElement& o) {
  check_instance(o);
  for (const auto& [i, c] : o.coeffs_) add_term(i, -c);
  return *this;
}

SkewElement operator+(const SkewElement& a, const SkewElement& b) {
  SkewElement out(a);
  out += b;
  return out;
}

SkewElement operator-(const SkewElement& a, const SkewElement& b) {
  SkewElement out(a);
  out -= b;
  return out;
}

SkewElement operator*(const SkewElement& a, const SkewElement& b) {
  a.check_instance(b);
  SkewElement out(a.ring_);
  for (const auto& [i, c] : a.coeffs_)
    for (const auto& [j, d] : b.coeffs_) out.add_term(i + j, sk_sigma(*a.ring_, c, j) * d);
  return out;
}

bool operator==(const SkewElement& a, const SkewElement& b) {
  a.check_instance(b);
  return a.coeffs_ == b.coeffs_;
}

std::string SkewElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += ring_->variable_name + "^" + std::to_string(i) + "*(" +
           c.to_string(ring_->coefficient_names) + ")";
  }
  return out;
}

DivisionResult sk_euclid_div(const SkewElement& a, const SkewElement& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroElement, "division by zero");
  if (!b.is_monic(MonicLevel::SignedUnit))
    throw Error(ErrorKind::NonMonicDivisor, "divisor " + b.to_string() + " is not monic");
  DivisionResult res{a.zero(), a, {}};
  // Validates the instance before any work.
  (void)(a + b.zero());
  if (a.is_zero()) return res;

  const long deg_b = b.degree();
  const long b_top = b.top();
  const LaurentPoly b_lead = b.coefficient(b_top);
  const long cap = (a.top() - a.bottom()) + deg_b + 8;
  const SkewRing& ring = *a.ring();

  long rounds = 0;
  while (!res.remainder.is_zero() && res.remainder.degree() >= deg_b) {
    if (++rounds > cap)
      throw Error(ErrorKind::DivisionStalled,
                  "division stalled after " + std::to_string(cap) +
                      " rounds; partial remainder " + res.remainder.to_string());
    const long r_top = res.remainder.top();
    const long shift = r_top - b_top;
    // b_lead * v^shift * t = v^shift * sigma^shift(b_lead) * t must equal the
    // remainder's top coefficient.
    LaurentPoly t = lp_unit_inverse(sk_sigma(ring, b_lead, shift)) * res.remainder.coefficient(r_top);
    SkewElement step = SkewElement::term(a.ring(), shift, t);
    res.quotient += step;
    res.remainder -= b * step;
    res.steps.push_back({shift, std::move(t)});
  }
  return res;
}

}  // namespace gw
