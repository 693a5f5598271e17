#pragma once

// Stably free rank-one modules from a pair r, x with x invertible:
//   s = x r x^-1, s1 = r, s2 = x + s, w1 = s x^-2, w2 = x^-1 - r x^-2,
// so that s1 w1 + s2 w2 = 1 + (rs - sr) x^-2. When r and s commute the
// matrix M = (w_i s_j) is idempotent and its rows minus the identity,
// (w1 s1 - 1, w1 s2) and (w2 s1, w2 s2 - 1), generate the kernel of
// u -> u1 w1 + u2 w2.
//
// Non-freeness is not decided here. It rests on Stafford's theorem on
// projective ideals over group rings of poly-infinite-cyclic groups and on
// the Berridge-Dunwoody base-change argument; certificates record that.

#include <array>
#include <concepts>
#include <string>
#include <vector>

#include "gw/error.hpp"
#include "gw/verdict.hpp"

#include <json.hpp>

namespace gw {

template <class R>
concept UnitalRing = requires(const R& a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  { a.one() } -> std::convertible_to<R>;
  { a.zero() } -> std::convertible_to<R>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

template <UnitalRing R>
class BDInput {
 public:
  /// Throws Error(NotInvertible) unless x * x_inv = x_inv * x = 1.
  static BDInput make(R r, R x, R x_inv) {
    const R one = x.one();
    if (!(x * x_inv == one) || !(x_inv * x == one))
      throw Error(ErrorKind::NotInvertible, x_inv.to_string() + " is not inverse to " + x.to_string());
    return BDInput(std::move(r), std::move(x), std::move(x_inv));
  }

  const R& r() const { return r_; }
  const R& x() const { return x_; }
  const R& x_inv() const { return x_inv_; }

 private:
  BDInput(R r, R x, R x_inv) : r_(std::move(r)), x_(std::move(x)), x_inv_(std::move(x_inv)) {}
  R r_, x_, x_inv_;
};

template <class R>
using RingRow = std::array<R, 2>;
template <class R>
using RingMat2 = std::array<RingRow<R>, 2>;

template <UnitalRing R>
struct BDModuleData {
  R r, x, x_inv;
  R s, s1, s2, w1, w2;

  R one() const { return r.one(); }
  RingRow<R> generator1() const { return {w1 * s1 - one(), w1 * s2}; }
  RingRow<R> generator2() const { return {w2 * s1, w2 * s2 - one()}; }
};

template <UnitalRing R>
BDModuleData<R> build_bd_data(const BDInput<R>& in) {
  const R& r = in.r();
  const R& x = in.x();
  const R& xi = in.x_inv();
  R s = x * r * xi;
  R xi2 = xi * xi;
  return BDModuleData<R>{r, x, xi, s, r, x + s, s * xi2, xi - r * xi2};
}

struct Certificate {
  std::vector<Verdict> verdicts;
  std::vector<std::string> notes;

  bool all_passed() const { return all_fatal_passed(verdicts); }
  const Verdict* find(const std::string& name) const {
    for (const auto& v : verdicts)
      if (v.name == name) return &v;
    return nullptr;
  }
  bool passed(const std::string& name) const {
    const Verdict* v = find(name);
    return v && v->passed;
  }
};

namespace detail {

template <UnitalRing R>
Verdict zero_check(std::string name, const R& residual, Severity sev = Severity::Fatal) {
  const bool ok = residual == residual.zero();
  return {std::move(name), ok, ok ? "residual 0" : "residual " + residual.to_string(), sev};
}

template <UnitalRing R>
std::string row_text(const RingRow<R>& row) {
  return "(" + row[0].to_string() + ", " + row[1].to_string() + ")";
}

template <UnitalRing R>
Verdict zero_row_check(std::string name, const RingRow<R>& res, Severity sev = Severity::Fatal) {
  const bool ok = res[0] == res[0].zero() && res[1] == res[1].zero();
  return {std::move(name), ok, ok ? "residual (0, 0)" : "residual " + row_text(res), sev};
}

template <UnitalRing R>
RingMat2<R> outer(const BDModuleData<R>& d) {
  return {RingRow<R>{d.w1 * d.s1, d.w1 * d.s2}, RingRow<R>{d.w2 * d.s1, d.w2 * d.s2}};
}

}  // namespace detail

inline const char* kStablyFreeCitation =
    "stably free by the unimodular identity; non-freeness is not decided here "
    "(it rests on Stafford's theorem for poly-infinite-cyclic quotients and the "
    "Berridge-Dunwoody base-change argument)";

/// Commutation rs = sr, the conjugation s = x r x^-1, and s1 w1 + s2 w2 = 1.
template <UnitalRing R>
Certificate verify_identity(const BDModuleData<R>& d) {
  Certificate c;
  c.verdicts.push_back(detail::zero_check("commutation rs = sr", d.r * d.s - d.s * d.r));
  c.verdicts.push_back(detail::zero_check("conjugation s = x r x^-1", d.s - d.x * d.r * d.x_inv));
  c.verdicts.push_back(detail::zero_check("unimodular identity s1 w1 + s2 w2 = 1",
                                          d.s1 * d.w1 + d.s2 * d.w2 - d.one()));
  c.notes.push_back(kStablyFreeCitation);
  return c;
}

/// M = (w_i s_j). Throws Error(IdentityNotVerified) unless s1 w1 + s2 w2 = 1.
template <UnitalRing R>
RingMat2<R> build_idempotent(const BDModuleData<R>& d) {
  const R id = d.s1 * d.w1 + d.s2 * d.w2;
  if (!(id == d.one()))
    throw Error(ErrorKind::IdentityNotVerified, "s1 w1 + s2 w2 = " + id.to_string() + ", not 1");
  return detail::outer(d);
}

template <UnitalRing R>
RingMat2<R> ring_mat_mul(const RingMat2<R>& a, const RingMat2<R>& b) {
  RingMat2<R> out = a;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return out;
}

/// Right-module map Z[G]^2 -> Z[G], (1,0) -> s1 = r and (0,1) -> s2 = x + s.
template <UnitalRing R>
R lambda_map(const R& u1, const R& u2, const BDModuleData<R>& d) {
  return d.s1 * u1 + d.s2 * u2;
}

/// Full chain: identity checks, then (if the identity holds) idempotency,
/// (M - I) W = 0, S (M - I) = 0, kernel membership of both generator rows,
/// and lambda evaluated on both generators (informational).
template <UnitalRing R>
Certificate certify(const BDModuleData<R>& d) {
  Certificate c = verify_identity(d);
  if (!c.passed("unimodular identity s1 w1 + s2 w2 = 1")) {
    c.notes.push_back("idempotent and kernel checks skipped: identity does not hold");
    return c;
  }
  const RingMat2<R> m = build_idempotent(d);
  const RingMat2<R> m2 = ring_mat_mul(m, m);
  RingMat2<R> diff = m2;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) diff[i][j] = m2[i][j] - m[i][j];
  const bool idem = diff[0][0] == d.r.zero() && diff[0][1] == d.r.zero() && diff[1][0] == d.r.zero() &&
                    diff[1][1] == d.r.zero();
  c.verdicts.push_back({"idempotent M^2 = M", idem,
                        idem ? "residual 0" : "residual rows " + detail::row_text(diff[0]) + ", " + detail::row_text(diff[1])});

  const RingRow<R> g1 = d.generator1();
  const RingRow<R> g2 = d.generator2();
  RingMat2<R> mi = m;
  mi[0][0] = m[0][0] - d.one();
  mi[1][1] = m[1][1] - d.one();
  c.verdicts.push_back(detail::zero_row_check(
      "(M - I) W = 0", RingRow<R>{mi[0][0] * d.w1 + mi[0][1] * d.w2, mi[1][0] * d.w1 + mi[1][1] * d.w2}));
  c.verdicts.push_back(detail::zero_row_check(
      "S (M - I) = 0", RingRow<R>{d.s1 * mi[0][0] + d.s2 * mi[1][0], d.s1 * mi[0][1] + d.s2 * mi[1][1]}));
  c.verdicts.push_back(detail::zero_check("generator (w1 s1 - 1, w1 s2) in kernel of u -> u1 w1 + u2 w2",
                                          g1[0] * d.w1 + g1[1] * d.w2));
  c.verdicts.push_back(detail::zero_check("generator (w2 s1, w2 s2 - 1) in kernel of u -> u1 w1 + u2 w2",
                                          g2[0] * d.w1 + g2[1] * d.w2));
  c.verdicts.push_back(detail::zero_check("lambda on generator 1", lambda_map(g1[0], g1[1], d), Severity::Info));
  c.verdicts.push_back(detail::zero_check("lambda on generator 2", lambda_map(g2[0], g2[1], d), Severity::Info));
  return c;
}

nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const Certificate& c);

}  // namespace gw
