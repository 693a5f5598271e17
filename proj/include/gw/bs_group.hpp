#pragma once

// Baumslag-Solitar groups BS(m,n) = <a, b | b a^m b^-1 = a^n>: Britton
// normal forms, the group ring on normal forms, the representation
//   a -> [[1,1],[0,1]],  b -> [[n/m,0],[0,1]]
// into GL2(Q), and the checks that feed the stably free construction.

#include <compare>
#include <string>
#include <vector>

#include "gw/exact.hpp"
#include "gw/group_ring.hpp"
#include "gw/presentation.hpp"
#include "gw/stably_free.hpp"
#include "gw/verdict.hpp"

namespace gw {

struct BSParams {
  long m;
  long n;

  /// Throws Error(Precondition) if m or n is zero.
  BSParams(long m, long n);

  Rational ratio() const { return Rational(BigInt(n), BigInt(m)); }
  Presentation presentation() const;
  std::string to_string() const;

  friend bool operator==(const BSParams&, const BSParams&) = default;
};

/// b^sign a^r. For sign +1, 0 <= r < |m|; for sign -1, 0 <= r < |n|.
struct BrittonSyllable {
  int sign;
  long r;
  friend bool operator==(const BrittonSyllable&, const BrittonSyllable&) = default;
  friend auto operator<=>(const BrittonSyllable&, const BrittonSyllable&) = default;
};

/// a^head b^e1 a^r1 ... b^ek a^rk with reduced r_i and no b^e a^0 b^-e.
struct BrittonForm {
  long head = 0;
  std::vector<BrittonSyllable> syllables;

  bool is_identity() const { return head == 0 && syllables.empty(); }
  Word to_word() const;

  friend bool operator==(const BrittonForm&, const BrittonForm&) = default;
  friend auto operator<=>(const BrittonForm&, const BrittonForm&) = default;
};

/// Rewrites with b a^x -> a^(n q) b a^(x mod m) (x = q m + rest) and the
/// analogous rule for b^-1, cancelling b^e b^-e as it goes. Throws
/// Error(UndeclaredGenerator) for letters other than a, b and Error(Overflow)
/// if an exponent leaves the 64-bit range.
BrittonForm britton_normalize(const Word& w, const BSParams& params);

/// Normalizes the product of two normal forms.
BrittonForm britton_multiply(const BrittonForm& x, const BrittonForm& y, const BSParams& params);

/// Syntax check of the normal-form invariants.
bool is_britton_reduced(const BrittonForm& f, const BSParams& params);

class BSElement {
 public:
  BSElement(BSParams params, BrittonForm form) : params_(params), form_(std::move(form)) {}
  static BSElement from_word(const Word& w, const BSParams& params);
  static BSElement a(const BSParams& params, long e = 1);
  static BSElement b(const BSParams& params, long e = 1);

  const BSParams& params() const { return params_; }
  const BrittonForm& form() const { return form_; }

  BSElement identity() const { return {params_, {}}; }
  BSElement inverse() const;
  friend BSElement operator*(const BSElement& x, const BSElement& y);
  friend bool operator==(const BSElement& x, const BSElement& y) { return x.form_ == y.form_; }
  friend bool operator<(const BSElement& x, const BSElement& y) { return x.form_ < y.form_; }

  /// "a^3 b a b^-1", identity "1".
  std::string to_string() const { return form_.to_word().to_string(); }

 private:
  BSParams params_;
  BrittonForm form_;
};

using BSRingElement = GroupRing<BSElement>;

Mat2Q phi_matrix(const Word& w, const BSParams& params);
Mat2Q phi_matrix(const BrittonForm& f, const BSParams& params);

/// The matrix [[(n/m)^k, c], [0, 1]] of the image of BS(m,n) in GL2(Q).
class MetabelianElement {
 public:
  /// When n/m = +-1 the exponent k is reduced so equal matrices compare equal.
  MetabelianElement(BSParams params, long k, Rational c);
  static MetabelianElement a(const BSParams& params) { return {params, 0, Rational(1)}; }
  static MetabelianElement b(const BSParams& params) { return {params, 1, Rational(0)}; }
  static MetabelianElement of(const BrittonForm& f, const BSParams& params);

  long k() const { return k_; }
  const Rational& c() const { return c_; }
  Mat2Q matrix() const;

  MetabelianElement identity() const { return {params_, 0, Rational(0)}; }
  MetabelianElement inverse() const;
  friend MetabelianElement operator*(const MetabelianElement& x, const MetabelianElement& y);
  friend bool operator==(const MetabelianElement& x, const MetabelianElement& y) {
    return x.k_ == y.k_ && x.c_ == y.c_;
  }
  friend bool operator<(const MetabelianElement& x, const MetabelianElement& y) {
    return x.k_ != y.k_ ? x.k_ < y.k_ : x.c_ < y.c_;
  }
  std::string to_string() const;

 private:
  BSParams params_;
  long k_;
  Rational c_;
};

using MetabelianRingElement = GroupRing<MetabelianElement>;

struct CheckReport {
  BSParams params;
  Abelianization abelianization;
  std::vector<Verdict> verdicts;

  bool passed(const std::string& name) const;
  bool all_passed() const { return all_fatal_passed(verdicts); }
};

inline const char* kVariableCheck = "(i) phi(b) is a variable";
inline const char* kDerivedCheck = "(ii) a^m lies in the derived subgroup";
inline const char* kCommuteCheck = "(iii) a^m and b a^m b^-1 commute with distinct images";
inline const char* kTorsionCheck = "abelianization torsion-free";

/// Hypothesis checks with x' = b, y' = a^m. Failures are verdicts.
CheckReport bs_hypothesis_check(const BSParams& params);

/// Stably free data over Z[BS(m,n)] with r = 1 + a^m, x = b.
BDModuleData<BSRingElement> bs_module_data(const BSParams& params);

struct BSPipelineReport {
  CheckReport hypotheses;
  Certificate certificate;
  /// 0 all pass, 1 internal inconsistency, 2 hypotheses not met.
  int exit_code() const;
};

BSPipelineReport verify_bs(const BSParams& params);

}  // namespace gw
