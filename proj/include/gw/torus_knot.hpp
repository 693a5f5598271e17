#pragma once

// The T(2,3) <= T(10,15) computation: the first coordinates of the two
// generators alpha, beta of the induced module over Z T(10,15), their images
// psi, phi in Z(H/H''), the abelianized projections, the gcd certificate and
// the finite case analysis showing psi, phi have no single monic generator of
// the shape forced by the gcd. Also the presentations P and Q of T(10,15).

#include <map>
#include <string>
#include <vector>

#include "gw/laurent.hpp"
#include "gw/presentation.hpp"
#include "gw/skew.hpp"
#include "gw/verdict.hpp"
#include "gw/zx_poly.hpp"

namespace gw {

/// Signed formal sum of words in x, y.
class FormalGroupRingWord {
 public:
  void add(const Word& w, const BigInt& c);
  const std::map<Word, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::string to_string() const;

  static FormalGroupRingWord alpha();
  static FormalGroupRingWord beta();

 private:
  std::map<Word, BigInt> terms_;
};

/// x -> a, y -> b, then a -> t^3, b -> t^2 on the abelianization of T(2,3).
ZxLaurent abelian_degree_image(const FormalGroupRingWord& w);

struct PsiPhi {
  SkewElement psi;
  SkewElement phi;
};

/// psi and phi verbatim. `tamper_phi` negates the v^-15 coefficient of phi
/// (negative control for the pipeline).
PsiPhi psi_phi_constants(bool tamper_phi = false);

/// pi(phi) with the signs as printed alongside the gcd argument.
ZxLaurent printed_pi_phi();

struct DegreeEntry {
  long degree;
  BigInt projected;  // from psi / phi
  BigInt image;      // from alpha / beta, after the shift
  bool agree() const { return projected == image; }
};

struct ProjectionComparison {
  ZxLaurent projected;
  ZxLaurent image;
  long shift;  // projected is compared with x^shift * image
  std::vector<DegreeEntry> entries;

  bool all_agree() const;
  std::vector<long> disagreements() const;
};

struct ProjectionReport {
  ProjectionComparison psi_vs_alpha;
  ProjectionComparison phi_vs_beta;
};

ProjectionReport cross_check_projections(const PsiPhi& constants);

struct GcdCertificate {
  Realisation alpha_tilde;
  Realisation beta_tilde;
  ZxPoly gcd;
  ZxPoly alpha_quotient;
  ZxPoly beta_quotient;
};

ZxPoly expected_gcd();  // x^10 - x^5 + 1

/// gcd of the realised alpha and beta images. Throws Error(CertificateFailure)
/// unless it is x^10 - x^5 + 1 and divides both exactly.
GcdCertificate gcd_certificate();

/// gcd of the realisations of two Laurent polynomials, no assertion.
ZxPoly gcd_from(const ZxLaurent& u, const ZxLaurent& v);

struct CaseRecord {
  LaurentPoly b;            // w = 1 - v^-5 b
  LaurentPoly a1;           // gamma = 1 + v^-5 a1 + v^-10 a2
  LaurentPoly cross;        // v^-10 coefficient of (1 + v^-5 a1)(1 - v^-5 b)
  LaurentPoly required_a2;  // v^-10 coefficient of phi minus cross
  bool refuted = false;
  std::string residual;
};

struct CaseAnalysis {
  DivisionResult division;
  bool division_verified = false;  // phi * q + r == psi recomputed
  bool support_in_5z = false;      // q and r
  long remainder_degree = 0;
  ZxLaurent remainder_projection;
  bool phi_projection_factors = false;  // pi(phi) = (1 - x^-5)(1 - x^-5 + x^-10)
  std::size_t candidates_considered = 0;
  std::vector<CaseRecord> cases;
  std::vector<std::string> transcript;

  bool all_refuted() const;
};

/// Throws Error(AnalysisFailure) if some case is not refuted or the
/// reduction does not land below degree 15 inside 5Z.
CaseAnalysis non_generation_case_analysis(const PsiPhi& constants);

struct ExoticReport {
  Presentation r, j, p, q_expected;
  PushoutResult pushout;
  TietzeResult simplified;
  std::map<std::string, std::string> renaming;
  long deficiency_p = 0, deficiency_q = 0;
  Abelianization ab_p, ab_q;
};

/// Throws Error(Mismatch) if the simplified pushout is not Q under the fixed
/// renaming.
ExoticReport emit_exotic_presentations();

struct TorusKnotOptions {
  bool use_printed_psi = false;
  bool tamper_phi = false;
};

struct TorusKnotReport {
  std::vector<Verdict> verdicts;
  std::vector<std::string> notes;
  ZxPoly gcd;
  bool warning = false;

  int exit_code() const { return all_fatal_passed(verdicts) ? 0 : 1; }
};

TorusKnotReport verify_torus_knot(const TorusKnotOptions& options = {});

}  // namespace gw
