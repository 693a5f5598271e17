#include "gw/torus_knot.hpp"

#include <algorithm>
#include <set>

#include "gw/error.hpp"

namespace gw {
namespace {

LaurentPoly mono(long p, long q, long c = 1) { return LaurentPoly::monomial({p, q}, c); }

bool support_in_5z(const SkewElement& w) {
  return std::all_of(w.coefficients().begin(), w.coefficients().end(),
                     [](const auto& kv) { return kv.first % 5 == 0; });
}

ProjectionComparison compare(const ZxLaurent& projected, const ZxLaurent& image, long shift) {
  ProjectionComparison out{projected, image, shift, {}};
  const ZxLaurent shifted = image.shifted(shift);
  std::set<long, std::greater<>> degrees;
  for (const auto& [e, c] : projected.terms()) degrees.insert(e);
  for (const auto& [e, c] : shifted.terms()) degrees.insert(e);
  for (long d : degrees) out.entries.push_back({d, projected.coefficient(d), shifted.coefficient(d)});
  return out;
}

std::string join_longs(const std::vector<long>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out;
}

Verdict fatal(std::string name, bool ok, std::string detail) { return {std::move(name), ok, std::move(detail), Severity::Fatal}; }

}  // namespace

void FormalGroupRingWord::add(const Word& w, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::string FormalGroupRingWord::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    const BigInt mag = abs(c);
    const std::string body = mag == 1 ? w.to_string() : mag.get_str() + "*" + w.to_string();
    out += first ? (c < 0 ? "-" : "") + body : (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

// First coordinates of the generators of N over Z T(10,15).
FormalGroupRingWord FormalGroupRingWord::alpha() {
  const std::vector<std::string> xy{"x", "y"};
  FormalGroupRingWord f;
  f.add(parse_word("x^-5 y^-10", xy), 1);
  f.add(parse_word("x^-5 y^5 x^-5", xy), 1);
  f.add(parse_word("x^-5 y^5", xy), 1);
  f.add(parse_word("y^-20", xy), -1);
  f.add(parse_word("y^-20 x^5", xy), -1);
  f.add(parse_word("y^-20 x^10", xy), -1);
  f.add(Word(), -1);
  return f;
}

FormalGroupRingWord FormalGroupRingWord::beta() {
  const std::vector<std::string> xy{"x", "y"};
  FormalGroupRingWord f;
  f.add(parse_word("x^-10", xy), 1);
  f.add(parse_word("x^-5 y^-5 x^-5", xy), 1);
  f.add(parse_word("x^-5 y^-10", xy), -1);
  f.add(parse_word("y^-10 x^-5", xy), -1);
  f.add(parse_word("x^-15", xy), -1);
  f.add(parse_word("y^-20", xy), 1);
  return f;
}

ZxLaurent abelian_degree_image(const FormalGroupRingWord& w) {
  ZxLaurent out;
  for (const auto& [word, c] : w.terms()) {
    for (const auto& s : word.syllables())
      if (s.gen != "x" && s.gen != "y") throw Error(ErrorKind::UndeclaredGenerator, "expected x or y, got '" + s.gen + "'");
    out.add_term(3 * word.exponent_sum("x") + 2 * word.exponent_sum("y"), c);
  }
  return out;
}

PsiPhi psi_phi_constants(bool tamper_phi) {
  const SkewRingPtr ring = SkewRing::trefoil();
  SkewElement psi(ring);
  psi.add_term(0, mono(0, 0, -1));
  psi.add_term(-5, mono(2, 0));
  psi.add_term(-10, mono(-1, -1, -1));
  psi.add_term(-20, mono(-2, 1));
  psi.add_term(-25, mono(-2, 2, -1));
  psi.add_term(-35, mono(1, 0));
  psi.add_term(-40, mono(1, -1));

  SkewElement phi(ring);
  phi.add_term(0, mono(0, 0));
  phi.add_term(-5, -(mono(2, 0) + mono(-2, 0)));
  phi.add_term(-10, mono(1, -1) + mono(-2, 3));
  phi.add_term(-15, mono(-1, 1, tamper_phi ? 1 : -1));
  return {psi, phi};
}

ZxLaurent printed_pi_phi() {
  ZxLaurent out;
  out.add_term(0, 1);
  out.add_term(-5, 2);
  out.add_term(-10, -2);
  out.add_term(-15, -1);
  return out;
}

bool ProjectionComparison::all_agree() const {
  return std::all_of(entries.begin(), entries.end(), [](const DegreeEntry& e) { return e.agree(); });
}

std::vector<long> ProjectionComparison::disagreements() const {
  std::vector<long> out;
  for (const auto& e : entries)
    if (!e.agree()) out.push_back(e.degree);
  return out;
}

ProjectionReport cross_check_projections(const PsiPhi& c) {
  return {compare(pi_project(c.psi), abelian_degree_image(FormalGroupRingWord::alpha()), 0),
          compare(pi_project(c.phi), abelian_degree_image(FormalGroupRingWord::beta()), 30)};
}

ZxPoly expected_gcd() {
  ZxLaurent g;
  g.add_term(10, 1);
  g.add_term(5, -1);
  g.add_term(0, 1);
  return ZxPoly::from_laurent(g);
}

ZxPoly gcd_from(const ZxLaurent& u, const ZxLaurent& v) {
  return zx_gcd(tilde_realise(u).poly, tilde_realise(v).poly);
}

GcdCertificate gcd_certificate() {
  const Realisation a = tilde_realise(abelian_degree_image(FormalGroupRingWord::alpha()));
  const Realisation b = tilde_realise(abelian_degree_image(FormalGroupRingWord::beta()));
  const ZxPoly g = zx_gcd(a.poly, b.poly);
  if (!(g == expected_gcd()) && !(g == -expected_gcd()))
    throw Error(ErrorKind::CertificateFailure, "gcd is " + g.to_string() + ", expected " + expected_gcd().to_string());
  const auto qa = zx_divides(g, a.poly);
  const auto qb = zx_divides(g, b.poly);
  if (!qa || !qb) throw Error(ErrorKind::CertificateFailure, "gcd does not divide both realisations");
  return {a, b, g, *qa, *qb};
}

bool CaseAnalysis::all_refuted() const {
  return !cases.empty() && std::all_of(cases.begin(), cases.end(), [](const CaseRecord& c) { return c.refuted; });
}

CaseAnalysis non_generation_case_analysis(const PsiPhi& c) {
  const SkewRingPtr ring = c.phi.ring();
  CaseAnalysis out{sk_euclid_div(c.psi, c.phi), false, false, 0, {}, false, 0, {}, {}};
  const DivisionResult& d = out.division;
  out.division_verified = c.phi * d.quotient + d.remainder == c.psi;
  out.support_in_5z = support_in_5z(d.quotient) && support_in_5z(d.remainder);
  out.remainder_degree = d.remainder.is_zero() ? -1 : d.remainder.degree();
  out.remainder_projection = pi_project(d.remainder);
  out.transcript.push_back("psi = phi q + r after " + std::to_string(d.steps.size()) + " rounds; deg r = " +
                           std::to_string(out.remainder_degree) + ", pi(r) = " + out.remainder_projection.to_string());
  if (!out.division_verified || !out.support_in_5z || out.remainder_degree >= c.phi.degree())
    throw Error(ErrorKind::AnalysisFailure, "reduction of psi by phi did not land in 5Z below degree 15");

  ZxLaurent w_proj, g_proj;
  w_proj.add_term(0, 1);
  w_proj.add_term(-5, -1);
  g_proj.add_term(0, 1);
  g_proj.add_term(-5, -1);
  g_proj.add_term(-10, 1);
  out.phi_projection_factors = pi_project(c.phi) == w_proj * g_proj;
  out.transcript.push_back("pi(phi) = " + pi_project(c.phi).to_string() +
                           (out.phi_projection_factors ? " = " : " != ") + "(1 - x^-5)(x^-10 - x^-5 + 1)");

  // gamma = 1 + v^-5 a1 + v^-10 a2 and w = 1 - v^-5 b; at v^-5, a1 - b = phi_-5.
  const LaurentPoly c5 = c.phi.coefficient(-5);
  const LaurentPoly c10 = c.phi.coefficient(-10);
  const SkewElement one = SkewElement::constant(ring, 1);
  out.transcript.push_back("v^-5: a1 - b = " + c5.to_string() + "; b a unit, so b = +-m for m in the support");
  for (const auto& [e, coeff] : c5.terms()) {
    for (long sign : {1L, -1L}) {
      ++out.candidates_considered;
      const LaurentPoly b = LaurentPoly::monomial(e, sign);
      const LaurentPoly a1 = c5 + b;
      if (!lp_is_unit(a1)) {
        out.transcript.push_back("b = " + b.to_string() + ": a1 = " + a1.to_string() + " is not a unit");
        continue;
      }
      const SkewElement prod = (one + SkewElement::term(ring, -5, a1)) * (one - SkewElement::term(ring, -5, b));
      CaseRecord rec{b, a1, prod.coefficient(-10), c10 - prod.coefficient(-10), false, ""};
      rec.refuted = !lp_is_unit(rec.required_a2);
      rec.residual = "v^-10: a2 = " + c10.to_string() + " - (" + rec.cross.to_string() + ") = " +
                     rec.required_a2.to_string() + ", " + std::to_string(rec.required_a2.num_terms()) + " terms" +
                     (rec.refuted ? ", not a unit" : ", a unit");
      out.transcript.push_back("b = " + b.to_string() + ", a1 = " + a1.to_string() + " (augmentations " +
                               b.augment().get_str() + ", " + a1.augment().get_str() + "): " + rec.residual);
      out.cases.push_back(rec);
    }
  }
  out.transcript.push_back("a b outside +-supp(" + c5.to_string() + ") leaves a1 with " +
                           std::to_string(c5.num_terms() + 1) + " terms");
  if (out.cases.size() != 2 || !out.all_refuted())
    throw Error(ErrorKind::AnalysisFailure, std::to_string(out.cases.size()) + " splits, not all refuted");
  return out;
}

ExoticReport emit_exotic_presentations() {
  ExoticReport rep;
  rep.r = parse_presentation("<x,y,x',y' | x^2=y^3, x'^2=y'^3, x^3=x'^3, y^4=y'^4>");
  rep.j = parse_presentation("<a,b | a^10=b^15>");
  rep.q_expected = parse_presentation("<p,q,p',q' | p^10=q^15, p'^2=q'^3, p^15=p'^3, q^20=q'^4>");

  std::vector<Word> prels = rep.j.relators();
  prels.push_back(Word());
  rep.p = Presentation(rep.j.generators(), prels);
  if (!(rep.p == parse_presentation("<a,b | a^10=b^15, 1>")))
    throw Error(ErrorKind::Mismatch, "P is not J with a trivial relator");

  rep.pushout = pushout_presentation(rep.r, rep.j,
                                     {{Word::gen("x"), Word::gen("a", 5)}, {Word::gen("y"), Word::gen("b", 5)}});
  rep.simplified = tietze_eliminate(rep.pushout.presentation);
  rep.renaming = {{"a", "p"}, {"b", "q"}, {"x'", "p'"}, {"y'", "q'"}};
  if (!equal_up_to_renaming(rep.simplified.presentation, rep.q_expected, rep.renaming))
    throw Error(ErrorKind::Mismatch, "pushout gives " + rep.simplified.presentation.to_string() + ", expected " +
                                         rep.q_expected.to_string());
  rep.deficiency_p = deficiency(rep.p);
  rep.deficiency_q = deficiency(rep.q_expected);
  rep.ab_p = abelianization(rep.p);
  rep.ab_q = abelianization(rep.q_expected);
  return rep;
}

TorusKnotReport verify_torus_knot(const TorusKnotOptions& opt) {
  TorusKnotReport rep;
  const PsiPhi c = psi_phi_constants(opt.tamper_phi);

  const ProjectionReport proj = cross_check_projections(c);
  rep.verdicts.push_back(fatal("pi(phi) = x^30 * beta image", proj.phi_vs_beta.all_agree(),
                               "pi(phi) = " + proj.phi_vs_beta.projected.to_string() + "; beta image = " +
                                   proj.phi_vs_beta.image.to_string() +
                                   (proj.phi_vs_beta.all_agree() ? "" : "; differ at degrees " + join_longs(proj.phi_vs_beta.disagreements()))));
  const auto psi_bad = proj.psi_vs_alpha.disagreements();
  rep.verdicts.push_back({"pi(psi) = alpha image", psi_bad.empty(),
                          "pi(psi) = " + proj.psi_vs_alpha.projected.to_string() + "; alpha image = " +
                              proj.psi_vs_alpha.image.to_string() +
                              (psi_bad.empty() ? "" : "; differ at degrees " + join_longs(psi_bad)),
                          Severity::Info});
  const ZxLaurent printed = printed_pi_phi();
  rep.verdicts.push_back({"pi(phi) printed signs", printed == proj.phi_vs_beta.projected,
                          "printed " + printed.to_string() + "; computed " + proj.phi_vs_beta.projected.to_string(),
                          Severity::Info});

  try {
    const GcdCertificate g = gcd_certificate();
    rep.gcd = g.gcd;
    rep.verdicts.push_back(fatal("gcd of realised alpha, beta images", true, g.gcd.to_string()));
    const ZxPoly x5m1 = ZxPoly::from_laurent(ZxLaurent::monomial(5) - ZxLaurent::monomial(0));
    rep.verdicts.push_back(fatal("beta realisation / gcd = x^5 - 1", g.beta_quotient == x5m1, g.beta_quotient.to_string()));
    rep.verdicts.push_back(fatal("alpha realisation / gcd exact", true, g.alpha_quotient.to_string()));
  } catch (const Error& e) {
    rep.verdicts.push_back(fatal("gcd of realised alpha, beta images", false, e.what()));
  }

  if (opt.use_printed_psi) {
    const ZxPoly g = gcd_from(pi_project(c.psi), pi_project(c.phi));
    const bool ok = g == expected_gcd();
    rep.verdicts.push_back({"gcd of realised pi(psi), pi(phi)", ok,
                            g.to_string() + (ok ? "" : ", expected " + expected_gcd().to_string()), Severity::Warning});
  }

  try {
    const CaseAnalysis ca = non_generation_case_analysis(c);
    rep.verdicts.push_back(fatal("reduction of psi by phi", true,
                                 "deg r = " + std::to_string(ca.remainder_degree) + " < 15, support in 5Z, pi(r) = " +
                                     ca.remainder_projection.to_string()));
    rep.verdicts.push_back(fatal("pi(phi) = (1 - x^-5)(1 - x^-5 + x^-10)", ca.phi_projection_factors,
                                 pi_project(c.phi).to_string()));
    rep.verdicts.push_back(fatal("case split count", true, std::to_string(ca.cases.size()) + " of " +
                                                               std::to_string(ca.candidates_considered) + " candidates"));
    for (std::size_t i = 0; i < ca.cases.size(); ++i)
      rep.verdicts.push_back(fatal("case " + std::to_string(i + 1) + " refuted", ca.cases[i].refuted,
                                   "b = " + ca.cases[i].b.to_string() + ", a1 = " + ca.cases[i].a1.to_string() + "; " +
                                       ca.cases[i].residual));
    rep.notes = ca.transcript;
  } catch (const Error& e) {
    rep.verdicts.push_back(fatal("non-generation case analysis", false, e.what()));
  }

  rep.warning = any_warning_failed(rep.verdicts);
  return rep;
}

}  // namespace gw
