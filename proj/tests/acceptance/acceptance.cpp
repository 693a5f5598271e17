// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "common/random.hpp"
#include "gw/bs_group.hpp"
#include "gw/stably_free.hpp"
#include "gw/torus_knot.hpp"

using namespace gw;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void run(int id, const std::string& title, double limit_ms, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = ms < limit_ms;
  const bool ok = out.pass && in_time;
  if (!ok) ++failures;
  std::ostringstream t;
  t.precision(1);
  t << std::fixed << ms;
  std::cout << (ok ? "PASS" : "FAIL") << " [" << id << "] " << title << " (" << t.str() << " ms, limit "
            << static_cast<long>(limit_ms) << " ms" << (in_time ? "" : ", TOO SLOW") << "): " << out.detail << "\n";
}

Outcome require(bool cond, const std::string& detail, Outcome& acc) {
  if (!cond) {
    acc.pass = false;
    acc.detail += (acc.detail.empty() ? "" : "; ") + detail;
  }
  return acc;
}

}  // namespace

int main() {
  run(1, "gcd of realised alpha and beta images is x^10 - x^5 + 1", 1000, [] {
    const GcdCertificate g = gcd_certificate();
    const bool ok = g.gcd == expected_gcd() || g.gcd == -expected_gcd();
    return Outcome{ok, "gcd = " + g.gcd.to_string()};
  });

  run(2, "realised beta image / gcd = x^5 - 1 exactly", 1000, [] {
    const GcdCertificate g = gcd_certificate();
    const auto q = zx_divides(g.gcd, g.beta_tilde.poly);
    const ZxPoly expect = ZxPoly::from_laurent(ZxLaurent::monomial(5) - ZxLaurent::monomial(0));
    const bool ok = q && *q == expect && g.gcd * *q == g.beta_tilde.poly;
    return Outcome{ok, "quotient = " + (q ? q->to_string() : std::string("none")) + ", remainder 0"};
  });

  for (const auto& [m, n] : std::vector<std::pair<long, long>>{{2, 3}, {3, 2}, {5, 4}, {10, 11}}) {
    const BSParams p(m, n);
    run(3, "s1 w1 + s2 w2 = 1 in Z" + p.to_string() + " with r = 1 + a^m, x = b", 1000, [p] {
      const auto d = bs_module_data(p);
      const BSRingElement lhs = d.s1 * d.w1 + d.s2 * d.w2;
      return Outcome{lhs == d.one(), "s1 w1 + s2 w2 = " + lhs.to_string()};
    });
  }

  run(4, "abelianization of BS(m,n), 2 <= m <= 6, |n - m| <= 2", 5000, [] {
    Outcome acc;
    std::size_t checked = 0;
    for (long m = 2; m <= 6; ++m)
      for (long n = m - 2; n <= m + 2; ++n) {
        if (n == 0) continue;
        const BSParams p(m, n);
        const Abelianization ab = abelianization(p.presentation());
        const long diff = std::labs(m - n);
        ++checked;
        if (diff == 0) {
          require(ab.free_rank == 2 && ab.torsion.empty(), p.to_string() + " gave " + ab.to_string(), acc);
          require(!bs_hypothesis_check(p).passed(kCommuteCheck), p.to_string() + " (iii) not flagged", acc);
          continue;
        }
        std::vector<BigInt> torsion;
        if (diff > 1) torsion.push_back(diff);
        require(ab.free_rank == 1 && ab.torsion == torsion, p.to_string() + " gave " + ab.to_string(), acc);
        require(ab.torsion_free() == (diff == 1), p.to_string() + " torsion-freeness", acc);
      }
    if (acc.pass) acc.detail = std::to_string(checked) + " groups: Z + Z/|m-n|, torsion-free iff |m-n| = 1, Z^2 at m = n";
    return acc;
  });

  run(5, "hypothesis checker verdicts", 1000, [] {
    Outcome acc;
    require(bs_hypothesis_check(BSParams(2, 3)).all_passed(), "BS(2,3) does not pass", acc);
    require(bs_hypothesis_check(BSParams(10, 11)).all_passed(), "BS(10,11) does not pass", acc);
    require(!bs_hypothesis_check(BSParams(2, 2)).passed(kCommuteCheck), "BS(2,2) passes (iii)", acc);
    require(!bs_hypothesis_check(BSParams(2, 4)).passed(kTorsionCheck), "BS(2,4) torsion-free", acc);
    if (acc.pass) acc.detail = "BS(2,3), BS(10,11) pass; BS(2,2) fails (iii); BS(2,4) fails torsion-freeness";
    return acc;
  });

  run(6, "pushout of R and J simplifies to Q; deficiencies 0; abelianizations Z + Z/5", 1000, [] {
    const ExoticReport r = emit_exotic_presentations();
    Outcome acc;
    require(equal_up_to_renaming(r.simplified.presentation, r.q_expected, r.renaming), "Q mismatch", acc);
    require(r.deficiency_p == 0 && r.deficiency_q == 0, "deficiency", acc);
    require(r.ab_p == r.ab_q && r.ab_p.to_string() == "Z + Z/5", "abelianization " + r.ab_p.to_string() + " vs " + r.ab_q.to_string(), acc);
    if (acc.pass) acc.detail = r.simplified.presentation.to_string() + " ~ " + r.q_expected.to_string();
    return acc;
  });

  run(7, "reduction of psi by phi and the two-case refutation", 1000, [] {
    const CaseAnalysis ca = non_generation_case_analysis(psi_phi_constants());
    Outcome acc;
    require(ca.division_verified, "phi q + r != psi", acc);
    require(ca.remainder_degree < 15 && ca.support_in_5z, "remainder degree or support", acc);
    require(ca.cases.size() == 2 && ca.all_refuted(), "cases", acc);
    if (acc.pass) {
      acc.detail = "deg r = " + std::to_string(ca.remainder_degree) + ", support in 5Z";
      for (const auto& c : ca.cases) acc.detail += "; refuted b = " + c.b.to_string() + ": a2 = " + c.required_a2.to_string();
    }
    return acc;
  });

  run(8, "property suites", 60000, [] {
    Outcome acc;
    gwtest::Rng rng(8);
    const auto ring = SkewRing::trefoil();
    std::size_t assoc = 0, sigma = 0, divisions = 0, britton = 0, snf = 0;
    for (int i = 0; i < 1000; ++i, ++assoc) {
      const SkewElement a = gwtest::random_skew(rng, ring), b = gwtest::random_skew(rng, ring), c = gwtest::random_skew(rng, ring);
      if (!((a * b) * c == a * (b * c))) require(false, "associativity", acc);
    }
    for (int i = 0; i < 1000; ++i, ++sigma) {
      const LaurentPoly a = gwtest::random_laurent(rng), b = gwtest::random_laurent(rng);
      const long j = gwtest::uniform(rng, -6, 6);
      if (!(sk_sigma(*ring, a * b, j) == sk_sigma(*ring, a, j) * sk_sigma(*ring, b, j)) ||
          !(sk_sigma(*ring, a + b, j) == sk_sigma(*ring, a, j) + sk_sigma(*ring, b, j)))
        require(false, "sigma not a ring map", acc);
      if (!(sk_sigma(*ring, a, 6) == a)) require(false, "sigma^6 != id", acc);
    }
    for (int i = 0; i < 1000; ++i, ++divisions) {
      const SkewElement a = gwtest::random_skew(rng, ring, 6), b = gwtest::random_monic(rng, ring);
      const DivisionResult d = sk_euclid_div(a, b);
      if (!(b * d.quotient + d.remainder == a) || (!d.remainder.is_zero() && d.remainder.degree() >= b.degree()))
        require(false, "division postcondition", acc);
    }
    {
      const PsiPhi c = psi_phi_constants();
      const DivisionResult d = sk_euclid_div(c.psi, c.phi);
      ++divisions;
      if (!(c.phi * d.quotient + d.remainder == c.psi)) require(false, "psi / phi postcondition", acc);
    }
    for (const auto& [m, n] : std::vector<std::pair<long, long>>{{2, 3}, {3, 2}, {1, 2}, {2, 4}}) {
      const BSParams p(m, n);
      for (int i = 0; i < 300; ++i, ++britton) {
        const Word w1 = gwtest::random_bs_word(rng);
        const Word w2 = gwtest::perturb_bs_word(rng, w1, p);
        const BrittonForm f1 = britton_normalize(w1, p), f2 = britton_normalize(w2, p);
        if (!(f1 == f2)) require(false, "equal words with distinct normal forms", acc);
        if (f1 == f2 && !(phi_matrix(w1, p) == phi_matrix(w2, p))) require(false, "normal forms unsound", acc);
        const Word w3 = gwtest::random_bs_word(rng);
        if (britton_normalize(w3, p) == f1 && !(phi_matrix(w3, p) == phi_matrix(w1, p))) require(false, "normal forms unsound", acc);
      }
    }
    for (int i = 0; i < 1000; ++i, ++snf) {
      const IntMatrix m = gwtest::random_int_matrix(rng, 3, 3);
      const SmithResult s = smith_normal_form(m);
      if (!(s.u * m * s.v == s.d) || abs(determinant(s.u)) != 1 || abs(determinant(s.v)) != 1 ||
          !gwtest::is_diagonal_chain(s.d) || s.diagonal() != gwtest::determinantal_invariants(m))
        require(false, "SNF mismatch on " + m.to_string(), acc);
    }
    if (acc.pass)
      acc.detail = std::to_string(assoc) + " associativity triples, " + std::to_string(sigma) + " sigma pairs (with sigma^6), " +
                   std::to_string(divisions) + " divisions re-multiplied, " + std::to_string(britton) + " word pairs, " +
                   std::to_string(snf) + " 3x3 SNFs vs minors";
    return acc;
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << "\n";
  return failures == 0 ? 0 : 1;
}
