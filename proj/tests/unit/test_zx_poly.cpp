#include <doctest.h>

#include "common/random.hpp"
#include "gw/error.hpp"
#include "gw/torus_knot.hpp"
#include "gw/zx_poly.hpp"

using namespace gw;

namespace {
ZxLaurent lx(std::initializer_list<std::pair<long, long>> terms) {
  ZxLaurent out;
  for (auto [e, c] : terms) out.add_term(e, c);
  return out;
}
ZxPoly px(std::initializer_list<std::pair<long, long>> terms) { return ZxPoly::from_laurent(lx(terms)); }
}  // namespace

TEST_SUITE("zx_poly") {
  TEST_CASE("pi_project") {
    const PsiPhi c = psi_phi_constants();
    CHECK(pi_project(c.phi) == lx({{0, 1}, {-5, -2}, {-10, 2}, {-15, -1}}));
    CHECK(pi_project(c.psi) == lx({{0, -1}, {-5, 1}, {-10, -1}, {-20, 1}, {-25, -1}, {-35, 1}, {-40, 1}}));
    CHECK(pi_project(SkewElement(c.phi.ring())).is_zero());
    CHECK(pi_project(c.phi).to_string() == "1 - 2*x^-5 + 2*x^-10 - x^-15");
  }

  TEST_CASE("tilde_realise") {
    const Realisation a = tilde_realise(lx({{-2, 1}, {-1, 1}}));
    CHECK(a.poly == px({{0, 1}, {1, 1}}));
    CHECK(a.shift == 2);
    const Realisation b = tilde_realise(lx({{0, 1}, {-5, -2}, {-10, 2}, {-15, -1}}));
    CHECK(b.poly == px({{15, 1}, {10, -2}, {5, 2}, {0, -1}}));
    CHECK(b.shift == 15);
    const Realisation c = tilde_realise(lx({{0, 3}}));
    CHECK(c.poly == px({{0, 3}}));
    CHECK(c.shift == 0);
    CHECK(tilde_realise(lx({{4, 1}, {6, 2}})).shift == -4);
    CHECK_THROWS_AS(tilde_realise(ZxLaurent()), Error);
  }

  TEST_CASE("zx_gcd") {
    CHECK(zx_gcd(px({{2, 1}, {0, -1}}), px({{3, 1}, {0, -1}})) == px({{1, 1}, {0, -1}}));
    CHECK(zx_gcd(px({{1, 2}}), px({{1, 3}})) == px({{1, 1}}));
    CHECK(zx_gcd(px({{1, 4}, {0, 6}}), px({{0, 10}})) == px({{0, 2}}));
    CHECK(zx_gcd(ZxPoly(), px({{1, -1}, {0, 1}})) == px({{1, 1}, {0, -1}}));
    CHECK(gcd_certificate().gcd == px({{10, 1}, {5, -1}, {0, 1}}));
    CHECK(gcd_certificate().gcd.to_string() == "x^10 - x^5 + 1");
  }

  TEST_CASE("zx_divides") {
    const auto q = zx_divides(px({{10, 1}, {5, -1}, {0, 1}}), px({{15, 1}, {10, -2}, {5, 2}, {0, -1}}));
    REQUIRE(q);
    CHECK(*q == px({{5, 1}, {0, -1}}));
    CHECK_FALSE(zx_divides(px({{1, 1}, {0, -1}}), px({{2, 1}, {0, 1}})));
    const ZxPoly a = px({{3, 2}, {0, 5}});
    REQUIRE(zx_divides(a, a));
    CHECK(*zx_divides(a, a) == px({{0, 1}}));
    CHECK_FALSE(zx_divides(px({{1, 2}, {0, 1}}), px({{1, 1}, {0, 1}})));
    try {
      zx_divides(px({{1, 1}}), a);
      FAIL("expected precondition error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Precondition);
    }
  }

  TEST_CASE("gcd divides both inputs and absorbs common divisors") {
    gwtest::Rng rng(41);
    for (int i = 0; i < 200; ++i) {
      const ZxPoly d = gwtest::random_zx(rng, 3, true);
      const ZxPoly a = d * gwtest::random_zx(rng, 4, true);
      const ZxPoly b = d * gwtest::random_zx(rng, 4, true);
      const ZxPoly g = zx_gcd(a, b);
      CHECK(g.leading() > 0);
      REQUIRE(zx_divides(g, a));
      REQUIRE(zx_divides(g, b));
      CHECK(g * *zx_divides(g, a) == a);
      CHECK(zx_divides(d, g).has_value());
    }
  }

  TEST_CASE("divisibility transfers from Laurent to polynomial ring") {
    gwtest::Rng rng(42);
    for (int i = 0; i < 200; ++i) {
      const ZxPoly a = gwtest::random_zx(rng, 4, true);
      const ZxLaurent u = gwtest::random_zx(rng, 3, true).to_laurent().shifted(gwtest::uniform(rng, -6, 6));
      const Realisation b = tilde_realise(a.to_laurent() * u);
      const auto q = zx_divides(a, b.poly);
      REQUIRE(q);
      CHECK(a * *q == b.poly);
    }
  }

  TEST_CASE("pi is a ring homomorphism") {
    const auto ring = SkewRing::trefoil();
    gwtest::Rng rng(43);
    for (int i = 0; i < 200; ++i) {
      const SkewElement u = gwtest::random_skew(rng, ring), v = gwtest::random_skew(rng, ring);
      CHECK(pi_project(u * v) == pi_project(u) * pi_project(v));
      CHECK(pi_project(u + v) == pi_project(u) + pi_project(v));
    }
  }
}
