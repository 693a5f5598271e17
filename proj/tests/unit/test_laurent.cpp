#include <doctest.h>

#include "common/random.hpp"
#include "gw/error.hpp"
#include "gw/laurent.hpp"

using namespace gw;

namespace {
LaurentPoly m(long p, long q, long c = 1) { return LaurentPoly::monomial({p, q}, c); }
}  // namespace

TEST_SUITE("laurent") {
  TEST_CASE("lp_add") {
    CHECK(lp_add(m(1, 0), m(1, 0, -1)).is_zero());
    const LaurentPoly s = lp_add(m(2, 0), m(-2, 0));
    CHECK(s.num_terms() == 2);
    CHECK(s.to_string() == "p^2 + p^-2");
    CHECK(lp_add(LaurentPoly::constant(2, 1), LaurentPoly::constant(2, 1)) == LaurentPoly::constant(2, 2));
    CHECK_THROWS_AS(lp_add(LaurentPoly(2), LaurentPoly(3)), Error);
  }

  TEST_CASE("lp_mul") {
    CHECK(lp_mul(m(1, 0), m(0, 1)) == m(1, 1));
    CHECK(lp_mul(m(2, 0), m(-2, 0)) == LaurentPoly::constant(2, 1));
    const LaurentPoly one = LaurentPoly::constant(2, 1);
    CHECK(lp_mul(one + m(1, 0), one - m(1, 0)) == one - m(2, 0));
    try {
      lp_mul(LaurentPoly(2), LaurentPoly(1));
      FAIL("expected rank mismatch");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::RankMismatch);
    }
  }

  TEST_CASE("lp_is_unit") {
    const auto u = lp_unit_info(m(2, -1));
    REQUIRE(u);
    CHECK(u->sign == 1);
    CHECK(u->exponent == ExponentVector{2, -1});
    CHECK(lp_is_group_element(m(2, -1)));
    CHECK(lp_is_unit(m(0, 3, -1)));
    CHECK_FALSE(lp_is_group_element(m(0, 3, -1)));
    CHECK_FALSE(lp_is_unit(m(2, 0) + m(-2, 0)));
    CHECK_FALSE(lp_is_unit(m(1, 0, 2)));
    CHECK_FALSE(lp_is_unit(LaurentPoly(2)));
    CHECK(lp_unit_inverse(m(1, -2, -1)) == m(-1, 2, -1));
    CHECK_THROWS_AS(lp_unit_inverse(m(1, 0) + m(0, 1)), Error);
  }

  TEST_CASE("lp_augment") {
    CHECK(lp_augment(m(2, 0) + m(-2, 0)) == 2);
    CHECK(lp_augment(m(1, -1) + m(-2, 3)) == 2);
    CHECK(lp_augment(LaurentPoly(2)) == 0);
  }

  TEST_CASE("serialization is sorted and deterministic") {
    const LaurentPoly a = m(0, 0, 3) + m(2, -1);
    CHECK(a.to_string() == "p^2*q^-1 + 3");
    CHECK((m(0, 0, 3) + m(2, -1)).to_string() == (m(2, -1) + m(0, 0, 3)).to_string());
    CHECK(LaurentPoly(2).to_string() == "0");
    CHECK(m(0, 1, -1).to_string() == "-q");
  }

  TEST_CASE("ring axioms and augmentation homomorphism on random inputs") {
    gwtest::Rng rng(21);
    for (int i = 0; i < 300; ++i) {
      const LaurentPoly a = gwtest::random_laurent(rng), b = gwtest::random_laurent(rng), c = gwtest::random_laurent(rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(lp_augment(a * b) == lp_augment(a) * lp_augment(b));
      CHECK(lp_augment(a + b) == lp_augment(a) + lp_augment(b));
      if (lp_is_unit(a)) {
        const auto u = lp_unit_info(a);
        ExponentVector neg{-u->exponent[0], -u->exponent[1]};
        CHECK(a * LaurentPoly::monomial(neg) == LaurentPoly::constant(2, u->sign));
      }
    }
  }
}
