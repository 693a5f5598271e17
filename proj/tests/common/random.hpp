#pragma once

// Seeded generators and property checks shared by the unit and acceptance
// suites.

#include <cstdint>
#include <random>
#include <vector>

#include "gw/bs_group.hpp"
#include "gw/exact.hpp"
#include "gw/laurent.hpp"
#include "gw/presentation.hpp"
#include "gw/skew.hpp"
#include "gw/smith.hpp"
#include "gw/zx_poly.hpp"

namespace gwtest {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline gw::Rational random_rational(Rng& rng) {
  long d = uniform(rng, 1, 9);
  return gw::Rational(gw::BigInt(uniform(rng, -20, 20)), gw::BigInt(d));
}

inline gw::Mat2Q random_mat(Rng& rng) {
  return {random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)};
}

inline gw::LaurentPoly random_laurent(Rng& rng, std::size_t max_terms = 4, long span = 3) {
  gw::LaurentPoly out(2);
  const long terms = uniform(rng, 0, static_cast<long>(max_terms));
  for (long i = 0; i < terms; ++i) {
    long c = 0;
    while (c == 0) c = uniform(rng, -3, 3);
    out.add_term({uniform(rng, -span, span), uniform(rng, -span, span)}, c);
  }
  return out;
}

inline gw::SkewElement random_skew(Rng& rng, const gw::SkewRingPtr& ring, std::size_t max_terms = 4) {
  gw::SkewElement out(ring);
  const long terms = uniform(rng, 0, static_cast<long>(max_terms));
  for (long i = 0; i < terms; ++i) out.add_term(uniform(rng, -4, 4), random_laurent(rng, 2, 2));
  return out;
}

/// A random element that is monic at the SignedUnit level.
inline gw::SkewElement random_monic(Rng& rng, const gw::SkewRingPtr& ring) {
  gw::SkewElement out(ring);
  const long bottom = uniform(rng, -4, 2);
  const long width = uniform(rng, 0, 4);
  auto unit = [&] {
    return gw::LaurentPoly::monomial({uniform(rng, -2, 2), uniform(rng, -2, 2)}, uniform(rng, 0, 1) ? 1 : -1);
  };
  out.add_term(bottom, unit());
  if (width > 0) out.add_term(bottom + width, unit());
  for (long e = bottom + 1; e < bottom + width; ++e)
    if (uniform(rng, 0, 1)) out.add_term(e, random_laurent(rng, 2, 2));
  return out;
}

inline gw::ZxPoly random_zx(Rng& rng, long max_degree, bool nonzero_constant) {
  std::vector<gw::BigInt> c;
  const long deg = uniform(rng, 0, max_degree);
  for (long i = 0; i <= deg; ++i) c.emplace_back(uniform(rng, -4, 4));
  if (nonzero_constant && c[0] == 0) c[0] = 1;
  if (c.back() == 0) c.back() = 1;
  return gw::ZxPoly(c);
}

/// A random word in a, b with up to `max_syllables` syllables.
inline gw::Word random_bs_word(Rng& rng, std::size_t max_syllables = 20, long max_exp = 4) {
  gw::Word w;
  const long n = uniform(rng, 0, static_cast<long>(max_syllables));
  for (long i = 0; i < n; ++i) {
    long e = 0;
    while (e == 0) e = uniform(rng, -max_exp, max_exp);
    w.append(uniform(rng, 0, 1) ? "a" : "b", e);
  }
  return w;
}

/// Inserts conjugates of the relator or its inverse at random positions; the
/// result is equal to w in BS(m,n).
inline gw::Word perturb_bs_word(Rng& rng, const gw::Word& w, const gw::BSParams& p, int insertions = 3) {
  std::vector<gw::Syllable> syl = w.syllables();
  const gw::Word rel = p.presentation().relators().front();
  for (int k = 0; k < insertions; ++k) {
    const auto pos = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(syl.size())));
    const gw::Word conj = random_bs_word(rng, 3, 3);
    const gw::Word insert = conj * (uniform(rng, 0, 1) ? rel : rel.inverse()) * conj.inverse();
    syl.insert(syl.begin() + static_cast<long>(pos), insert.syllables().begin(), insert.syllables().end());
  }
  return gw::Word(syl);
}

/// Determinantal-divisor oracle: d_k = D_k / D_(k-1) with D_k the gcd of
/// all k x k minors.
inline std::vector<gw::BigInt> determinantal_invariants(const gw::IntMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<gw::BigInt> dk{gw::BigInt(1)};
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    gw::BigInt g = 0;
    std::vector<bool> rs(r, false), cs(c, false);
    std::fill(rs.begin(), rs.begin() + static_cast<long>(k), true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + static_cast<long>(k), true);
      do {
        gw::IntMatrix sub(k, k);
        std::size_t ii = 0;
        for (std::size_t i = 0; i < r; ++i) {
          if (!rs[i]) continue;
          std::size_t jj = 0;
          for (std::size_t j = 0; j < c; ++j)
            if (cs[j]) sub(ii, jj++) = m(i, j);
          ++ii;
        }
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), gw::determinant(sub).get_mpz_t());
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
    dk.push_back(g);
  }
  std::vector<gw::BigInt> out;
  for (std::size_t k = 1; k < dk.size(); ++k) out.push_back(dk[k - 1] == 0 ? gw::BigInt(0) : dk[k] / dk[k - 1]);
  return out;
}

inline gw::IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound = 9) {
  gw::IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, -bound, bound);
  return m;
}

inline bool is_diagonal_chain(const gw::IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < n; ++i) {
    if (d(i, i) < 0) return false;
    if (i + 1 < n && d(i, i) == 0 && d(i + 1, i + 1) != 0) return false;
    if (i + 1 < n && d(i, i) != 0 && d(i + 1, i + 1) % d(i, i) != 0) return false;
  }
  return true;
}

}  // namespace gwtest
