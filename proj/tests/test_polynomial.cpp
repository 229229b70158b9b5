#include <doctest.h>

#include <random>

#include "becpolar/orders.hpp"
#include "becpolar/polynomial.hpp"
#include "becpolar/synthesis.hpp"
#include "oracles.hpp"

using namespace becpolar;

namespace {

IntPoly poly(std::initializer_list<long> cs) {
  std::vector<BigInt> v;
  for (long c : cs) v.emplace_back(c);
  return IntPoly(v);
}

IntPoly random_poly(std::mt19937& rng, int degree, long range) {
  std::uniform_int_distribution<long> pick(-range, range);
  std::vector<BigInt> v;
  for (int i = 0; i <= degree; ++i) v.emplace_back(pick(rng));
  return IntPoly(v);
}

Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("normalization and basic arithmetic") {
  CHECK(poly({1, 2, 0, 0}).degree() == 1);
  CHECK(poly({0}).is_zero());
  CHECK(IntPoly().degree() == -1);
  CHECK(poly({1, 1}) * poly({-1, 1}) == poly({-1, 0, 1}));
  CHECK(poly({1, 2}) - poly({1, 2}) == IntPoly());
  CHECK(-poly({1, -2}) == poly({-1, 2}));
  CHECK(poly({3, 0, 1}).derivative() == poly({0, 2}));
  CHECK(poly({0, 2, -1}).to_string() == "-p^2 + 2p");
  CHECK(IntPoly().to_string() == "0");
}

TEST_CASE("square matches schoolbook multiplication") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const IntPoly a = random_poly(rng, trial % 20, 1000);
    CHECK(square(a).coeffs() == oracle::mul(a.coeffs(), a.coeffs()));
  }
}

TEST_CASE("reflection and evaluation") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const IntPoly a = random_poly(rng, 12, 50);
    for (const Rational& p : {q(1, 3), q(2, 7), q(0, 1), q(1, 1), q(-5, 4)}) {
      CHECK(a.eval(p) == oracle::eval(a.coeffs(), p));
      CHECK(eval_rational(a, p) == oracle::eval(a.coeffs(), p));
      CHECK(a.reflect().eval(p) == oracle::eval(a.coeffs(), 1 - p));
      const int s = a.sign_at(p.get_num(), p.get_den());
      CHECK(s == sgn(oracle::eval(a.coeffs(), p)));
    }
  }
}

TEST_CASE("exact integration") {
  CHECK(integrate01(poly({0, 2, -1})) == q(2, 3));
  CHECK(integrate01(IntPoly()) == 0);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const IntPoly a = random_poly(rng, 25, 100000);
    CHECK(integrate01(a) == oracle::integral(a.coeffs()));
  }
}

TEST_CASE("decimal and fraction rendering") {
  CHECK(to_decimal(q(7, 15), 2) == "0.47");
  CHECK(to_decimal(q(1, 8), 2) == "0.13");
  CHECK(to_decimal(q(-1, 8), 2) == "-0.13");
  CHECK(to_decimal(q(1, 1), 3) == "1.000");
  CHECK(to_fraction_string(q(6, 4)) == "3/2");
  CHECK(to_fraction_string(q(4, 2)) == "2");
  CHECK(parse_rational("1.22") == q(61, 50));
  CHECK(parse_rational("-0.5") == q(-1, 2));
  CHECK(parse_rational("6/4") == q(3, 2));
  CHECK(parse_rational("12") == 12);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("path-count conversion round trip") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const int degree = trial * 64 / 40;
    const IntPoly a = random_poly(rng, degree, 1L << 40);
    for (unsigned n : {static_cast<unsigned>(std::max(degree, 0)), 64u}) {
      const PathCounts pc = to_path_counts(a, n);
      CHECK(from_path_counts(pc) == a);
      // Independent expansion of sum N_i p^i (1 - p)^(n - i).
      oracle::Coeffs sum;
      for (unsigned i = 0; i <= n; ++i) {
        oracle::Coeffs term = {pc.counts[i]};
        for (unsigned k = 0; k < i; ++k) term = oracle::mul(term, {0, 1});
        for (unsigned k = i; k < n; ++k) term = oracle::mul(term, {1, -1});
        sum = oracle::sub(sum, oracle::sub({}, term));
      }
      CHECK(sum == a.coeffs());
    }
  }
  CHECK_THROWS_AS(to_path_counts(poly({0, 0, 1}), 1), std::invalid_argument);
}

TEST_CASE("integration through path counts") {
  for (int m = 1; m <= 8; ++m) {
    const ChannelTable t = synth_all(m);
    for (const auto& z : t.polys) {
      const PathCounts pc = to_path_counts(z, 1u << m);
      Rational avg = 0;
      for (unsigned i = 0; i <= pc.n; ++i) {
        Rational term(pc.counts[i], oracle::choose(pc.n, i));
        term.canonicalize();
        avg += term;
      }
      avg /= pc.n + 1;
      CHECK(integrate01(z) == avg);
      CHECK(average_from_path_counts(pc) == avg);
    }
  }
}

TEST_CASE("sign analysis on polynomials with known roots") {
  // (p - 1/3)^2 touches zero without crossing.
  CHECK(nonneg_on_01(poly({1, -6, 9})) == SignVerdict::nonnegative);
  CHECK(nonneg_on_01(poly({1, -6, 9}), SignMethod::sturm_only) == SignVerdict::nonnegative);
  // (3p - 1)(2p - 1) is negative between 1/3 and 1/2.
  CHECK(nonneg_on_01(poly({1, -5, 6})) == SignVerdict::crosses_zero);
  // Roots outside [0, 1]: (p + 1)(p - 2) < 0 everywhere on [0, 1].
  CHECK(nonneg_on_01(poly({-2, -1, 1})) == SignVerdict::crosses_zero);
  CHECK(nonneg_on_01(poly({2, 1, -1})) == SignVerdict::nonnegative);
  // Endpoint roots are allowed: p(1 - p) and p^3 (1 - p)^2.
  CHECK(nonneg_on_01(poly({0, 1, -1}), SignMethod::sturm_only) == SignVerdict::nonnegative);
  CHECK(nonneg_on_01(poly({0, 0, 0, 1, -2, 1}), SignMethod::sturm_only) == SignVerdict::nonnegative);
  CHECK(nonneg_on_01(poly({0, -1, 1})) == SignVerdict::crosses_zero);
  CHECK(nonneg_on_01(IntPoly()) == SignVerdict::identically_zero);
  // (p - 1/2)^3 changes sign at a triple root.
  CHECK(nonneg_on_01(poly({-1, 6, -12, 8}), SignMethod::sturm_only) == SignVerdict::crosses_zero);
  // (p - 1/2)^2 (p - 1/4)^2 (p - 3/4)^2 has three double roots.
  const IntPoly sq = square(poly({-1, 2}) * poly({-1, 4}) * poly({-3, 4}));
  CHECK(nonneg_on_01(sq, SignMethod::sturm_only) == SignVerdict::nonnegative);
  CHECK(nonneg_on_01(sq - poly({1}), SignMethod::sturm_only) == SignVerdict::crosses_zero);
}

TEST_CASE("root counting") {
  const IntPoly a = poly({-1, 2}) * poly({-1, 4}) * poly({-3, 4});
  CHECK(count_roots(a, 0, 1) == 3);
  CHECK(count_roots(a, q(1, 4), 1) == 2);  // (lo, hi]
  CHECK(count_roots(a, 0, q(1, 4)) == 1);
  CHECK(count_roots(square(a), 0, 1) == 3);
  CHECK(count_roots(poly({1, 0, 1}), -10, 10) == 0);
}

TEST_CASE("sign analysis agrees with dense sampling on channel pairs") {
  const long grid = 10000;
  for (int m = 1; m <= 5; ++m) {
    const ChannelTable t = synth_all(m);
    const std::size_t n = t.size();
    const std::size_t deg = std::size_t{1} << m;
    // values[u][k] = grid^deg * Z_u(k / grid).
    std::vector<std::vector<mpz_class>> values(n, std::vector<mpz_class>(grid + 1));
    for (std::size_t u = 0; u < n; ++u) {
      for (long k = 0; k <= grid; ++k) values[u][k] = oracle::homogeneous(t.polys[u].coeffs(), deg, k, grid);
    }
    std::size_t crossing = 0;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (u == v) continue;
        bool sampled_negative = false;
        for (long k = 0; k <= grid && !sampled_negative; ++k) sampled_negative = values[v][k] < values[u][k];
        const SignVerdict verdict = nonneg_on_01(t.polys[v] - t.polys[u]);
        if (sampled_negative) CHECK(verdict == SignVerdict::crosses_zero);
        if (verdict == SignVerdict::crosses_zero) {
          ++crossing;
          // No tangential contacts among channel pairs at these sizes.
          CHECK(sampled_negative);
        }
      }
    }
    // One direction of every comparable pair, both directions of the seven
    // crossing pairs at m = 5.
    CHECK(crossing == n * (n - 1) / 2 + (m == 5 ? 7 : 0));
  }
}

TEST_CASE("Bernstein fast path agrees with the Sturm path") {
  std::size_t fired = 0;
  for (int m = 1; m <= 5; ++m) {
    const ChannelTable t = synth_all(m);
    for (std::size_t u = 0; u < t.size(); ++u) {
      for (std::size_t v = 0; v < t.size(); ++v) {
        const IntPoly d = t.polys[v] - t.polys[u];
        if (d.is_zero() || !bernstein_nonnegative(d)) continue;
        ++fired;
        CHECK(nonneg_on_01(d, SignMethod::sturm_only) == SignVerdict::nonnegative);
      }
    }
  }
  CHECK(fired > 0);
  // The shortcut is only sufficient: (2p - 1)^2 is nonnegative yet has a
  // negative Bernstein coefficient.
  CHECK_FALSE(bernstein_nonnegative(poly({1, -4, 4})));
  CHECK(nonneg_on_01(poly({1, -4, 4})) == SignVerdict::nonnegative);
}
