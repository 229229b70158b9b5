#include <doctest.h>

#include <cmath>

#include "becpolar/reliability.hpp"
#include "becpolar/synthesis.hpp"
#include "oracles.hpp"

using namespace becpolar;

namespace {

// Source-sink connectivity of the edge subset `mask` by depth-first search.
bool connected(const CompositionGraph& g, std::uint32_t mask) {
  std::vector<bool> seen(g.nodes, false);
  std::vector<int> stack = {g.source};
  seen[g.source] = true;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      if (!((mask >> e) & 1u)) continue;
      const auto [a, b] = g.edges[e];
      const int y = a == x ? b : b == x ? a : -1;
      if (y >= 0 && !seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return seen[g.sink];
}

std::vector<mpz_class> dfs_path_counts(const CompositionGraph& g) {
  std::vector<mpz_class> counts(g.edges.size() + 1, 0);
  for (std::uint32_t mask = 0; mask < (1u << g.edges.size()); ++mask) {
    if (connected(g, mask)) counts[__builtin_popcount(mask)] += 1;
  }
  return counts;
}

Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("composition parameters") {
  const auto p = composition_params(Monomial::from_int(0b0110, 4));
  CHECK(p.n == 16);
  CHECK(p.w == 4);
  CHECK(p.l == 4);
  const auto q0 = composition_params(Monomial::one(3));
  CHECK(q0.w == 1);
  CHECK(q0.l == 8);
}

TEST_CASE("graph construction") {
  // All series: a path of 2^m edges.
  const auto path = build_graph(Monomial::one(2));
  CHECK(path.edges.size() == 4);
  CHECK(path.nodes == 5);
  // All parallel: 2^m copies of the source-sink edge.
  const auto bundle = build_graph(Monomial::from_int(3, 2));
  CHECK(bundle.nodes == 2);
  for (const auto& e : bundle.edges) CHECK(e == std::pair<int, int>{0, 1});
  CHECK_THROWS_AS(build_graph(Monomial::one(13)), std::invalid_argument);
}

TEST_CASE("union-find oracle matches depth-first enumeration") {
  for (int m = 1; m <= 4; ++m) {
    for (const auto& u : all_monomials(m)) {
      const auto g = build_graph(u);
      const PathCounts pc = oracle_path_counts(g);
      CHECK(pc.counts == dfs_path_counts(g));
      CHECK(pc == serial::oracle_path_counts(g));
    }
  }
  CHECK_THROWS_AS(oracle_path_counts(build_graph(Monomial::one(5))), std::invalid_argument);
}

TEST_CASE("reliability of the composition equals the channel polynomial") {
  for (int m = 1; m <= 4; ++m) {
    for (const auto& u : all_monomials(m)) {
      const PathCounts pc = oracle_path_counts(build_graph(u));
      CHECK(pc == to_path_counts(synth_poly(u), 1u << m));
      CHECK(from_path_counts(pc).coeffs() == oracle::channel(u.to_int(), m));
    }
  }
}

TEST_CASE("inclusion-exclusion counts") {
  for (int m = 1; m <= 6; ++m) {
    for (int i = 0; i <= m; ++i) {
      const PathCounts pc = ni_inclusion_exclusion(m, i);
      const oracle::Coeffs z = oracle::channel((1u << i) - 1, m);
      CHECK(pc == to_path_counts(IntPoly(z), 1u << m));
    }
  }
  CHECK_THROWS_AS(ni_inclusion_exclusion(3, 4), std::invalid_argument);
}

TEST_CASE("generalized binomials") {
  CHECK(gen_binomial(5, 2) == 10);
  CHECK(gen_binomial(q(5, 2), 2) == q(15, 8));
  CHECK(gen_binomial(q(1, 2), 3) == q(1, 16));
  CHECK(gen_binomial(q(7, 3), 0) == 1);
}

TEST_CASE("closed-form averages") {
  // Avr of (1, 0, 0): direct integration of the channel polynomial.
  CHECK(avr_closed_form(3, 1) == q(13, 45));
  CHECK(avr_closed_form(3, 1) == oracle::integral(oracle::channel(1, 3)));
  for (int m = 1; m <= 8; ++m) {
    for (int i = 0; i <= m; ++i) {
      const std::uint32_t u = (1u << i) - 1;
      CHECK(avr_closed_form(m, i) == oracle::integral(oracle::channel(u, m)));
      CHECK(avr_closed_form_complement(m, i) == oracle::integral(oracle::channel(((1u << m) - 1) ^ u, m)));
      CHECK(avr_closed_form(m, i) + avr_closed_form_complement(m, i) == 1);
    }
  }
  CHECK_THROWS_AS(avr_closed_form(3, 4), std::invalid_argument);
}

TEST_CASE("real binomial") {
  CHECK(real_binomial(5, 2) == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(real_binomial(2.5, 2) == doctest::Approx(1.875).epsilon(1e-12));
}

TEST_CASE("closed-form binomial trends") {
  ThresholdBinomials prev = threshold_binomials(6);
  for (int m = 7; m <= 12; ++m) {
    const ThresholdBinomials cur = threshold_binomials(m);
    CHECK(cur.toward_one < prev.toward_one);
    CHECK(cur.toward_one > 1);
    CHECK(cur.unbounded > prev.unbounded);
    CHECK(cur.toward_two > prev.toward_two);
    CHECK(cur.toward_two < 2);
    prev = cur;
  }
  // The unbounded one eventually exceeds 10^3.
  int crossing = 0;
  for (int m = 13; m <= 200 && crossing == 0; ++m) {
    if (threshold_binomials(m).unbounded > 1000) crossing = m;
  }
  CHECK(crossing > 12);
  CHECK(threshold_binomials(200).toward_two == doctest::Approx(2.0).epsilon(0.05));
  CHECK(threshold_binomials(200).toward_one == doctest::Approx(1.0).epsilon(0.15));
  CHECK_THROWS_AS(threshold_binomials(1), std::invalid_argument);
}
