#include <doctest.h>

#include <random>

#include "becpolar/synthesis.hpp"
#include "oracles.hpp"

using namespace becpolar;

namespace {

IntPoly poly(std::initializer_list<long> cs) {
  std::vector<BigInt> v;
  for (long c : cs) v.emplace_back(c);
  return IntPoly(v);
}

}  // namespace

TEST_CASE("small channels") {
  CHECK(synth_poly(Monomial::from_int(1, 1)) == poly({0, 2, -1}));
  CHECK(synth_poly(Monomial::from_int(0, 1)) == poly({0, 0, 1}));
  CHECK(synth_poly(Monomial::from_int(0, 2)) == poly({0, 0, 0, 0, 1}));
  // u = (1, 0): T0 first, then T1, giving 2p^2 - p^4.
  CHECK(synth_poly(Monomial::from_int(1, 2)) == poly({0, 0, 2, 0, -1}));
  // u = (0, 1): T1 first, then T0, giving (2p - p^2)^2.
  CHECK(synth_poly(Monomial::from_int(2, 2)) == poly({0, 0, 4, -4, 1}));
  CHECK(square_step(poly({0, 1})) == poly({0, 0, 1}));
  CHECK(parallel_step(poly({0, 1})) == poly({0, 2, -1}));
}

TEST_CASE("direct synthesis matches the unmemoized recursion") {
  for (int m = 1; m <= 6; ++m) {
    for (const auto& u : all_monomials(m)) CHECK(synth_poly(u).coeffs() == oracle::channel(u.to_int(), m));
  }
}

TEST_CASE("memoized table matches direct synthesis on random channels") {
  std::mt19937 rng(2024);
  for (int m = 1; m <= 8; ++m) {
    const ChannelTable t = synth_all(m);
    REQUIRE(t.size() == (std::size_t{1} << m));
    std::uniform_int_distribution<std::uint32_t> pick(0, (1u << m) - 1);
    for (int s = 0; s < 50; ++s) {
      const auto u = Monomial::from_int(pick(rng), m);
      CHECK(t.at(u) == synth_poly(u));
    }
  }
}

TEST_CASE("table invariants") {
  for (int m = 1; m <= 8; ++m) {
    const ChannelTable t = synth_all(m);
    IntPoly sum;
    for (const auto& z : t.polys) sum += z;
    CHECK(sum == IntPoly({BigInt(0), BigInt(1) << m}));
    for (const auto& u : all_monomials(m)) {
      CHECK(dual_poly(t.at(u)) == t.at(u.complement()));
      CHECK(t.at(u).degree() == (1 << m));
    }
    const auto avr = avr_all(t);
    for (const auto& u : all_monomials(m)) CHECK(avr[u.to_int()] + avr[u.complement().to_int()] == 1);
  }
}

TEST_CASE("size cap") {
  CHECK_THROWS_AS(synth_all(11), std::invalid_argument);
  CHECK_THROWS_AS(synth_all(5, 4), std::invalid_argument);
}

TEST_CASE("averages") {
  const ChannelTable t = synth_all(2);
  const auto avr = avr_all(t);
  for (std::size_t u = 0; u < t.size(); ++u) CHECK(avr[u] == oracle::integral(oracle::channel(u, 2)));
  // p^4 integrates to 1/5.
  CHECK(avr[0] == Rational(1, 5));
}

TEST_CASE("threshold estimate") {
  const Rational tol = default_threshold_tolerance();
  CHECK(tol == Rational(1, 1 << 30));
  // p^2 = 1/2 at p = 1/sqrt(2).
  const Rational t = threshold_estimate(poly({0, 0, 1}), tol);
  CHECK(abs(t * t - Rational(1, 2)) < 3 * tol);
  // p itself crosses at exactly 1/2.
  CHECK(abs(threshold_estimate(poly({0, 1}), tol) - Rational(1, 2)) <= tol);
  CHECK_THROWS_AS(threshold_estimate(poly({1}), tol), std::domain_error);

  const ChannelTable t5 = synth_all(5);
  for (const auto& u : all_monomials(5)) {
    const Rational a = threshold_estimate(t5.at(u), tol);
    const Rational b = threshold_estimate(t5.at(u.complement()), tol);
    CHECK(abs(a + b - 1) <= 2 * tol);
    // The estimate brackets a genuine 1/2 crossing.
    CHECK(sgn(t5.at(u).eval(a - tol) - Rational(1, 2)) * sgn(t5.at(u).eval(a + tol) - Rational(1, 2)) <= 0);
  }
}

TEST_CASE("serial reference agrees") {
  for (int m = 1; m <= 7; ++m) {
    const ChannelTable a = synth_all(m);
    const ChannelTable b = serial::synth_all(m);
    CHECK(a.polys == b.polys);
    CHECK(avr_all(a) == serial::avr_all(b));
  }
}
