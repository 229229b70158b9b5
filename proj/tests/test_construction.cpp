#include <doctest.h>

#include <algorithm>

#include "becpolar/construction.hpp"
#include "becpolar/orders.hpp"
#include "oracles.hpp"

using namespace becpolar;

namespace {

Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

std::vector<std::uint32_t> ints(const std::vector<Monomial>& ms) {
  std::vector<std::uint32_t> out;
  for (const auto& f : ms) out.push_back(f.to_int());
  return out;
}

}  // namespace

TEST_CASE("criterion descriptions") {
  CHECK(describe(Average{}) == "avr");
  CHECK(describe(PointwiseAt{q(1, 2)}) == "p=1/2");
  CHECK(describe(BetaExpansion{q(61, 50)}) == "beta=61/50");
}

TEST_CASE("ranking by average") {
  const ChannelTable t = synth_all(3);
  const RankedChannels r = rank(Average{}, t);
  CHECK(r.order == std::vector<std::uint32_t>{0, 1, 2, 4, 3, 5, 6, 7});
  for (std::uint32_t u = 0; u < 8; ++u) CHECK(r.scores[u] == oracle::integral(oracle::channel(u, 3)));
}

TEST_CASE("ranking at a fixed erasure probability") {
  const ChannelTable t = synth_all(2);
  const RankedChannels r = rank(PointwiseAt{q(1, 2)}, t);
  // Z at p = 1/2: 1/16, 7/16, 9/16, 15/16.
  CHECK(r.scores[0] == q(1, 16));
  CHECK(r.scores[1] == q(7, 16));
  CHECK(r.scores[2] == q(9, 16));
  CHECK(r.scores[3] == q(15, 16));
  CHECK(ints(construct(PointwiseAt{q(1, 2)}, t, 2)) == std::vector<std::uint32_t>{0, 1});
  CHECK_THROWS_AS(rank(PointwiseAt{q(3, 2)}, t), std::invalid_argument);
  CHECK_THROWS_AS(rank(PointwiseAt{q(0, 1)}, t), std::invalid_argument);
}

TEST_CASE("ties break by ascending index") {
  ChannelTable flat{2, std::vector<IntPoly>(4, IntPoly::identity())};
  const RankedChannels r = rank(PointwiseAt{q(1, 3)}, flat);
  CHECK(r.order == std::vector<std::uint32_t>{0, 1, 2, 3});
}

TEST_CASE("beta expansion") {
  CHECK(beta_value(Monomial::from_int(5, 3), 2) == 5);
  CHECK(beta_value(Monomial::from_int(6, 3), q(3, 2)) == q(3, 2) + q(9, 4));
  const RankedChannels r = rank(BetaExpansion{q(61, 50)}, 5);
  const RankedChannels a = rank(Average{}, 5);
  CHECK(r.order == a.order);
  CHECK_THROWS_AS(rank(BetaExpansion{1}, 3), std::invalid_argument);
}

TEST_CASE("construction returns the most reliable channels") {
  CHECK(ints(construct(Average{}, 5, 6)) == std::vector<std::uint32_t>{0, 1, 2, 4, 8, 16});
  CHECK(construct(Average{}, 5, 0).empty());
  CHECK(construct(Average{}, 3, 8).size() == 8);
  CHECK_THROWS_AS(construct(Average{}, synth_all(3), 9), std::invalid_argument);
}

TEST_CASE("average codes are decreasing") {
  for (int m = 1; m <= 6; ++m) {
    const ChannelTable t = synth_all(m);
    for (std::size_t k = 0; k <= t.size(); ++k) {
      CHECK(is_decreasing(construct(Average{}, t, k), Relation::standard));
    }
  }
}

TEST_CASE("incomparable pairs and their averages") {
  CHECK(incomparable_pairs(synth_all(4)).empty());
  const ChannelTable t5 = synth_all(5);
  const auto pairs = incomparable_pairs(t5);
  CHECK(pairs.size() == 7);
  const auto avr = avr_all(t5);
  // Every crossing pair is still ordered by its averages.
  for (const auto& [u, v] : pairs) CHECK(avr[u] != avr[v]);
  const auto rendered = avr_of_pairs({{7, 20}}, avr, 4);
  CHECK(rendered.front() == std::pair<std::string, std::string>{"0.4712", "0.4710"});
  CHECK_THROWS_AS(incomparable_pairs(synth_all(7)), std::invalid_argument);
}

TEST_CASE("distribution buckets") {
  const auto counts = avr_distribution({q(1, 10), q(1, 5), q(11, 100), q(1, 1)});
  CHECK(counts[0] == 1);
  CHECK(counts[1] == 2);
  CHECK(counts[9] == 1);
  CHECK_THROWS_AS(avr_distribution({q(0, 1)}), std::logic_error);
  CHECK_THROWS_AS(avr_distribution({q(3, 2)}), std::logic_error);
}

TEST_CASE("beta against average") {
  // beta swaps the two middle channels.
  const std::vector<Rational> avr = {q(1, 10), q(3, 10), q(2, 10), q(9, 10)};
  // beta = 3/2 in m = 2: values 0, 1, 3/2, 5/2 so u = 1 comes before u = 2.
  const BetaComparison c = compare_beta_avr(avr, 2, q(3, 2));
  CHECK(c.discordant_pairs == 1);
  CHECK(c.displaced_positions == 2);
  CHECK(c.incompatible_pairs == 1);
  CHECK(beta_incompatible_count(avr, 2, q(3, 2)) == 1);
  CHECK_THROWS_AS(compare_beta_avr(avr, 3, q(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(compare_beta_avr(avr, 2, 1), std::invalid_argument);
}
