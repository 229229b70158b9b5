#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "becpolar/monomial.hpp"
#include "becpolar/orders.hpp"
#include "becpolar/polynomial.hpp"
#include "becpolar/synthesis.hpp"

namespace becpolar {

/// Rank by Z(W^u)(p) at a fixed erasure probability 0 < p < 1.
struct PointwiseAt {
  Rational p;
};
/// Rank by the average Avr(u) over p in [0, 1].
struct Average {};
/// Rank by beta(u) = sum u_i beta^i, beta > 1 (exact rational beta).
struct BetaExpansion {
  Rational beta;
};

using Criterion = std::variant<PointwiseAt, Average, BetaExpansion>;

std::string describe(const Criterion& c);

/// Channels sorted from most to least reliable under a criterion.
struct RankedChannels {
  int m = 0;
  Criterion criterion;
  /// Channel indices by ascending score; ties broken by ascending u.
  std::vector<std::uint32_t> order;
  /// scores[u], exact.
  std::vector<Rational> scores;
};

/// Throws std::invalid_argument when p is outside (0, 1) or beta <= 1.
RankedChannels rank(const Criterion& criterion, const ChannelTable& table);
RankedChannels rank(const Criterion& criterion, int m);

/// The first k channels of the ranking, as monomials in increasing order.
std::vector<Monomial> construct(const Criterion& criterion, const ChannelTable& table, std::size_t k);
std::vector<Monomial> construct(const Criterion& criterion, int m, std::size_t k);

/// Unordered pairs (u, v), u < v, whose polynomials cross inside (0, 1).
/// Requires m <= 6.
std::vector<std::pair<std::uint32_t, std::uint32_t>> incomparable_pairs(const ChannelTable& table);

/// Avr of both members of each pair, rendered with `places` decimals.
std::vector<std::pair<std::string, std::string>> avr_of_pairs(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs, const std::vector<Rational>& avr,
    int places);

/// counts[i] = #{u : Avr(u) in (i/10, (i+1)/10]}. Throws std::logic_error
/// if some value lands in no bucket.
std::array<std::size_t, 10> avr_distribution(const std::vector<Rational>& avr);

/// sum u_i beta^i.
Rational beta_value(const Monomial& u, const Rational& beta);

/// How the beta-expansion ranking disagrees with the Avr ranking.
struct BetaComparison {
  /// Unordered pairs with Avr(u) < Avr(v) but beta(u) > beta(v).
  std::size_t discordant_pairs = 0;
  /// Rank positions holding different channels in the two orders.
  std::size_t displaced_positions = 0;
  /// Swapped channel pairs up to the duality u -> ubar: every swap moves two
  /// positions and is mirrored in the other half of the ranking, so this is
  /// displaced_positions / 4, rounded up.
  std::size_t incompatible_pairs = 0;
};

/// Throws std::invalid_argument for beta <= 1 or a size mismatch.
BetaComparison compare_beta_avr(const std::vector<Rational>& avr, int m, const Rational& beta);

/// compare_beta_avr(...).incompatible_pairs.
std::size_t beta_incompatible_count(const std::vector<Rational>& avr, int m, const Rational& beta);

}  // namespace becpolar
