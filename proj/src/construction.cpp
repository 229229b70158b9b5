#include "becpolar/construction.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace becpolar {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void validate(const Criterion& criterion) {
  if (const auto* pw = std::get_if<PointwiseAt>(&criterion)) {
    if (pw->p <= 0 || pw->p >= 1) throw std::invalid_argument("rank: p must lie strictly between 0 and 1");
  }
  if (const auto* be = std::get_if<BetaExpansion>(&criterion)) {
    if (be->beta <= 1) throw std::invalid_argument("rank: beta must exceed 1");
  }
}

}  // namespace

std::string describe(const Criterion& c) {
  return std::visit(overloaded{
                        [](const PointwiseAt& pw) { return "p=" + to_fraction_string(pw.p); },
                        [](const Average&) { return std::string("avr"); },
                        [](const BetaExpansion& be) { return "beta=" + to_fraction_string(be.beta); },
                    },
                    c);
}

RankedChannels rank(const Criterion& criterion, const ChannelTable& table) {
  validate(criterion);
  RankedChannels out;
  out.m = table.m;
  out.criterion = criterion;
  const std::size_t n = table.size();
  out.scores = std::visit(overloaded{
                              [&](const PointwiseAt& pw) {
                                std::vector<Rational> s(n);
                                for (std::size_t u = 0; u < n; ++u) s[u] = table.polys[u].eval(pw.p);
                                return s;
                              },
                              [&](const Average&) { return avr_all(table); },
                              [&](const BetaExpansion& be) {
                                std::vector<Rational> s(n);
                                for (std::size_t u = 0; u < n; ++u) {
                                  s[u] = beta_value(Monomial::from_int(static_cast<std::uint32_t>(u), table.m), be.beta);
                                }
                                return s;
                              },
                          },
                          criterion);
  out.order.resize(n);
  std::iota(out.order.begin(), out.order.end(), 0u);
  std::stable_sort(out.order.begin(), out.order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return out.scores[a] < out.scores[b]; });
  return out;
}

RankedChannels rank(const Criterion& criterion, int m) {
  validate(criterion);
  if (std::holds_alternative<BetaExpansion>(criterion)) {
    // No polynomials needed.
    Monomial::one(m);
    return rank(criterion, ChannelTable{m, std::vector<IntPoly>(std::size_t{1} << m)});
  }
  return rank(criterion, synth_all(m));
}

std::vector<Monomial> construct(const Criterion& criterion, const ChannelTable& table, std::size_t k) {
  if (k > table.size()) throw std::invalid_argument("construct: k exceeds 2^m");
  const RankedChannels ranked = rank(criterion, table);
  std::vector<Monomial> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(Monomial::from_int(ranked.order[i], table.m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> construct(const Criterion& criterion, int m, std::size_t k) {
  if (k == 0) {
    Monomial::one(m);
    return {};
  }
  return construct(criterion, synth_all(m), k);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> incomparable_pairs(const ChannelTable& table) {
  if (table.m > 6) throw std::invalid_argument("incomparable_pairs: m must be at most 6");
  const PointwiseMatrix verdicts = pointwise_matrix(table);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t u = 0; u < table.size(); ++u) {
    for (std::uint32_t v = u + 1; v < table.size(); ++v) {
      if (verdicts[u][v] == Comparison::incomparable) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> avr_of_pairs(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs, const std::vector<Rational>& avr,
    int places) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(pairs.size());
  for (const auto& [u, v] : pairs) out.emplace_back(to_decimal(avr.at(u), places), to_decimal(avr.at(v), places));
  return out;
}

std::array<std::size_t, 10> avr_distribution(const std::vector<Rational>& avr) {
  std::array<std::size_t, 10> counts{};
  for (const auto& a : avr) {
    if (a <= 0 || a > 1) throw std::logic_error("avr_distribution: value " + to_fraction_string(a) + " outside (0, 1]");
    // Smallest i with a <= (i + 1) / 10.
    const Rational scaled = a * 10;
    BigInt bucket = scaled.get_num() / scaled.get_den();  // floor
    if (Rational(bucket) == scaled) bucket -= 1;
    counts[bucket.get_ui()] += 1;
  }
  return counts;
}

Rational beta_value(const Monomial& u, const Rational& beta) {
  Rational sum = 0;
  Rational power = 1;
  for (int i = 0; i < u.m(); ++i) {
    if (u.has(i)) sum += power;
    power *= beta;
  }
  return sum;
}

BetaComparison compare_beta_avr(const std::vector<Rational>& avr, int m, const Rational& beta) {
  if (beta <= 1) throw std::invalid_argument("compare_beta_avr: beta must exceed 1");
  if (avr.size() != (std::size_t{1} << m)) throw std::invalid_argument("compare_beta_avr: size mismatch");
  const std::size_t n = avr.size();
  std::vector<Rational> b(n);
  for (std::size_t u = 0; u < n; ++u) b[u] = beta_value(Monomial::from_int(static_cast<std::uint32_t>(u), m), beta);

  BetaComparison out;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (avr[u] < avr[v] && b[u] > b[v]) ++out.discordant_pairs;
    }
  }

  std::vector<std::uint32_t> by_avr(n);
  std::iota(by_avr.begin(), by_avr.end(), 0u);
  std::vector<std::uint32_t> by_beta = by_avr;
  std::stable_sort(by_avr.begin(), by_avr.end(), [&](auto x, auto y) { return avr[x] < avr[y]; });
  std::stable_sort(by_beta.begin(), by_beta.end(), [&](auto x, auto y) { return b[x] < b[y]; });
  for (std::size_t i = 0; i < n; ++i) out.displaced_positions += by_avr[i] != by_beta[i];
  out.incompatible_pairs = (out.displaced_positions + 3) / 4;
  return out;
}

std::size_t beta_incompatible_count(const std::vector<Rational>& avr, int m, const Rational& beta) {
  return compare_beta_avr(avr, m, beta).incompatible_pairs;
}

}  // namespace becpolar
