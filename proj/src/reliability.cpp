#include "becpolar/reliability.hpp"

#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace becpolar {

CompositionParams composition_params(const Monomial& u) {
  const int m = u.m();
  const int weight = u.degree();
  return {m, u, std::uint64_t{1} << m, std::uint64_t{1} << weight, std::uint64_t{1} << (m - weight)};
}

CompositionGraph build_graph(const Monomial& u) {
  if (u.m() > 12) throw std::invalid_argument("build_graph: m must be at most 12");
  CompositionGraph g;
  g.edges = {{g.source, g.sink}};
  for (int i = 0; i < u.m(); ++i) {
    std::vector<std::pair<int, int>> next;
    next.reserve(g.edges.size() * 2);
    for (const auto& [a, b] : g.edges) {
      if (u.has(i)) {
        next.emplace_back(a, b);
        next.emplace_back(a, b);
      } else {
        const int middle = g.nodes++;
        next.emplace_back(a, middle);
        next.emplace_back(middle, b);
      }
    }
    g.edges = std::move(next);
  }
  return g;
}

namespace {

struct UnionFind {
  std::array<int, 64> parent{};

  explicit UnionFind(int n) { std::iota(parent.begin(), parent.begin() + n, 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

template <bool Parallel>
PathCounts enumerate_subsets(const CompositionGraph& g) {
  const std::size_t e = g.edges.size();
  if (e > kOracleMaxEdges) {
    throw std::invalid_argument("oracle_path_counts: " + std::to_string(e) + " edges exceeds the limit of " +
                                std::to_string(kOracleMaxEdges));
  }
  if (g.nodes > 64) throw std::invalid_argument("oracle_path_counts: too many nodes");
  const long subsets = 1L << e;
  std::vector<unsigned long long> totals(e + 1, 0);

#pragma omp parallel if (Parallel)
  {
    std::vector<unsigned long long> local(e + 1, 0);
#pragma omp for schedule(static)
    for (long mask = 0; mask < subsets; ++mask) {
      UnionFind uf(g.nodes);
      int closed = 0;
      for (std::size_t k = 0; k < e; ++k) {
        if ((mask >> k) & 1L) {
          uf.unite(g.edges[k].first, g.edges[k].second);
          ++closed;
        }
      }
      if (uf.find(g.source) == uf.find(g.sink)) ++local[static_cast<std::size_t>(closed)];
    }
#pragma omp critical
    for (std::size_t i = 0; i <= e; ++i) totals[i] += local[i];
  }

  PathCounts pc{static_cast<unsigned>(e), std::vector<BigInt>(e + 1)};
  for (std::size_t i = 0; i <= e; ++i) pc.counts[i] = static_cast<unsigned long>(totals[i]);
  return pc;
}

}  // namespace

PathCounts oracle_path_counts(const CompositionGraph& g) { return enumerate_subsets<true>(g); }

namespace serial {
PathCounts oracle_path_counts(const CompositionGraph& g) { return enumerate_subsets<false>(g); }
}  // namespace serial

PathCounts ni_inclusion_exclusion(int m, int i_ones) {
  Monomial::one(m);
  if (i_ones < 0 || i_ones > m) throw std::invalid_argument("ni_inclusion_exclusion: need 0 <= i_ones <= m");
  const unsigned long n = 1UL << m;
  const unsigned long w = 1UL << i_ones;
  const unsigned long l = 1UL << (m - i_ones);
  PathCounts pc{static_cast<unsigned>(n), std::vector<BigInt>(n + 1)};
  for (unsigned long k = l; k <= n; ++k) {
    BigInt sum = 0;
    for (unsigned long j = 1; j <= k / l && j <= w; ++j) {
      const BigInt term = binomial(w, j) * binomial(n - j * l, n - k);
      if (j % 2 == 1) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    pc.counts[k] = sum;
  }
  return pc;
}

Rational gen_binomial(const Rational& x, unsigned long k) {
  Rational out = 1;
  for (unsigned long j = 0; j < k; ++j) {
    out *= x - Rational(j);
    out /= Rational(j + 1);
  }
  return out;
}

namespace {

Rational closed_form_binomial(int m, int i_ones) {
  Monomial::one(m);
  if (i_ones < 0 || i_ones > m) throw std::invalid_argument("avr_closed_form: need 0 <= i_ones <= m");
  const BigInt width = BigInt(1) << i_ones;
  // 2^i + 2^(i - m) = w + 1/l.
  const Rational x = Rational(width) + Rational(BigInt(1), BigInt(1) << (m - i_ones));
  return gen_binomial(x, width.get_ui());
}

}  // namespace

Rational avr_closed_form(int m, int i_ones) { return 1 - 1 / closed_form_binomial(m, i_ones); }

Rational avr_closed_form_complement(int m, int i_ones) { return 1 / closed_form_binomial(m, i_ones); }

long double real_binomial(long double x, long double y) {
  return std::exp(std::lgamma(x + 1) - std::lgamma(y + 1) - std::lgamma(x - y + 1));
}

namespace {

// ln Gamma(z + e) - ln Gamma(z) for 0 <= e <= 1. Subtracting two lgamma
// values loses everything once z is large, so switch to the Stirling
// expansion of the difference there.
long double lgamma_shift(long double z, long double e) {
  if (z < 1e6L) return std::lgamma(z + e) - std::lgamma(z);
  return e * std::log(z) + e * (e - 1) / (2 * z) - e * (e - 1) * (2 * e - 1) / (12 * z * z);
}

}  // namespace

ThresholdBinomials threshold_binomials(int m) {
  if (m < 2 || m > 1000) throw std::invalid_argument("threshold_binomials: need 2 <= m <= 1000");
  const long double n = std::ldexp(1.0L, m);
  const long double log_n = m;
  const long double log_log_n = std::log2(static_cast<long double>(m));
  // C(w + e, w) = Gamma(w + 1 + e) / (Gamma(w + 1) Gamma(1 + e)) with e = w / n.
  auto at = [&](long double w) {
    const long double e = w / n;
    return std::exp(lgamma_shift(w + 1, e) - std::lgamma(1 + e));
  };
  return {at(n / (log_n * log_log_n)), at(n / log_log_n), at(n / log_n)};
}

}  // namespace becpolar
