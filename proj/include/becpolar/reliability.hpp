#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "becpolar/monomial.hpp"
#include "becpolar/polynomial.hpp"

namespace becpolar {

/// Size, width and length of the two-terminal composition C^u.
/// n = 2^m, w = 2^|u|, l = 2^(m - |u|), so n = w * l.
struct CompositionParams {
  int m;
  Monomial u;
  std::uint64_t n;
  std::uint64_t w;
  std::uint64_t l;
};

CompositionParams composition_params(const Monomial& u);

/// A two-terminal multigraph. Edges are unordered node pairs.
struct CompositionGraph {
  int nodes = 2;
  std::vector<std::pair<int, int>> edges;
  int source = 0;
  int sink = 1;
};

/// C^u built by substitution: start from one source-sink edge; for
/// i = 0 .. m-1 replace every edge with two edges in parallel (u_i = 1) or
/// in series (u_i = 0). Requires m <= 12.
CompositionGraph build_graph(const Monomial& u);

/// Largest edge count oracle_path_counts accepts.
inline constexpr std::size_t kOracleMaxEdges = 16;

/// N_i = number of i-edge subsets that connect source to sink, by
/// enumerating every subset with a union-find. Subsets are split across
/// OpenMP threads. Throws std::invalid_argument above kOracleMaxEdges edges.
PathCounts oracle_path_counts(const CompositionGraph& g);

namespace serial {
/// Single-threaded reference for becpolar::oracle_path_counts.
PathCounts oracle_path_counts(const CompositionGraph& g);
}  // namespace serial

/// Inclusion-exclusion path counts of C^(1^i 0^(m-i)), i.e. u = 2^i - 1:
/// N_k = sum_{j=1}^{floor(k/l)} (-1)^(j+1) C(w, j) C(n - j l, n - k).
PathCounts ni_inclusion_exclusion(int m, int i_ones);

/// Generalized binomial x (x - 1) ... (x - k + 1) / k!.
Rational gen_binomial(const Rational& x, unsigned long k);

/// Avr of W^(1^i 0^(m-i)): 1 - 1 / C(2^i + 2^(i - m), 2^i).
Rational avr_closed_form(int m, int i_ones);

/// Avr of the complementary channel W^(0^i 1^(m-i)): 1 / C(2^i + 2^(i - m), 2^i).
Rational avr_closed_form_complement(int m, int i_ones);

/// Real-argument binomial Gamma(x + 1) / (Gamma(y + 1) Gamma(x - y + 1)),
/// used only for trend checks on the closed form at non-integer widths.
long double real_binomial(long double x, long double y);

/// The three binomials C(w + w/n, w) with n = 2^m and
/// w = n / (m log2 m), n / log2 m and n / m respectively. As m grows they
/// tend to 1, to infinity and to 2. Requires 2 <= m <= 1000.
struct ThresholdBinomials {
  long double toward_one;
  long double unbounded;
  long double toward_two;
};

ThresholdBinomials threshold_binomials(int m);

}  // namespace becpolar
