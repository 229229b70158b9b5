#include "becpolar/orders.hpp"

#include <algorithm>
#include <stdexcept>

namespace becpolar {

const char* to_string(Relation r) {
  switch (r) {
    case Relation::weak: return "weak";
    case Relation::standard: return "standard";
    case Relation::dominance: return "dominance";
    case Relation::pointwise: return "pointwise";
  }
  return "?";
}

const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::less_or_equal: return "less_or_equal";
    case Comparison::greater_or_equal: return "greater_or_equal";
    case Comparison::equal: return "equal";
    case Comparison::incomparable: return "incomparable";
  }
  return "?";
}

namespace {

// Divisor of g on its k largest variables.
Monomial top_divisor(const Monomial& g, int k) {
  std::uint32_t bits = 0;
  for (int i = g.m() - 1; i >= 0 && k > 0; --i) {
    if (g.has(i)) {
      bits |= std::uint32_t{1} << i;
      --k;
    }
  }
  return Monomial::from_int(bits, g.m());
}

bool std_same_degree(const Monomial& f, const Monomial& g) {
  const auto a = f.support();
  const auto b = g.support();
  for (std::size_t l = 0; l < a.size(); ++l) {
    if (a[l] > b[l]) return false;
  }
  return true;
}

bool dominance_same_degree(const Monomial& f, const Monomial& g) {
  const auto a = f.support();
  const auto b = g.support();
  int sum_a = 0;
  int sum_b = 0;
  for (std::size_t l = a.size(); l-- > 0;) {
    sum_a += a[l];
    sum_b += b[l];
    if (sum_a > sum_b) return false;
  }
  return true;
}

template <typename SameDegree>
bool graded_leq(const Monomial& f, const Monomial& g, SameDegree same_degree) {
  require_same_ring(f, g);
  if (f == g) return true;
  const int df = f.degree();
  const int dg = g.degree();
  if (df > dg) return false;
  if (df == dg) return same_degree(f, g);
  return same_degree(f, top_divisor(g, df));
}

}  // namespace

bool leq_weak(const Monomial& f, const Monomial& g) { return divides(f, g); }

bool leq_std(const Monomial& f, const Monomial& g) { return graded_leq(f, g, std_same_degree); }

bool leq_dominance(const Monomial& f, const Monomial& g) {
  return graded_leq(f, g, dominance_same_degree);
}

bool leq(const Monomial& f, const Monomial& g, Relation relation) {
  switch (relation) {
    case Relation::weak: return leq_weak(f, g);
    case Relation::standard: return leq_std(f, g);
    case Relation::dominance: return leq_dominance(f, g);
    case Relation::pointwise: break;
  }
  throw std::invalid_argument("leq: pointwise comparison needs a channel table");
}

OrderVerdict compare(const Monomial& f, const Monomial& g, Relation relation) {
  if (f == g) return {relation, Comparison::equal};
  const bool below = leq(f, g, relation);
  const bool above = leq(g, f, relation);
  if (below && above) return {relation, Comparison::equal};
  if (below) return {relation, Comparison::less_or_equal};
  if (above) return {relation, Comparison::greater_or_equal};
  return {relation, Comparison::incomparable};
}

Comparison compare_channels(const IntPoly& zf, const PathCounts& nf, const IntPoly& zg,
                            const PathCounts& ng) {
  if (nf.n != ng.n) throw std::invalid_argument("compare_channels: basis size mismatch");
  bool g_above = true;
  bool f_above = true;
  bool identical = true;
  for (std::size_t i = 0; i < nf.counts.size(); ++i) {
    const int c = cmp(nf.counts[i], ng.counts[i]);
    if (c > 0) g_above = false;
    if (c < 0) f_above = false;
    if (c != 0) identical = false;
  }
  if (identical) return Comparison::equal;
  if (g_above) return Comparison::less_or_equal;
  if (f_above) return Comparison::greater_or_equal;

  const IntPoly d = zg - zf;
  if (nonneg_on_01(d, SignMethod::sturm_only) == SignVerdict::nonnegative) return Comparison::less_or_equal;
  if (nonneg_on_01(-d, SignMethod::sturm_only) == SignVerdict::nonnegative) {
    return Comparison::greater_or_equal;
  }
  return Comparison::incomparable;
}

OrderVerdict leq_pointwise(const Monomial& f, const Monomial& g, const ChannelTable& table) {
  require_same_ring(f, g);
  if (f.m() != table.m) throw std::invalid_argument("leq_pointwise: table built for another m");
  const IntPoly d = table.at(g) - table.at(f);
  const SignVerdict forward = nonneg_on_01(d);
  if (forward == SignVerdict::identically_zero) return {Relation::pointwise, Comparison::equal};
  if (forward == SignVerdict::nonnegative) return {Relation::pointwise, Comparison::less_or_equal};
  if (nonneg_on_01(-d) == SignVerdict::nonnegative) {
    return {Relation::pointwise, Comparison::greater_or_equal};
  }
  return {Relation::pointwise, Comparison::incomparable};
}

bool mult_compatible(const Monomial& f, const Monomial& g, const Monomial& h) {
  require_same_ring(f, g);
  require_same_ring(f, h);
  if (f.degree() != g.degree()) throw std::invalid_argument("mult_compatible: deg f != deg g");
  if (h.degree() != 1) throw std::invalid_argument("mult_compatible: h must be a single variable");
  if (divides(h, f) || divides(h, g)) {
    throw std::invalid_argument("mult_compatible: " + h.to_string() + " divides f or g");
  }
  return leq_dominance(f, g) == leq_dominance(f.times(h), g.times(h));
}

namespace {

void require_combinatorial(Relation relation) {
  if (relation == Relation::pointwise) {
    throw std::invalid_argument("relation must be weak, standard or dominance");
  }
}

}  // namespace

bool is_decreasing(const std::vector<Monomial>& set, Relation relation) {
  require_combinatorial(relation);
  if (set.empty()) return true;
  const int m = set.front().m();
  std::vector<bool> member(std::size_t{1} << m, false);
  for (const auto& f : set) {
    require_same_ring(f, set.front());
    member[f.to_int()] = true;
  }
  for (const auto& f : set) {
    for (const auto& g : all_monomials(m)) {
      if (!member[g.to_int()] && leq(g, f, relation)) return false;
    }
  }
  return true;
}

std::vector<Monomial> closure(const Monomial& f, Relation relation) {
  require_combinatorial(relation);
  std::vector<Monomial> out;
  for (const auto& h : all_monomials(f.m())) {
    if (leq(h, f, relation)) out.push_back(h);
  }
  return out;
}

std::vector<Monomial> interval(const Monomial& f, const Monomial& g, Relation relation) {
  require_combinatorial(relation);
  if (!leq(f, g, relation)) {
    throw std::invalid_argument("interval: " + f.to_string() + " is not below " + g.to_string());
  }
  std::vector<Monomial> out;
  for (const auto& h : all_monomials(f.m())) {
    if (leq(f, h, relation) && leq(h, g, relation)) out.push_back(h);
  }
  return out;
}

std::vector<HasseEdge> hasse_edges(int m, Relation relation) {
  require_combinatorial(relation);
  if (m > 7) throw std::invalid_argument("hasse_edges: m must be at most 7");
  const auto all = all_monomials(m);
  const std::size_t n = all.size();
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) less[a][b] = a != b && leq(all[a], all[b], relation);
  }
  std::vector<HasseEdge> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!less[a][b]) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n && covered; ++c) covered = !(less[a][c] && less[c][b]);
      if (covered) edges.push_back({all[a], all[b]});
    }
  }
  return edges;
}

namespace {

template <bool Parallel>
PointwiseMatrix build_pointwise(const ChannelTable& table) {
  const std::size_t n = table.size();
  const unsigned basis = static_cast<unsigned>(n);
  std::vector<PathCounts> counts(n);
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) if (Parallel)
  for (long u = 0; u < count; ++u) {
    counts[static_cast<std::size_t>(u)] = to_path_counts(table.polys[static_cast<std::size_t>(u)], basis);
  }

  PointwiseMatrix out(n, std::vector<Comparison>(n, Comparison::equal));
  const long pairs = static_cast<long>(n * n);
#pragma omp parallel for schedule(dynamic, 16) if (Parallel)
  for (long k = 0; k < pairs; ++k) {
    const std::size_t u = static_cast<std::size_t>(k) / n;
    const std::size_t v = static_cast<std::size_t>(k) % n;
    if (u >= v) continue;
    const Comparison c = compare_channels(table.polys[u], counts[u], table.polys[v], counts[v]);
    out[u][v] = c;
    out[v][u] = c == Comparison::less_or_equal      ? Comparison::greater_or_equal
                : c == Comparison::greater_or_equal ? Comparison::less_or_equal
                                                    : c;
  }
  return out;
}

}  // namespace

PointwiseMatrix pointwise_matrix(const ChannelTable& table) { return build_pointwise<true>(table); }

namespace serial {
PointwiseMatrix pointwise_matrix(const ChannelTable& table) { return build_pointwise<false>(table); }
}  // namespace serial

}  // namespace becpolar
