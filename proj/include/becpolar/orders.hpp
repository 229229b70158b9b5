#pragma once

#include <vector>

#include "becpolar/monomial.hpp"
#include "becpolar/polynomial.hpp"
#include "becpolar/synthesis.hpp"

namespace becpolar {

enum class Relation { weak, standard, dominance, pointwise };

enum class Comparison { less_or_equal, greater_or_equal, equal, incomparable };

struct OrderVerdict {
  Relation relation;
  Comparison result;

  friend bool operator==(const OrderVerdict&, const OrderVerdict&) = default;
};

const char* to_string(Relation r);
const char* to_string(Comparison c);

/// f | g.
bool leq_weak(const Monomial& f, const Monomial& g);

/// Equal degree: the sorted supports satisfy i_l <= j_l for every l.
/// deg f < deg g: f is below the divisor of g on its deg(f) largest variables.
bool leq_std(const Monomial& f, const Monomial& g);

/// Equal degree: for every l, the sum of the l largest indices of f is at
/// most the sum of the l largest indices of g. Lower degree reduces to the
/// top-variables divisor of g as for leq_std.
bool leq_dominance(const Monomial& f, const Monomial& g);

/// Dispatches to leq_weak / leq_std / leq_dominance.
/// Throws std::invalid_argument for Relation::pointwise.
bool leq(const Monomial& f, const Monomial& g, Relation relation);

/// Combines both directions of a combinatorial relation.
OrderVerdict compare(const Monomial& f, const Monomial& g, Relation relation);

/// Compares Z(W^f) and Z(W^g) on the whole of [0, 1].
OrderVerdict leq_pointwise(const Monomial& f, const Monomial& g, const ChannelTable& table);

/// Pointwise comparison of two channel polynomials, with their Bernstein
/// coefficients (degree 2^m) supplied so the common case is decided without
/// root counting.
Comparison compare_channels(const IntPoly& zf, const PathCounts& nf, const IntPoly& zg,
                            const PathCounts& ng);

/// Checks one instance of multiplication compatibility:
/// (f <=_d g) == (x_h f <=_d x_h g). Requires deg f == deg g, h a single
/// variable, and x_h dividing neither f nor g; throws std::invalid_argument
/// otherwise.
bool mult_compatible(const Monomial& f, const Monomial& g, const Monomial& h);

/// True iff `set` is downward closed under the relation (standard or dominance).
bool is_decreasing(const std::vector<Monomial>& set, Relation relation);

/// {h : h <= f}, in increasing integer order.
std::vector<Monomial> closure(const Monomial& f, Relation relation);

/// {h : f <= h <= g}. Throws std::invalid_argument when f is not below g.
std::vector<Monomial> interval(const Monomial& f, const Monomial& g, Relation relation);

struct HasseEdge {
  Monomial lower;
  Monomial upper;

  friend bool operator==(const HasseEdge&, const HasseEdge&) = default;
};

/// Covering pairs of the relation over all of M_m (m <= 7), sorted by
/// (lower, upper). Throws std::invalid_argument for larger m or pointwise.
std::vector<HasseEdge> hasse_edges(int m, Relation relation);

/// verdicts[u][v] = pointwise comparison of W^u against W^v.
using PointwiseMatrix = std::vector<std::vector<Comparison>>;

/// All pairwise pointwise comparisons, pairs distributed over OpenMP threads.
PointwiseMatrix pointwise_matrix(const ChannelTable& table);

namespace serial {
/// Single-threaded reference for becpolar::pointwise_matrix.
PointwiseMatrix pointwise_matrix(const ChannelTable& table);
}  // namespace serial

}  // namespace becpolar
