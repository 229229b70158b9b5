#pragma once

#include <vector>

#include "becpolar/monomial.hpp"
#include "becpolar/polynomial.hpp"

namespace becpolar {

/// Default cap on m for full-table synthesis; callers may raise it explicitly.
inline constexpr int kDefaultMaxM = 10;

/// Bhattacharyya polynomials Z(W^u) for every u in {0,1}^m, indexed by u.
struct ChannelTable {
  int m = 0;
  std::vector<IntPoly> polys;

  const IntPoly& at(const Monomial& u) const { return polys.at(u.to_int()); }
  std::size_t size() const { return polys.size(); }
};

/// Z(W^u) computed directly: starting from p, bit u_{m-1} is applied first
/// (innermost) and u_0 last, using T1 for a set bit and T0 otherwise.
IntPoly synth_poly(const Monomial& u);

/// The full table, built level by level so every suffix (u_k .. u_{m-1}) is
/// transformed exactly once: 2^(m+1) - 2 transform applications in total.
/// Each level is an OpenMP parallel loop.
/// Throws std::invalid_argument when m > max_m.
ChannelTable synth_all(int m, int max_m = kDefaultMaxM);

/// 1 - a(1 - p). Maps Z(W^u) to Z(W^ubar).
IntPoly dual_poly(const IntPoly& a);

/// Bisection estimate of the p where a(p) = 1/2, to within +-tol, in exact
/// arithmetic. Throws std::domain_error when a(0) - 1/2 and a(1) - 1/2 do
/// not bracket a sign change (the input is not a channel polynomial).
Rational threshold_estimate(const IntPoly& a, const Rational& tol);

/// 2^-30.
Rational default_threshold_tolerance();

/// Exact averages Avr(u) = integral of Z(W^u) over [0, 1], OpenMP parallel.
std::vector<Rational> avr_all(const ChannelTable& table);

namespace serial {

/// Single-threaded reference for becpolar::synth_all.
ChannelTable synth_all(int m, int max_m = kDefaultMaxM);
/// Single-threaded reference for becpolar::avr_all.
std::vector<Rational> avr_all(const ChannelTable& table);

}  // namespace serial

}  // namespace becpolar
