#include "becpolar/synthesis.hpp"

#include <stdexcept>
#include <string>

namespace becpolar {

IntPoly synth_poly(const Monomial& u) {
  IntPoly z = IntPoly::identity();
  for (int i = u.m() - 1; i >= 0; --i) z = u.has(i) ? parallel_step(z) : square_step(z);
  return z;
}

namespace {

void check_cap(int m, int max_m) {
  Monomial::one(m);
  if (m > max_m) {
    throw std::invalid_argument("synth_all: m = " + std::to_string(m) + " exceeds the cap " +
                                std::to_string(max_m));
  }
}

// Level t holds the 2^t polynomials after applying bits m-1 .. m-t; entry v
// encodes the applied suffix with bit m-t in position 0. Prepending bit b
// gives entry 2v + b on the next level.
template <bool Parallel>
ChannelTable build_table(int m, int max_m) {
  check_cap(m, max_m);
  std::vector<IntPoly> level{IntPoly::identity()};
  for (int t = 0; t < m; ++t) {
    std::vector<IntPoly> next(level.size() * 2);
    const long count = static_cast<long>(next.size());
#pragma omp parallel for schedule(dynamic) if (Parallel)
    for (long k = 0; k < count; ++k) {
      const IntPoly& parent = level[static_cast<std::size_t>(k) / 2];
      next[static_cast<std::size_t>(k)] = (k & 1) ? parallel_step(parent) : square_step(parent);
    }
    level = std::move(next);
  }
  return ChannelTable{m, std::move(level)};
}

template <bool Parallel>
std::vector<Rational> averages(const ChannelTable& table) {
  std::vector<Rational> out(table.size());
  const long count = static_cast<long>(table.size());
#pragma omp parallel for schedule(dynamic) if (Parallel)
  for (long u = 0; u < count; ++u) out[static_cast<std::size_t>(u)] = integrate01(table.polys[static_cast<std::size_t>(u)]);
  return out;
}

}  // namespace

ChannelTable synth_all(int m, int max_m) { return build_table<true>(m, max_m); }

std::vector<Rational> avr_all(const ChannelTable& table) { return averages<true>(table); }

namespace serial {

ChannelTable synth_all(int m, int max_m) { return build_table<false>(m, max_m); }

std::vector<Rational> avr_all(const ChannelTable& table) { return averages<false>(table); }

}  // namespace serial

IntPoly dual_poly(const IntPoly& a) { return IntPoly::constant(1) - a.reflect(); }

Rational default_threshold_tolerance() {
  Rational tol(1);
  tol /= Rational(BigInt(1) << 30);
  return tol;
}

Rational threshold_estimate(const IntPoly& a, const Rational& tol) {
  if (tol <= 0) throw std::invalid_argument("threshold_estimate: tolerance must be positive");
  const Rational half(1, 2);
  Rational lo = 0;
  Rational hi = 1;
  const int s_lo = sgn(a.eval(lo) - half);
  const int s_hi = sgn(a.eval(hi) - half);
  if (s_lo == 0) return lo;
  if (s_hi == 0) return hi;
  if (s_lo == s_hi) {
    throw std::domain_error("threshold_estimate: a(p) - 1/2 does not change sign on [0, 1]");
  }
  while (hi - lo > 2 * tol) {
    Rational mid = (lo + hi) / 2;
    const int s = sgn(a.eval(mid) - half);
    if (s == 0) return mid;
    if (s == s_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

}  // namespace becpolar
