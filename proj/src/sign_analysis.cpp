// Exact sign analysis of integer polynomials on [0, 1].
//
// The polynomial is first stripped of its roots at p = 0 and p = 1, which
// leaves a factor r with r(0) != 0 and r(1) != 0 and the same sign pattern
// on (0, 1) up to a known constant sign. A Sturm sequence of r then counts
// the distinct roots inside any subinterval, and bisection continues until
// each piece holds at most one distinct root, where the signs at the two
// ends decide the question.

#include <stdexcept>
#include <utility>

#include "becpolar/polynomial.hpp"

namespace becpolar {

namespace {

void divide_by_content(std::vector<BigInt>& c) {
  BigInt g = 0;
  for (const auto& x : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// Positive multiple of the remainder of a divided by b (deg a >= deg b >= 1).
std::vector<BigInt> positive_pseudo_remainder(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  const BigInt& lb = b.back();
  const std::size_t db = b.size() - 1;
  int lb_multiplications = 0;
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const BigInt la = a.back();
    for (auto& x : a) x *= lb;
    ++lb_multiplications;
    for (std::size_t i = 0; i <= db; ++i) {
      mpz_submul(a[i + shift].get_mpz_t(), la.get_mpz_t(), b[i].get_mpz_t());
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  if (lb < 0 && (lb_multiplications % 2 == 1)) {
    for (auto& x : a) x = -x;
  }
  return a;
}

class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& a) {
    std::vector<BigInt> s0 = a.coeffs();
    std::vector<BigInt> s1 = a.derivative().coeffs();
    divide_by_content(s0);
    seq_.push_back(std::move(s0));
    if (s1.empty()) return;
    divide_by_content(s1);
    seq_.push_back(std::move(s1));
    while (seq_.back().size() > 1) {
      std::vector<BigInt> rem = positive_pseudo_remainder(seq_[seq_.size() - 2], seq_.back());
      if (rem.empty()) break;
      for (auto& x : rem) x = -x;
      divide_by_content(rem);
      seq_.push_back(std::move(rem));
    }
  }

  int sign_changes(const BigInt& num, const BigInt& den) const {
    int changes = 0;
    int previous = 0;
    for (const auto& s : seq_) {
      const int sg = IntPoly(s).sign_at(num, den);
      if (sg == 0) continue;
      if (previous != 0 && sg != previous) ++changes;
      previous = sg;
    }
    return changes;
  }

  int roots_in(const Rational& lo, const Rational& hi) const {
    return sign_changes(lo.get_num(), lo.get_den()) - sign_changes(hi.get_num(), hi.get_den());
  }

 private:
  std::vector<std::vector<BigInt>> seq_;
};

int sign_at(const IntPoly& r, const Rational& x) { return r.sign_at(x.get_num(), x.get_den()); }

// r(lo) != 0 and r(hi) != 0 on entry.
bool positive_on(const IntPoly& r, const SturmSequence& sturm, const Rational& lo, const Rational& hi) {
  const int s_lo = sign_at(r, lo);
  const int s_hi = sign_at(r, hi);
  if (s_lo < 0 || s_hi < 0) return false;
  const int roots = sturm.roots_in(lo, hi);
  if (roots <= 1) return true;
  // Split at a point that is not itself a root.
  for (int k = 2;; ++k) {
    const Rational mid = lo + (hi - lo) / k;
    if (sign_at(r, mid) == 0) continue;
    return positive_on(r, sturm, lo, mid) && positive_on(r, sturm, mid, hi);
  }
}

// Removes the factors p^a and (p - 1)^b; returns the sign (-1)^b that relates
// the signs of the input and the reduced polynomial on (0, 1).
int strip_endpoint_roots(std::vector<BigInt>& c) {
  std::size_t zeros = 0;
  while (zeros < c.size() && c[zeros] == 0) ++zeros;
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));
  int sign = 1;
  for (;;) {
    BigInt at_one = 0;
    for (const auto& x : c) at_one += x;
    if (at_one != 0 || c.size() <= 1) break;
    // Synthetic division by (p - 1).
    std::vector<BigInt> q(c.size() - 1);
    BigInt carry = 0;
    for (std::size_t i = c.size() - 1; i >= 1; --i) {
      carry += c[i];
      q[i - 1] = carry;
    }
    c = std::move(q);
    sign = -sign;
  }
  return sign;
}

}  // namespace

bool bernstein_nonnegative(const IntPoly& d) {
  if (d.is_zero()) return true;
  const PathCounts pc = to_path_counts(d, static_cast<unsigned>(d.degree()));
  for (const auto& x : pc.counts) {
    if (x < 0) return false;
  }
  return true;
}

int count_roots(const IntPoly& a, const Rational& lo, const Rational& hi) {
  if (a.is_zero()) throw std::invalid_argument("count_roots: zero polynomial");
  return SturmSequence(a).roots_in(lo, hi);
}

SignVerdict nonneg_on_01(const IntPoly& d, SignMethod method) {
  if (d.is_zero()) return SignVerdict::identically_zero;
  if (method == SignMethod::automatic) {
    const PathCounts pc = to_path_counts(d, static_cast<unsigned>(d.degree()));
    bool any_negative = false;
    bool any_positive = false;
    for (const auto& x : pc.counts) {
      any_negative |= x < 0;
      any_positive |= x > 0;
    }
    if (!any_negative) return SignVerdict::nonnegative;
    // All basis functions are positive on (0, 1).
    if (!any_positive) return SignVerdict::crosses_zero;
  }

  std::vector<BigInt> c = d.coeffs();
  const int sign = strip_endpoint_roots(c);
  IntPoly r(std::move(c));
  if (sign < 0) r = -r;
  if (r.degree() == 0) return r.leading() > 0 ? SignVerdict::nonnegative : SignVerdict::crosses_zero;

  const SturmSequence sturm(r);
  return positive_on(r, sturm, Rational(0), Rational(1)) ? SignVerdict::nonnegative
                                                         : SignVerdict::crosses_zero;
}

}  // namespace becpolar
