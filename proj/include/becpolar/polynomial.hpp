#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace becpolar {

using BigInt = mpz_class;
/// Always kept canonical (reduced, positive denominator).
using Rational = mpq_class;

/// C(n, k) as an exact integer, 0 when k > n.
BigInt binomial(unsigned long n, unsigned long k);

/// Round-half-away-from-zero decimal rendering with exactly `places` digits
/// after the point, e.g. to_decimal(7/15, 2) == "0.47".
std::string to_decimal(const Rational& q, int places);

/// "num/den" (or just "num" when den == 1).
std::string to_fraction_string(const Rational& q);

/// Parses "a/b", an integer, or a decimal such as "1.22" or "-0.5" exactly.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Dense univariate polynomial in p with integer coefficients.
/// coeffs()[i] is the coefficient of p^i; trailing zeros are never stored,
/// so the zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly constant(const BigInt& c);
  /// The polynomial p.
  static IntPoly identity();

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of p^i, zero past the degree.
  BigInt coeff(std::size_t i) const;
  const BigInt& leading() const { return coeffs_.back(); }

  IntPoly derivative() const;
  /// a(1 - p).
  IntPoly reflect() const;

  Rational eval(const Rational& p) const;
  /// Exact sign of a(num/den) for den > 0, without forming a fraction.
  int sign_at(const BigInt& num, const BigInt& den) const;
  /// Sum of coefficients, i.e. a(1).
  BigInt value_at_one() const;

  std::string to_string() const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const BigInt& scalar);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator-(const IntPoly& a);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

/// a * a, using the symmetric half of the schoolbook product.
IntPoly square(const IntPoly& a);

/// T0(z) = z^2, the "series" step of the BEC recursion.
IntPoly square_step(const IntPoly& z);
/// T1(z) = 2z - z^2 = 1 - (1 - z)^2, the "parallel" step.
IntPoly parallel_step(const IntPoly& z);

Rational eval_rational(const IntPoly& a, const Rational& p);

/// Integral of a over [0, 1].
Rational integrate01(const IntPoly& a);

/// Coefficients N_0..N_n of a polynomial in the basis p^i (1 - p)^(n - i).
struct PathCounts {
  unsigned n = 0;
  std::vector<BigInt> counts;  // size n + 1

  friend bool operator==(const PathCounts&, const PathCounts&) = default;
};

/// N_i = sum_{k <= i} a_k C(n - k, i - k). Throws std::invalid_argument when
/// deg a > n.
PathCounts to_path_counts(const IntPoly& a, unsigned n);

/// Inverse of to_path_counts: sum_i N_i p^i (1 - p)^(n - i).
IntPoly from_path_counts(const PathCounts& pc);

/// (1 / (n + 1)) sum_i N_i / C(n, i).
Rational average_from_path_counts(const PathCounts& pc);

enum class SignVerdict { nonnegative, crosses_zero, identically_zero };

enum class SignMethod {
  /// Bernstein-coefficient shortcut first, Sturm analysis otherwise.
  automatic,
  /// Always run the Sturm analysis.
  sturm_only,
};

/// Decides whether d(p) >= 0 for every p in [0, 1] exactly.
/// crosses_zero means d is negative somewhere in (0, 1).
SignVerdict nonneg_on_01(const IntPoly& d, SignMethod method = SignMethod::automatic);

/// The Bernstein shortcut on its own: true when every coefficient of d in
/// the degree-deg(d) Bernstein basis is >= 0 (which proves d >= 0 on [0, 1]).
bool bernstein_nonnegative(const IntPoly& d);

/// Number of distinct real roots of a in the half-open interval (lo, hi],
/// counted with a Sturm sequence. Requires a != 0.
int count_roots(const IntPoly& a, const Rational& lo, const Rational& hi);

const char* to_string(SignVerdict v);

}  // namespace becpolar
