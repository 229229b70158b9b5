#include "becpolar/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace becpolar {

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  if (k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::string to_decimal(const Rational& q, int places) {
  if (places < 0) throw std::invalid_argument("to_decimal: negative precision");
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  const BigInt num = abs(q.get_num());
  const BigInt& den = q.get_den();
  BigInt rounded = (2 * num * scale + den) / (2 * den);  // floor division, operands >= 0
  std::string digits = rounded.get_str();
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, static_cast<std::size_t>(places + 1) - digits.size(), '0');
  }
  std::string out;
  if (q < 0 && rounded != 0) out += '-';
  out += digits.substr(0, digits.size() - places);
  if (places > 0) out += "." + digits.substr(digits.size() - places);
  return out;
}

std::string to_fraction_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

BigInt parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  BigInt v(std::string(s), 10);
  return negative ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (!all_digits(frac)) throw std::invalid_argument("bad decimal '" + std::string(text) + "'");
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if (!whole.empty() && !all_digits(whole)) {
      throw std::invalid_argument("bad decimal '" + std::string(text) + "'");
    }
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    BigInt num = (whole.empty() ? BigInt(0) : BigInt(std::string(whole), 10)) * scale +
                 BigInt(std::string(frac), 10);
    Rational q(negative ? BigInt(-num) : num, scale);
    q.canonicalize();
    return q;
  }
  return Rational(parse_integer(text));
}

// ---------------------------------------------------------------------------

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly({c}); }

IntPoly IntPoly::identity() { return IntPoly({BigInt(0), BigInt(1)}); }

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

IntPoly IntPoly::reflect() const {
  // a(1 - p) = b(p - 1) with b(y) = a(-y); the shift by -1 is a Taylor shift.
  std::vector<BigInt> c = coeffs_;
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  const std::size_t d = c.size();
  for (std::size_t i = 0; i + 1 < d; ++i) {
    for (std::size_t j = d - 1; j-- > i;) c[j] -= c[j + 1];
  }
  return IntPoly(std::move(c));
}

Rational IntPoly::eval(const Rational& p) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * p + *it;
  return acc;
}

int IntPoly::sign_at(const BigInt& num, const BigInt& den) const {
  if (coeffs_.empty()) return 0;
  BigInt acc = coeffs_.back();
  BigInt den_pow = den;
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
    acc *= num;
    mpz_addmul(acc.get_mpz_t(), coeffs_[i].get_mpz_t(), den_pow.get_mpz_t());
    den_pow *= den;
  }
  return sgn(acc);
}

BigInt IntPoly::value_at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const BigInt mag = abs(c);
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (mag != 1 || i == 0) s += mag.get_str();
    if (i >= 1) s += "p";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

IntPoly operator-(const IntPoly& a) {
  std::vector<BigInt> c = a.coeffs();
  for (auto& x : c) x = -x;
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<BigInt> out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly square(const IntPoly& a) {
  if (a.is_zero()) return {};
  const auto& x = a.coeffs();
  const std::size_t d = x.size();
  std::vector<BigInt> out(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = i + 1; j < d; ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), x[i].get_mpz_t(), x[j].get_mpz_t());
    }
  }
  for (auto& c : out) c <<= 1;
  for (std::size_t i = 0; i < d; ++i) mpz_addmul(out[2 * i].get_mpz_t(), x[i].get_mpz_t(), x[i].get_mpz_t());
  return IntPoly(std::move(out));
}

IntPoly square_step(const IntPoly& z) { return square(z); }

IntPoly parallel_step(const IntPoly& z) {
  IntPoly twice = z * BigInt(2);
  return twice - square(z);
}

Rational eval_rational(const IntPoly& a, const Rational& p) { return a.eval(p); }

Rational integrate01(const IntPoly& a) {
  if (a.is_zero()) return 0;
  const auto& c = a.coeffs();
  BigInt lcm = 1;
  for (unsigned long k = 2; k <= c.size(); ++k) mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), k);
  BigInt num = 0;
  BigInt share;
  for (std::size_t i = 0; i < c.size(); ++i) {
    mpz_divexact_ui(share.get_mpz_t(), lcm.get_mpz_t(), i + 1);
    mpz_addmul(num.get_mpz_t(), c[i].get_mpz_t(), share.get_mpz_t());
  }
  Rational q(num, lcm);
  q.canonicalize();
  return q;
}

PathCounts to_path_counts(const IntPoly& a, unsigned n) {
  if (a.degree() > static_cast<int>(n)) {
    throw std::invalid_argument("to_path_counts: degree " + std::to_string(a.degree()) +
                                " exceeds basis size " + std::to_string(n));
  }
  // With t = p / (1 - p): sum_i N_i t^i = sum_k a_k t^k (1 + t)^(n - k).
  // R_j = (1 + t) R_{j-1} + a_j t^j accumulates that sum for k <= j.
  std::vector<BigInt> r(n + 1);
  for (unsigned j = 0; j <= n; ++j) {
    for (unsigned i = j; i >= 1; --i) r[i] += r[i - 1];
    r[j] += a.coeff(j);
  }
  return PathCounts{n, std::move(r)};
}

IntPoly from_path_counts(const PathCounts& pc) {
  if (pc.counts.size() != pc.n + 1) throw std::invalid_argument("from_path_counts: size mismatch");
  // Q_j = (1 - p) Q_{j-1} + N_j p^j.
  std::vector<BigInt> q(pc.n + 1);
  for (unsigned j = 0; j <= pc.n; ++j) {
    for (unsigned i = j; i >= 1; --i) q[i] -= q[i - 1];
    q[j] += pc.counts[j];
  }
  return IntPoly(std::move(q));
}

Rational average_from_path_counts(const PathCounts& pc) {
  Rational sum = 0;
  for (unsigned i = 0; i <= pc.n; ++i) {
    if (pc.counts[i] == 0) continue;
    Rational term(pc.counts[i], binomial(pc.n, i));
    term.canonicalize();
    sum += term;
  }
  sum /= Rational(pc.n + 1);
  return sum;
}

const char* to_string(SignVerdict v) {
  switch (v) {
    case SignVerdict::nonnegative: return "nonnegative";
    case SignVerdict::crosses_zero: return "crosses_zero";
    case SignVerdict::identically_zero: return "identically_zero";
  }
  return "?";
}

}  // namespace becpolar
