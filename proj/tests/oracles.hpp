#pragma once

// Reference computations used by the tests. They share no code with the
// library beyond the GMP types.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace oracle {

using Coeffs = std::vector<mpz_class>;

inline void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  trim(c);
  return c;
}

inline Coeffs sub(Coeffs a, const Coeffs& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Z of the channel u: u_{m-1} is applied first, u_0 last.
inline Coeffs channel(std::uint32_t u, int m) {
  Coeffs z = {0, 1};
  for (int i = m - 1; i >= 0; --i) {
    const Coeffs sq = mul(z, z);
    if ((u >> i) & 1u) {
      Coeffs two_z = z;
      for (auto& c : two_z) c *= 2;
      z = sub(two_z, sq);
    } else {
      z = sq;
    }
  }
  return z;
}

inline mpq_class eval(const Coeffs& a, const mpq_class& p) {
  mpq_class acc = 0;
  mpq_class power = 1;
  for (const auto& c : a) {
    acc += c * power;
    power *= p;
  }
  return acc;
}

inline mpq_class integral(const Coeffs& a) {
  mpq_class acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpq_class term(a[i], static_cast<unsigned long>(i + 1));
    term.canonicalize();
    acc += term;
  }
  return acc;
}

// den^deg * a(num / den), exact.
inline mpz_class homogeneous(const Coeffs& a, std::size_t deg, const mpz_class& num, const mpz_class& den) {
  mpz_class acc = 0;
  mpz_class den_power = 1;
  for (std::size_t i = deg + 1; i-- > 0;) {
    acc = acc * num + (i < a.size() ? a[i] : mpz_class(0)) * den_power;
    den_power *= den;
  }
  return acc;
}

inline mpz_class choose(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace oracle
