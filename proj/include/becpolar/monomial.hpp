#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace becpolar {

/// Largest number of variables a Monomial may carry.
inline constexpr int kMaxVariables = 16;

/// A monomial x^u in m variables, stored as the bitmask u.
///
/// Bit i is set iff x_i divides the monomial; u_0 is the least significant
/// bit. The same value labels the synthetic channel W^u, so the integer
/// u = sum u_i 2^i is used interchangeably as a channel index.
class Monomial {
 public:
  /// Throws std::invalid_argument when m is outside [1, 16] or u >= 2^m.
  static Monomial from_int(std::uint32_t u, int m);

  /// The constant monomial 1 in m variables.
  static Monomial one(int m) { return from_int(0, m); }
  /// The single variable x_i in m variables.
  static Monomial variable(int i, int m);

  int m() const { return m_; }
  std::uint32_t bits() const { return bits_; }
  std::uint32_t to_int() const { return bits_; }
  int degree() const;
  bool has(int i) const { return (bits_ >> i) & 1u; }

  /// Strictly increasing variable indices.
  std::vector<int> support() const;
  /// Flips all m bits, so that u + complement(u) = 2^m - 1.
  Monomial complement() const;
  /// Product in R_m (x_i^2 = x_i), i.e. bitwise OR. Same m required.
  Monomial times(const Monomial& other) const;

  /// "1" for the constant, otherwise "x0x3"-style.
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.m_ <=> b.m_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  Monomial(std::uint32_t bits, int m) : bits_(bits), m_(m) {}

  std::uint32_t bits_ = 0;
  int m_ = 1;
};

/// Throws std::invalid_argument if the two monomials live in different rings.
void require_same_ring(const Monomial& f, const Monomial& g);

/// f | g.
bool divides(const Monomial& f, const Monomial& g);

struct GcdQuotients {
  Monomial gcd;
  Monomial f_over_gcd;
  Monomial g_over_gcd;
};

GcdQuotients gcd_quot(const Monomial& f, const Monomial& g);

/// All 2^m monomials in increasing integer order.
std::vector<Monomial> all_monomials(int m);

/// Monomials of degree <= r, i.e. the generators of RM(r, m), in increasing
/// integer order. Throws std::invalid_argument when r > m.
std::vector<Monomial> rm_set(int r, int m);

/// Evaluation vector ev(g) of length 2^m. Column j is the point with
/// integer value u = 2^m - 1 - j (decreasing index order), and the entry is
/// the product of u_i over the support of g.
std::vector<std::uint8_t> evaluate(const Monomial& g);

/// Rows ev(f) for f in `set`, in the given order.
std::vector<std::vector<std::uint8_t>> generator_matrix(const std::vector<Monomial>& set);

/// Rank over GF(2) of a 0/1 matrix (rows of equal length).
std::size_t gf2_rank(std::vector<std::vector<std::uint8_t>> rows);

}  // namespace becpolar
