#include "becpolar/monomial.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace becpolar {

Monomial Monomial::from_int(std::uint32_t u, int m) {
  if (m < 1 || m > kMaxVariables) {
    throw std::invalid_argument("monomial: m must lie in [1, 16], got " + std::to_string(m));
  }
  if (u >= (std::uint32_t{1} << m)) {
    throw std::invalid_argument("monomial: u = " + std::to_string(u) + " does not fit in " +
                                std::to_string(m) + " bits");
  }
  return Monomial(u, m);
}

Monomial Monomial::variable(int i, int m) {
  if (i < 0 || i >= m) throw std::invalid_argument("monomial: variable index out of range");
  return from_int(std::uint32_t{1} << i, m);
}

int Monomial::degree() const { return std::popcount(bits_); }

std::vector<int> Monomial::support() const {
  std::vector<int> out;
  out.reserve(degree());
  for (int i = 0; i < m_; ++i) {
    if (has(i)) out.push_back(i);
  }
  return out;
}

Monomial Monomial::complement() const {
  const std::uint32_t mask = (std::uint32_t{1} << m_) - 1;
  return Monomial(~bits_ & mask, m_);
}

Monomial Monomial::times(const Monomial& other) const {
  require_same_ring(*this, other);
  return Monomial(bits_ | other.bits_, m_);
}

std::string Monomial::to_string() const {
  if (bits_ == 0) return "1";
  std::string s;
  for (int i : support()) s += "x" + std::to_string(i);
  return s;
}

void require_same_ring(const Monomial& f, const Monomial& g) {
  if (f.m() != g.m()) {
    throw std::invalid_argument("monomials live in different rings (m = " +
                                std::to_string(f.m()) + " vs " + std::to_string(g.m()) + ")");
  }
}

bool divides(const Monomial& f, const Monomial& g) {
  require_same_ring(f, g);
  return (f.bits() & g.bits()) == f.bits();
}

GcdQuotients gcd_quot(const Monomial& f, const Monomial& g) {
  require_same_ring(f, g);
  const std::uint32_t common = f.bits() & g.bits();
  return {Monomial::from_int(common, f.m()), Monomial::from_int(f.bits() & ~common, f.m()),
          Monomial::from_int(g.bits() & ~common, f.m())};
}

std::vector<Monomial> all_monomials(int m) {
  Monomial::one(m);  // validates m
  std::vector<Monomial> out;
  out.reserve(std::size_t{1} << m);
  for (std::uint32_t u = 0; u < (std::uint32_t{1} << m); ++u) out.push_back(Monomial::from_int(u, m));
  return out;
}

std::vector<Monomial> rm_set(int r, int m) {
  if (r < 0 || r > m) throw std::invalid_argument("rm_set: need 0 <= r <= m");
  std::vector<Monomial> out;
  for (const auto& f : all_monomials(m)) {
    if (f.degree() <= r) out.push_back(f);
  }
  return out;
}

std::vector<std::uint8_t> evaluate(const Monomial& g) {
  const std::uint32_t n = std::uint32_t{1} << g.m();
  std::vector<std::uint8_t> ev(n);
  for (std::uint32_t j = 0; j < n; ++j) {
    const std::uint32_t point = n - 1 - j;
    ev[j] = (point & g.bits()) == g.bits() ? 1 : 0;
  }
  return ev;
}

std::vector<std::vector<std::uint8_t>> generator_matrix(const std::vector<Monomial>& set) {
  std::vector<std::vector<std::uint8_t>> rows;
  rows.reserve(set.size());
  for (const auto& f : set) rows.push_back(evaluate(f));
  return rows;
}

std::size_t gf2_rank(std::vector<std::vector<std::uint8_t>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][c]) {
        for (std::size_t k = c; k < cols; ++k) rows[r][k] ^= rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace becpolar
