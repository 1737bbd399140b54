#ifndef P3X_EXACTLA_MODULAR_HPP
#define P3X_EXACTLA_MODULAR_HPP

#include <p3x/exactla/scalar.hpp>
#include <p3x/exactla/sparse_matrix.hpp>

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace p3x::exactla {

/// Deterministic Miller-Rabin, exact for n < 2^64.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    std::uint64_t x = pow_mod(a % n, d, n);
    if (a % n == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Distinct random primes in [2^30, 2^31), reproducible from a seed.
class PrimeSource {
 public:
  static constexpr std::uint64_t kLow = 1ULL << 30U;
  static constexpr std::uint64_t kHigh = 1ULL << 31U;

  explicit PrimeSource(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next() {
    for (;;) {
      const std::uint64_t candidate = kLow + (rng_() % (kHigh - kLow));
      if (is_prime_u64(candidate) && used_.insert(candidate).second) return candidate;
    }
  }

 private:
  std::mt19937_64 rng_;
  std::set<std::uint64_t> used_;
};

/// Barrett reduction for moduli below 2^31 and operands below 2^62.
class Modulus {
 public:
  explicit Modulus(std::uint64_t p)
      : p_(p), m_(static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64U) / p)) {}

  std::uint64_t value() const { return p_; }

  std::uint64_t reduce(std::uint64_t x) const {
    const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * m_) >> 64U);
    std::uint64_t r = x - q * p_;
    while (r >= p_) r -= p_;
    return r;
  }

 private:
  std::uint64_t p_;
  std::uint64_t m_;
};

/// Dense row-major matrix over Z/p.
struct ModMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::uint64_t p = 0;
  std::vector<std::uint32_t> a;

  std::uint32_t* row(std::size_t i) { return a.data() + i * cols; }
  const std::uint32_t* row(std::size_t i) const { return a.data() + i * cols; }
};

inline ModMatrix reduce_mod(const SparseMatrix& m, std::uint64_t p, bool transpose = false) {
  ModMatrix out;
  out.p = p;
  out.rows = transpose ? m.cols() : m.rows();
  out.cols = transpose ? m.rows() : m.cols();
  out.a.assign(out.rows * out.cols, 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& e : m.row(i)) {
      const auto v = static_cast<std::uint32_t>(mod_p(e.value, p));
      if (transpose) {
        out.a[e.index * out.cols + i] = v;
      } else {
        out.a[i * out.cols + e.index] = v;
      }
    }
  }
  return out;
}

/// Row echelon form over Z/p, pivots chosen in column order.
/// With `reduced`, entries above pivots are cleared and pivots scaled to 1.
/// Returns the pivot columns; rows [0, rank) of `m` hold the echelon rows.
inline std::vector<std::size_t> echelonize_mod(ModMatrix& m, bool reduced) {
  const Modulus mod(m.p);
  const std::uint64_t p = m.p;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t sel = m.rows;
    for (std::size_t i = r; i < m.rows; ++i) {
      if (m.row(i)[c] != 0) {
        sel = i;
        break;
      }
    }
    if (sel == m.rows) continue;
    if (sel != r) {
      std::swap_ranges(m.row(sel), m.row(sel) + m.cols, m.row(r));
    }
    std::uint32_t* prow = m.row(r);
    const std::uint64_t inv = inv_mod(prow[c], p);
    for (std::size_t j = c; j < m.cols; ++j) {
      prow[j] = static_cast<std::uint32_t>(mod.reduce(static_cast<std::uint64_t>(prow[j]) * inv));
    }
    const std::size_t first = reduced ? 0 : r + 1;
    for (std::size_t i = first; i < m.rows; ++i) {
      if (i == r) continue;
      std::uint32_t* row = m.row(i);
      const std::uint64_t f = row[c];
      if (f == 0) continue;
      const std::uint64_t neg = p - f;
      for (std::size_t j = c; j < m.cols; ++j) {
        if (prow[j] != 0) {
          row[j] = static_cast<std::uint32_t>(
              mod.reduce(static_cast<std::uint64_t>(row[j]) + neg * prow[j]));
        }
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Rank of m reduced mod p. Throws BadPrime if p divides a denominator.
inline std::size_t modular_rank(const SparseMatrix& m, std::uint64_t p) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Eliminating along the longer side keeps the pivot search short.
  ModMatrix mm = reduce_mod(m, p, m.rows() > m.cols());
  return echelonize_mod(mm, false).size();
}

}  // namespace p3x::exactla

#endif  // P3X_EXACTLA_MODULAR_HPP
