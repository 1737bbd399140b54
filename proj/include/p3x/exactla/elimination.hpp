#ifndef P3X_EXACTLA_ELIMINATION_HPP
#define P3X_EXACTLA_ELIMINATION_HPP

#include <p3x/exactla/modular.hpp>
#include <p3x/exactla/scalar.hpp>
#include <p3x/exactla/sparse_matrix.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace p3x::exactla {

/// Reduced row echelon form of a rational matrix. Rows have pivot entry 1 and
/// vanish on every other pivot column; pivots are strictly increasing.
class Echelon {
 public:
  Echelon() = default;
  Echelon(std::size_t cols, std::vector<std::size_t> pivots, std::vector<SparseVector> rows)
      : cols_(cols), pivots_(std::move(pivots)), rows_(std::move(rows)) {
    pivot_row_.assign(cols_, kNone);
    for (std::size_t r = 0; r < pivots_.size(); ++r) pivot_row_[pivots_[r]] = r;
  }

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<SparseVector>& rows() const { return rows_; }
  bool is_pivot(std::size_t c) const { return pivot_row_.at(c) != kNone; }

  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!is_pivot(c)) out.push_back(c);
    }
    return out;
  }

  /// Kernel basis in reduced form: one vector per free column c, equal to 1
  /// at c, 0 at the other free columns.
  std::vector<SparseVector> kernel_basis() const {
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> by_col(cols_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (const auto& e : rows_[r].entries()) {
        if (e.index != pivots_[r]) by_col[e.index].emplace_back(pivots_[r], -e.value);
      }
    }
    std::vector<SparseVector> out;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (is_pivot(c)) continue;
      auto pairs = std::move(by_col[c]);
      pairs.emplace_back(c, Scalar(1));
      out.push_back(SparseVector::from_pairs(cols_, std::move(pairs)));
    }
    return out;
  }

  /// v minus its row-space component along the pivot coordinates: the result
  /// vanishes on every pivot column. Zero iff v lies in the row space.
  SparseVector reduce(const SparseVector& v) const {
    if (v.dim() != cols_) throw std::invalid_argument("Echelon::reduce: dimension mismatch");
    std::vector<std::pair<std::size_t, Scalar>> acc;
    for (const auto& e : v.entries()) acc.emplace_back(e.index, e.value);
    for (const auto& e : v.entries()) {
      const std::size_t r = pivot_row_[e.index];
      if (r == kNone) continue;
      for (const auto& f : rows_[r].entries()) acc.emplace_back(f.index, -e.value * f.value);
    }
    return SparseVector::from_pairs(cols_, std::move(acc));
  }

  friend bool operator==(const Echelon& a, const Echelon& b) {
    return a.cols_ == b.cols_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::size_t cols_ = 0;
  std::vector<std::size_t> pivots_;
  std::vector<SparseVector> rows_;
  std::vector<std::size_t> pivot_row_;
};

enum class Method { Auto, FractionFree, Multimodular };

namespace detail {

struct IntEntry {
  std::size_t index;
  Integer value;
};
using IntRow = std::vector<IntEntry>;

inline void make_primitive(IntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& e : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.value.get_mpz_t());
    if (g == 1) return;
  }
  if (row.front().value < 0) g = -g;
  for (auto& e : row) mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), g.get_mpz_t());
}

inline IntRow to_integer_row(const SparseMatrix::Row& row) {
  Integer l = 1;
  for (const auto& e : row) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.value.get_den_mpz_t());
  }
  IntRow out;
  out.reserve(row.size());
  for (const auto& e : row) {
    Integer v = e.value.get_num() * (l / e.value.get_den());
    out.push_back({e.index, std::move(v)});
  }
  make_primitive(out);
  return out;
}

/// a*x - b*y, restricted to entries of index > skip (the eliminated column).
inline IntRow combine(const Integer& a, const IntRow& x, const Integer& b, const IntRow& y,
                      std::size_t skip) {
  IntRow out;
  out.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  Integer t;
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->index < j->index)) {
      if (i->index != skip) out.push_back({i->index, a * i->value});
      ++i;
    } else if (i == x.end() || j->index < i->index) {
      if (j->index != skip) out.push_back({j->index, -(b * j->value)});
      ++j;
    } else {
      if (i->index != skip) {
        t = a * i->value;
        mpz_submul(t.get_mpz_t(), b.get_mpz_t(), j->value.get_mpz_t());
        if (t != 0) out.push_back({i->index, t});
      }
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  return out;
}

inline const Integer* find_entry(const IntRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const IntEntry& e, std::size_t k) { return e.index < k; });
  return (it != row.end() && it->index == col) ? &it->value : nullptr;
}

inline SparseVector to_rational_row(const IntRow& row, std::size_t cols) {
  const Integer& lead = row.front().value;
  std::vector<std::pair<std::size_t, Scalar>> pairs;
  pairs.reserve(row.size());
  for (const auto& e : row) {
    Scalar q(e.value, lead);
    q.canonicalize();
    pairs.emplace_back(e.index, std::move(q));
  }
  return SparseVector::from_pairs(cols, std::move(pairs));
}

/// Fraction-free sparse elimination on integer-cleared rows. Pivot choice:
/// column order, then the sparsest candidate row (lowest row index on ties).
/// Gives up (nullopt) once the stored entries exceed `max_fill`.
inline std::optional<Echelon> rref_fraction_free(const SparseMatrix& m,
                                                 std::size_t max_fill = std::numeric_limits<std::size_t>::max()) {
  const std::size_t cols = m.cols();
  std::vector<IntRow> pool;
  pool.reserve(m.rows());
  std::vector<std::vector<std::size_t>> bucket(cols);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    pool.push_back(to_integer_row(m.row(i)));
    if (!pool.back().empty()) bucket[pool.back().front().index].push_back(i);
  }

  std::size_t fill = m.nnz();
  std::vector<std::size_t> pivot_rows;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols; ++c) {
    auto& cand = bucket[c];
    if (cand.empty()) continue;
    std::size_t best = cand.front();
    for (std::size_t r : cand) {
      if (pool[r].size() < pool[best].size() || (pool[r].size() == pool[best].size() && r < best)) {
        best = r;
      }
    }
    const IntRow& prow = pool[best];
    const Integer a = prow.front().value;
    for (std::size_t r : cand) {
      if (r == best) continue;
      const Integer b = pool[r].front().value;
      fill -= pool[r].size();
      pool[r] = combine(a, pool[r], b, prow, c);
      fill += pool[r].size();
      if (fill > max_fill) return std::nullopt;
      if (!pool[r].empty()) bucket[pool[r].front().index].push_back(r);
    }
    pivot_rows.push_back(best);
    pivots.push_back(c);
    cand.clear();
    cand.shrink_to_fit();
  }

  // Back substitution, bottom-up; each row below is already reduced so
  // eliminating one pivot column never reintroduces another.
  std::vector<std::size_t> pivot_slot(cols, std::numeric_limits<std::size_t>::max());
  for (std::size_t k = 0; k < pivots.size(); ++k) pivot_slot[pivots[k]] = k;
  for (std::size_t k = pivots.size(); k-- > 0;) {
    IntRow& row = pool[pivot_rows[k]];
    std::size_t from = pivots[k] + 1;
    for (;;) {
      auto it = std::find_if(row.begin(), row.end(), [&](const IntEntry& e) {
        return e.index >= from && pivot_slot[e.index] != std::numeric_limits<std::size_t>::max();
      });
      if (it == row.end()) break;
      const std::size_t col = it->index;
      const IntRow& other = pool[pivot_rows[pivot_slot[col]]];
      const Integer b = it->value;
      const Integer a = other.front().value;
      row = combine(a, row, b, other, col);
      from = col + 1;
    }
  }

  std::vector<SparseVector> rows;
  rows.reserve(pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k) rows.push_back(to_rational_row(pool[pivot_rows[k]], cols));
  return Echelon(cols, std::move(pivots), std::move(rows));
}

/// Rational reconstruction of x mod n with |num|, den <= bound.
inline std::optional<Scalar> rational_reconstruct(const Integer& x, const Integer& n,
                                                  const Integer& bound) {
  Integer r0 = n;
  Integer r1 = x;
  Integer t0 = 0;
  Integer t1 = 1;
  Integer q;
  Integer tmp;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Scalar out(r1, t1);
  out.canonicalize();
  return out;
}

/// Exact check that `rows` is the reduced echelon form of m: m = m[:, P] * R.
inline bool verify_rref(const SparseMatrix& m, const std::vector<std::size_t>& pivots,
                        const std::vector<SparseVector>& rows) {
  std::vector<std::size_t> slot(m.cols(), std::numeric_limits<std::size_t>::max());
  for (std::size_t k = 0; k < pivots.size(); ++k) slot[pivots[k]] = k;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::pair<std::size_t, Scalar>> acc;
    for (const auto& e : m.row(i)) {
      acc.emplace_back(e.index, -e.value);
      const std::size_t k = slot[e.index];
      if (k == std::numeric_limits<std::size_t>::max()) continue;
      for (const auto& f : rows[k].entries()) acc.emplace_back(f.index, e.value * f.value);
    }
    if (!SparseVector::from_pairs(m.cols(), std::move(acc)).is_zero()) return false;
  }
  return true;
}

/// Multimodular RREF: modular RREF at growing sets of primes, CRT, rational
/// reconstruction, exact verification. Returns nullopt if no verified result
/// was found within `max_primes`.
inline std::optional<Echelon> rref_multimodular(const SparseMatrix& m, std::size_t max_primes = 4096) {
  const std::size_t cols = m.cols();
  PrimeSource primes(0x9e3779b97f4a7c15ULL ^ m.fingerprint());
  std::vector<std::size_t> pivots;
  bool have_pivots = false;
  // residues[k][c]: CRT accumulator for row k, column c (non-pivot columns).
  std::vector<std::vector<Integer>> residues;
  Integer modulus = 1;
  std::size_t used = 0;
  std::size_t next_check = 2;

  for (std::size_t attempt = 0; attempt < max_primes; ++attempt) {
    const std::uint64_t p = primes.next();
    ModMatrix mm;
    try {
      mm = reduce_mod(m, p);
    } catch (const BadPrime&) {
      continue;
    }
    std::vector<std::size_t> piv = echelonize_mod(mm, true);
    if (have_pivots) {
      // A prime is unlucky when its pivot list differs from the rational one;
      // the rational pivot list is never beaten (lower rank or a later column).
      if (piv.size() < pivots.size() ||
          (piv.size() == pivots.size() && piv > pivots)) {
        continue;
      }
      if (piv != pivots) {
        have_pivots = false;  // earlier primes were unlucky: restart
      }
    }
    if (!have_pivots) {
      pivots = piv;
      have_pivots = true;
      residues.assign(pivots.size(), std::vector<Integer>(cols));
      modulus = 1;
      used = 0;
      next_check = 2;
    }
    const Integer pz(static_cast<unsigned long>(p));
    Integer minv;
    mpz_invert(minv.get_mpz_t(), Integer(modulus % pz).get_mpz_t(), pz.get_mpz_t());
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      const std::uint32_t* row = mm.row(k);
      for (std::size_t c = pivots[k] + 1; c < cols; ++c) {
        Integer& x = residues[k][c];
        const std::uint64_t cur = mod_u64(x, p);
        const std::uint64_t target = row[c];
        if (cur == target) continue;
        const std::uint64_t diff = (target + p - cur) % p;
        const std::uint64_t t = mul_mod(diff, mod_u64(minv, p), p);
        x += modulus * static_cast<unsigned long>(t);
      }
    }
    modulus *= pz;
    ++used;
    if (used < next_check) continue;
    next_check = used + std::max<std::size_t>(2, used / 4);

    Integer bound;
    mpz_sqrt(bound.get_mpz_t(), Integer(modulus / 2).get_mpz_t());
    std::vector<SparseVector> rows;
    rows.reserve(pivots.size());
    bool ok = true;
    for (std::size_t k = 0; k < pivots.size() && ok; ++k) {
      std::vector<std::pair<std::size_t, Scalar>> pairs;
      pairs.emplace_back(pivots[k], Scalar(1));
      Integer den = 1;
      for (std::size_t c = pivots[k] + 1; c < cols; ++c) {
        const Integer& x = residues[k][c];
        if (x == 0) continue;
        // Try the running denominator first; fall back to full reconstruction.
        Integer y = (x * den) % modulus;
        if (y > modulus / 2) y -= modulus;
        if (abs(y) <= bound) {
          Scalar q(y, den);
          q.canonicalize();
          pairs.emplace_back(c, std::move(q));
          continue;
        }
        auto q = rational_reconstruct(x, modulus, bound);
        if (!q) {
          ok = false;
          break;
        }
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q->get_den_mpz_t());
        pairs.emplace_back(c, std::move(*q));
      }
      if (ok) rows.push_back(SparseVector::from_pairs(cols, std::move(pairs)));
    }
    if (!ok) continue;
    // Shape: rows vanish on other pivot columns.
    for (std::size_t k = 0; k < rows.size() && ok; ++k) {
      for (const auto& e : rows[k].entries()) {
        if (e.index != pivots[k] && std::binary_search(pivots.begin(), pivots.end(), e.index)) {
          ok = false;
          break;
        }
      }
    }
    if (ok && verify_rref(m, pivots, rows)) return Echelon(cols, pivots, std::move(rows));
  }
  return std::nullopt;
}

}  // namespace detail

/// Auto runs fraction-free elimination until the stored entries exceed this
/// many (or 4x the input, if larger), then switches to the multimodular path.
/// Both paths produce the unique reduced echelon form, so results agree bit
/// for bit.
inline constexpr std::size_t kFillInThreshold = 2'000'000;

inline Echelon rref(const SparseMatrix& m, Method method = Method::Auto) {
  if (method == Method::FractionFree) return std::move(*detail::rref_fraction_free(m));
  if (method == Method::Auto) {
    if (auto e = detail::rref_fraction_free(m, std::max(kFillInThreshold, 4 * m.nnz()))) return std::move(*e);
  }
  if (auto e = detail::rref_multimodular(m)) return std::move(*e);
  return std::move(*detail::rref_fraction_free(m));
}

struct RankKernel {
  std::size_t rank = 0;
  std::vector<SparseVector> kernel;
};

/// Exact rank and reduced kernel basis. rank + kernel.size() == m.cols().
inline RankKernel rank_kernel(const SparseMatrix& m, Method method = Method::Auto) {
  Echelon e = rref(m, method);
  return {e.rank(), e.kernel_basis()};
}

}  // namespace p3x::exactla

#endif  // P3X_EXACTLA_ELIMINATION_HPP
