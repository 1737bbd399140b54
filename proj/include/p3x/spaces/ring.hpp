#ifndef P3X_SPACES_RING_HPP
#define P3X_SPACES_RING_HPP

#include <p3x/exactla/elimination.hpp>
#include <p3x/exactla/sparse_matrix.hpp>
#include <p3x/spaces/quartic.hpp>
#include <p3x/spaces/space.hpp>

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace p3x::spaces {

using exactla::SparseMatrix;
using exactla::SparseVector;

class InvalidRing : public std::invalid_argument {
 public:
  explicit InvalidRing(const std::string& what) : std::invalid_argument(what) {}
};

class NotRegularPair : public std::runtime_error {
 public:
  NotRegularPair(int degree, std::size_t rank, std::size_t expected)
      : std::runtime_error("not a regular pair: ideal rank " + std::to_string(rank) + " in degree " +
                           std::to_string(degree) + ", Koszul count " + std::to_string(expected)),
        degree(degree) {}
  int degree;
};

class IncompatibleRings : public std::invalid_argument {
 public:
  explicit IncompatibleRings(const std::string& what) : std::invalid_argument(what) {}
};

inline std::size_t binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  std::size_t r = 1;
  for (long i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

/// dim S_d = C(d+3, 3), zero for d < 0.
inline std::size_t polys_dim(int d) { return d < 0 ? 0 : binomial(d + 3, 3); }

/// Degree-d monomials in graded lexicographic order, x0 > x1 > x2 > x3.
struct MonomialTable {
  int degree = 0;
  std::vector<Exponent> monomials;
  std::map<Exponent, std::size_t> index;

  std::size_t at(const Exponent& e) const {
    auto it = index.find(e);
    if (it == index.end()) throw std::out_of_range("monomial " + monomial_string(e) + " not of degree " + std::to_string(degree));
    return it->second;
  }
};

inline const MonomialTable& monomial_table(int d) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<MonomialTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[d];
  if (!slot) {
    slot = std::make_unique<MonomialTable>();
    slot->degree = d;
    for (int a = d; a >= 0; --a) {
      for (int b = d - a; b >= 0; --b) {
        for (int c = d - a - b; c >= 0; --c) {
          const Exponent e{a, b, c, d - a - b - c};
          slot->index[e] = slot->monomials.size();
          slot->monomials.push_back(e);
        }
      }
    }
  }
  return *slot;
}

/// Degree-d piece of S, S/(f) or S/(f1, f2): canonical basis is the set of
/// monomials that are not pivots of the reduced echelon form of the ideal's
/// degree-d piece.
struct PieceData {
  int degree = 0;
  std::vector<std::size_t> basis;  // indices into monomial_table(d)
  std::vector<std::ptrdiff_t> position;  // monomial index -> basis position or -1
  SparseMatrix projection;  // dim x |S_d|, monomial -> normal form coordinates
  std::size_t ideal_rank = 0;
  exactla::Echelon ideal;
};

class RingSpec {
 public:
  enum class Kind { P3, Surface, Curve };

  static RingSpec p3() { return RingSpec(Kind::P3, {}); }
  static RingSpec surface(const QuarticForm& f) { return RingSpec(Kind::Surface, {f}); }
  /// Throws InvalidRing when f1, f2 are proportional.
  static RingSpec curve(const QuarticForm& f1, const QuarticForm& f2) {
    RingSpec r(Kind::Curve, {f1, f2});
    const SparseMatrix gens = r.generators_in_degree(4);
    if (exactla::rref(gens).rank() != 2) throw InvalidRing("curve forms are linearly dependent");
    return r;
  }

  Kind kind() const { return kind_; }
  const std::vector<QuarticForm>& forms() const { return forms_; }

  std::string tag() const {
    switch (kind_) {
      case Kind::P3:
        return "P3";
      case Kind::Surface:
        return "X:" + forms_[0].id();
      default:
        return "C:" + forms_[0].id() + "," + forms_[1].id();
    }
  }

  /// Rows are f * m for each generator f and each monomial m of degree d - 4,
  /// in degree-d monomial coordinates.
  SparseMatrix generators_in_degree(int d) const {
    const std::size_t cols = polys_dim(d);
    if (d < 4 || forms_.empty()) return SparseMatrix(0, cols);
    const auto& target = monomial_table(d);
    const auto& shift = monomial_table(d - 4);
    std::vector<std::tuple<std::size_t, std::size_t, exactla::Scalar>> t;
    std::size_t row = 0;
    for (const auto& f : forms_) {
      for (const auto& m : shift.monomials) {
        for (const auto& term : f.terms()) t.emplace_back(row, target.at(term.exp + m), term.coeff);
        ++row;
      }
    }
    return SparseMatrix::from_triplets(row, cols, t);
  }

  /// Cached piece data; Curve pieces are checked against the Koszul count.
  const PieceData& piece(int d) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto& slot = cache_->pieces[d];
    if (!slot) slot = std::make_unique<PieceData>(compute_piece(d));
    return *slot;
  }

  /// Koszul count for a regular pair: S_d - 2 S_{d-4} + S_{d-8}.
  static std::size_t koszul_dim(int d) {
    return polys_dim(d) - 2 * polys_dim(d - 4) + polys_dim(d - 8);
  }

  friend bool operator==(const RingSpec& a, const RingSpec& b) { return a.tag() == b.tag(); }

 private:
  struct Cache {
    std::mutex mu;
    std::map<int, std::unique_ptr<PieceData>> pieces;
  };

  RingSpec(Kind k, std::vector<QuarticForm> forms)
      : kind_(k), forms_(std::move(forms)), cache_(std::make_shared<Cache>()) {}

  PieceData compute_piece(int d) const {
    PieceData p;
    p.degree = d;
    const std::size_t n = polys_dim(d);
    p.ideal = exactla::rref(generators_in_degree(d));
    p.ideal_rank = p.ideal.rank();
    if (kind_ == Kind::Curve) {
      const std::size_t expected = 2 * polys_dim(d - 4) - polys_dim(d - 8);
      if (p.ideal_rank != expected) throw NotRegularPair(d, p.ideal_rank, expected);
    }
    p.position.assign(n, -1);
    for (std::size_t c = 0; c < n; ++c) {
      if (!p.ideal.is_pivot(c)) {
        p.position[c] = static_cast<std::ptrdiff_t>(p.basis.size());
        p.basis.push_back(c);
      }
    }
    // m_c = -(sum over free c' of R[c'] m_c') modulo the ideal, when c is a pivot.
    std::vector<std::tuple<std::size_t, std::size_t, exactla::Scalar>> t;
    for (std::size_t c : p.basis) t.emplace_back(static_cast<std::size_t>(p.position[c]), c, exactla::Scalar(1));
    for (std::size_t r = 0; r < p.ideal.rank(); ++r) {
      const std::size_t q = p.ideal.pivots()[r];
      for (const auto& e : p.ideal.rows()[r].entries()) {
        if (e.index != q) t.emplace_back(static_cast<std::size_t>(p.position[e.index]), q, -e.value);
      }
    }
    p.projection = SparseMatrix::from_triplets(p.basis.size(), n, t);
    return p;
  }

  Kind kind_;
  std::vector<QuarticForm> forms_;
  std::shared_ptr<Cache> cache_;
};

/// Degree-d piece as a labeled space. d < 0 gives the zero space.
inline Space graded_piece(const RingSpec& ring, int d) {
  std::vector<std::string> labels;
  if (d >= 0) {
    const auto& table = monomial_table(d);
    for (std::size_t c : ring.piece(d).basis) labels.push_back(monomial_string(table.monomials[c]));
  }
  return Space::labeled(Space::Kind::Graded, "V[" + ring.tag() + "]_" + std::to_string(d), std::move(labels));
}

}  // namespace p3x::spaces

#endif  // P3X_SPACES_RING_HPP
