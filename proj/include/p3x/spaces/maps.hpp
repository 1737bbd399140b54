#ifndef P3X_SPACES_MAPS_HPP
#define P3X_SPACES_MAPS_HPP

#include <p3x/exactla/sparse_matrix.hpp>
#include <p3x/spaces/ring.hpp>
#include <p3x/spaces/space.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace p3x::spaces {

using exactla::Scalar;

class DomainMismatch : public std::invalid_argument {
 public:
  explicit DomainMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Matrix with explicit domain and codomain; matrix is codomain.dim x domain.dim.
class LinearMap {
 public:
  LinearMap(Space domain, Space codomain, SparseMatrix matrix)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != codomain_.dim() || matrix_.cols() != domain_.dim()) {
      throw DomainMismatch("matrix " + std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()) +
                           " does not fit " + domain_.tag() + " -> " + codomain_.tag());
    }
  }

  const Space& domain() const { return domain_; }
  const Space& codomain() const { return codomain_; }
  const SparseMatrix& matrix() const { return matrix_; }

  SparseVector operator()(const SparseVector& v) const { return matrix_.apply(v); }

  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.matrix_ == b.matrix_;
  }

 private:
  Space domain_;
  Space codomain_;
  SparseMatrix matrix_;
};

inline LinearMap identity(const Space& s) { return {s, s, SparseMatrix::identity(s.dim())}; }

inline LinearMap zero_map(const Space& from, const Space& to) {
  return {from, to, SparseMatrix(to.dim(), from.dim())};
}

/// f o g
inline LinearMap compose(const LinearMap& f, const LinearMap& g) {
  if (g.codomain() != f.domain()) {
    throw DomainMismatch("compose: " + g.codomain().tag() + " vs " + f.domain().tag());
  }
  return {g.domain(), f.codomain(), f.matrix().multiply(g.matrix())};
}

inline LinearMap dual_map(const LinearMap& f) {
  return {dual(f.codomain()), dual(f.domain()), f.matrix().transpose()};
}

inline LinearMap tensor_map(const LinearMap& f, const LinearMap& g) {
  return {tensor(f.domain(), g.domain()), tensor(f.codomain(), g.codomain()), f.matrix().kron(g.matrix())};
}

/// a (x) b -> b (x) a
inline LinearMap swap_map(const Space& a, const Space& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> t;
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) t.emplace_back(j * na + i, i * nb + j, Scalar(1));
  }
  return {tensor(a, b), tensor(b, a), SparseMatrix::from_triplets(nb * na, na * nb, t)};
}

/// Coevaluation k -> V* (x) V, 1 -> sum_i x_i* (x) x_i.
inline LinearMap coev(const Space& v) {
  const std::size_t n = v.dim();
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> t;
  for (std::size_t i = 0; i < n; ++i) t.emplace_back(i * n + i, 0, Scalar(1));
  return {Space::ground(), tensor(dual(v), v), SparseMatrix::from_triplets(n * n, 1, t)};
}

/// Evaluation V* (x) V -> k.
inline LinearMap ev(const Space& v) { return dual_map(coev(v)); }

/// For f: A (x) B -> C, the map A -> C (x) B*, a -> sum_b f(a (x) b) (x) b*.
inline LinearMap curry_last(const LinearMap& f, const Space& a, const Space& b) {
  if (f.domain() != tensor(a, b)) throw DomainMismatch("curry_last: domain is not " + tensor(a, b).tag());
  const std::size_t nb = b.dim();
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> t;
  for (std::size_t c = 0; c < f.matrix().rows(); ++c) {
    for (const auto& e : f.matrix().row(c)) {
      const std::size_t ia = e.index / nb;
      const std::size_t ib = e.index % nb;
      t.emplace_back(c * nb + ib, ia, e.value);
    }
  }
  const Space cod = tensor(f.codomain(), dual(b));
  return {a, cod, SparseMatrix::from_triplets(cod.dim(), a.dim(), t)};
}

/// For f: A (x) B -> C, the map B -> A* (x) C, b -> sum_a a* (x) f(a (x) b).
inline LinearMap curry_first(const LinearMap& f, const Space& a, const Space& b) {
  if (f.domain() != tensor(a, b)) throw DomainMismatch("curry_first: domain is not " + tensor(a, b).tag());
  const std::size_t nb = b.dim();
  const std::size_t nc = f.codomain().dim();
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> t;
  for (std::size_t c = 0; c < nc; ++c) {
    for (const auto& e : f.matrix().row(c)) {
      const std::size_t ia = e.index / nb;
      const std::size_t ib = e.index % nb;
      t.emplace_back(ia * nc + c, ib, e.value);
    }
  }
  const Space cod = tensor(dual(a), f.codomain());
  return {b, cod, SparseMatrix::from_triplets(cod.dim(), nb, t)};
}

/// For f: B -> A (x) C, the map A* (x) B -> C, a* (x) b -> <a*, f(b)>.
inline LinearMap uncurry_first(const LinearMap& f, const Space& a, const Space& c) {
  if (f.codomain() != tensor(a, c)) throw DomainMismatch("uncurry_first: codomain is not " + tensor(a, c).tag());
  const std::size_t nb = f.domain().dim();
  const std::size_t nc = c.dim();
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> t;
  for (std::size_t row = 0; row < f.matrix().rows(); ++row) {
    const std::size_t ia = row / nc;
    const std::size_t ic = row % nc;
    for (const auto& e : f.matrix().row(row)) t.emplace_back(ic, ia * nb + e.index, e.value);
  }
  const Space dom = tensor(dual(a), f.domain());
  return {dom, c, SparseMatrix::from_triplets(nc, dom.dim(), t)};
}

/// V_a (x) V_b -> V_{a+b}, u (x) v -> class of u*v on canonical bases.
inline LinearMap mult_map(const RingSpec& ring, int a, int b) {
  const Space va = graded_piece(ring, a);
  const Space vb = graded_piece(ring, b);
  const Space vab = graded_piece(ring, a + b);
  const Space dom = tensor(va, vb);
  if (va.dim() == 0 || vb.dim() == 0) return zero_map(dom, vab);
  const auto& pa = ring.piece(a);
  const auto& pb = ring.piece(b);
  const auto& pab = ring.piece(a + b);
  const auto& ta = monomial_table(a);
  const auto& tb = monomial_table(b);
  const auto& tab = monomial_table(a + b);
  const SparseMatrix proj_t = pab.projection.transpose();  // monomial -> row of normal form
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> t;
  for (std::size_t i = 0; i < pa.basis.size(); ++i) {
    for (std::size_t j = 0; j < pb.basis.size(); ++j) {
      const std::size_t m = tab.at(ta.monomials[pa.basis[i]] + tb.monomials[pb.basis[j]]);
      for (const auto& e : proj_t.row(m)) t.emplace_back(e.index, i * pb.basis.size() + j, e.value);
    }
  }
  return {dom, vab, SparseMatrix::from_triplets(vab.dim(), dom.dim(), t)};
}

/// Whether every generator of `from` vanishes in `to`.
inline bool ideal_contains(const RingSpec& to, const RingSpec& from) {
  for (const auto& f : from.forms()) {
    std::vector<std::pair<std::size_t, Scalar>> coords;
    const auto& table = monomial_table(4);
    for (const auto& term : f.terms()) coords.emplace_back(table.at(term.exp), term.coeff);
    const SparseVector v = SparseVector::from_pairs(polys_dim(4), std::move(coords));
    if (!to.piece(4).projection.apply(v).is_zero()) return false;
  }
  return true;
}

/// Quotient map V_d(from) -> V_d(to) on canonical bases.
inline LinearMap restriction_map(const RingSpec& from, const RingSpec& to, int d) {
  if (!ideal_contains(to, from)) throw IncompatibleRings(from.tag() + " does not map onto " + to.tag());
  const Space src = graded_piece(from, d);
  const Space dst = graded_piece(to, d);
  if (d < 0) return zero_map(src, dst);
  const auto& pf = from.piece(d);
  const SparseMatrix& proj = to.piece(d).projection;
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> t;
  for (std::size_t r = 0; r < proj.rows(); ++r) {
    for (const auto& e : proj.row(r)) {
      const std::ptrdiff_t j = pf.position[e.index];
      if (j >= 0) t.emplace_back(r, static_cast<std::size_t>(j), e.value);
    }
  }
  return {src, dst, SparseMatrix::from_triplets(dst.dim(), src.dim(), t)};
}

}  // namespace p3x::spaces

#endif  // P3X_SPACES_MAPS_HPP
