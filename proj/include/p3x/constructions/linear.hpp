#ifndef P3X_CONSTRUCTIONS_LINEAR_HPP
#define P3X_CONSTRUCTIONS_LINEAR_HPP

#include <p3x/spaces.hpp>

#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

namespace p3x::constructions {

using exactla::Scalar;
using exactla::SparseMatrix;
using exactla::SparseVector;
using spaces::LinearMap;
using spaces::RingSpec;
using spaces::Space;
using spaces::Subquotient;

/// V1* (x) V1* -> (L2 V1)*, x_i* (x) x_j* -> (x_i ^ x_j)*, antisymmetric.
inline LinearMap wedge_projection_dual(const Space& v1) {
  const std::size_t n = v1.dim();
  const Space w = spaces::dual(spaces::wedge2(v1));
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> t;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i < j) t.emplace_back(Space::wedge_index(n, i, j), i * n + j, Scalar(1));
      if (i > j) t.emplace_back(Space::wedge_index(n, j, i), i * n + j, Scalar(-1));
    }
  }
  const Space dom = spaces::tensor(spaces::dual(v1), spaces::dual(v1));
  return {dom, w, SparseMatrix::from_triplets(w.dim(), dom.dim(), t)};
}

/// sum_i x_i* (x) x_i in V* (x) V.
inline SparseVector delta1(const Space& v) {
  const std::size_t n = v.dim();
  std::vector<std::pair<std::size_t, Scalar>> p;
  for (std::size_t i = 0; i < n; ++i) p.emplace_back(i * n + i, Scalar(1));
  return SparseVector::from_pairs(n * n, std::move(p));
}

/// sum_j y_j* (x) y_j in V2* (x) V2; same shape as delta1.
inline SparseVector identity_tensor(const Space& v2) { return delta1(v2); }

/// g: V1* (x) V1 -> (L2 V1)* (x) V2, (id (x) m) o (g1 (x) id) with
/// g1 = curry of the wedge projection.
inline LinearMap build_g(const RingSpec& ring = RingSpec::p3()) {
  const Space v1 = spaces::graded_piece(ring, 1);
  const LinearMap m = spaces::mult_map(ring, 1, 1);
  const LinearMap g1 = spaces::curry_last(wedge_projection_dual(v1), spaces::dual(v1), spaces::dual(v1));
  const Space w = spaces::dual(spaces::wedge2(v1));
  return spaces::compose(spaces::tensor_map(spaces::identity(w), m),
                         spaces::tensor_map(g1, spaces::identity(v1)));
}

enum class RVariant { Literal, Antisymmetrized };

inline const char* to_string(RVariant v) { return v == RVariant::Literal ? "literal" : "antisymmetrized"; }

/// r: V1* (x) V1 -> V1* (x) V1* (x) V2.
///  literal:         (id (x) id (x) m) o (id (x) coev (x) id)
///  antisymmetrized: the same, then a (x) b -> a (x) b - b (x) a on the two V1* factors.
inline LinearMap build_r(RVariant variant, const RingSpec& ring = RingSpec::p3()) {
  const Space v1 = spaces::graded_piece(ring, 1);
  const Space v1d = spaces::dual(v1);
  const Space v2 = spaces::graded_piece(ring, 2);
  const LinearMap m = spaces::mult_map(ring, 1, 1);
  const LinearMap insert = spaces::tensor_map(spaces::identity(v1d),
                                              spaces::tensor_map(spaces::coev(v1), spaces::identity(v1)));
  const LinearMap literal =
      spaces::compose(spaces::tensor_map(spaces::identity(spaces::tensor(v1d, v1d)), m), insert);
  if (variant == RVariant::Literal) return literal;
  const Space dd = spaces::tensor(v1d, v1d);
  const LinearMap anti(dd, dd, SparseMatrix::identity(dd.dim()).plus(spaces::swap_map(v1d, v1d).matrix().scaled(Scalar(-1))));
  return spaces::compose(spaces::tensor_map(anti, spaces::identity(v2)), literal);
}

/// h1 = e2: V1 -> V1* (x) V2, x_b -> sum_a x_a* (x) x_a x_b.
inline LinearMap build_h1(const RingSpec& ring = RingSpec::p3()) {
  const Space v1 = spaces::graded_piece(ring, 1);
  return spaces::curry_first(spaces::mult_map(ring, 1, 1), v1, v1);
}

/// Comultiplication m*: V2* -> V1* (x) V1*.
inline LinearMap build_comult(const RingSpec& ring = RingSpec::p3()) {
  return spaces::dual_map(spaces::mult_map(ring, 1, 1));
}

/// e2*: V1 (x) V2* -> V1*, x_a (x) y* -> sum_c y*(x_a x_c) x_c*.
inline LinearMap build_e2_dual(const RingSpec& ring = RingSpec::p3()) {
  const Space v1d = spaces::dual(spaces::graded_piece(ring, 1));
  return spaces::uncurry_first(build_comult(ring), v1d, v1d);
}

struct HMap {
  Subquotient coker_h1;
  LinearMap p1;  // V1* (x) V2 -> coker(h1)
  LinearMap h;   // V2* (x) V2 -> V1* (x) coker(h1)
};

/// h = (id_{V1*} (x) p1) o (m* (x) id_{V2}), p1 the projection onto coker(h1).
inline HMap build_h(const RingSpec& ring = RingSpec::p3()) {
  const Space v1 = spaces::graded_piece(ring, 1);
  const Space v2 = spaces::graded_piece(ring, 2);
  const LinearMap h1 = build_h1(ring);
  Subquotient q = spaces::cokernel_sq(h1, "coker(h1)");
  LinearMap p1 = spaces::induce(spaces::identity(h1.codomain()), spaces::whole(h1.codomain()), q);
  LinearMap h = spaces::compose(spaces::tensor_map(spaces::identity(spaces::dual(v1)), p1),
                                spaces::tensor_map(build_comult(ring), spaces::identity(v2)));
  return {std::move(q), std::move(p1), std::move(h)};
}

}  // namespace p3x::constructions

#endif  // P3X_CONSTRUCTIONS_LINEAR_HPP
