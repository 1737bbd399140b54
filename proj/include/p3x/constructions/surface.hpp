#ifndef P3X_CONSTRUCTIONS_SURFACE_HPP
#define P3X_CONSTRUCTIONS_SURFACE_HPP

#include <p3x/constructions/linear.hpp>
#include <p3x/exactla/certify.hpp>
#include <p3x/exactla/elimination.hpp>
#include <p3x/spaces.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace p3x::constructions {

using spaces::QuarticForm;

class PresentationDegenerate : public std::runtime_error {
 public:
  PresentationDegenerate(const std::string& what, std::size_t rank, std::size_t expected)
      : std::runtime_error(what + ": presenting map has rank " + std::to_string(rank) + ", expected " +
                           std::to_string(expected)),
        rank(rank),
        expected(expected) {}
  std::size_t rank;
  std::size_t expected;
};

namespace detail {

inline void require_injective(const LinearMap& f, const std::string& what) {
  const auto c = exactla::certify(f.matrix(), exactla::Injective{});
  if (!c.certified) throw PresentationDegenerate(what, c.rank, f.domain().dim());
}

}  // namespace detail

/// K1 = coker(m*: V_{X,5}* -> V_{X,4}* (x) V_{X,1}*).
inline Subquotient build_K1(const RingSpec& x) {
  const LinearMap comult = spaces::dual_map(spaces::mult_map(x, 4, 1));
  detail::require_injective(comult, "K1");
  return spaces::cokernel_sq(comult, "K1");
}

inline Subquotient build_K1(const QuarticForm& f) { return build_K1(RingSpec::surface(f)); }

struct H2Map {
  Subquotient k1;
  LinearMap h2;  // V_{X,4}* (x) V_{X,1} -> K1 (x) V_{X,2}
};

/// h2 = (p_K1 (x) id_{V2}) o (id_{V4*} (x) h1).
inline H2Map build_h2(const RingSpec& x) {
  Subquotient k1 = build_K1(x);
  const Space v4d = spaces::dual(spaces::graded_piece(x, 4));
  const Space v2 = spaces::graded_piece(x, 2);
  const LinearMap step1 = spaces::tensor_map(spaces::identity(v4d), build_h1(x));
  const LinearMap step2 = spaces::tensor_map(k1.projection(), spaces::identity(v2));
  LinearMap h2 = spaces::compose(step2, step1);
  return {std::move(k1), std::move(h2)};
}

inline H2Map build_h2(const QuarticForm& f) { return build_h2(RingSpec::surface(f)); }

/// The embedding V_{k-1} -> V1* (x) V_k, g -> sum_i x_i* (x) x_i g.
inline LinearMap euler_embedding(const RingSpec& x, int k) {
  const Space v1 = spaces::graded_piece(x, 1);
  const Space vk1 = spaces::graded_piece(x, k - 1);
  return spaces::compose(spaces::tensor_map(spaces::identity(spaces::dual(v1)), spaces::mult_map(x, 1, k - 1)),
                         spaces::tensor_map(spaces::coev(v1), spaces::identity(vk1)));
}

/// H^0(M(k)|_X) as the cokernel of the Euler embedding.
inline Subquotient euler_sections(const RingSpec& x, int k) {
  if (k < 0) throw std::invalid_argument("euler_sections: k must be >= 0");
  const LinearMap emb = euler_embedding(x, k);
  detail::require_injective(emb, "euler_sections(" + std::to_string(k) + ")");
  return spaces::cokernel_sq(emb, "E" + std::to_string(k));
}

inline Subquotient euler_sections(const QuarticForm& f, int k) { return euler_sections(RingSpec::surface(f), k); }

struct HomMM4 {
  Subquotient e4;
  Subquotient e5;
  LinearMap mult;   // V1 (x) E4 -> E5, x_a (x) (x_i* (x) g) -> x_i* (x) x_a g
  Subquotient hom;  // its kernel
};

inline HomMM4 hom_M_M4(const RingSpec& x) {
  Subquotient e4 = euler_sections(x, 4);
  Subquotient e5 = euler_sections(x, 5);
  const Space v1 = spaces::graded_piece(x, 1);
  const Space v4 = spaces::graded_piece(x, 4);
  const LinearMap ambient = spaces::compose(
      spaces::tensor_map(spaces::identity(spaces::dual(v1)), spaces::mult_map(x, 1, 4)),
      spaces::tensor_map(spaces::swap_map(v1, spaces::dual(v1)), spaces::identity(v4)));
  LinearMap mult = spaces::induce(ambient, tensor_left(v1, e4), e5);
  Subquotient hom = spaces::kernel_sq(mult, "Hom(M,M(4))");
  return {std::move(e4), std::move(e5), std::move(mult), std::move(hom)};
}

inline HomMM4 hom_M_M4(const QuarticForm& f) { return hom_M_M4(RingSpec::surface(f)); }

struct VMap {
  HomMM4 hom;
  LinearMap v;  // Hom(M,M(4)) (x) V2* -> E4 (x) V1*
};

/// v = (id_{E4} (x) e2*) o (swap(V1, E4) (x) id_{V2*}) o (incl (x) id_{V2*}).
inline VMap build_v(const RingSpec& x) {
  HomMM4 hom = hom_M_M4(x);
  const Space v1 = spaces::graded_piece(x, 1);
  const Space v2d = spaces::dual(spaces::graded_piece(x, 2));
  const Space e4 = hom.e4.space();
  LinearMap v = spaces::compose(
      spaces::tensor_map(spaces::identity(e4), build_e2_dual(x)),
      spaces::compose(spaces::tensor_map(spaces::swap_map(v1, e4), spaces::identity(v2d)),
                      spaces::tensor_map(hom.hom.inclusion(), spaces::identity(v2d))));
  return {std::move(hom), std::move(v)};
}

inline VMap build_v(const QuarticForm& f) { return build_v(RingSpec::surface(f)); }

struct HomFO {
  std::size_t sections_dim = 0;  // dim H^0(M*(k)) = dim ker(V1 (x) V_k -> V_{k+1})
  std::size_t domain_dim = 0;    // dim V2* (x) H^0(M*(k))
  std::size_t codomain_dim = 0;  // dim V1* (x) V_k
  std::size_t rank = 0;
  std::size_t dim = 0;           // kernel dimension
  exactla::Certificate certificate;
};

/// dim Hom(F, O(k)) as the kernel of
///   (e2* (x) id_{V_k}) o (swap(V2*, V1) (x) id_{V_k}) o (id_{V2*} (x) incl):
///   V2* (x) H^0(M*(k)) -> V1* (x) V_k.
inline HomFO hom_F_O(const RingSpec& ring, int k, const exactla::CertifyOptions& opt = {}) {
  const Subquotient sections = spaces::kernel_sq(spaces::mult_map(ring, 1, k), "H0(M*(" + std::to_string(k) + "))");
  const Space v1 = spaces::graded_piece(ring, 1);
  const Space vk = spaces::graded_piece(ring, k);
  const Space v2d = spaces::dual(spaces::graded_piece(ring, 2));
  const LinearMap phi = spaces::compose(
      spaces::tensor_map(build_e2_dual(ring), spaces::identity(vk)),
      spaces::compose(spaces::tensor_map(spaces::swap_map(v2d, v1), spaces::identity(vk)),
                      spaces::tensor_map(spaces::identity(v2d), sections.inclusion())));
  HomFO out;
  out.sections_dim = sections.dim();
  out.domain_dim = phi.domain().dim();
  out.codomain_dim = phi.codomain().dim();
  out.certificate = exactla::certify(phi.matrix(), exactla::Surjective{}, opt);
  out.rank = out.certificate.rank;
  out.dim = out.domain_dim - out.rank;
  return out;
}

inline HomFO hom_F_O5(const QuarticForm& f, const exactla::CertifyOptions& opt = {}) {
  return hom_F_O(RingSpec::surface(f), 5, opt);
}

}  // namespace p3x::constructions

#endif  // P3X_CONSTRUCTIONS_SURFACE_HPP
