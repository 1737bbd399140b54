#ifndef P3X_SPACES_SUBQUOTIENT_HPP
#define P3X_SPACES_SUBQUOTIENT_HPP

#include <p3x/exactla/elimination.hpp>
#include <p3x/spaces/maps.hpp>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace p3x::spaces {

/// Raised by induce(); `witness` is an ambient vector of the domain whose
/// image violates the target presentation.
class NotWellDefined : public std::runtime_error {
 public:
  NotWellDefined(const std::string& what, SparseVector w) : std::runtime_error(what), witness(std::move(w)) {}
  SparseVector witness;
};

/// Kernel or cokernel of a presenting map, with a canonical basis.
///  Kernel: the reduced kernel basis; coordinates are the free columns.
///  Cokernel: classes of the ambient unit vectors off the pivots of the
///  reduced echelon form of the image.
class Subquotient {
 public:
  enum class Kind { Kernel, Cokernel };

  static Subquotient kernel_of(const LinearMap& f, const std::string& name = "ker") {
    return Subquotient(Kind::Kernel, f, exactla::rref(f.matrix()), name);
  }

  static Subquotient cokernel_of(const LinearMap& f, const std::string& name = "coker") {
    return Subquotient(Kind::Cokernel, f, exactla::rref(f.matrix().transpose()), name);
  }

  Kind kind() const { return d_->kind; }
  const Space& ambient() const { return d_->kind == Kind::Kernel ? d_->presentation.domain() : d_->presentation.codomain(); }
  const LinearMap& presentation() const { return d_->presentation; }
  const Space& space() const { return d_->space; }
  std::size_t dim() const { return d_->space.dim(); }
  const exactla::Echelon& echelon() const { return d_->echelon; }
  /// Ambient coordinates of the canonical basis (kernel vectors, or unit vectors).
  const std::vector<SparseVector>& basis() const { return d_->basis; }

  /// Cokernel only: ambient -> space, v -> class of v.
  const LinearMap& projection() const {
    if (kind() != Kind::Cokernel) throw std::logic_error("projection() on a kernel subquotient");
    return *d_->projection;
  }

  /// Kernel only: space -> ambient.
  LinearMap inclusion() const {
    if (kind() != Kind::Kernel) throw std::logic_error("inclusion() on a cokernel subquotient");
    return {space(), ambient(), SparseMatrix::from_columns(ambient().dim(), basis())};
  }

  /// Coordinates of an ambient vector: for a kernel it must lie in the
  /// kernel; for a cokernel any vector is reduced to its class.
  SparseVector coordinates(const SparseVector& v) const {
    if (kind() == Kind::Cokernel) return projection()(v);
    if (!presentation()(v).is_zero()) throw NotWellDefined("vector not in " + space().tag(), v);
    std::vector<std::pair<std::size_t, Scalar>> out;
    for (const auto& e : v.entries()) {
      const std::ptrdiff_t j = d_->free_pos[e.index];
      if (j >= 0) out.emplace_back(static_cast<std::size_t>(j), e.value);
    }
    return SparseVector::from_pairs(dim(), std::move(out));
  }

  /// Representatives of the basis as columns of an ambient x dim matrix.
  SparseMatrix representatives() const { return SparseMatrix::from_columns(ambient().dim(), basis()); }

  /// V (x) Q, presented by id_V (x) presentation. The canonical basis is
  /// v_i (x) q_c in V-major order, so the space equals tensor(V, Q.space()).
  friend Subquotient tensor_left(const Space& v, const Subquotient& q) {
    const LinearMap pres = tensor_map(identity(v), q.presentation());
    const exactla::Echelon& e = q.echelon();
    const std::size_t block = e.cols();
    std::vector<std::size_t> pivots;
    std::vector<SparseVector> rows;
    for (std::size_t i = 0; i < v.dim(); ++i) {
      for (std::size_t r = 0; r < e.rank(); ++r) {
        pivots.push_back(i * block + e.pivots()[r]);
        std::vector<std::pair<std::size_t, Scalar>> shifted;
        for (const auto& x : e.rows()[r].entries()) shifted.emplace_back(i * block + x.index, x.value);
        rows.push_back(SparseVector::from_pairs(v.dim() * block, std::move(shifted)));
      }
    }
    exactla::Echelon big(v.dim() * block, std::move(pivots), std::move(rows));
    return Subquotient(q.kind(), pres, std::move(big), "", tensor(v, q.space()));
  }

  /// The whole space S, as the cokernel of the zero map from the zero space.
  static Subquotient whole(const Space& s) {
    const Space zero = Space::labeled(Space::Kind::Graded, "0", {});
    return Subquotient(Kind::Cokernel, zero_map(zero, s), exactla::Echelon(s.dim(), {}, {}), "", s);
  }

 private:
  struct Data {
    Kind kind;
    LinearMap presentation;
    exactla::Echelon echelon;
    Space space;
    std::vector<SparseVector> basis;
    std::vector<std::ptrdiff_t> free_pos;
    std::optional<LinearMap> projection;
  };

  static std::string content_tag(Kind kind, const LinearMap& f, const std::string& name) {
    std::ostringstream os;
    os << (kind == Kind::Kernel ? "ker" : "coker") << f.domain().tag() << "->" << f.codomain().tag() << "|"
       << std::hex << f.matrix().fingerprint();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : os.str()) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    std::ostringstream tag;
    tag << name << "#" << std::hex << (h >> 40U);
    return tag.str();
  }

  Subquotient(Kind kind, const LinearMap& f, exactla::Echelon e, const std::string& name,
              std::optional<Space> space = std::nullopt)
  {
    auto data = std::make_shared<Data>(Data{kind, f, std::move(e), Space::ground(), {}, {}, std::nullopt});
    Data& d = *data;
    const Space& amb = kind == Kind::Kernel ? f.domain() : f.codomain();
    const std::size_t n = amb.dim();
    d.free_pos.assign(n, -1);
    std::vector<std::string> labels;
    std::size_t count = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (d.echelon.is_pivot(c)) continue;
      d.free_pos[c] = static_cast<std::ptrdiff_t>(count++);
      if (!space) labels.push_back((kind == Kind::Kernel ? "ker@" : "[") + amb.label(c) + (kind == Kind::Kernel ? "" : "]"));
    }
    d.space = space ? *space : Space::labeled(Space::Kind::Subquotient, content_tag(kind, f, name), std::move(labels));
    if (d.space.dim() != count) throw std::logic_error("subquotient dimension mismatch");
    if (kind == Kind::Kernel) {
      d.basis = d.echelon.kernel_basis();
    } else {
      for (std::size_t c = 0; c < n; ++c) {
        if (!d.echelon.is_pivot(c)) d.basis.push_back(SparseVector::unit(n, c));
      }
      std::vector<std::tuple<std::size_t, std::size_t, Scalar>> t;
      for (std::size_t c = 0; c < n; ++c) {
        if (d.free_pos[c] >= 0) t.emplace_back(static_cast<std::size_t>(d.free_pos[c]), c, Scalar(1));
      }
      for (std::size_t r = 0; r < d.echelon.rank(); ++r) {
        const std::size_t q = d.echelon.pivots()[r];
        for (const auto& x : d.echelon.rows()[r].entries()) {
          if (x.index != q) t.emplace_back(static_cast<std::size_t>(d.free_pos[x.index]), q, -x.value);
        }
      }
      d.projection = LinearMap(amb, d.space, SparseMatrix::from_triplets(count, n, t));
    }
    d_ = std::move(data);
  }

  std::shared_ptr<const Data> d_;
};

inline Subquotient kernel_sq(const LinearMap& f, const std::string& name = "ker") {
  return Subquotient::kernel_of(f, name);
}

inline Subquotient cokernel_sq(const LinearMap& f, const std::string& name = "coker") {
  return Subquotient::cokernel_of(f, name);
}

inline Subquotient whole(const Space& s) { return Subquotient::whole(s); }

/// The map dom.space() -> cod.space() induced by f: dom.ambient() -> cod.ambient().
/// Throws NotWellDefined when f does not carry dom's subspace into cod's, or
/// does not carry dom's relations to zero.
inline LinearMap induce(const LinearMap& f, const Subquotient& dom, const Subquotient& cod) {
  if (f.domain() != dom.ambient() || f.codomain() != cod.ambient()) {
    throw DomainMismatch("induce: " + f.domain().tag() + " -> " + f.codomain().tag() + " vs " +
                         dom.ambient().tag() + " -> " + cod.ambient().tag());
  }
  auto first_nonzero_col = [](const SparseMatrix& m) -> std::ptrdiff_t {
    const SparseMatrix t = m.transpose();
    for (std::size_t j = 0; j < t.rows(); ++j) {
      if (!t.row(j).empty()) return static_cast<std::ptrdiff_t>(j);
    }
    return -1;
  };
  // Relations of dom must vanish in cod.
  if (dom.kind() == Subquotient::Kind::Cokernel) {
    const SparseMatrix& g = dom.presentation().matrix();
    SparseMatrix img = f.matrix().multiply(g);
    if (cod.kind() == Subquotient::Kind::Cokernel) img = cod.projection().matrix().multiply(img);
    if (auto j = first_nonzero_col(img); j >= 0) {
      throw NotWellDefined("induce: a relation of the domain does not map to zero", g.column(static_cast<std::size_t>(j)));
    }
  }
  const SparseMatrix w = f.matrix().multiply(dom.representatives());
  if (cod.kind() == Subquotient::Kind::Kernel) {
    const SparseMatrix check = cod.presentation().matrix().multiply(w);
    if (auto j = first_nonzero_col(check); j >= 0) {
      throw NotWellDefined("induce: image leaves the target kernel", dom.basis()[static_cast<std::size_t>(j)]);
    }
    // Coordinates in a reduced kernel basis are the free-column entries.
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> t;
    std::size_t k = 0;
    for (std::size_t c = 0; c < w.rows(); ++c) {
      if (cod.echelon().is_pivot(c)) continue;
      for (const auto& e : w.row(c)) t.emplace_back(k, e.index, e.value);
      ++k;
    }
    return {dom.space(), cod.space(), SparseMatrix::from_triplets(cod.dim(), dom.dim(), t)};
  }
  return {dom.space(), cod.space(), cod.projection().matrix().multiply(w)};
}

}  // namespace p3x::spaces

#endif  // P3X_SPACES_SUBQUOTIENT_HPP
