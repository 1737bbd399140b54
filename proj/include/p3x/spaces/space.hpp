#ifndef P3X_SPACES_SPACE_HPP
#define P3X_SPACES_SPACE_HPP

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace p3x::spaces {

/// Finite-dimensional space with an ordered, labeled basis. Values are
/// immutable and cheap to copy. Tensor products are flattened and drop
/// one-dimensional ground factors; dual commutes with tensor.
class Space {
 public:
  enum class Kind { Ground, Graded, Dual, Tensor, Wedge2, Subquotient };

  /// The one-dimensional ground field.
  static Space ground() {
    static const Space g(std::make_shared<Node>(Node{Kind::Ground, 1, "k", {}, {"1"}}));
    return g;
  }

  /// Space with explicit basis labels (graded pieces, subquotients).
  static Space labeled(Kind kind, std::string tag, std::vector<std::string> labels) {
    const std::size_t n = labels.size();
    return Space(std::make_shared<Node>(Node{kind, n, std::move(tag), {}, std::move(labels)}));
  }

  Kind kind() const { return node_->kind; }
  std::size_t dim() const { return node_->dim; }
  const std::string& tag() const { return node_->tag; }
  /// Dual: [S]; Tensor: factors; Wedge2: [S].
  const std::vector<Space>& children() const { return node_->children; }

  std::string label(std::size_t i) const {
    if (i >= dim()) throw std::out_of_range("basis index out of range in " + tag());
    switch (kind()) {
      case Kind::Dual:
        return "(" + children()[0].label(i) + ")*";
      case Kind::Tensor: {
        std::string s;
        std::size_t rest = i;
        std::size_t stride = dim();
        for (const auto& f : children()) {
          stride /= f.dim();
          s += (s.empty() ? "" : "(x)") + f.label(rest / stride);
          rest %= stride;
        }
        return s;
      }
      case Kind::Wedge2: {
        const auto [a, b] = wedge_pair(children()[0].dim(), i);
        return children()[0].label(a) + "^" + children()[0].label(b);
      }
      default:
        return node_->labels[i];
    }
  }

  std::vector<std::string> basis() const {
    std::vector<std::string> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(label(i));
    return out;
  }

  /// Index of the pair (a, b), a < b, in the wedge basis of an n-dim space.
  static std::size_t wedge_index(std::size_t n, std::size_t a, std::size_t b) {
    if (!(a < b && b < n)) throw std::out_of_range("wedge_index requires a < b < n");
    return a * n - a * (a + 1) / 2 + (b - a - 1);
  }

  static std::pair<std::size_t, std::size_t> wedge_pair(std::size_t n, std::size_t i) {
    for (std::size_t a = 0; a + 1 < n; ++a) {
      const std::size_t row = n - a - 1;
      if (i < row) return {a, a + 1 + i};
      i -= row;
    }
    throw std::out_of_range("wedge index out of range");
  }

  friend bool operator==(const Space& a, const Space& b) {
    return a.node_ == b.node_ || (a.dim() == b.dim() && a.tag() == b.tag());
  }
  friend bool operator!=(const Space& a, const Space& b) { return !(a == b); }

  friend Space dual(const Space& s);
  friend Space tensor(const Space& a, const Space& b);
  friend Space tensor(const std::vector<Space>& factors);
  friend Space wedge2(const Space& s);

 private:
  struct Node {
    Kind kind;
    std::size_t dim;
    std::string tag;
    std::vector<Space> children;
    std::vector<std::string> labels;
  };
  explicit Space(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

inline Space tensor(const std::vector<Space>& factors) {
  std::vector<Space> flat;
  for (const auto& f : factors) {
    if (f.kind() == Space::Kind::Tensor) {
      flat.insert(flat.end(), f.children().begin(), f.children().end());
    } else if (f.kind() != Space::Kind::Ground) {
      flat.push_back(f);
    }
  }
  if (flat.empty()) return Space::ground();
  if (flat.size() == 1) return flat.front();
  std::size_t dim = 1;
  std::string tag;
  for (const auto& f : flat) {
    dim *= f.dim();
    tag += (tag.empty() ? "" : "(x)") + f.tag();
  }
  return Space(std::make_shared<Space::Node>(Space::Node{Space::Kind::Tensor, dim, tag, flat, {}}));
}

inline Space tensor(const Space& a, const Space& b) { return tensor(std::vector<Space>{a, b}); }

inline Space dual(const Space& s) {
  switch (s.kind()) {
    case Space::Kind::Ground:
      return s;
    case Space::Kind::Dual:
      return s.children()[0];
    case Space::Kind::Tensor: {
      std::vector<Space> ds;
      for (const auto& f : s.children()) ds.push_back(dual(f));
      return tensor(ds);
    }
    default: {
      const std::string tag = s.tag().find("(x)") == std::string::npos ? s.tag() + "*" : "(" + s.tag() + ")*";
      return Space(std::make_shared<Space::Node>(Space::Node{Space::Kind::Dual, s.dim(), tag, {s}, {}}));
    }
  }
}

inline Space wedge2(const Space& s) {
  const std::size_t n = s.dim();
  return Space(std::make_shared<Space::Node>(
      Space::Node{Space::Kind::Wedge2, n * (n - (n > 0 ? 1 : 0)) / 2, "L2(" + s.tag() + ")", {s}, {}}));
}

}  // namespace p3x::spaces

#endif  // P3X_SPACES_SPACE_HPP
