#ifndef P3X_EXACTLA_SPARSE_MATRIX_HPP
#define P3X_EXACTLA_SPARSE_MATRIX_HPP

#include <p3x/exactla/scalar.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace p3x::exactla {

struct Entry {
  std::size_t index;
  Scalar value;

  friend bool operator==(const Entry& a, const Entry& b) {
    return a.index == b.index && a.value == b.value;
  }
};

/// Sparse vector: entries sorted by index, no stored zeros.
class SparseVector {
 public:
  SparseVector() = default;
  explicit SparseVector(std::size_t dim) : dim_(dim) {}

  /// Builds from arbitrary (index, value) pairs; duplicates are summed.
  static SparseVector from_pairs(std::size_t dim,
                                 std::vector<std::pair<std::size_t, Scalar>> pairs) {
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector v(dim);
    for (auto& [i, x] : pairs) {
      if (i >= dim) throw std::out_of_range("SparseVector index out of range");
      if (!v.entries_.empty() && v.entries_.back().index == i) {
        v.entries_.back().value += x;
      } else {
        v.entries_.push_back({i, std::move(x)});
      }
    }
    std::erase_if(v.entries_, [](const Entry& e) { return e.value == 0; });
    return v;
  }

  static SparseVector from_dense(const std::vector<Scalar>& dense) {
    SparseVector v(dense.size());
    for (std::size_t i = 0; i < dense.size(); ++i) {
      if (dense[i] != 0) v.entries_.push_back({i, dense[i]});
    }
    return v;
  }

  static SparseVector unit(std::size_t dim, std::size_t i) {
    if (i >= dim) throw std::out_of_range("unit vector index out of range");
    SparseVector v(dim);
    v.entries_.push_back({i, Scalar(1)});
    return v;
  }

  std::size_t dim() const { return dim_; }
  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  Scalar get(std::size_t i) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), i,
        [](const Entry& e, std::size_t k) { return e.index < k; });
    return (it != entries_.end() && it->index == i) ? it->value : Scalar(0);
  }

  std::vector<Scalar> to_dense() const {
    std::vector<Scalar> out(dim_);
    for (const auto& e : entries_) out[e.index] = e.value;
    return out;
  }

  friend bool operator==(const SparseVector& a, const SparseVector& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
};

/// Row-major sparse rational matrix.
class SparseMatrix {
 public:
  using Row = std::vector<Entry>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows) {}

  /// Duplicate (row, col) keys are summed; resulting zeros are dropped.
  static SparseMatrix from_triplets(
      std::size_t rows, std::size_t cols,
      const std::vector<std::tuple<std::size_t, std::size_t, Scalar>>& triplets) {
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> buckets(rows);
    for (const auto& [i, j, x] : triplets) {
      if (i >= rows || j >= cols) {
        throw std::out_of_range("SparseMatrix triplet out of range");
      }
      buckets[i].emplace_back(j, x);
    }
    SparseMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      m.data_[i] = SparseVector::from_pairs(cols, std::move(buckets[i])).entries();
    }
    return m;
  }

  static SparseMatrix from_dense(const std::vector<std::vector<Scalar>>& dense,
                                 std::size_t cols_if_empty = 0) {
    const std::size_t cols = dense.empty() ? cols_if_empty : dense.front().size();
    SparseMatrix m(dense.size(), cols);
    for (std::size_t i = 0; i < dense.size(); ++i) {
      if (dense[i].size() != cols) throw std::invalid_argument("ragged dense matrix");
      m.data_[i] = SparseVector::from_dense(dense[i]).entries();
    }
    return m;
  }

  static SparseMatrix identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, Scalar(1)});
    return m;
  }

  /// Matrix whose columns are the given vectors.
  static SparseMatrix from_columns(std::size_t rows,
                                   const std::vector<SparseVector>& columns) {
    SparseMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].dim() != rows) throw std::invalid_argument("column dim mismatch");
      for (const auto& e : columns[j].entries()) m.data_[e.index].push_back({j, e.value});
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Row& row(std::size_t i) const { return data_.at(i); }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
  }

  bool is_zero() const { return nnz() == 0; }

  Scalar get(std::size_t i, std::size_t j) const {
    const Row& r = data_.at(i);
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const Entry& e, std::size_t k) { return e.index < k; });
    return (it != r.end() && it->index == j) ? it->value : Scalar(0);
  }

  SparseVector row_vector(std::size_t i) const {
    return SparseVector::from_pairs(cols_, [&] {
      std::vector<std::pair<std::size_t, Scalar>> p;
      for (const auto& e : data_.at(i)) p.emplace_back(e.index, e.value);
      return p;
    }());
  }

  SparseVector column(std::size_t j) const {
    std::vector<std::pair<std::size_t, Scalar>> p;
    for (std::size_t i = 0; i < rows_; ++i) {
      Scalar x = get(i, j);
      if (x != 0) p.emplace_back(i, std::move(x));
    }
    return SparseVector::from_pairs(rows_, std::move(p));
  }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (const auto& e : data_[i]) t.data_[e.index].push_back({i, e.value});
    }
    return t;
  }

  SparseVector apply(const SparseVector& v) const {
    if (v.dim() != cols_) throw std::invalid_argument("apply: dimension mismatch");
    std::vector<std::pair<std::size_t, Scalar>> out;
    for (std::size_t i = 0; i < rows_; ++i) {
      Scalar acc = 0;
      const Row& r = data_[i];
      auto a = r.begin();
      auto b = v.entries().begin();
      while (a != r.end() && b != v.entries().end()) {
        if (a->index < b->index) {
          ++a;
        } else if (b->index < a->index) {
          ++b;
        } else {
          acc += a->value * b->value;
          ++a;
          ++b;
        }
      }
      if (acc != 0) out.emplace_back(i, std::move(acc));
    }
    return SparseVector::from_pairs(rows_, std::move(out));
  }

  /// this * rhs
  SparseMatrix multiply(const SparseMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("multiply: dimension mismatch");
    SparseMatrix out(rows_, rhs.cols_);
    std::vector<Scalar> acc(rhs.cols_);
    std::vector<char> touched(rhs.cols_, 0);
    std::vector<std::size_t> touched_list;
    for (std::size_t i = 0; i < rows_; ++i) {
      touched_list.clear();
      for (const auto& e : data_[i]) {
        for (const auto& f : rhs.data_[e.index]) {
          if (!touched[f.index]) {
            touched[f.index] = 1;
            touched_list.push_back(f.index);
            acc[f.index] = e.value * f.value;
          } else {
            acc[f.index] += e.value * f.value;
          }
        }
      }
      std::sort(touched_list.begin(), touched_list.end());
      Row& r = out.data_[i];
      for (std::size_t j : touched_list) {
        touched[j] = 0;
        if (acc[j] != 0) r.push_back({j, acc[j]});
      }
    }
    return out;
  }

  /// Kronecker product; index (i1, i2) -> i1 * rhs.rows + i2.
  SparseMatrix kron(const SparseMatrix& rhs) const {
    SparseMatrix out(rows_ * rhs.rows_, cols_ * rhs.cols_);
    for (std::size_t i1 = 0; i1 < rows_; ++i1) {
      for (std::size_t i2 = 0; i2 < rhs.rows_; ++i2) {
        Row& r = out.data_[i1 * rhs.rows_ + i2];
        for (const auto& a : data_[i1]) {
          for (const auto& b : rhs.data_[i2]) {
            r.push_back({a.index * rhs.cols_ + b.index, a.value * b.value});
          }
        }
      }
    }
    return out;
  }

  SparseMatrix scaled(const Scalar& c) const {
    if (c == 0) return SparseMatrix(rows_, cols_);
    SparseMatrix out = *this;
    for (auto& r : out.data_) {
      for (auto& e : r) e.value *= c;
    }
    return out;
  }

  SparseMatrix plus(const SparseMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
      throw std::invalid_argument("plus: dimension mismatch");
    }
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> t;
    for (const SparseMatrix* m : {this, &rhs}) {
      for (std::size_t i = 0; i < rows_; ++i) {
        for (const auto& e : m->data_[i]) t.emplace_back(i, e.index, e.value);
      }
    }
    return from_triplets(rows_, cols_, t);
  }

  /// Rows of `this` followed by rows of `below`.
  SparseMatrix vstack(const SparseMatrix& below) const {
    if (cols_ != below.cols_) throw std::invalid_argument("vstack: column mismatch");
    SparseMatrix out(rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + rows_);
    return out;
  }

  /// Canonical text form, used for determinism checks and content hashes.
  std::string serialize() const {
    std::ostringstream os;
    os << rows_ << 'x' << cols_;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (const auto& e : data_[i]) os << ';' << i << ',' << e.index << ',' << e.value.get_str();
    }
    return os.str();
  }

  std::uint64_t fingerprint() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : serialize()) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    return h;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

}  // namespace p3x::exactla

#endif  // P3X_EXACTLA_SPARSE_MATRIX_HPP
