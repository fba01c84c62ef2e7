#pragma once

#include "rsl/laurent.hpp"
#include "rsl/rational.hpp"

#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rsl {

inline std::size_t shape_size(const std::vector<int>& shape) {
  std::size_t n = 1;
  for (int s : shape) n *= static_cast<std::size_t>(s);
  return n;
}

// Dense row-major multi-index array.
template <class S>
struct Tensor {
  std::vector<int> shape;
  std::vector<S> data;

  Tensor() = default;
  explicit Tensor(std::vector<int> sh) : shape(std::move(sh)), data(shape_size(shape)) {}
  Tensor(std::vector<int> sh, std::vector<S> d) : shape(std::move(sh)), data(std::move(d)) {
    if (data.size() != shape_size(shape)) throw std::invalid_argument("tensor data/shape mismatch");
  }

  std::size_t size() const { return data.size(); }
  int rank() const { return static_cast<int>(shape.size()); }
  S& operator[](std::size_t i) { return data[i]; }
  const S& operator[](std::size_t i) const { return data[i]; }

  // matrix access for rank-2 tensors
  int rows() const { return shape.at(0); }
  int cols() const { return shape.at(1); }
  S& at(int r, int c) { return data[static_cast<std::size_t>(r) * shape[1] + c]; }
  const S& at(int r, int c) const { return data[static_cast<std::size_t>(r) * shape[1] + c]; }

  bool operator==(const Tensor& o) const { return shape == o.shape && data == o.data; }

  bool is_zero() const {
    for (auto& x : data)
      if (!x.is_zero()) return false;
    return true;
  }

  // Canonical text: shape line then one entry per line.
  std::string canonical() const {
    std::ostringstream os;
    os << "shape";
    for (int s : shape) os << ' ' << s;
    os << '\n';
    for (auto& x : data) os << x.str() << '\n';
    return os.str();
  }
};

template <class S>
using Matrix = Tensor<S>;

template <class S>
Matrix<S> zeros(int r, int c) {
  return Matrix<S>({r, c});
}

template <class S>
Matrix<S> identity(int n) {
  Matrix<S> m({n, n});
  for (int i = 0; i < n; ++i) m.at(i, i) = S(1);
  return m;
}

template <class S>
Matrix<S> matmul(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul shape mismatch");
  Matrix<S> c({a.rows(), b.cols()});
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const S& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const S& y = b.at(k, j);
        if (!y.is_zero()) c.at(i, j).add_mul(x, y);
      }
    }
  return c;
}

template <class S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> c({a.rows() * b.rows(), a.cols() * b.cols()});
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const S& x = a.at(i, j);
      if (x.is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) {
          const S& y = b.at(k, l);
          if (!y.is_zero()) c.at(i * b.rows() + k, j * b.cols() + l) = x * y;
        }
    }
  return c;
}

template <class S>
Matrix<S> transpose(const Matrix<S>& a) {
  Matrix<S> t({a.cols(), a.rows()});
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
  return t;
}

template <class S>
Matrix<S> scale(const Matrix<S>& a, const S& s) {
  Matrix<S> r = a;
  for (auto& x : r.data) x = x * s;
  return r;
}

template <class S>
Matrix<S> add(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.shape != b.shape) throw std::invalid_argument("add shape mismatch");
  Matrix<S> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r.data[i] += b.data[i];
  return r;
}

// Permutation of the two tensor factors: V (dim p) (x) W (dim q) -> W (x) V.
template <class S>
Matrix<S> flip(int p, int q) {
  Matrix<S> f({p * q, p * q});
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) f.at(j * p + i, i * q + j) = S(1);
  return f;
}

// Column-compressed sparse matrix used by the sweep kernels.
template <class S>
struct Sparse {
  int rows = 0, cols = 0;
  std::vector<std::vector<std::pair<int, S>>> col;

  Sparse() = default;
  explicit Sparse(const Matrix<S>& m) : rows(m.rows()), cols(m.cols()), col(m.cols()) {
    for (int j = 0; j < cols; ++j)
      for (int i = 0; i < rows; ++i)
        if (!m.at(i, j).is_zero()) col[j].emplace_back(i, m.at(i, j));
  }
  Sparse transposed() const {
    Sparse t;
    t.rows = cols;
    t.cols = rows;
    t.col.assign(rows, {});
    for (int j = 0; j < cols; ++j)
      for (auto& [i, v] : col[j]) t.col[i].emplace_back(j, v);
    return t;
  }
};

// Apply a local operator to a contiguous block of legs.
// state has dims `dims`; legs [pos, pos+nin) are replaced by legs with dims `out_dims`.
// op maps the flattened block (size prod in dims) to flattened output block.
template <class S>
std::vector<S> apply_block(const std::vector<S>& state, const std::vector<int>& dims, int pos, int nin,
                           const std::vector<int>& out_dims, const Sparse<S>& op) {
  std::size_t left = 1, mid = 1, right = 1, mid_out = 1;
  for (int i = 0; i < pos; ++i) left *= dims[i];
  for (int i = pos; i < pos + nin; ++i) mid *= dims[i];
  for (std::size_t i = pos + nin; i < dims.size(); ++i) right *= dims[i];
  for (int d : out_dims) mid_out *= d;
  if ((std::size_t)op.cols != mid || (std::size_t)op.rows != mid_out)
    throw std::logic_error("apply_block: operator shape mismatch");
  std::vector<S> out(left * mid_out * right);
  for (std::size_t l = 0; l < left; ++l)
    for (std::size_t i = 0; i < mid; ++i) {
      auto& c = op.col[i];
      if (c.empty()) continue;
      const S* src = &state[(l * mid + i) * right];
      for (std::size_t r = 0; r < right; ++r) {
        const S& v = src[r];
        if (v.is_zero()) continue;
        for (auto& [o, coef] : c) out[(l * mid_out + o) * right + r].add_mul(coef, v);
      }
    }
  return out;
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

template <class S>
std::string digest(const Tensor<S>& t) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << fnv1a(t.canonical());
  return os.str();
}

} // namespace rsl
