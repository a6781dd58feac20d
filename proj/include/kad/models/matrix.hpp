#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <stdexcept>

#include "kad/error.hpp"

namespace kad {

/// Dense matrix whose entries are elements of some semiring. Arithmetic is
/// always done through a base model (anything with add, mul, zero, one and
/// star), never through Eigen's own operators.
template <typename V>
using SemiringMatrix = Eigen::Matrix<V, Eigen::Dynamic, Eigen::Dynamic>;

template <typename B>
SemiringMatrix<typename B::value_type> mat_zero(const B& base, Eigen::Index rows,
                                                Eigen::Index cols) {
  SemiringMatrix<typename B::value_type> m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = base.zero();
  }
  return m;
}

template <typename B>
SemiringMatrix<typename B::value_type> mat_identity(const B& base, Eigen::Index n) {
  auto m = mat_zero(base, n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = base.one();
  return m;
}

template <typename B, typename V = typename B::value_type>
SemiringMatrix<V> mat_add(const B& base, const SemiringMatrix<V>& x, const SemiringMatrix<V>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw std::invalid_argument("matrix sum needs equal shapes");
  }
  SemiringMatrix<V> out(x.rows(), x.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) out(i, j) = base.add(x(i, j), y(i, j));
  }
  return out;
}

template <typename B, typename V = typename B::value_type>
SemiringMatrix<V> mat_mul(const B& base, const SemiringMatrix<V>& x, const SemiringMatrix<V>& y) {
  if (x.cols() != y.rows()) throw std::invalid_argument("matrix product needs matching inner size");
  SemiringMatrix<V> out = mat_zero(base, x.rows(), y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < y.cols(); ++j) {
      V acc = base.zero();
      for (Eigen::Index k = 0; k < x.cols(); ++k) acc = base.add(acc, base.mul(x(i, k), y(k, j)));
      out(i, j) = acc;
    }
  }
  return out;
}

/// Componentwise natural order.
template <typename B, typename V = typename B::value_type>
bool mat_leq(const B& base, const SemiringMatrix<V>& x, const SemiringMatrix<V>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      if (!base.leq(x(i, j), y(i, j))) return false;
    }
  }
  return true;
}

template <typename V>
bool mat_equal(const SemiringMatrix<V>& x, const SemiringMatrix<V>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      if (!(x(i, j) == y(i, j))) return false;
    }
  }
  return true;
}

/// Star of a square matrix by the block formula
///   [a b; c d]* = [f*, f* b d*; d* c f*, d* + d* c f* b d*],  f = a + b d* c,
/// splitting after row/column `split` (clamped to [1, n-1]); sub-blocks split
/// after their first row. Throws std::invalid_argument for non-square input
/// and missing_capability when the base has no star.
template <typename B, typename V = typename B::value_type>
SemiringMatrix<V> matrix_star(const B& base, const SemiringMatrix<V>& m, Eigen::Index split = 1) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix star needs a square matrix");
  if (!base.has_star()) throw missing_capability("matrix star needs a star on the base");
  const Eigen::Index n = m.rows();
  if (n == 0) return m;
  if (n == 1) {
    SemiringMatrix<V> out(1, 1);
    out(0, 0) = base.star(m(0, 0));
    return out;
  }
  const Eigen::Index k = std::clamp<Eigen::Index>(split, 1, n - 1);
  const Eigen::Index r = n - k;
  const SemiringMatrix<V> a = m.topLeftCorner(k, k);
  const SemiringMatrix<V> b = m.topRightCorner(k, r);
  const SemiringMatrix<V> c = m.bottomLeftCorner(r, k);
  const SemiringMatrix<V> d = m.bottomRightCorner(r, r);

  const auto ds = matrix_star(base, d);
  const auto f = mat_add(base, a, mat_mul(base, mat_mul(base, b, ds), c));
  const auto fs = matrix_star(base, f);
  const auto fs_b_ds = mat_mul(base, mat_mul(base, fs, b), ds);
  const auto ds_c_fs = mat_mul(base, mat_mul(base, ds, c), fs);

  SemiringMatrix<V> out(n, n);
  out.topLeftCorner(k, k) = fs;
  out.topRightCorner(k, r) = fs_b_ds;
  out.bottomLeftCorner(r, k) = ds_c_fs;
  out.bottomRightCorner(r, r) = mat_add(base, ds, mat_mul(base, ds_c_fs, mat_mul(base, b, ds)));
  return out;
}

}  // namespace kad
