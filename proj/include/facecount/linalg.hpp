#pragma once

/// Exact integer linear algebra on homogeneous vertex coordinates.
///
/// Points with rational coordinates are scaled by the lcm of all
/// denominators, which is a homothety and leaves every affine dependency
/// unchanged. Elimination is fraction-free (Bareiss), so every intermediate
/// value is a minor of the input matrix. When the Hadamard bound of the
/// homogeneous rows proves all minors fit below 2^60, the int64 path with
/// __int128 products is used; otherwise the cpp_int path. Both are exact.

#include "facecount/numeric.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace facecount {

using Wide = __int128;

namespace linalg {

inline Integer to_integer(std::int64_t x) { return Integer(x); }
inline Integer to_integer(const Integer& x) { return x; }

template <typename T>
bool is_zero(const T& x) {
  return x == 0;
}

/// Fraction-free elimination; returns the rank of `m` (destroyed).
template <typename T, typename W>
int bareiss_rank(std::vector<std::vector<T>>& m) {
  if (m.empty()) return 0;
  const auto rows = m.size();
  const auto cols = m.front().size();
  T prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        W num = W(m[i][j]) * W(m[r][c]) - W(m[i][c]) * W(m[r][j]);
        m[i][j] = static_cast<T>(num / W(prev));
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

/// Determinant of a square matrix (destroyed).
template <typename T, typename W>
T bareiss_det(std::vector<std::vector<T>>& m) {
  const auto n = m.size();
  if (n == 0) return 1;
  T prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(m[p][k])) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        W num = W(m[i][j]) * W(m[k][k]) - W(m[i][k]) * W(m[k][j]);
        m[i][j] = static_cast<T>(num / W(prev));
      }
    }
    prev = m[k][k];
  }
  return sign < 0 ? T(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

/// Integer vector c (length cols) with rows . c = 0 for a rows x (rows+1)
/// matrix, via signed maximal minors. Zero iff the rows are dependent.
template <typename T, typename W>
std::vector<T> cofactor_kernel(const std::vector<std::vector<T>>& rows) {
  const auto n = rows.size();
  std::vector<T> out(n + 1);
  std::vector<std::vector<T>> minor(n, std::vector<T>(n));
  for (std::size_t skip = 0; skip <= n; ++skip) {
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t jj = 0;
      for (std::size_t j = 0; j <= n; ++j) {
        if (j != skip) minor[i][jj++] = rows[i][j];
      }
    }
    T det = bareiss_det<T, W>(minor);
    out[skip] = (skip % 2 == 0) ? det : T(-det);
  }
  return out;
}

}  // namespace linalg

/// Homogeneous integer coordinates [L*x, 1] of a point set.
class IntegerFrame {
public:
  IntegerFrame() = default;

  explicit IntegerFrame(const std::vector<std::vector<Rational>>& points, std::size_t dim)
      : dim_(dim) {
    Integer scale = 1;
    for (const auto& p : points) {
      for (const auto& x : p) scale = lcm(scale, denominator_of(x));
    }
    scale_ = scale;
    big_.reserve(points.size());
    Integer max_norm2 = 1;
    Integer max_abs = 0;
    for (const auto& p : points) {
      std::vector<Integer> row;
      row.reserve(dim + 1);
      Integer norm2 = 1;
      for (const auto& x : p) {
        Integer v = numerator_of(x) * (scale / denominator_of(x));
        norm2 += v * v;
        if (abs(v) > max_abs) max_abs = abs(v);
        row.push_back(std::move(v));
      }
      row.push_back(1);
      if (norm2 > max_norm2) max_norm2 = norm2;
      big_.push_back(std::move(row));
    }
    // Hadamard: every minor of homogeneous rows is at most R^(dim+1), R^2 = max row norm^2.
    Integer bound2 = pow(max_norm2, static_cast<unsigned>(dim + 1));
    Integer limit = Integer(1) << 120;
    fast_ = bound2 < limit && max_abs < (Integer(1) << 30);
    if (fast_) {
      small_.reserve(big_.size());
      for (const auto& row : big_) {
        std::vector<std::int64_t> r;
        r.reserve(row.size());
        for (const auto& v : row) r.push_back(static_cast<std::int64_t>(v));
        small_.push_back(std::move(r));
      }
    }
  }

  std::size_t size() const { return big_.size(); }
  std::size_t dim() const { return dim_; }
  bool fast() const { return fast_; }
  const Integer& scale() const { return scale_; }
  const std::vector<std::vector<Integer>>& rows() const { return big_; }
  const std::vector<std::vector<std::int64_t>>& small_rows() const { return small_; }

  /// Dimension of the affine hull of the selected points; -1 for the empty set.
  int affine_rank(std::span<const std::size_t> members) const {
    if (members.empty()) return -1;
    if (fast_) return rank_of(small_, members, std::int64_t{}) - 1;
    return rank_of(big_, members, Integer{}) - 1;
  }

private:
  template <typename T>
  static int rank_of(const std::vector<std::vector<T>>& rows, std::span<const std::size_t> members,
                     T) {
    std::vector<std::vector<T>> m;
    m.reserve(members.size());
    for (auto i : members) m.push_back(rows[i]);
    if constexpr (std::is_same_v<T, Integer>) {
      return linalg::bareiss_rank<Integer, Integer>(m);
    } else {
      return linalg::bareiss_rank<std::int64_t, Wide>(m);
    }
  }

  std::size_t dim_ = 0;
  Integer scale_ = 1;
  bool fast_ = false;
  std::vector<std::vector<Integer>> big_;
  std::vector<std::vector<std::int64_t>> small_;
};

}  // namespace facecount
