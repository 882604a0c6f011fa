#ifndef GZWB_LINEAR_ALGEBRA_HPP
#define GZWB_LINEAR_ALGEBRA_HPP

#include "rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gzwb {

/// Dense row-major matrix of exact rationals.
class RationalMatrix
{
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n)
  {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const
  {
    return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  RationalVector column(std::size_t c) const
  {
    RationalVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  /// Row-major flattening, used as coordinates of an operator.
  const RationalVector& flat() const { return data_; }

  static RationalMatrix from_flat(std::size_t rows, std::size_t cols, RationalVector data)
  {
    if (data.size() != rows * cols) throw std::invalid_argument("flat data has wrong length");
    RationalMatrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.data_ = std::move(data);
    return m;
  }

  RationalMatrix transpose() const
  {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Rational trace() const
  {
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  bool is_zero() const { return gzwb::is_zero(data_); }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
  {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
    RationalMatrix c(a.rows_, b.cols_);
    Rational tmp;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& x = a(i, k);
        if (sgn(x) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Rational& y = b(k, j);
          if (sgn(y) == 0) continue;
          mpq_mul(tmp.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
          c(i, j) += tmp;
        }
      }
    }
    return c;
  }

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b)
  {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b)
  {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend RationalMatrix operator*(const Rational& s, RationalMatrix a)
  {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b)
  {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  RationalVector data_;
};

/// In-place reduced row echelon form. Returns pivot columns.
inline std::vector<std::size_t> rref_in_place(RationalMatrix& m)
{
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  Rational tmp;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (sgn(m(r, j)) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), m(r, j).get_mpq_t());
        m(i, j) -= tmp;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(RationalMatrix m) { return rref_in_place(m).size(); }

/// Basis of {x : m x = 0}.
inline std::vector<RationalVector> nullspace(RationalMatrix m)
{
  auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Inverse of a square matrix, or nullopt if singular.
inline std::optional<RationalMatrix> inverse(const RationalMatrix& a)
{
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref_in_place(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// Decides positive semidefiniteness of a symmetric rational matrix by
/// symmetric elimination with diagonal pivoting. Exact; no tolerance.
inline bool is_positive_semidefinite(RationalMatrix m)
{
  if (m.rows() != m.cols()) throw std::invalid_argument("PSD test needs a square matrix");
  if (!(m == m.transpose())) throw std::invalid_argument("PSD test needs a symmetric matrix");
  const std::size_t n = m.rows();
  std::vector<bool> alive(n, true);
  Rational tmp;
  for (std::size_t step = 0; step < n; ++step) {
    // largest positive diagonal pivot; any negative diagonal decides at once
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      int s = sgn(m(i, i));
      if (s < 0) return false;
      if (s > 0 && (piv == n || m(i, i) > m(piv, piv))) piv = i;
    }
    if (piv == n) {
      // all remaining diagonal entries vanish: PSD iff the remaining block is zero
      for (std::size_t i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (alive[j] && sgn(m(i, j)) != 0) return false;
        }
      }
      return true;
    }
    alive[piv] = false;
    const Rational d = m(piv, piv);
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i] || sgn(m(i, piv)) == 0) continue;
      Rational f = m(i, piv) / d;
      for (std::size_t j = 0; j < n; ++j) {
        if (!alive[j] || sgn(m(piv, j)) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), m(piv, j).get_mpq_t());
        m(i, j) -= tmp;
      }
    }
  }
  return true;
}

/// A linear subspace of Q^n in canonical reduced row echelon form.
///
/// Two subspaces are equal iff their data compare equal.
class Subspace
{
public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<RationalVector>& vectors)
  {
    Subspace s(ambient_dim);
    for (const auto& v : vectors) s.insert(v);
    return s;
  }

  static Subspace whole(std::size_t ambient_dim)
  {
    Subspace s(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) {
      RationalVector v(ambient_dim);
      v[i] = 1;
      s.rows_.push_back(std::move(v));
      s.pivots_.push_back(i);
    }
    return s;
  }

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<RationalVector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its projection along the pivot coordinates.
  RationalVector reduce(RationalVector v) const
  {
    check_length(v);
    Rational tmp;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t p = pivots_[r];
      if (sgn(v[p]) == 0) continue;
      Rational f = v[p];
      for (std::size_t j = p; j < ambient_dim_; ++j) {
        if (sgn(rows_[r][j]) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), rows_[r][j].get_mpq_t());
        v[j] -= tmp;
      }
    }
    return v;
  }

  bool contains(const RationalVector& v) const { return is_zero(reduce(v)); }

  /// Coordinates of v in the canonical basis; nullopt if v is outside.
  std::optional<RationalVector> coordinates(const RationalVector& v) const
  {
    if (!contains(v)) return std::nullopt;
    RationalVector c(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) c[r] = v[pivots_[r]];
    return c;
  }

  RationalVector combine(const RationalVector& coords) const
  {
    if (coords.size() != rows_.size()) throw std::invalid_argument("coordinate length mismatch");
    RationalVector v(ambient_dim_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (sgn(coords[r]) == 0) continue;
      for (std::size_t j = 0; j < ambient_dim_; ++j) v[j] += coords[r] * rows_[r][j];
    }
    return v;
  }

  /// Adds v to the span. Returns the nonzero residual if the space grew.
  std::optional<RationalVector> insert(const RationalVector& v)
  {
    RationalVector w = reduce(v);
    std::size_t p = 0;
    while (p < ambient_dim_ && sgn(w[p]) == 0) ++p;
    if (p == ambient_dim_) return std::nullopt;
    RationalVector residual = w;
    Rational inv = 1 / w[p];
    for (auto& x : w) x *= inv;
    Rational tmp;
    for (auto& row : rows_) {
      if (sgn(row[p]) == 0) continue;
      Rational f = row[p];
      for (std::size_t j = p; j < ambient_dim_; ++j) {
        if (sgn(w[j]) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), w[j].get_mpq_t());
        row[j] -= tmp;
      }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(w));
    return residual;
  }

  bool contains(const Subspace& other) const
  {
    for (const auto& v : other.rows_) {
      if (!contains(v)) return false;
    }
    return true;
  }

  friend Subspace operator+(Subspace a, const Subspace& b)
  {
    for (const auto& v : b.rows_) a.insert(v);
    return a;
  }

  friend bool operator==(const Subspace& a, const Subspace& b)
  {
    return a.ambient_dim_ == b.ambient_dim_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
  }

private:
  void check_length(const RationalVector& v) const
  {
    if (v.size() != ambient_dim_) throw std::invalid_argument("vector length does not match subspace");
  }

  std::size_t ambient_dim_ = 0;
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Solver for x with sum_k x_k images[k] = target, images linearly independent.
class LinearCombinationSolver
{
public:
  LinearCombinationSolver() = default;

  explicit LinearCombinationSolver(const std::vector<RationalVector>& images)
  {
    const std::size_t r = images.size();
    if (r == 0) return;
    const std::size_t n = images.front().size();
    RationalMatrix aug(r, n + r);
    for (std::size_t i = 0; i < r; ++i) {
      if (images[i].size() != n) throw std::invalid_argument("image length mismatch");
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = images[i][j];
      aug(i, n + i) = 1;
    }
    auto pivots = rref_in_place(aug);
    if (pivots.size() < r || pivots[r - 1] >= n) {
      throw std::invalid_argument("images are linearly dependent");
    }
    pivots_ = pivots;
    reduced_.resize(r);
    transform_.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
      reduced_[i].assign(n, 0);
      transform_[i].assign(r, 0);
      for (std::size_t j = 0; j < n; ++j) reduced_[i][j] = aug(i, j);
      for (std::size_t j = 0; j < r; ++j) transform_[i][j] = aug(i, n + j);
    }
  }

  std::size_t size() const { return reduced_.size(); }

  /// Exact solve; nullopt if target is outside the span.
  std::optional<RationalVector> solve(const RationalVector& target) const
  {
    const std::size_t r = reduced_.size();
    RationalVector y(r);
    RationalVector residual = target;
    for (std::size_t l = 0; l < r; ++l) {
      y[l] = target[pivots_[l]];
      if (sgn(y[l]) == 0) continue;
      for (std::size_t j = 0; j < residual.size(); ++j) {
        if (sgn(reduced_[l][j]) != 0) residual[j] -= y[l] * reduced_[l][j];
      }
    }
    if (!is_zero(residual)) return std::nullopt;
    RationalVector x(r);
    for (std::size_t l = 0; l < r; ++l) {
      if (sgn(y[l]) == 0) continue;
      for (std::size_t k = 0; k < r; ++k) x[k] += y[l] * transform_[l][k];
    }
    return x;
  }

private:
  std::vector<std::size_t> pivots_;
  std::vector<RationalVector> reduced_;
  std::vector<RationalVector> transform_;
};

} // namespace gzwb

#endif // GZWB_LINEAR_ALGEBRA_HPP
