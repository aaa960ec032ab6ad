#pragma once

#include "lagsob/errors.hpp"
#include "lagsob/poly.hpp"
#include "lagsob/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lagsob {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> row_major)
      : rows_(rows), cols_(cols), data_(std::move(row_major)) {
    if (data_.size() != rows_ * cols_) throw DimensionError("matrix: entry count does not match shape");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("matrix: ragged rows");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<Poly>;
using RationalVector = std::vector<Rational>;

/// Determinant by Gaussian elimination over Q.
Rational det(const RationalMatrix& a);

/// Unique solution of A x = b; InconsistencyError if A is singular.
RationalVector solve(const RationalMatrix& a, std::span<const Rational> b);

/// Rank of the given vectors (all of the same length).
std::size_t rank(std::span<const RationalVector> vectors);
std::size_t rank(const RationalMatrix& a);

/// Whether v lies in the rational span of basis. span() of nothing is {0}.
bool span_member(std::span<const Rational> v, std::span<const RationalVector> basis);

/// Exact determinant of a square polynomial matrix.
Poly poly_det(const PolyMatrix& a);

/// Upper bound on deg det(a) from row and column degree sums; nullopt when a
/// row or column is identically zero.
Degree det_degree_bound(const PolyMatrix& a);

/// Entry (i, j) is polys[i](x + shifts[j]).
PolyMatrix shift_matrix(std::span<const Poly> polys, std::span<const Rational> shifts);

}  // namespace lagsob
