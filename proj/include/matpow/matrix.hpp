#pragma once

#include "matpow/scalar.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace matpow {

/// Dense k x k matrix, row-major, one scalar flavor for all entries.
template <Scalar T>
class SquareMatrix {
 public:
  /// Zero matrix of the given dimension (dim >= 1).
  explicit SquareMatrix(std::size_t dim);

  static SquareMatrix identity(std::size_t dim);

  /// Builds from nested rows. Ragged, empty or non-square input raises
  /// DimensionError; non-finite entries raise InvalidInputError.
  static SquareMatrix from_rows(const std::vector<std::vector<T>>& rows);

  std::size_t dim() const noexcept { return dim_; }

  T& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const T& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

  std::span<const T> entries() const noexcept { return entries_; }

  SquareMatrix& operator+=(const SquareMatrix& other);
  SquareMatrix& operator-=(const SquareMatrix& other);
  SquareMatrix& operator*=(const T& scalar);

  friend SquareMatrix operator+(SquareMatrix lhs, const SquareMatrix& rhs) { return lhs += rhs; }
  friend SquareMatrix operator-(SquareMatrix lhs, const SquareMatrix& rhs) { return lhs -= rhs; }
  friend SquareMatrix operator*(SquareMatrix lhs, const T& scalar) { return lhs *= scalar; }
  friend SquareMatrix operator*(const T& scalar, SquareMatrix rhs) { return rhs *= scalar; }
  friend SquareMatrix operator*(const SquareMatrix& lhs, const SquareMatrix& rhs) { return lhs.multiply(rhs); }

  bool operator==(const SquareMatrix& other) const = default;

  T trace() const;

  /// Largest absolute entry.
  T max_abs() const;

  /// Maximum absolute row sum (induced infinity norm).
  T norm_inf() const;

 private:
  SquareMatrix multiply(const SquareMatrix& rhs) const;

  std::size_t dim_;
  std::vector<T> entries_;
};

SquareMatrix<double> to_floating(const SquareMatrix<Rational>& m);
inline SquareMatrix<double> to_floating(const SquareMatrix<double>& m) { return m; }

extern template class SquareMatrix<Rational>;
extern template class SquareMatrix<double>;

}  // namespace matpow
