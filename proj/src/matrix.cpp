#include "matpow/matrix.hpp"

#include "matpow/error.hpp"

#include <algorithm>
#include <string>

namespace matpow {

template <Scalar T>
SquareMatrix<T>::SquareMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, T(0)) {
  if (dim == 0) throw DimensionError("matrix dimension must be positive");
}

template <Scalar T>
SquareMatrix<T> SquareMatrix<T>::identity(std::size_t dim) {
  SquareMatrix result(dim);
  for (std::size_t i = 0; i < dim; ++i) result(i, i) = T(1);
  return result;
}

template <Scalar T>
SquareMatrix<T> SquareMatrix<T>::from_rows(const std::vector<std::vector<T>>& rows) {
  if (rows.empty()) throw DimensionError("matrix has no rows");
  const std::size_t k = rows.size();
  SquareMatrix result(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (rows[i].size() != k) {
      throw DimensionError("matrix is not square: row " + std::to_string(i) + " has " +
                           std::to_string(rows[i].size()) + " entries, expected " +
                           std::to_string(k));
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (!is_finite(rows[i][j])) throw InvalidInputError("matrix entry is not finite");
      result(i, j) = rows[i][j];
    }
  }
  return result;
}

template <Scalar T>
SquareMatrix<T>& SquareMatrix<T>::operator+=(const SquareMatrix& other) {
  if (other.dim_ != dim_) throw DimensionError("matrix dimensions differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

template <Scalar T>
SquareMatrix<T>& SquareMatrix<T>::operator-=(const SquareMatrix& other) {
  if (other.dim_ != dim_) throw DimensionError("matrix dimensions differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

template <Scalar T>
SquareMatrix<T>& SquareMatrix<T>::operator*=(const T& scalar) {
  for (T& x : entries_) x *= scalar;
  return *this;
}

template <Scalar T>
SquareMatrix<T> SquareMatrix<T>::multiply(const SquareMatrix& rhs) const {
  if (rhs.dim_ != dim_) throw DimensionError("matrix dimensions differ");
  SquareMatrix result(dim_);
  T tmp;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t l = 0; l < dim_; ++l) {
      const T& a = (*this)(i, l);
      if (a == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        tmp = a * rhs(l, j);
        result(i, j) += tmp;
      }
    }
  }
  return result;
}

template <Scalar T>
T SquareMatrix<T>::trace() const {
  T sum(0);
  for (std::size_t i = 0; i < dim_; ++i) sum += (*this)(i, i);
  return sum;
}

template <Scalar T>
T SquareMatrix<T>::max_abs() const {
  T best(0);
  for (const T& x : entries_) {
    T mag = magnitude(x);
    if (mag > best) best = mag;
  }
  return best;
}

template <Scalar T>
T SquareMatrix<T>::norm_inf() const {
  T best(0);
  for (std::size_t i = 0; i < dim_; ++i) {
    T row(0);
    for (std::size_t j = 0; j < dim_; ++j) row += magnitude((*this)(i, j));
    if (row > best) best = row;
  }
  return best;
}

SquareMatrix<double> to_floating(const SquareMatrix<Rational>& m) {
  SquareMatrix<double> result(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) result(i, j) = m(i, j).get_d();
  }
  return result;
}

template class SquareMatrix<Rational>;
template class SquareMatrix<double>;

}  // namespace matpow
