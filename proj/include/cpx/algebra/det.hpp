#pragma once

#include "cpx/algebra/int_laurent.hpp"
#include "cpx/algebra/integer.hpp"
#include "cpx/algebra/matrix.hpp"
#include "cpx/algebra/zpoly.hpp"

#include <cstddef>
#include <vector>

namespace cpx {

// Cofactor expansion along the first row. Exponential; size 0 gives 1.
template <class T>
T det_laplace(const Matrix<T>& m) {
  if (!m.square()) throw Error(Errc::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  T acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == T(0)) continue;
    T term = m(0, j) * det_laplace(m.minor(0, j));
    if (j % 2) {
      acc -= term;
    } else {
      acc += term;
    }
  }
  return acc;
}

// Fraction-free Gaussian elimination with row pivoting.
Int det_bareiss(const Matrix<Int>& m);
ZPoly det_bareiss(const Matrix<ZPoly>& m);
// Rows are shifted to polynomial form, eliminated over Z[q], then unshifted.
IntLaurent det_bareiss(const Matrix<IntLaurent>& m);

inline constexpr std::size_t kLaplaceLimit = 6;

// Laplace up to kLaplaceLimit, Bareiss above.
Int det_exact(const Matrix<Int>& m);
ZPoly det_exact(const Matrix<ZPoly>& m);
IntLaurent det_exact(const Matrix<IntLaurent>& m);

template <class T>
T cofactor(const Matrix<T>& m, std::size_t i, std::size_t j) {
  T d = det_exact(m.minor(i, j));
  return (i + j) % 2 ? T(-d) : d;
}

// adj(M)(j, i) = cofactor(M, i, j).
template <class T>
Matrix<T> adjugate(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  Matrix<T> a(n, n);
  if (n == 1) {
    a(0, 0) = T(1);
    return a;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(j, i) = cofactor(m, i, j);
  return a;
}

}  // namespace cpx
