#include "cpx/algebra/det.hpp"

#include <utility>

namespace cpx {

namespace {

Int divide_exact(const Int& a, const Int& b) {
  Int q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) throw Error(Errc::NotDivisible, "Bareiss step left a remainder");
  return q;
}

ZPoly divide_exact(const ZPoly& a, const ZPoly& b) { return exact_div(a, b); }

template <class T>
T bareiss(Matrix<T> a) {
  if (!a.square()) throw Error(Errc::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return T(1);
  T prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == T(0)) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == T(0)) ++p;
      if (p == n) return T(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = divide_exact(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
      }
      a(i, k) = T(0);
    }
    prev = a(k, k);
  }
  T d = a(n - 1, n - 1);
  return negate ? T(-d) : d;
}

}  // namespace

Int det_bareiss(const Matrix<Int>& m) { return bareiss(m); }

ZPoly det_bareiss(const Matrix<ZPoly>& m) { return bareiss(m); }

IntLaurent det_bareiss(const Matrix<IntLaurent>& m) {
  if (!m.square()) throw Error(Errc::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<ZPoly> p(n, n);
  int total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int lo = 0;
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j).is_zero()) continue;
      lo = any ? std::min(lo, m(i, j).low()) : m(i, j).low();
      any = true;
    }
    if (!any) return IntLaurent();
    total += lo;
    for (std::size_t j = 0; j < n; ++j) {
      const IntLaurent& e = m(i, j);
      if (e.is_zero()) continue;
      std::vector<Int> c(static_cast<std::size_t>(e.high() - lo) + 1, Int(0));
      for (int k = e.low(); k <= e.high(); ++k) c[static_cast<std::size_t>(k - lo)] = e.coeff(k);
      p(i, j) = ZPoly(std::move(c));
    }
  }
  return IntLaurent::from_poly(bareiss(p), total);
}

Int det_exact(const Matrix<Int>& m) { return m.rows() <= kLaplaceLimit ? det_laplace(m) : det_bareiss(m); }

ZPoly det_exact(const Matrix<ZPoly>& m) { return m.rows() <= kLaplaceLimit ? det_laplace(m) : det_bareiss(m); }

IntLaurent det_exact(const Matrix<IntLaurent>& m) {
  return m.rows() <= kLaplaceLimit ? det_laplace(m) : det_bareiss(m);
}

}  // namespace cpx
