#include "cpx/coxeter.hpp"

#include "cpx/errors.hpp"

namespace cpx {

namespace {

Matrix<IntLaurent> lift(const Matrix<Int>& m, int shift, int sign) {
  return m.map([&](const Int& v) { return IntLaurent::monomial(v * sign, shift); });
}

Matrix<ZPoly> lift_z(const Matrix<Int>& m) {
  return m.map([](const Int& v) { return ZPoly(v); });
}

void place(Matrix<IntLaurent>& dst, const Matrix<IntLaurent>& src, std::size_t r0, std::size_t c0) {
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j) dst(r0 + i, c0 + j) = src(i, j);
}

void check_shapes(const Matrix<Int>& A, const Matrix<Int>& B, const Matrix<Int>& C) {
  if (A.cols() != B.rows() || C.rows() != A.rows() || C.cols() != B.cols())
    throw Error(Errc::DimensionMismatch,
                "A is " + std::to_string(A.rows()) + "x" + std::to_string(A.cols()) + ", B is " +
                    std::to_string(B.rows()) + "x" + std::to_string(B.cols()) + ", C is " +
                    std::to_string(C.rows()) + "x" + std::to_string(C.cols()));
}

}  // namespace

Matrix<IntLaurent> divide_matrix(const Matrix<Int>& A, const Matrix<Int>& B, const Matrix<Int>& C) {
  check_shapes(A, B, C);
  const std::size_t p = A.rows(), r = A.cols(), s = B.cols();
  const std::size_t n = p + r + s;
  const IntLaurent z = IntLaurent::q() + IntLaurent::monomial(1, -1);
  Matrix<IntLaurent> m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = z;
  place(m, lift(A, 1, -1), 0, p);
  place(m, lift(C, 1, 1), 0, p + r);
  place(m, lift(A.transpose(), -1, -1), p, 0);
  place(m, lift(B, 1, -1), p, p + r);
  place(m, lift(C.transpose(), -1, 1), p + r, 0);
  place(m, lift(B.transpose(), -1, -1), p + r, p);
  return m;
}

DivideReport divide_identity(const Matrix<Int>& A, const Matrix<Int>& B, const Matrix<Int>& C) {
  check_shapes(A, B, C);
  Matrix<Int> twoC = Int(2) * C;
  if (A * B != twoC) throw Error(Errc::PreconditionABneq2C, "AB differs from 2C");
  DivideReport rep;
  rep.p = A.rows();
  rep.r = A.cols();
  rep.s = B.cols();
  const std::size_t p = rep.p, r = rep.r, s = rep.s;

  Matrix<IntLaurent> m = divide_matrix(A, B, C);
  rep.G = det_exact(m);

  // Generic Schur complement with M11 the leading (p + r) block.
  std::vector<std::size_t> first(p + r), last(s);
  for (std::size_t k = 0; k < p + r; ++k) first[k] = k;
  for (std::size_t k = 0; k < s; ++k) last[k] = p + r + k;
  Matrix<IntLaurent> m11 = m.select(first, first);
  Matrix<IntLaurent> m12 = m.select(first, last);
  Matrix<IntLaurent> m21 = m.select(last, first);
  Matrix<IntLaurent> m22 = m.select(last, last);
  IntLaurent d11 = det_exact(m11);
  if (s == 0) {
    rep.schur_holds = rep.G == d11;
  } else {
    Matrix<IntLaurent> schur = d11 * m22 - m21 * adjugate(m11) * m12;
    rep.schur_holds = rep.G * pow(d11, static_cast<int>(s) - 1) == det_exact(schur);
  }

  // Displayed identity cleared of z^-1: X = z^2 E - A A^t, Y = z^2 E - B^t B.
  const ZPoly z = ZPoly::z();
  const ZPoly z2 = z * z;
  Matrix<ZPoly> X = z2 * Matrix<ZPoly>::identity(p) - lift_z(A * A.transpose());
  Matrix<ZPoly> Y = z2 * Matrix<ZPoly>::identity(s) - lift_z(B.transpose() * B);
  ZPoly dX = det_exact(X);
  ZPoly dY = det_exact(Y);
  ZPoly g = q_to_z(rep.G);
  ZPoly dXY = dX * dY;

  rep.lhs = RatZ(g * pow(z, static_cast<int>(p + s)), dXY);
  rep.rhs = RatZ(1);
  if (s > 0) {
    Matrix<ZPoly> inner = lift_z(C.transpose()) * adjugate(X) * lift_z(C) * adjugate(Y);
    Matrix<ZPoly> N = dXY * Matrix<ZPoly>::identity(s) - (ZPoly(4) - z2) * inner;
    rep.rhs = RatZ(pow(z, static_cast<int>(s)) * det_exact(N), pow(dXY, static_cast<int>(s)));
  }
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace cpx
