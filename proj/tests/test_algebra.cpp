#include "doctest.h"
#include "oracles.hpp"

#include "cpx/algebra/bi_laurent.hpp"
#include "cpx/algebra/det.hpp"
#include "cpx/algebra/parse.hpp"
#include "cpx/algebra/rat_func.hpp"
#include "cpx/algebra/trunc_series.hpp"

#include <random>

using namespace cpx;

namespace {

IntLaurent random_laurent(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> c(-3, 3);
  std::vector<Int> v;
  for (int e = lo; e <= hi; ++e) v.push_back(c(rng));
  return IntLaurent(lo, v);
}

const std::vector<Rational> kPoints{Rational(2), Rational(-3), Rational(5, 2), Rational(-1, 3), Rational(7, 4)};

}  // namespace

TEST_CASE("z substitution and its inverse") {
  ZPoly p = ZPoly::z() * ZPoly::z() - 1;
  CHECK(z_substitute(p) == parse_laurent("q^-2 + 1 + q^2"));
  CHECK(q_to_z(parse_laurent("q^-2 + 1 + q^2")) == p);
  for (int n = 0; n <= 12; ++n) {
    ZPoly a = oracle::chebyshev(n);
    CHECK(q_to_z(z_substitute(a)) == a);
    // A_n(q + 1/q) = (q^(n+1) - q^-(n+1)) / (q - q^-1)
    IntLaurent lhs = z_substitute(a) * (IntLaurent::q() - IntLaurent::monomial(1, -1));
    CHECK(lhs == IntLaurent::monomial(1, n + 1) - IntLaurent::monomial(1, -n - 1));
  }
  CHECK_THROWS_AS(q_to_z(IntLaurent::q()), Error);
}

TEST_CASE("canonical text round trip") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    IntLaurent f = random_laurent(rng, -4, 5);
    CHECK(parse_laurent(f.str()) == f);
  }
  CHECK(parse_zpoly("-1 + z^2").str() == "-1 + z^2");
  CHECK(IntLaurent(0).str() == "0");
  CHECK(parse_laurent("3*q^-1 - q^2").str() == "3*q^-1 - q^2");
  CHECK_THROWS_AS(parse_laurent("q^^2"), Error);
}

TEST_CASE("laurent arithmetic agrees with evaluation") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    IntLaurent f = random_laurent(rng, -3, 4), g = random_laurent(rng, -2, 3);
    for (const auto& x : kPoints) {
      CHECK((f * g).eval(x) == f.eval(x) * g.eval(x));
      CHECK((f + g).eval(x) == f.eval(x) + g.eval(x));
      CHECK(f.inverse_variable().eval(x) == f.eval(1 / x));
    }
    if (!g.is_zero()) CHECK(exact_div(f * g, g) == f);
  }
  CHECK_THROWS_AS(exact_div(IntLaurent(1), IntLaurent(1) + IntLaurent::q()), Error);
}

TEST_CASE("zpoly gcd, division and expansion at infinity") {
  ZPoly z = ZPoly::z();
  ZPoly a = (z - 1) * (z + 2), b = (z - 1) * (z * z + 1);
  CHECK(gcd(a, b) == z - 1);
  CHECK(exact_div(a, z - 1) == z + 2);
  CHECK_THROWS_AS(exact_div(a, z - 3), Error);
  auto c = expand_at_infinity(ZPoly(1), z - 1, 8);
  for (const auto& v : c) CHECK(v == 1);
  RatZ r(z * z - 1, z - 1);
  CHECK(r.num() == z + 1);
  CHECK(r.den() == ZPoly(1));
  CHECK_THROWS_AS(RatZ(z, ZPoly()), Error);
}

TEST_CASE("determinants against the Leibniz expansion") {
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 6; ++n) {
    Matrix<IntLaurent> m(n, n);
    Matrix<Int> k(n, n);
    std::uniform_int_distribution<int> c(-4, 4);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = random_laurent(rng, -1, 1);
        k(i, j) = c(rng);
      }
    IntLaurent want = oracle::leibniz_det(m);
    CHECK(det_bareiss(m) == want);
    CHECK(det_laplace(m) == want);
    CHECK(det_exact(m) == want);
    CHECK(det_bareiss(k) == oracle::leibniz_det(k));
  }
  // [[z, -q], [-1/q, z]] with z = q + 1/q
  Matrix<IntLaurent> m(2, 2);
  IntLaurent z = IntLaurent::q() + IntLaurent::monomial(1, -1);
  m(0, 0) = m(1, 1) = z;
  m(0, 1) = -IntLaurent::q();
  m(1, 0) = -IntLaurent::monomial(1, -1);
  CHECK(det_exact(m) == parse_laurent("q^-2 + 1 + q^2"));
  CHECK_THROWS_AS(det_exact(Matrix<Int>(2, 3)), Error);
}

TEST_CASE("adjugate times matrix is the determinant") {
  std::mt19937_64 rng(5);
  for (std::size_t n = 1; n <= 5; ++n) {
    Matrix<IntLaurent> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_laurent(rng, -1, 1);
    CHECK(adjugate(m) * m == det_exact(m) * Matrix<IntLaurent>::identity(n));
  }
}

TEST_CASE("bezoutian and wronskian") {
  IntLaurent z = IntLaurent::q() + IntLaurent::monomial(1, -1);
  CHECK(bezoutian(z, 1) == one_minus_inv_xy());
  CHECK(one_minus_inv_xy() == BiLaurent(1) - BiLaurent::monomial(1, -1, -1));
  CHECK(wronskian(z, 1) == parse_laurent("1 - q^-2"));
  CHECK(wronskian(1, IntLaurent::q()) == IntLaurent(-1));
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    IntLaurent f = random_laurent(rng, -2, 3), g = random_laurent(rng, -3, 2);
    BiLaurent b = bezoutian(f, g);
    for (std::size_t a = 0; a < kPoints.size(); ++a)
      for (std::size_t c = 0; c < kPoints.size(); ++c) {
        if (a == c) continue;
        const Rational &x = kPoints[a], &y = kPoints[c];
        CHECK(b.eval(x, y) * (x - y) == f.eval(x) * g.eval(y) - f.eval(y) * g.eval(x));
      }
    CHECK(b.diagonal() == wronskian(f, g));
    CHECK(b.swap_xy() == b);
    CHECK(b.times_x_minus_y().div_x_minus_y() == b);
  }
}

TEST_CASE("truncated series") {
  auto s = series_sqrt1p(2);
  CHECK(s.coeff(0) == 1);
  CHECK(s.coeff(1) == Rational(1, 2));
  CHECK(s.coeff(2) == Rational(-1, 8));
  auto r = series_sqrt1p(12);
  CHECK((r * r).agrees_with(TruncSeries::constant(1, 12) + TruncSeries::variable(12)));
  // (1 + q^30) / ((1 - q^12)(1 - q^20)) by counting 12a + 20b = k
  IntLaurent den = (IntLaurent(1) - IntLaurent::monomial(1, 12)) * (IntLaurent(1) - IntLaurent::monomial(1, 20));
  auto p = series_divide(IntLaurent(1) + IntLaurent::monomial(1, 30), den, 60);
  auto count = [](int k) {
    int c = 0;
    for (int a = 0; 12 * a <= k; ++a)
      if ((k - 12 * a) % 20 == 0) ++c;
    return c;
  };
  for (int k = 0; k <= 60; ++k) CHECK(p.coeff(k) == count(k) + (k >= 30 ? count(k - 30) : 0));
}
