#include "doctest.h"
#include "oracles.hpp"

#include "cpx/algebra/parse.hpp"
#include "cpx/coxeter.hpp"
#include "cpx/suites.hpp"

#include <algorithm>
#include <random>

using namespace cpx;

namespace {

const std::vector<Rational> kPoints{Rational(3), Rational(5, 2), Rational(-7, 3), Rational(1, 5)};

std::vector<Diagram> sample_diagrams() {
  std::vector<Diagram> ds = standard_diagrams(8);
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 30; ++t) ds.push_back(random_tree(rng, 1 + t % 8));
  return ds;
}

}  // namespace

TEST_CASE("small characteristic polynomials") {
  ZPoly z = ZPoly::z();
  CHECK(char_poly(build(Family::A, 1)) == z);
  CHECK(char_poly(build(Family::A, 2)) == z * z - 1);
  CHECK(char_poly(build(Family::D, 4)) == pow(z, 4) - Int(3) * z * z);
  CHECK(char_poly(build(Family::AffA, 2)) == pow(z, 3) - Int(3) * z - 2);
  CHECK(coxeter_poly(build(Family::A, 2)) == parse_laurent("q^-2 + 1 + q^2"));
  for (int n = 1; n <= 12; ++n) CHECK(char_poly(build(Family::A, n)) == oracle::chebyshev(n));
}

TEST_CASE("polynomials agree with rational point determinants") {
  std::mt19937_64 rng(8);
  for (auto d : sample_diagrams()) {
    ZPoly g = char_poly(d);
    for (const auto& x : kPoints) CHECK(g.eval(x) == oracle::char_value(d, x));
    auto ord = d.order();
    std::shuffle(ord.begin(), ord.end(), rng);
    d.set_order(ord);
    IntLaurent c = coxeter_poly(d);
    for (const auto& x : kPoints) CHECK(c.eval(x) == oracle::coxeter_value(d, x));
    CHECK(c.is_palindromic());
  }
}

TEST_CASE("small cases against Leibniz") {
  for (const auto& d : standard_diagrams(6)) {
    if (d.size() > 7) continue;
    CHECK(char_poly(d) == oracle::leibniz_det(char_matrix(d)));
    CHECK(coxeter_poly(d) == oracle::leibniz_det(coxeter_matrix(d)));
  }
}

TEST_CASE("bipartite coincidence") {
  for (auto d : sample_diagrams()) {
    auto b = bipartite_order(d);
    if (!b.ok) continue;
    d.set_order(b.order);
    CHECK(z_substitute(char_poly(d)) == coxeter_poly(d));
  }
}

TEST_CASE("schur step reassembles") {
  Diagram a2 = build(Family::A, 2);
  auto s = schur_step(a2, 0);
  CHECK(s.cross.empty());
  CHECK(s.reassemble() == coxeter_poly(a2));
  Diagram d4 = build(Family::D, 4);
  std::size_t centre = 0;
  for (std::size_t v = 0; v < 4; ++v)
    if (d4.degree(v) == 3) centre = v;
  auto t = schur_step(d4, centre);
  CHECK(t.cross.empty());
  CHECK(t.branches.size() == 3);
  CHECK(q_to_z(t.reassemble()) == char_poly(d4));
  std::mt19937_64 rng(4);
  for (auto d : sample_diagrams()) {
    auto ord = d.order();
    std::shuffle(ord.begin(), ord.end(), rng);
    d.set_order(ord);
    for (std::size_t p = 0; p < d.size(); ++p) CHECK(schur_step(d, p).reassemble() == coxeter_poly(d));
  }
}

TEST_CASE("join polynomial") {
  Diagram a1 = build(Family::A, 1), a2 = build(Family::A, 2);
  CHECK(q_to_z(join_poly({{a1, 0}, {a1, 0}, {a1, 0}})) == char_poly(build(Family::D, 4)));
  CHECK(q_to_z(join_poly({{a2, 0}})) == oracle::chebyshev(3));
  CHECK(join_poly({{a2, 1}, {a2, 0}, {a1, 0}}) == coxeter_poly(join({{a2, 1}, {a2, 0}, {a1, 0}})));
}

TEST_CASE("cofactor table") {
  Diagram a2 = build(Family::A, 2);
  auto h = cofactors(a2);
  CHECK(h(0, 0) == ZPoly::z());
  CHECK(h(0, 1) == ZPoly(1));
  CHECK(cofactors(build(Family::AffE, 6))(0, 0) == char_poly(build(Family::E, 6)));
  for (const auto& d : sample_diagrams()) {
    auto t = cofactors(d);
    CHECK(t == cofactors_serial(d));
    CHECK(t.det() == char_poly(d));
    auto m = char_matrix(d);
    CHECK(t.matrix() * m == t.det() * Matrix<ZPoly>::identity(d.size()));
  }
}

TEST_CASE("cycle cofactors") {
  for (int n = 2; n <= 12; ++n) {
    auto h = cofactors(build(Family::AffA, n));
    for (int j = 1; j <= n; ++j)
      CHECK(h(static_cast<std::size_t>(j), 0) == oracle::chebyshev(j - 1) + oracle::chebyshev(n - j));
  }
}

TEST_CASE("path sums") {
  CHECK(path_sum_H(build(Family::A, 2), 0, 1) == ZPoly(1));
  Diagram tri = build(Family::AffA, 2);
  CHECK(path_sum_H(tri, 0, 1) == ZPoly::z() + 1);
  for (const auto& d : sample_diagrams()) {
    auto t = cofactors(d);
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = 0; j < d.size(); ++j) CHECK(path_sum_H(d, i, j) == t(i, j));
  }
  Diagram c5 = build(Family::AffA, 5);
  auto t = cofactors(c5);
  for (std::size_t j = 0; j < 6; ++j) CHECK(path_sum_H(c5, 0, j) == t(0, j));
}

TEST_CASE("walks") {
  CHECK(walk_gf(build(Family::AffA, 2), 0, 0, 2)[2] == 2);
  for (const auto& d : standard_diagrams(5)) {
    for (std::size_t i = 0; i < d.size(); ++i) {
      auto w = walk_gf(d, i, 0, 8);
      auto e = walk_expansion(d, i, 0, 8);
      for (int k = 0; k <= 8; ++k) {
        Int want = oracle::walk_count(d, i, 0, k);
        CHECK(w[static_cast<std::size_t>(k)] == want);
        CHECK(e[static_cast<std::size_t>(k)] == Rational(want));
      }
    }
  }
}

TEST_CASE("cofactor square identity") {
  CHECK(identity7_check(build(Family::A, 2), 0, 1).is_zero());
  for (const auto& d : sample_diagrams())
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = 0; j < d.size(); ++j)
        if (i != j) CHECK(identity7_check(d, i, j).is_zero());
  CHECK_THROWS_AS(identity7_check(build(Family::A, 3), 1, 1), Error);
}

TEST_CASE("divide block identity") {
  Matrix<Int> A(1, 1, {2}), B(1, 1, {1}), C(1, 1, {1});
  auto r = divide_identity(A, B, C);
  CHECK(r.schur_holds);
  CHECK(r.equal);
  CHECK_THROWS_AS(divide_identity(A, B, Matrix<Int>(1, 1, {3})), Error);
  CHECK_THROWS_AS(divide_identity(A, Matrix<Int>(2, 1), C), Error);
  for (const auto& c : divide_suite(42, 20)) CHECK(c.report.holds);
}
