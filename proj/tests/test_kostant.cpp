#include "doctest.h"
#include "oracles.hpp"

#include "cpx/algebra/parse.hpp"
#include "cpx/kostant.hpp"

using namespace cpx;

namespace {

std::vector<KleinGroupData> all_types() {
  std::vector<KleinGroupData> out;
  for (int n = 1; n <= 12; ++n) out.push_back(klein_data(Family::AffA, n));
  for (int n = 4; n <= 12; ++n) out.push_back(klein_data(Family::AffD, n));
  for (int n = 6; n <= 8; ++n) out.push_back(klein_data(Family::AffE, n));
  return out;
}

}  // namespace

TEST_CASE("transcribed data") {
  auto e6 = klein_data("~E6");
  CHECK(e6.a == 6);
  CHECK(e6.b == 8);
  CHECK(e6.h == 12);
  CHECK(e6.Z[0] == parse_laurent("1 + q^12"));
  auto e8 = klein_data("~E8");
  CHECK(e8.Z[0] == parse_laurent("1 + q^30"));
  CHECK(e8.orderB == 120);
  CHECK(klein_data("~E7").orderB == 48);
  CHECK(klein_data("~A3").Z[1] == parse_laurent("q + q^3"));
  CHECK(e6.Zminus1 == parse_laurent("q^-1 - q^5 - q^7 + q^13"));
  CHECK_THROWS_AS(klein_data("~F4"), Error);
  CHECK_THROWS_AS(klein_data(Family::AffE, 9), Error);
}

TEST_CASE("exponents") {
  for (const auto& k : all_types()) {
    int n = k.n;
    std::pair<int, int> want;
    if (k.family == Family::AffA) want = {2, n + 1};
    if (k.family == Family::AffD) want = {4, 2 * n - 4};
    if (k.family == Family::AffE) want = n == 6 ? std::pair{6, 8} : n == 7 ? std::pair{8, 12} : std::pair{12, 20};
    CHECK(std::pair{k.a, k.b} == want);
    CHECK(k.h == k.a + k.b - 2);
    CHECK(k.orderB == k.a * k.b / 2);
    CHECK(k.Z[0] == IntLaurent(1) + IntLaurent::monomial(1, k.h));
    Int s = perfect_square_check(k);
    CHECK(s * s == Int(k.h + 2) * (k.h + 2) - 8 * k.orderB);
  }
  CHECK(perfect_square_check(klein_data("~E6")) == 2);
  CHECK(perfect_square_check(klein_data("~E8")) == 8);
  CHECK(perfect_square_check(klein_data("~A1")) == 0);
}

TEST_CASE("representation dimensions") {
  for (const auto& k : all_types()) {
    auto marks = oracle::null_root_marks(k.family, k.n);
    REQUIRE(marks.size() == k.Z.size());
    Int sq = 0;
    IntLaurent sum;
    for (std::size_t i = 0; i < marks.size(); ++i) {
      sq += marks[i] * marks[i];
      sum += k.Z[i] * Int(marks[i]);
    }
    CHECK(sq == k.orderB);
    IntLaurent one_minus_q = IntLaurent(1) - IntLaurent::q();
    // sum_i dim(r_i) P_i = 1 / (1 - q)^2
    CHECK(sum * one_minus_q * one_minus_q == k.denominator());
  }
}

TEST_CASE("cyclic group multiplicities") {
  for (int n = 1; n <= 8; ++n) {
    auto k = klein_data(Family::AffA, n);
    for (int i = 0; i <= n; ++i) {
      auto s = poincare_series(k, i, 30);
      auto want = oracle::cyclic_multiplicities(n, i, 30);
      for (int e = 0; e <= 30; ++e) CHECK(s.coeff(e) == Rational(want[static_cast<std::size_t>(e)]));
    }
  }
}

TEST_CASE("series") {
  auto e8 = klein_data("~E8");
  auto s = poincare_series(e8, 0, 30);
  for (int e = 0; e <= 30; ++e) CHECK(s.coeff(e) == ((e == 0 || e == 12 || e == 20 || e == 24 || e == 30) ? 1 : 0));
  for (const auto& k : all_types()) {
    auto m = poincare_series(k, -1, 24);
    CHECK(m.coeff(-1) == 1);
    for (int e = 0; e <= 24; ++e) CHECK(m.coeff(e) == 0);
  }
}

TEST_CASE("tables and linear systems") {
  for (const auto& k : all_types()) {
    CHECK(z_from_cramer(k) == k.Z);
    CHECK(table_check(k).holds);
    for (int w : {14, 15, 16}) CHECK_MESSAGE(verify_system(k, w).holds, k.type << " " << w);
    CHECK(all_hold(ebeling_ratios(k)));
    for (int i = 1; i <= k.n; ++i) CHECK_MESSAGE(prop2_squares(k, i).holds, k.type << " " << i);
  }
  CHECK_THROWS_AS(verify_system(klein_data("~E6"), 13), Error);
  CHECK_THROWS_AS(prop2_squares(klein_data("~E6"), 0), Error);
}

TEST_CASE("walk expansions") {
  CHECK(walk_series_check(klein_data("~E6"), 0, 20).holds);
  CHECK(walk_series_check(klein_data("~A2"), 1, 10).holds);
  for (const auto& k : all_types())
    for (int i = 0; i <= k.n; ++i) CHECK(walk_series_check(k, i, 12).holds);
}

TEST_CASE("odd cycle closed form") {
  for (int m = 0; m <= 8; ++m) CHECK(a2m_closed_form(m).holds);
  for (int m = 1; m <= 8; ++m) CHECK(a2m_recurrence_check(m, true).holds);
  ZPoly z = ZPoly::z();
  CHECK(a2m_recurrence(1) == pow(z, 3) - Int(3) * z - 2);
  CHECK(a2m_recurrence_check(1).holds);
  // as printed the recurrence drifts by a constant from m = 2 on
  CHECK(a2m_recurrence(2) == pow(z, 5) - Int(5) * pow(z, 3) + Int(5) * z + 8);
  CHECK(a2m_recurrence(2, true) == pow(z, 5) - Int(5) * pow(z, 3) + Int(5) * z - 2);
  CHECK(!a2m_recurrence_check(2).holds);
}

TEST_CASE("root paths and ratio chains") {
  auto d4 = klein_data("~D4");
  CHECK(toward_root(d4, 0) == -1);
  for (int leaf : {2, 3, 4}) {
    CHECK(toward_root(d4, leaf) == 1);
    CHECK(q_set(d4, leaf) == std::vector<int>{leaf});
  }
  CHECK(q_set(d4, 1) == std::vector<int>{1, 2, 3, 4});
  auto e6 = klein_data("~E6");
  CHECK(q_set(e6, 2) == std::vector<int>{2, 3, 4, 5, 6});
  for (auto k : {d4, e6, klein_data("~E8"), klein_data("~D7")}) {
    auto r = ratio_chain(k);
    REQUIRE(r.size() == static_cast<std::size_t>(k.n + 1));
    for (int j = 0; j <= k.n; ++j) {
      int p = toward_root(k, j);
      CHECK(r[static_cast<std::size_t>(j)] == k.P(j) / k.P(p));
    }
  }
  CHECK_THROWS_AS(ratio_chain(klein_data("~A3")), Error);
}
