#include "doctest.h"
#include "oracles.hpp"

#include "cpx/identities.hpp"
#include "cpx/suites.hpp"

#include <random>

using namespace cpx;

namespace {

std::vector<Diagram> trees(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<Diagram> out;
  for (int t = 0; t < count; ++t) out.push_back(random_tree(rng, 1 + t % 8));
  return out;
}

}  // namespace

TEST_CASE("pivot identities") {
  Diagram one = build(Family::A, 1);
  CHECK(cd_coxeter(one, 0).holds);
  CHECK(cd_wronskian(one, 0).holds);
  CHECK(cd_coxeter(build(Family::A, 2), 0).holds);
  CHECK(cd_wronskian(build(Family::A, 3), 1).holds);
  std::mt19937_64 rng(6);
  for (auto d : trees(99, 60)) {
    auto ord = d.order();
    std::shuffle(ord.begin(), ord.end(), rng);
    d.set_order(ord);
    for (std::size_t p = 0; p < d.size(); ++p) {
      CHECK(cd_coxeter(d, p).holds);
      CHECK(cd_wronskian(d, p).holds);
    }
  }
  for (int n = 2; n <= 6; ++n) CHECK(cd_coxeter(build(Family::AffA, n), 0).holds);
}

TEST_CASE("chain identities") {
  for (int n = 2; n <= 10; ++n) {
    auto rs = chain_identities(build(Family::A, n), 0, n);
    CHECK(!rs.empty());
    CHECK(all_hold(rs));
  }
  Diagram e8 = build(Family::AffE, 8);
  auto tail = chain_tail(e8, 0, 5);
  CHECK(tail == std::vector<std::size_t>{0, 1, 2, 3, 4});
  auto rs = chain_identities(e8, 0, 6);
  CHECK(!rs.empty());
  CHECK(all_hold(rs));
  CHECK_THROWS_AS(chain_tail(e8, 0, 7), Error);
  CHECK_THROWS_AS(chain_tail(e8, 5, 2), Error);
  CHECK(chain_identities(e8, 0, 1).empty());
}

TEST_CASE("cofactor sums") {
  CHECK(all_hold(cd_char(build(Family::A, 1), 0, 0)));
  Diagram a2 = build(Family::A, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(all_hold(cd_char(a2, i, j)));
  Diagram e6 = build(Family::AffE, 6);
  auto h = cofactors(e6);
  for (std::size_t i = 0; i < e6.size(); ++i)
    for (std::size_t j = 0; j < e6.size(); ++j) CHECK(all_hold(cd_char(e6, h, i, j)));
  for (const auto& d : trees(5, 40)) {
    auto t = cofactors(d);
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = 0; j < d.size(); ++j) CHECK(all_hold(cd_char(d, t, i, j)));
  }
}

TEST_CASE("sampled Bezoutian determinants") {
  Diagram a3 = build(Family::A, 3);
  CHECK(binet_cauchy(a3, 0, 2, {2, 5}, {-1, 3}).holds);
  CHECK(binet_cauchy(build(Family::A, 2), 0, 1, {3, 4}, {-2, 7}).holds);
  Diagram a5 = build(Family::A, 5);
  for (std::size_t m = 1; m <= 3; ++m) {
    std::vector<Int> xs{2, 3, 5}, ys{-1, 4, 7};
    xs.resize(m);
    ys.resize(m);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) CHECK(binet_cauchy(a5, i, j, xs, ys).holds);
  }
  CHECK_THROWS_AS(binet_cauchy(a3, 0, 0, {1, 2}, {3}), Error);
}

TEST_CASE("Poincare series sums") {
  auto d4 = klein_data("~D4");
  for (int leaf : {0, 2, 3, 4}) CHECK(all_hold(poincare_cd_branch(d4, leaf)));
  auto a3 = klein_data("~A3");
  CHECK(all_hold(poincare_cd_cycle(a3, 1, 2)));
  for (int n = 1; n <= 8; ++n) {
    auto a = klein_data(Family::AffA, n);
    CHECK(all_hold(poincare_cd(a)));
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) CHECK(all_hold(poincare_cd_cycle(a, i, j)));
  }
  auto e6 = klein_data("~E6");
  CHECK(all_hold(poincare_cd_root(e6)));
  CHECK(all_hold(poincare_cd(e6)));
  CHECK(all_hold(poincare_cd(klein_data("~E8"))));
  CHECK_THROWS_AS(poincare_cd_branch(a3, 1), Error);
  CHECK_THROWS_AS(poincare_cd_cycle(e6, 1, 2), Error);
}

TEST_CASE("named identities on every standard diagram") {
  for (const auto& d : standard_diagrams(7))
    for (const auto& name : identity_names())
      for (const auto& c : verify_identity(name, d)) CHECK_MESSAGE(c.report.holds, c.suite << " " << c.id);
  CHECK_THROWS_AS(verify_identity("eq99", build(Family::A, 2)), Error);
}
