#include "doctest.h"
#include "oracles.hpp"

#include "cpx/coxeter.hpp"
#include "cpx/diagram.hpp"

#include <algorithm>
#include <random>

using namespace cpx;

namespace {

std::vector<std::size_t> degree_sequence(const Diagram& d) {
  std::vector<std::size_t> s;
  for (std::size_t v = 0; v < d.size(); ++v) s.push_back(d.degree(v));
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("builders") {
  Diagram c = build(Family::AffA, 2);
  CHECK(c.size() == 3);
  CHECK(c.edge_count() == 3);
  for (std::size_t v = 0; v < 3; ++v) {
    CHECK(c.degree(v) == 2);
    for (auto u : c.neighbors(v)) CHECK(c.weight(v, u) == 1);
  }
  for (int n = 1; n <= 12; ++n) {
    CHECK(build(Family::A, n).is_tree());
    CHECK(build(Family::AffA, n).size() == static_cast<std::size_t>(n + 1));
  }
  for (int n = 4; n <= 12; ++n) {
    CHECK(build(Family::D, n).is_tree());
    CHECK(build(Family::AffD, n).is_tree());
    CHECK(build(Family::AffD, n).size() == static_cast<std::size_t>(n + 1));
  }
  for (int n = 6; n <= 8; ++n) {
    CHECK(build(Family::E, n).size() == static_cast<std::size_t>(n));
    CHECK(build(Family::AffE, n).is_tree());
  }
  CHECK(build_named("~E7").name() == "~E7");
  CHECK_THROWS_AS(build(Family::E, 9), Error);
  CHECK_THROWS_AS(build(Family::D, 3), Error);
  CHECK_THROWS_AS(build_named("F4"), Error);
}

TEST_CASE("deleting the affine vertex gives the finite diagram") {
  for (auto [f, g, lo, hi] : {std::tuple{Family::AffD, Family::D, 4, 10}, std::tuple{Family::AffE, Family::E, 6, 8},
                              std::tuple{Family::AffA, Family::A, 1, 10}}) {
    for (int n = lo; n <= hi; ++n) {
      Diagram d = delete_vertices(build(f, n), {0});
      Diagram e = build(g, n);
      CHECK(d.size() == e.size());
      CHECK(d.edge_count() == e.edge_count());
      CHECK(degree_sequence(d) == degree_sequence(e));
      CHECK(char_poly(d) == char_poly(e));
    }
  }
}

TEST_CASE("join") {
  Diagram a1 = build(Family::A, 1), a2 = build(Family::A, 2);
  Diagram star = join({{a1, 0}, {a1, 0}, {a1, 0}});
  CHECK(star.size() == 4);
  CHECK(star.degree(0) == 3);
  CHECK(star.label(0) == "*");
  CHECK(degree_sequence(star) == degree_sequence(build(Family::D, 4)));
  Diagram e6 = join({{a2, 0}, {a2, 0}, {a1, 0}});
  CHECK(e6.size() == 6);
  CHECK(degree_sequence(e6) == degree_sequence(build(Family::E, 6)));
  CHECK(char_poly(e6) == char_poly(build(Family::E, 6)));
  Diagram lone = join({});
  CHECK(lone.size() == 1);
  CHECK_THROWS_AS(join({{a1, 3}}), Error);
}

TEST_CASE("bipartite order") {
  for (int n = 1; n <= 10; ++n) {
    auto r = bipartite_order(build(Family::AffA, n));
    CHECK(r.ok == (n % 2 == 1));
    if (!r.ok) CHECK(r.odd_cycle.size() == static_cast<std::size_t>(n + 1));
  }
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    Diagram d = random_tree(rng, 1 + t % 8);
    auto r = bipartite_order(d);
    REQUIRE(r.ok);
    auto pos = std::vector<std::size_t>(d.size());
    for (std::size_t k = 0; k < r.order.size(); ++k) pos[r.order[k]] = k;
    // one side first: once an edge crosses forward, no vertex after it may
    // have an earlier neighbour on its own side
    std::size_t split = 0;
    while (split < r.order.size()) {
      bool clash = false;
      for (std::size_t k = 0; k < split; ++k)
        if (d.weight(r.order[k], r.order[split]) != 0) clash = true;
      if (clash) break;
      ++split;
    }
    for (std::size_t a = split; a < r.order.size(); ++a)
      for (std::size_t b = a + 1; b < r.order.size(); ++b) CHECK(d.weight(r.order[a], r.order[b]) == 0);
  }
}

TEST_CASE("text format") {
  Diagram d = build(Family::AffE, 7);
  d.set_order({7, 6, 5, 4, 3, 2, 1, 0});
  Diagram e = parse_diagram(to_text(d));
  CHECK(e.size() == d.size());
  CHECK(e.order() == d.order());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) CHECK(e.weight(i, j) == d.weight(i, j));
  CHECK_THROWS_AS(parse_diagram("n 2\n0 5 1\n"), Error);
  CHECK_THROWS_AS(parse_diagram("nonsense"), Error);
}

TEST_CASE("random trees") {
  std::mt19937_64 a(42), b(42);
  for (int t = 0; t < 20; ++t) {
    Diagram x = random_tree(a, 8), y = random_tree(b, 8);
    CHECK(to_text(x) == to_text(y));
    CHECK(x.is_tree());
    for (std::size_t i = 0; i < x.size(); ++i)
      for (auto j : x.neighbors(i)) CHECK((x.weight(i, j) == 1 || x.weight(i, j) == 2));
  }
}

TEST_CASE("seifert and symmetric forms") {
  Diagram d = build(Family::D, 5);
  auto s = d.seifert();
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(s(i, i) == 1);
    for (std::size_t j = 0; j < i; ++j) CHECK(s(i, j) == 0);
  }
  CHECK(d.symmetric_form() == s + s.transpose());
  CHECK_THROWS_AS(d.check_vertex(9), Error);
  CHECK_THROWS_AS(d.set_order({0, 1}), Error);
}
