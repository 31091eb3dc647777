#include "doctest.h"
#include "oracles.hpp"

#include "cpx/cfrac.hpp"
#include "cpx/coxeter.hpp"
#include "cpx/suites.hpp"

#include <random>

using namespace cpx;

namespace {

void closings(const CFrac& c, std::vector<RatZ>& out) {
  if (c.kind == CFrac::Kind::Closing) out.push_back(c.closing);
  for (const auto& k : c.children) closings(k, out);
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

// Ratio of the characteristic values at a rational point.
Rational tree_ratio(const Diagram& d, std::size_t root, const Rational& z) {
  Diagram rest = delete_vertices(d, {root});
  return oracle::char_value(rest, z) / oracle::char_value(d, z);
}

}  // namespace

TEST_CASE("tree expansions") {
  std::mt19937_64 rng(17);
  std::vector<Diagram> ds = standard_diagrams(9);
  for (int t = 0; t < 40; ++t) ds.push_back(random_tree(rng, 1 + t % 8));
  for (const auto& d : ds) {
    if (!d.is_tree()) continue;
    for (std::size_t root = 0; root < d.size(); ++root) {
      CFrac c = expand_tree(d, root);
      CHECK(z_count(c) == d.size());
      RatZ v = evaluate(c);
      CHECK(v == RatZ(char_poly(delete_vertices(d, {root})), char_poly(d)));
      for (Rational z : {Rational(7, 2), Rational(-5, 3)}) {
        CHECK(v.num().eval(z) / v.den().eval(z) == tree_ratio(d, root, z));
      }
    }
  }
  CHECK_THROWS_AS(expand_tree(build(Family::AffA, 3), 0), Error);
}

TEST_CASE("affine D4 display") {
  CFrac c = expand_tree(build(Family::AffD, 4), 0);
  REQUIRE(c.children.size() == 1);
  const CFrac& inner = c.children[0];
  CHECK(inner.children.size() == 3);
  for (const auto& leaf : inner.children) {
    CHECK(leaf.children.empty());
    CHECK(evaluate(leaf) == RatZ(ZPoly(1), ZPoly::z()));
  }
  CHECK(count(render(c, CFracFormat::Latex), "\\cfrac{1}{z}") == 3);
}

TEST_CASE("finite over affine ratios") {
  for (auto [f, g, lo, hi] : {std::tuple{Family::AffD, Family::D, 4, 10}, std::tuple{Family::AffE, Family::E, 6, 8}}) {
    for (int n = lo; n <= hi; ++n) {
      Diagram a = build(f, n);
      CFrac c = expand_tree(a, 0);
      CHECK(evaluate(c) == RatZ(char_poly(build(g, n)), char_poly(a)));
      auto b = bipartite_order(a);
      a.set_order(b.order);
      Diagram e = build(g, n);
      e.set_order(bipartite_order(e).order);
      CHECK(z_substitute(evaluate(c)) == RatQ(coxeter_poly(e), coxeter_poly(a)));
    }
  }
}

TEST_CASE("paths give consecutive Chebyshev quotients") {
  for (int n = 1; n <= 12; ++n) {
    CFrac c = expand_tree(build(Family::A, n), 0);
    CHECK(z_count(c) == static_cast<std::size_t>(n));
    CHECK(evaluate(c) == RatZ(oracle::chebyshev(n - 1), oracle::chebyshev(n)));
    const CFrac* p = &c;
    while (!p->children.empty()) {
      CHECK(p->children.size() == 1);
      p = &p->children[0];
    }
  }
}

TEST_CASE("cycle expansions") {
  ZPoly z = ZPoly::z();
  for (int n = 2; n <= 10; ++n) {
    CFrac c = expand_cycle(n);
    std::vector<RatZ> r;
    closings(c, r);
    REQUIRE(r.size() >= 1);
    for (const auto& v : r) CHECK(v == (n % 2 ? RatZ(z, ZPoly(2)) : RatZ(ZPoly(1))));
    CHECK(z_count(c) == static_cast<std::size_t>(n % 2 ? n : n + 1));
    CHECK(evaluate(c) == RatZ(oracle::chebyshev(n), char_poly(build(Family::AffA, n))));
  }
}

TEST_CASE("hand built fraction") {
  CFrac a = CFrac::leaf("a");
  a.children.push_back(CFrac::leaf("b"));
  a.weights.push_back(1);
  ZPoly z = ZPoly::z();
  CHECK(evaluate(a) == RatZ(z, z * z - 1));
  CHECK(find_node(a, "b") != nullptr);
  CHECK(find_node(a, "c") == nullptr);
  CHECK(!render(a, CFracFormat::Ascii).empty());
}
