#include "cpx/cfrac.hpp"

#include "cpx/coxeter.hpp"
#include "cpx/errors.hpp"

namespace cpx {

namespace {

CFrac grow(const Diagram& d, std::size_t v, std::size_t parent) {
  CFrac node = CFrac::leaf(d.label(v));
  for (auto u : d.neighbors(v)) {
    if (u == parent) continue;
    Int a = d.weight(v, u);
    node.weights.push_back(a * a);
    node.children.push_back(grow(d, u, v));
  }
  return node;
}

// A_k^# with A_-1 = 0, A_0 = 1.
ZPoly chebyshev(int k) {
  if (k < 0) return {};
  ZPoly prev = 0, cur = 1;
  for (int i = 0; i < k; ++i) {
    ZPoly next = ZPoly::z() * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

CFrac cycle_chain(int n, int k, int depth) {
  if (k == depth) {
    // r = 1/G_k with G_k = (A_{n-1-k} + A_k) / (A_{n-k} + A_{k-1}).
    return CFrac::close(RatZ(chebyshev(n - k) + chebyshev(k - 1), chebyshev(n - 1 - k) + chebyshev(k)));
  }
  CFrac node = CFrac::leaf(std::to_string(k + 1));
  node.weights.push_back(1);
  node.children.push_back(cycle_chain(n, k + 1, depth));
  return node;
}

}  // namespace

CFrac expand_tree(const Diagram& d, std::size_t root) {
  d.check_vertex(root);
  if (!d.is_tree()) throw Error(Errc::NotATree, "continued fractions need a tree");
  return grow(d, root, d.size());
}

CFrac expand_cycle(int n, int depth) {
  if (n < 1) throw Error(Errc::BadRank, "cycle expansion needs n >= 1");
  if (depth < 0) depth = n / 2;
  CFrac top = CFrac::leaf("0");
  for (int side = 0; side < 2; ++side) {
    top.weights.push_back(1);
    top.children.push_back(cycle_chain(n, 0, depth));
  }
  return top;
}

RatZ evaluate(const CFrac& c) {
  if (c.kind == CFrac::Kind::Closing) return c.closing.inverse();
  RatZ denom(ZPoly::z());
  for (std::size_t k = 0; k < c.children.size(); ++k) denom = denom - RatZ(ZPoly(c.weights[k])) * evaluate(c.children[k]);
  if (denom.is_zero()) throw Error(Errc::ZeroDenominator, "continued fraction denominator vanished");
  return denom.inverse();
}

std::size_t z_count(const CFrac& c) {
  if (c.kind == CFrac::Kind::Closing) return 0;
  std::size_t n = 1;
  for (const auto& ch : c.children) n += z_count(ch);
  return n;
}

const CFrac* find_node(const CFrac& c, const std::string& label) {
  if (c.kind == CFrac::Kind::Branch && c.label == label) return &c;
  for (const auto& ch : c.children)
    if (const CFrac* f = find_node(ch, label)) return f;
  return nullptr;
}

namespace {

std::string latex_ratfunc(const RatZ& r) {
  if (r.den() == ZPoly(1)) return r.num().latex();
  return "\\frac{" + r.num().latex() + "}{" + r.den().latex() + "}";
}

std::string latex_body(const CFrac& c);

std::string latex_term(const Int& w, const CFrac& c) {
  if (c.kind == CFrac::Kind::Closing) return "\\cfrac{" + w.str() + "}{" + latex_ratfunc(c.closing) + "}";
  return "\\cfrac{" + w.str() + "}{" + latex_body(c) + "}";
}

std::string latex_body(const CFrac& c) {
  std::string s = "z";
  for (std::size_t k = 0; k < c.children.size(); ++k) s += "-" + latex_term(c.weights[k], c.children[k]);
  return s;
}

void ascii(const CFrac& c, const Int& w, int depth, std::string& out) {
  std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  std::string lead = w == 1 ? "" : w.str() + " * ";
  if (c.kind == CFrac::Kind::Closing) {
    out += pad + lead + "1/r, r = " + c.closing.str() + "\n";
    return;
  }
  if (c.children.empty()) {
    out += pad + lead + "1/z  [" + c.label + "]\n";
    return;
  }
  out += pad + lead + "1/(z - ...)  [" + c.label + "]\n";
  for (std::size_t k = 0; k < c.children.size(); ++k) ascii(c.children[k], c.weights[k], depth + 1, out);
}

}  // namespace

std::string render(const CFrac& c, CFracFormat format) {
  if (format == CFracFormat::Latex) {
    if (c.kind == CFrac::Kind::Closing) return "\\cfrac{1}{" + latex_ratfunc(c.closing) + "}";
    return "\\cfrac{1}{" + latex_body(c) + "}";
  }
  std::string out;
  ascii(c, 1, 0, out);
  return out;
}

}  // namespace cpx
