#include "cpx/algebra/bi_laurent.hpp"

#include "cpx/algebra/format.hpp"
#include "cpx/errors.hpp"

#include <vector>

namespace cpx {

BiLaurent::BiLaurent(const Int& c) {
  if (c != 0) c_[{0, 0}] = c;
}

BiLaurent BiLaurent::monomial(const Int& c, int ex, int ey) {
  BiLaurent r;
  if (c != 0) r.c_[{ex, ey}] = c;
  return r;
}

BiLaurent BiLaurent::outer(const IntLaurent& f, const IntLaurent& g) {
  BiLaurent r;
  if (f.is_zero() || g.is_zero()) return r;
  for (int a = f.low(); a <= f.high(); ++a) {
    Int fa = f.coeff(a);
    if (fa == 0) continue;
    for (int b = g.low(); b <= g.high(); ++b) {
      Int gb = g.coeff(b);
      if (gb != 0) r.c_[{a, b}] = fa * gb;
    }
  }
  return r;
}

void BiLaurent::add_term(const Key& k, const Int& v) {
  if (v == 0) return;
  auto it = c_.find(k);
  if (it == c_.end()) {
    c_.emplace(k, v);
    return;
  }
  it->second += v;
  if (it->second == 0) c_.erase(it);
}

Int BiLaurent::coeff(int ex, int ey) const {
  auto it = c_.find({ex, ey});
  return it == c_.end() ? Int(0) : it->second;
}

BiLaurent BiLaurent::swap_xy() const {
  BiLaurent r;
  for (const auto& [k, v] : c_) r.c_[{k.second, k.first}] = v;
  return r;
}

IntLaurent BiLaurent::diagonal() const {
  IntLaurent r;
  for (const auto& [k, v] : c_) r += IntLaurent::monomial(v, k.first + k.second);
  return r;
}

Rational BiLaurent::eval(const Rational& x, const Rational& y) const {
  Rational acc = 0;
  for (const auto& [k, v] : c_) {
    acc += Rational(v) * IntLaurent::monomial(1, k.first).eval(x) * IntLaurent::monomial(1, k.second).eval(y);
  }
  return acc;
}

BiLaurent BiLaurent::times_x_minus_y() const {
  BiLaurent r;
  for (const auto& [k, v] : c_) {
    r.add_term({k.first + 1, k.second}, v);
    r.add_term({k.first, k.second + 1}, -v);
  }
  return r;
}

BiLaurent BiLaurent::div_x_minus_y() const {
  if (is_zero()) return {};
  // Group by x-exponent: F = sum_k g_k(y) x^k, then synthetic division by (x - y).
  int xmin = c_.begin()->first.first;
  int xmax = c_.rbegin()->first.first;
  std::vector<IntLaurent> g(static_cast<std::size_t>(xmax - xmin + 1));
  for (const auto& [k, v] : c_) g[static_cast<std::size_t>(k.first - xmin)] += IntLaurent::monomial(v, k.second);
  const IntLaurent y = IntLaurent::q();
  const std::size_t d = g.size() - 1;
  std::vector<IntLaurent> q(d);
  IntLaurent carry;
  for (std::size_t k = d; k >= 1; --k) {
    carry = g[k] + y * carry;
    q[k - 1] = carry;
  }
  IntLaurent rem = g[0] + y * carry;
  if (d == 0) rem = g[0];
  if (!rem.is_zero()) throw Error(Errc::NotDivisible, "not divisible by (x - y)");
  BiLaurent r;
  for (std::size_t k = 0; k < q.size(); ++k) {
    const auto& p = q[k];
    if (p.is_zero()) continue;
    for (int e = p.low(); e <= p.high(); ++e) r.add_term({xmin + static_cast<int>(k), e}, p.coeff(e));
  }
  return r;
}

BiLaurent& BiLaurent::operator+=(const BiLaurent& o) {
  for (const auto& [k, v] : o.c_) add_term(k, v);
  return *this;
}

BiLaurent& BiLaurent::operator-=(const BiLaurent& o) {
  for (const auto& [k, v] : o.c_) add_term(k, -v);
  return *this;
}

BiLaurent& BiLaurent::operator*=(const Int& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& [k, v] : c_) v *= c;
  return *this;
}

BiLaurent operator*(const BiLaurent& a, const BiLaurent& b) {
  BiLaurent r;
  for (const auto& [ka, va] : a.c_)
    for (const auto& [kb, vb] : b.c_) r.add_term({ka.first + kb.first, ka.second + kb.second}, va * vb);
  return r;
}

BiLaurent BiLaurent::operator-() const {
  BiLaurent r = *this;
  for (auto& [k, v] : r.c_) v = -v;
  return r;
}

std::string BiLaurent::str() const {
  std::vector<std::pair<Int, std::string>> terms;
  for (const auto& [k, v] : c_) {
    std::string mx = detail::monomial_text('x', k.first);
    std::string my = detail::monomial_text('y', k.second);
    std::string mono = mx.empty() ? my : (my.empty() ? mx : mx + "*" + my);
    terms.emplace_back(v, mono);
  }
  return detail::join_terms(terms);
}

BiLaurent bezoutian(const IntLaurent& f, const IntLaurent& g) {
  BiLaurent r;
  if (f.is_zero() || g.is_zero()) return r;
  for (int a = f.low(); a <= f.high(); ++a) {
    Int fa = f.coeff(a);
    if (fa == 0) continue;
    for (int b = g.low(); b <= g.high(); ++b) {
      Int gb = g.coeff(b);
      if (gb == 0 || a == b) continue;
      // x^a y^b - x^b y^a = (xy)^m (x - y) sum_k x^k y^(M-m-1-k), m = min, M = max.
      Int c = fa * gb;
      int lo = a < b ? a : b;
      int hi = a < b ? b : a;
      if (a < b) c = -c;
      BiLaurent part;
      for (int k = 0; k < hi - lo; ++k) part += BiLaurent::monomial(c, lo + k, hi - 1 - k);
      r += part;
    }
  }
  return r;
}

IntLaurent wronskian(const IntLaurent& f, const IntLaurent& g) { return f.derivative() * g - f * g.derivative(); }

BiLaurent one_minus_inv_xy() { return BiLaurent(1) - BiLaurent::monomial(1, -1, -1); }

}  // namespace cpx
