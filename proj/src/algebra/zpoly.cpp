#include "cpx/algebra/zpoly.hpp"

#include "cpx/algebra/format.hpp"
#include "cpx/errors.hpp"

#include <algorithm>
#include <utility>

namespace cpx {

ZPoly::ZPoly(const Int& c) {
  if (c != 0) c_.push_back(c);
}

ZPoly::ZPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::monomial(const Int& c, int degree) {
  ZPoly p;
  if (c == 0) return p;
  p.c_.assign(static_cast<std::size_t>(degree) + 1, Int(0));
  p.c_.back() = c;
  return p;
}

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int ZPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return c_[static_cast<std::size_t>(k)];
}

const Int& ZPoly::leading() const {
  static const Int zero = 0;
  return c_.empty() ? zero : c_.back();
}

Int ZPoly::content() const {
  Int g = 0;
  for (const auto& c : c_) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

ZPoly ZPoly::primitive() const {
  if (is_zero()) return {};
  Int g = content();
  if (leading() < 0) g = -g;
  return exact_div(*this, g);
}

ZPoly ZPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Int> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return ZPoly(std::move(d));
}

Int ZPoly::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational ZPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return ZPoly(std::move(r));
}

ZPoly& ZPoly::operator*=(const ZPoly& o) { return *this = *this * o; }

ZPoly& ZPoly::operator*=(const Int& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= c;
  return *this;
}

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

std::string ZPoly::str(char var) const {
  std::vector<std::pair<Int, std::string>> terms;
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) terms.emplace_back(c_[k], detail::monomial_text(var, static_cast<int>(k)));
  return detail::join_terms(terms);
}

std::string ZPoly::latex(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Int& c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    bool neg = c < 0;
    Int mag = neg ? Int(-c) : c;
    std::string mono;
    if (k == 1) mono = std::string(1, var);
    if (k > 1) mono = std::string(1, var) + "^{" + std::to_string(k) + "}";
    std::string body = (mag == 1 && !mono.empty()) ? mono : mag.str() + mono;
    if (out.empty()) {
      out = neg ? "-" + body : body;
    } else {
      out += (neg ? "-" : "+") + body;
    }
  }
  return out;
}

ZPoly pow(const ZPoly& p, int e) {
  ZPoly r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZeroPolynomial, "pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<Int> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const Int& lb = b.leading();
  int steps = a.degree() - db + 1;
  for (int d = a.degree(); d >= db; --d) {
    Int lead = r[static_cast<std::size_t>(d)];
    for (auto& v : r) v *= lb;
    --steps;
    if (lead != 0) {
      for (int k = 0; k <= db; ++k) r[static_cast<std::size_t>(d - db + k)] -= lead * bc[static_cast<std::size_t>(k)];
    }
  }
  (void)steps;
  return ZPoly(std::move(r));
}

ZPoly exact_div(const ZPoly& a, const Int& c) {
  if (c == 0) throw Error(Errc::DivisionByZeroPolynomial, "division by zero constant");
  std::vector<Int> r = a.coeffs();
  for (auto& v : r) {
    Int q, rem;
    boost::multiprecision::divide_qr(v, c, q, rem);
    if (rem != 0) throw Error(Errc::NotDivisible, a.str() + " by " + c.str());
    v = q;
  }
  return ZPoly(std::move(r));
}

ZPoly exact_div(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZeroPolynomial, "exact division by zero");
  if (a.is_zero()) return {};
  if (b.degree() == 0) return exact_div(a, b.leading());
  if (a.degree() < b.degree()) throw Error(Errc::NotDivisible, a.str() + " by " + b.str());
  std::vector<Int> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const Int& lb = b.leading();
  std::vector<Int> q(static_cast<std::size_t>(a.degree() - db + 1), Int(0));
  for (int d = a.degree(); d >= db; --d) {
    Int& lead = r[static_cast<std::size_t>(d)];
    if (lead == 0) continue;
    Int qc, rem;
    boost::multiprecision::divide_qr(lead, lb, qc, rem);
    if (rem != 0) throw Error(Errc::NotDivisible, a.str() + " by " + b.str());
    q[static_cast<std::size_t>(d - db)] = qc;
    for (int k = 0; k <= db; ++k) r[static_cast<std::size_t>(d - db + k)] -= qc * bc[static_cast<std::size_t>(k)];
  }
  for (int k = 0; k < db; ++k)
    if (r[static_cast<std::size_t>(k)] != 0) throw Error(Errc::NotDivisible, a.str() + " by " + b.str());
  return ZPoly(std::move(q));
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  ZPoly u = a.primitive();
  ZPoly v = b.primitive();
  if (u.is_zero()) return v;
  if (v.is_zero()) return u;
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    ZPoly r = pseudo_remainder(u, v);
    u = std::move(v);
    v = r.primitive();
  }
  return u.primitive();
}

std::vector<Rational> expand_at_infinity(const ZPoly& num, const ZPoly& den, int K) {
  if (den.is_zero()) throw Error(Errc::DivisionByZeroPolynomial, "expansion with zero denominator");
  if (num.degree() >= den.degree())
    throw Error(Errc::DomainError, "expand_at_infinity needs deg num < deg den");
  // In w = 1/z: num/den = w^(dd - dn) * revnum(w) / revden(w).
  const int dd = den.degree();
  std::vector<Rational> out(static_cast<std::size_t>(K) + 1, Rational(0));
  if (num.is_zero()) return out;
  // num(z)/den(z) = sum_k c_k z^(-k-1); multiply through by den and match powers.
  // den(z) * sum_k c_k z^(-k-1) = num(z) gives, for the coefficient of z^(dd-1-m):
  //   sum_{j=0..m} den[dd-j] * c_{m-j} = num[dd-1-m].
  Rational lead(den.leading());
  for (int m = 0; m <= K; ++m) {
    Rational acc(num.coeff(dd - 1 - m));
    for (int j = 1; j <= std::min(m, dd); ++j) acc -= Rational(den.coeff(dd - j)) * out[static_cast<std::size_t>(m - j)];
    out[static_cast<std::size_t>(m)] = acc / lead;
  }
  return out;
}

}  // namespace cpx
