#include "cpx/algebra/int_laurent.hpp"

#include "cpx/algebra/format.hpp"
#include "cpx/errors.hpp"

#include <algorithm>

namespace cpx {

IntLaurent::IntLaurent(const Int& c) {
  if (c != 0) c_.push_back(c);
}

IntLaurent::IntLaurent(int low, std::vector<Int> coeffs) : low_(low), c_(std::move(coeffs)) { trim(); }

IntLaurent IntLaurent::monomial(const Int& c, int e) {
  IntLaurent r(c);
  if (!r.is_zero()) r.low_ = e;
  return r;
}

IntLaurent IntLaurent::from_poly(const ZPoly& p, int shift) { return IntLaurent(shift, p.coeffs()); }

void IntLaurent::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (c_.empty()) low_ = 0;
}

Int IntLaurent::coeff(int e) const {
  if (is_zero() || e < low_ || e > high()) return 0;
  return c_[static_cast<std::size_t>(e - low_)];
}

std::size_t IntLaurent::term_count() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const Int& v) { return v != 0; }));
}

IntLaurent IntLaurent::shift(int k) const {
  IntLaurent r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

IntLaurent IntLaurent::inverse_variable() const {
  if (is_zero()) return {};
  std::vector<Int> r(c_.rbegin(), c_.rend());
  return IntLaurent(-high(), std::move(r));
}

bool IntLaurent::is_palindromic() const { return *this == inverse_variable(); }

IntLaurent IntLaurent::derivative() const {
  if (is_zero()) return {};
  std::vector<Int> r(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) r[k] = c_[k] * (low_ + static_cast<int>(k));
  return IntLaurent(low_ - 1, std::move(r));
}

IntLaurent IntLaurent::substitute_power(int k) const {
  if (is_zero()) return {};
  if (k == 0) {
    Int s = 0;
    for (const auto& v : c_) s += v;
    return IntLaurent(s);
  }
  if (k < 0) return substitute_power(-k).inverse_variable();
  std::vector<Int> r((c_.size() - 1) * static_cast<std::size_t>(k) + 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i * static_cast<std::size_t>(k)] = c_[i];
  return IntLaurent(low_ * k, std::move(r));
}

Rational IntLaurent::eval(const Rational& x) const {
  if (is_zero()) return 0;
  if (x == 0 && low_ < 0) throw Error(Errc::ZeroDenominator, "negative power evaluated at 0");
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
  Rational base = 1;
  if (low_ >= 0) {
    for (int i = 0; i < low_; ++i) base *= x;
  } else {
    for (int i = 0; i < -low_; ++i) base /= x;
  }
  return acc * base;
}

std::pair<int, ZPoly> IntLaurent::split() const {
  if (is_zero()) return {0, ZPoly()};
  return {low_, ZPoly(c_)};
}

IntLaurent& IntLaurent::operator+=(const IntLaurent& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(high(), o.high());
  std::vector<Int> r(static_cast<std::size_t>(hi - lo + 1), Int(0));
  for (std::size_t k = 0; k < c_.size(); ++k) r[static_cast<std::size_t>(low_ - lo) + k] += c_[k];
  for (std::size_t k = 0; k < o.c_.size(); ++k) r[static_cast<std::size_t>(o.low_ - lo) + k] += o.c_[k];
  low_ = lo;
  c_ = std::move(r);
  trim();
  return *this;
}

IntLaurent& IntLaurent::operator-=(const IntLaurent& o) { return *this += -o; }

IntLaurent operator*(const IntLaurent& a, const IntLaurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return IntLaurent(a.low_ + b.low_, std::move(r));
}

IntLaurent& IntLaurent::operator*=(const IntLaurent& o) { return *this = *this * o; }

IntLaurent& IntLaurent::operator*=(const Int& c) {
  if (c == 0) return *this = IntLaurent();
  for (auto& v : c_) v *= c;
  return *this;
}

IntLaurent IntLaurent::operator-() const {
  IntLaurent r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

std::string IntLaurent::str(char var) const {
  std::vector<std::pair<Int, std::string>> terms;
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) terms.emplace_back(c_[k], detail::monomial_text(var, low_ + static_cast<int>(k)));
  return detail::join_terms(terms);
}

IntLaurent pow(const IntLaurent& p, int e) {
  if (e < 0) {
    if (p.term_count() != 1) throw Error(Errc::NotDivisible, "negative power of a non-monomial");
    Int c = p.coeff(p.low());
    if (c != 1 && c != -1) throw Error(Errc::NotDivisible, "negative power of a non-unit");
    return pow(IntLaurent::monomial(c, -p.low()), -e);
  }
  IntLaurent r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

IntLaurent exact_div(const IntLaurent& a, const IntLaurent& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZeroPolynomial, "Laurent division by zero");
  if (a.is_zero()) return {};
  auto [sa, pa] = a.split();
  auto [sb, pb] = b.split();
  return IntLaurent::from_poly(exact_div(pa, pb), sa - sb);
}

IntLaurent z_substitute(const ZPoly& p) {
  const IntLaurent z = IntLaurent::q() + IntLaurent::monomial(1, -1);
  IntLaurent acc;
  for (int k = p.degree(); k >= 0; --k) acc = acc * z + IntLaurent(p.coeff(k));
  return acc;
}

ZPoly q_to_z(const IntLaurent& p) {
  if (!p.is_palindromic()) throw Error(Errc::NotSymmetric, p.str() + " is not invariant under q -> 1/q");
  if (p.is_zero()) return {};
  const int d = p.high();
  std::vector<IntLaurent> zp(static_cast<std::size_t>(d) + 1);
  zp[0] = 1;
  const IntLaurent z = IntLaurent::q() + IntLaurent::monomial(1, -1);
  for (int k = 1; k <= d; ++k) zp[static_cast<std::size_t>(k)] = zp[static_cast<std::size_t>(k) - 1] * z;
  std::vector<Int> out(static_cast<std::size_t>(d) + 1, Int(0));
  IntLaurent rest = p;
  for (int k = d; k >= 0; --k) {
    Int c = rest.coeff(k);
    if (c == 0) continue;
    out[static_cast<std::size_t>(k)] = c;
    rest -= zp[static_cast<std::size_t>(k)] * c;
  }
  return ZPoly(std::move(out));
}

}  // namespace cpx
