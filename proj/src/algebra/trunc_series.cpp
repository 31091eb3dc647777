#include "cpx/algebra/trunc_series.hpp"

#include "cpx/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace cpx {

TruncSeries::TruncSeries(int order) : order_(order) {}

TruncSeries::TruncSeries(int order, int low, std::vector<Rational> coeffs)
    : order_(order), low_(low), c_(std::move(coeffs)) {
  if (low_ > order_) {
    c_.clear();
    low_ = 0;
  } else if (static_cast<int>(c_.size()) > order_ - low_ + 1) {
    c_.resize(static_cast<std::size_t>(order_ - low_ + 1));
  }
}

TruncSeries TruncSeries::constant(const Rational& c, int order) { return TruncSeries(order, 0, {c}); }

TruncSeries TruncSeries::variable(int order) { return TruncSeries(order, 1, {Rational(1)}); }

TruncSeries TruncSeries::from_laurent(const IntLaurent& p, int order) {
  if (p.is_zero()) return TruncSeries(order);
  std::vector<Rational> c;
  for (int e = p.low(); e <= std::min(p.high(), order); ++e) c.emplace_back(p.coeff(e));
  return TruncSeries(order, p.low(), std::move(c));
}

Rational TruncSeries::coeff(int e) const {
  if (e < low_ || e - low_ >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(e - low_)];
}

bool TruncSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& v) { return v == 0; });
}

int TruncSeries::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return low_ + static_cast<int>(k);
  return order_ + 1;
}

TruncSeries TruncSeries::truncated(int order) const { return TruncSeries(std::min(order, order_), low_, c_); }

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  int ord = std::min(order_, o.order_);
  int lo = std::min(low_, o.low_);
  std::vector<Rational> r(static_cast<std::size_t>(std::max(ord - lo + 1, 0)), Rational(0));
  for (int e = lo; e <= ord; ++e) r[static_cast<std::size_t>(e - lo)] = coeff(e) + o.coeff(e);
  *this = TruncSeries(ord, lo, std::move(r));
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) { return *this += -o; }

TruncSeries& TruncSeries::operator*=(const Rational& c) {
  for (auto& v : c_) v *= c;
  return *this;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  // A factor known through u^N with valuation v only determines the product
  // through N + (valuation of the other factor).
  int va = a.valuation();
  int vb = b.valuation();
  int ord = std::min(a.order_ + std::min(vb, b.order_), b.order_ + std::min(va, a.order_));
  if (a.is_zero() || b.is_zero()) return TruncSeries(ord);
  int lo = va + vb;
  if (lo > ord) return TruncSeries(ord);
  std::vector<Rational> r(static_cast<std::size_t>(ord - lo + 1), Rational(0));
  for (int i = va; i <= a.order_; ++i) {
    Rational ai = a.coeff(i);
    if (ai == 0) continue;
    for (int j = vb; i + j <= ord && j <= b.order_; ++j) r[static_cast<std::size_t>(i + j - lo)] += ai * b.coeff(j);
  }
  return TruncSeries(ord, lo, std::move(r));
}

TruncSeries TruncSeries::inverse() const {
  int v = valuation();
  if (v > order_) throw Error(Errc::ZeroDenominator, "inverse of a zero series");
  // Relative precision is order - v; the inverse has valuation -v.
  int rel = order_ - v;
  Rational lead = coeff(v);
  std::vector<Rational> inv(static_cast<std::size_t>(rel) + 1, Rational(0));
  inv[0] = 1 / lead;
  for (int m = 1; m <= rel; ++m) {
    Rational acc = 0;
    for (int j = 1; j <= m; ++j) acc += coeff(v + j) * inv[static_cast<std::size_t>(m - j)];
    inv[static_cast<std::size_t>(m)] = -acc / lead;
  }
  return TruncSeries(rel - v, -v, std::move(inv));
}

bool TruncSeries::agrees_with(const TruncSeries& o) const {
  int ord = std::min(order_, o.order_);
  int lo = std::min(low_, o.low_);
  for (int e = lo; e <= ord; ++e)
    if (coeff(e) != o.coeff(e)) return false;
  return true;
}

std::string TruncSeries::str(char var) const {
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    int e = low_ + static_cast<int>(k);
    Rational c = c_[k];
    bool neg = c < 0;
    if (neg) c = -c;
    std::string mono;
    if (e != 0) mono = std::string(1, var) + (e == 1 ? "" : "^" + std::to_string(e));
    std::string body = mono.empty() ? to_string(c) : (c == 1 ? mono : to_string(c) + "*" + mono);
    if (out.empty()) {
      out = neg ? "-" + body : body;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  if (out.empty()) out = "0";
  return out + " + O(" + std::string(1, var) + "^" + std::to_string(order_ + 1) + ")";
}

TruncSeries operator/(const TruncSeries& a, const TruncSeries& b) { return a * b.inverse(); }

TruncSeries series_pow1p(const Rational& alpha, int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
  c[0] = 1;
  for (int k = 1; k <= order; ++k) c[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k) - 1] * (alpha - (k - 1)) / k;
  return TruncSeries(order, 0, std::move(c));
}

TruncSeries series_sqrt1p(int order) { return series_pow1p(Rational(1, 2), order); }

TruncSeries series_divide(const IntLaurent& num, const IntLaurent& den, int order) {
  if (den.is_zero()) throw Error(Errc::DivisionByZeroPolynomial, "series division by zero");
  int work = order + 2 * std::abs(den.low()) + std::abs(num.low()) + 2;
  TruncSeries n = TruncSeries::from_laurent(num, work);
  TruncSeries d = TruncSeries::from_laurent(den, work);
  return (n / d).truncated(order);
}

}  // namespace cpx
