#pragma once

#include "cpx/algebra/int_laurent.hpp"
#include "cpx/algebra/integer.hpp"

#include <string>
#include <vector>

namespace cpx {

inline constexpr int kDefaultSeriesOrder = 32;

// Power series with exact rational coefficients, known through u^order.
// Coefficients start at exponent low(), which may be negative.
class TruncSeries {
 public:
  TruncSeries() : TruncSeries(kDefaultSeriesOrder) {}
  explicit TruncSeries(int order);
  TruncSeries(int order, int low, std::vector<Rational> coeffs);

  static TruncSeries constant(const Rational& c, int order);
  static TruncSeries variable(int order);
  static TruncSeries from_laurent(const IntLaurent& p, int order);

  int order() const { return order_; }
  int low() const { return low_; }
  Rational coeff(int e) const;
  bool is_zero() const;
  // Lowest exponent with nonzero coefficient; order()+1 when zero.
  int valuation() const;

  TruncSeries truncated(int order) const;
  TruncSeries inverse() const;

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const Rational& c);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(TruncSeries a, const Rational& c) { return a *= c; }
  TruncSeries operator-() const;

  // Coefficientwise equality through the smaller order.
  bool agrees_with(const TruncSeries& o) const;

  std::string str(char var = 'u') const;

 private:
  int order_;
  int low_ = 0;
  std::vector<Rational> c_;
};

TruncSeries operator/(const TruncSeries& a, const TruncSeries& b);

// (1+u)^alpha by the generalized binomial series.
TruncSeries series_pow1p(const Rational& alpha, int order = kDefaultSeriesOrder);
TruncSeries series_sqrt1p(int order = kDefaultSeriesOrder);

// num/den expanded in q through q^order.
TruncSeries series_divide(const IntLaurent& num, const IntLaurent& den, int order = kDefaultSeriesOrder);

}  // namespace cpx
