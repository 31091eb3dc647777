#pragma once

#include "cpx/algebra/integer.hpp"

#include <string>
#include <vector>

namespace cpx {

// Dense integer polynomial in z, coefficients in ascending powers.
// The zero polynomial has no coefficients and degree -1.
class ZPoly {
 public:
  ZPoly() = default;
  ZPoly(int c) : ZPoly(Int(c)) {}
  ZPoly(const Int& c);
  explicit ZPoly(std::vector<Int> coeffs);

  static ZPoly z() { return monomial(1, 1); }
  static ZPoly monomial(const Int& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(int k) const;
  const Int& leading() const;

  Int content() const;
  ZPoly primitive() const;
  ZPoly derivative() const;
  Int eval(const Int& x) const;
  Rational eval(const Rational& x) const;

  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  ZPoly& operator*=(const ZPoly& o);
  ZPoly& operator*=(const Int& c);

  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(ZPoly a, const Int& c) { return a *= c; }
  friend ZPoly operator*(const Int& c, ZPoly a) { return a *= c; }
  ZPoly operator-() const;

  friend bool operator==(const ZPoly&, const ZPoly&) = default;

  // Canonical text: ascending exponents, e.g. "-1 + z^2".
  std::string str(char var = 'z') const;
  // Descending LaTeX form, e.g. "z^{2}-1".
  std::string latex(char var = 'z') const;

 private:
  void trim();
  std::vector<Int> c_;
};

ZPoly pow(const ZPoly& p, int e);

// prem(a, b) = lc(b)^(deg a - deg b + 1) * a mod b.
ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b);

// Exact quotient a / b; throws NotDivisible when b does not divide a over Z.
ZPoly exact_div(const ZPoly& a, const ZPoly& b);
ZPoly exact_div(const ZPoly& a, const Int& c);

// Primitive gcd (positive leading coefficient) via the primitive PRS.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

// Coefficients c_k of num/den = sum_k c_k z^(-k-1), k = 0..K, expanded at
// z = infinity. Requires deg num < deg den.
std::vector<Rational> expand_at_infinity(const ZPoly& num, const ZPoly& den, int K);

}  // namespace cpx
