#pragma once

#include "cpx/algebra/integer.hpp"
#include "cpx/algebra/zpoly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cpx {

// Integer Laurent polynomial in q. Stored densely from the lowest nonzero
// exponent; the zero element has no coefficients.
class IntLaurent {
 public:
  IntLaurent() = default;
  IntLaurent(int c) : IntLaurent(Int(c)) {}
  IntLaurent(const Int& c);
  IntLaurent(int low, std::vector<Int> coeffs);

  static IntLaurent q() { return monomial(1, 1); }
  static IntLaurent monomial(const Int& c, int e);
  static IntLaurent from_poly(const ZPoly& p, int shift = 0);

  bool is_zero() const { return c_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  Int coeff(int e) const;
  const std::vector<Int>& dense() const { return c_; }
  std::size_t term_count() const;

  IntLaurent shift(int k) const;
  IntLaurent inverse_variable() const;
  bool is_palindromic() const;
  IntLaurent derivative() const;
  IntLaurent substitute_power(int k) const;
  Rational eval(const Rational& x) const;

  // this = q^shift * poly with poly(0) != 0 (zero gives {0, 0}).
  std::pair<int, ZPoly> split() const;

  IntLaurent& operator+=(const IntLaurent& o);
  IntLaurent& operator-=(const IntLaurent& o);
  IntLaurent& operator*=(const IntLaurent& o);
  IntLaurent& operator*=(const Int& c);

  friend IntLaurent operator+(IntLaurent a, const IntLaurent& b) { return a += b; }
  friend IntLaurent operator-(IntLaurent a, const IntLaurent& b) { return a -= b; }
  friend IntLaurent operator*(const IntLaurent& a, const IntLaurent& b);
  friend IntLaurent operator*(IntLaurent a, const Int& c) { return a *= c; }
  friend IntLaurent operator*(const Int& c, IntLaurent a) { return a *= c; }
  IntLaurent operator-() const;

  friend bool operator==(const IntLaurent&, const IntLaurent&) = default;

  // Canonical text, e.g. "q^-2 + 1 + q^2".
  std::string str(char var = 'q') const;

 private:
  void trim();
  int low_ = 0;
  std::vector<Int> c_;
};

IntLaurent pow(const IntLaurent& p, int e);

// Exact quotient; throws NotDivisible when the quotient is not Laurent.
IntLaurent exact_div(const IntLaurent& a, const IntLaurent& b);

// p(q + 1/q).
IntLaurent z_substitute(const ZPoly& p);

// Inverse of z_substitute on palindromic input.
ZPoly q_to_z(const IntLaurent& p);

}  // namespace cpx
