#pragma once

#include "cpx/algebra/int_laurent.hpp"
#include "cpx/algebra/integer.hpp"

#include <map>
#include <string>
#include <utility>

namespace cpx {

// Laurent polynomial in two commuting variables x, y.
class BiLaurent {
 public:
  using Key = std::pair<int, int>;

  BiLaurent() = default;
  BiLaurent(int c) : BiLaurent(Int(c)) {}
  BiLaurent(const Int& c);

  static BiLaurent monomial(const Int& c, int ex, int ey);
  // f(x) g(y).
  static BiLaurent outer(const IntLaurent& f, const IntLaurent& g);
  static BiLaurent in_x(const IntLaurent& f) { return outer(f, 1); }
  static BiLaurent in_y(const IntLaurent& g) { return outer(1, g); }

  bool is_zero() const { return c_.empty(); }
  const std::map<Key, Int>& terms() const { return c_; }
  std::size_t term_count() const { return c_.size(); }
  Int coeff(int ex, int ey) const;

  BiLaurent swap_xy() const;
  // Substitute y := x.
  IntLaurent diagonal() const;
  // Evaluate at rational points.
  Rational eval(const Rational& x, const Rational& y) const;

  BiLaurent times_x_minus_y() const;
  // Exact quotient by (x - y); throws NotDivisible otherwise.
  BiLaurent div_x_minus_y() const;

  BiLaurent& operator+=(const BiLaurent& o);
  BiLaurent& operator-=(const BiLaurent& o);
  BiLaurent& operator*=(const Int& c);
  friend BiLaurent operator+(BiLaurent a, const BiLaurent& b) { return a += b; }
  friend BiLaurent operator-(BiLaurent a, const BiLaurent& b) { return a -= b; }
  friend BiLaurent operator*(const BiLaurent& a, const BiLaurent& b);
  friend BiLaurent operator*(BiLaurent a, const Int& c) { return a *= c; }
  friend BiLaurent operator*(const Int& c, BiLaurent a) { return a *= c; }
  BiLaurent operator-() const;
  friend bool operator==(const BiLaurent&, const BiLaurent&) = default;

  // Terms sorted by (x-exponent, y-exponent), e.g. "x^-1*y^-1 + 1" style.
  std::string str() const;

 private:
  void add_term(const Key& k, const Int& v);
  std::map<Key, Int> c_;
};

// (f(x)g(y) - f(y)g(x)) / (x - y).
BiLaurent bezoutian(const IntLaurent& f, const IntLaurent& g);

// f'g - fg'.
IntLaurent wronskian(const IntLaurent& f, const IntLaurent& g);

// 1 - (xy)^-1, the structure term of the Christoffel-Darboux sums.
BiLaurent one_minus_inv_xy();

}  // namespace cpx
