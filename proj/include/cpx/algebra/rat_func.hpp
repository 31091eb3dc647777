#pragma once

#include "cpx/algebra/int_laurent.hpp"
#include "cpx/algebra/zpoly.hpp"
#include "cpx/errors.hpp"

#include <string>

namespace cpx {

// Reduce num/den in place: cancel the gcd, strip common integer content and
// make the denominator's leading coefficient positive. For Laurent input the
// denominator is left as a polynomial with nonzero constant term.
void normalize_fraction(ZPoly& num, ZPoly& den);
void normalize_fraction(IntLaurent& num, IntLaurent& den);

template <class P>
class RatFunc {
 public:
  RatFunc() : num_(0), den_(1) {}
  RatFunc(const P& p) : num_(p), den_(1) {}
  RatFunc(P num, P den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(Errc::ZeroDenominator, "rational function with zero denominator");
    normalize_fraction(num_, den_);
  }

  const P& num() const { return num_; }
  const P& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc inverse() const { return RatFunc(den_, num_); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw Error(Errc::ZeroDenominator, "division by a zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc operator-() const { return RatFunc(-num_, den_); }

  // Both sides are reduced, so equality is structural.
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string str() const {
    if (den_ == P(1)) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
  }

 private:
  P num_;
  P den_;
};

using RatZ = RatFunc<ZPoly>;
using RatQ = RatFunc<IntLaurent>;

}  // namespace cpx

namespace cpx {

// num(q + 1/q) / den(q + 1/q).
RatQ z_substitute(const RatZ& f);

}  // namespace cpx
