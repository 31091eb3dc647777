#include "cpx/algebra/rat_func.hpp"

namespace cpx {

void normalize_fraction(ZPoly& num, ZPoly& den) {
  if (num.is_zero()) {
    den = 1;
    return;
  }
  ZPoly g = gcd(num, den);
  if (g.degree() > 0) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  Int c = boost::multiprecision::gcd(num.content(), den.content());
  if (den.leading() < 0) c = -c;
  if (c != 1) {
    num = exact_div(num, c);
    den = exact_div(den, c);
  }
}

void normalize_fraction(IntLaurent& num, IntLaurent& den) {
  if (num.is_zero()) {
    den = 1;
    return;
  }
  auto [sn, pn] = num.split();
  auto [sd, pd] = den.split();
  normalize_fraction(pn, pd);
  num = IntLaurent::from_poly(pn, sn - sd);
  den = IntLaurent::from_poly(pd);
}

}  // namespace cpx

namespace cpx {

RatQ z_substitute(const RatZ& f) { return RatQ(z_substitute(f.num()), z_substitute(f.den())); }

}  // namespace cpx
