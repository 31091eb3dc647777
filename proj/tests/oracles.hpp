#pragma once

// Independent reference computations used by the tests. Nothing here calls
// the determinant, cofactor or series code under test.

#include "cpx/algebra/int_laurent.hpp"
#include "cpx/algebra/matrix.hpp"
#include "cpx/algebra/zpoly.hpp"
#include "cpx/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using cpx::Int;
using cpx::Rational;

// Leibniz expansion over all permutations.
template <class T>
T leibniz_det(const cpx::Matrix<T>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  T acc(0);
  do {
    int inv = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (p[a] > p[b]) ++inv;
    T term(1);
    for (std::size_t r = 0; r < n; ++r) term = term * m(r, p[r]);
    if (inv % 2) {
      acc = acc - term;
    } else {
      acc = acc + term;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return acc;
}

// Gaussian elimination over the rationals.
inline Rational rational_det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

// det((z-2)E + C) at a rational z, from the weights alone.
inline Rational char_value(const cpx::Diagram& d, const Rational& z) {
  const std::size_t n = d.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = i == j ? z : Rational(-d.weight(i, j));
  return rational_det(a);
}

// det(qS + q^-1 S^t) at a rational q, S built from the order by hand.
inline Rational coxeter_value(const cpx::Diagram& d, const Rational& q) {
  const std::size_t n = d.size();
  auto ord = d.order();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, 0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (r == c) {
        a[r][c] = q + 1 / q;
      } else {
        Rational w = -d.weight(ord[r], ord[c]);
        a[r][c] = r < c ? Rational(q * w) : Rational(w / q);
      }
    }
  return rational_det(a);
}

// A_n^# by the three-term recurrence, A_0 = 1, A_-1 = 0.
inline cpx::ZPoly chebyshev(int n) {
  cpx::ZPoly prev = 0, cur = 1;
  for (int k = 0; k < n; ++k) {
    cpx::ZPoly next = cpx::ZPoly::z() * cur - prev;
    prev = cur;
    cur = next;
  }
  return n < 0 ? cpx::ZPoly() : cur;
}

// Weighted walks of length k from i to j by explicit enumeration.
inline Int walk_count(const cpx::Diagram& d, std::size_t i, std::size_t j, int k) {
  if (k == 0) return i == j ? 1 : 0;
  Int s = 0;
  for (auto u : d.neighbors(i)) s += Int(d.weight(i, u)) * walk_count(d, u, j, k - 1);
  return s;
}

// Noncommutative polynomial as a map from words to coefficients.
using NCPoly = std::map<std::vector<int>, Int>;

inline NCPoly nc_mul(const NCPoly& a, const NCPoly& b, int order) {
  NCPoly r;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      if (static_cast<int>(wa.size() + wb.size()) > order) continue;
      std::vector<int> w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r[w] += ca * cb;
    }
  for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

// x_k -> 1 + u_k, x_k^-1 -> sum (-u_k)^m.
inline NCPoly nc_magnus(const std::vector<int>& word, int order) {
  NCPoly acc{{{}, 1}};
  for (int l : word) {
    NCPoly f{{{}, 1}};
    int k = l > 0 ? l : -l;
    if (l > 0) {
      f[{k}] = 1;
    } else {
      for (int m = 1; m <= order; ++m) f[std::vector<int>(static_cast<std::size_t>(m), k)] = m % 2 ? -1 : 1;
    }
    acc = nc_mul(acc, f, order);
  }
  return acc;
}

// Conway skein recursion for T(2,k), k >= 0, with z = q^-1 - q:
// C_k = z C_(k-1) + C_(k-2), C_0 = 0, C_1 = 1.
inline cpx::IntLaurent torus_conway(int k) {
  const cpx::IntLaurent z = cpx::IntLaurent::monomial(1, -1) - cpx::IntLaurent::q();
  cpx::IntLaurent a = 0, b = 1;
  if (k == 0) return a;
  for (int i = 1; i < k; ++i) {
    cpx::IntLaurent c = z * b + a;
    a = b;
    b = c;
  }
  return b;
}

// Multiplicity series of the cyclic group of order n+1 acting on Sym^k of
// the standard representation: weights k - 2j, j = 0..k, mod n+1.
inline std::vector<Int> cyclic_multiplicities(int n, int i, int terms) {
  std::vector<Int> out;
  const int m = n + 1;
  for (int k = 0; k <= terms; ++k) {
    Int c = 0;
    for (int j = 0; j <= k; ++j) {
      int w = ((k - 2 * j) % m + m) % m;
      if (w == i % m) ++c;
    }
    out.push_back(c);
  }
  return out;
}

// Marks of the null root (dimensions of the irreducible representations)
// in the builders' vertex numbering.
inline std::vector<int> null_root_marks(cpx::Family f, int n) {
  switch (f) {
    case cpx::Family::AffA: return std::vector<int>(static_cast<std::size_t>(n) + 1, 1);
    case cpx::Family::AffD: {
      std::vector<int> m(static_cast<std::size_t>(n) + 1, 2);
      m[0] = m[static_cast<std::size_t>(n - 2)] = m[static_cast<std::size_t>(n - 1)] = m[static_cast<std::size_t>(n)] = 1;
      return m;
    }
    default:
      if (n == 6) return {1, 2, 3, 2, 1, 2, 1};
      if (n == 7) return {1, 2, 3, 4, 3, 2, 1, 2};
      return {1, 2, 3, 4, 5, 6, 4, 2, 3};
  }
}

}  // namespace oracle
