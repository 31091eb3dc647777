#pragma once

#include "cpx/algebra/integer.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace cpx {

// Free-group word: letters +-k stand for x_k^(+-1), k >= 1.
using FreeWord = std::vector<int>;

FreeWord free_reduce(const FreeWord& w);
FreeWord free_inverse(const FreeWord& w);
FreeWord free_concat(const FreeWord& a, const FreeWord& b);
int exponent_sum(const FreeWord& w);
int exponent_sum(const FreeWord& w, int generator);
// "x1 x2 x1^-1"; the empty word is "1".
std::string free_str(const FreeWord& w);

// Truncated series in noncommuting u_1..u_n with integer coefficients.
// Words of length L are stored densely with base-n indices.
class MagnusSeries {
 public:
  MagnusSeries() = default;
  MagnusSeries(int n, int order);

  static MagnusSeries one(int n, int order);
  // 1 + u_k or its inverse 1 - u_k + u_k^2 - ... for letter +-k.
  static MagnusSeries letter(int n, int order, int signed_letter);

  int variables() const { return n_; }
  int order() const { return order_; }

  // Letters are 1-based.
  Int coeff(const std::vector<int>& word) const;
  void set(const std::vector<int>& word, const Int& v);
  const std::vector<Int>& bucket(int length) const { return c_[static_cast<std::size_t>(length)]; }

  // Right multiplication by a generator, cheaper than a full product.
  MagnusSeries& mul_letter(int signed_letter);

  friend bool operator==(const MagnusSeries&, const MagnusSeries&) = default;
  MagnusSeries operator-(const MagnusSeries& o) const;

  // Nonzero terms, shortest first, e.g. "1 + u1 - u1*u2".
  std::string str() const;
  std::size_t term_count() const;

 private:
  friend MagnusSeries multiply(const MagnusSeries&, const MagnusSeries&);
  friend MagnusSeries multiply_serial(const MagnusSeries&, const MagnusSeries&);
  int n_ = 0;
  int order_ = 0;
  std::vector<std::vector<Int>> c_;
};

// Buckets of the product are filled in parallel with OpenMP.
MagnusSeries multiply(const MagnusSeries& a, const MagnusSeries& b);
MagnusSeries multiply_serial(const MagnusSeries& a, const MagnusSeries& b);
inline MagnusSeries operator*(const MagnusSeries& a, const MagnusSeries& b) { return multiply(a, b); }

// x_k -> 1 + u_k, truncated at total degree order.
MagnusSeries magnus(const FreeWord& w, int n, int order);

}  // namespace cpx
