#pragma once

#include "cpx/algebra/int_laurent.hpp"
#include "cpx/algebra/matrix.hpp"
#include "cpx/algebra/rat_func.hpp"
#include "cpx/algebra/trunc_series.hpp"
#include "cpx/magnus.hpp"
#include "cpx/report.hpp"

#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace cpx {

// Word in the braid group B_n; letter +-k is sigma_k^(+-1), 1 <= k < n.
struct BraidWord {
  int strands = 1;
  std::vector<int> word;

  BraidWord() = default;
  BraidWord(int strands, std::vector<int> word);

  // Tokens "sK" / "-sK" separated by whitespace.
  static BraidWord parse(std::string_view text, int strands);

  BraidWord inverse() const;
  BraidWord operator*(const BraidWord& o) const;
  // perm[p] is the strand that ends at position p.
  std::vector<int> permutation() const;
  bool is_pure() const;
  std::string str() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

BraidWord random_braid(std::mt19937_64& rng, int strands, std::size_t length);

enum class BurauKind { Unreduced, Reduced };

// Entries are Laurent polynomials in t.
using BurauImage = Matrix<IntLaurent>;

BurauImage burau(const BraidWord& b, BurauKind kind);
BurauImage burau_generator(int strands, int letter, BurauKind kind);

// det(E - beta(b)).
IntLaurent burau_det(const BraidWord& b, BurauKind kind = BurauKind::Reduced);
// det(E - beta(L)) / det(E - beta(B L)); throws ZeroDenominator when the
// second determinant vanishes.
RatQ det_ratio(const BraidWord& L, const BraidWord& B, BurauKind kind = BurauKind::Reduced);

// Images of x_1..x_n under the Artin action; sigma_k sends x_k to
// x_k x_(k+1) x_k^-1 and x_(k+1) to x_k.
std::vector<FreeWord> artin_action(const BraidWord& b);

// Longitudes of a pure braid, normalized to total exponent sum zero.
std::vector<FreeWord> longitudes(const BraidWord& b);

// Half the signed crossing count of strands i and j (1-based) of a pure braid.
int linking_number(const BraidWord& b, int i, int j);

struct MilnorTable {
  int strands = 0;
  int order = 0;
  // (i_1, ..., i_r, i) -> mu, only nonzero entries.
  std::map<std::vector<int>, Int> mu;

  Int at(const std::vector<int>& indices) const;
};

// mu_(i_1..i_r, i) is the coefficient of u_(i_1)...u_(i_r) in the Magnus
// expansion of the i-th longitude, r + 1 <= order.
MilnorTable milnor(const BraidWord& b, int order);

// Alexander-Conway polynomial (-1)^n det(qS - q^-1 S^t) of a Seifert matrix.
IntLaurent alexander_conway(const Matrix<Int>& seifert);
// Catalogued values: "unknot", "unlink", "hopf", "trefoil", "T(2,k)".
IntLaurent alexander_conway_named(std::string_view name);
// Vertical closure of a 2-strand braid, from the catalogue.
IntLaurent alexander_conway_closure(const BraidWord& b);
// Horizontal closure of a pure 2-strand braid (always the unknot).
IntLaurent alexander_conway_horizontal(const BraidWord& b);

// A(q) with q = (1 + u)^(1/2).
TruncSeries conway_in_u(const IntLaurent& a, int order);

struct LevinResult {
  IdentityReport report;
  TruncSeries lhs;
  TruncSeries rhs;
  int unit_sign = 1;
  int unit_power = 0;  // lhs = sign * q^power * rhs
  bool degenerate = false;
};

// A_V / A_H against (1 + u)^(1/2) sum_k (sum mu_(i_1..i_k, 1, 1)) u^(k+1)
// through u^order, up to a unit +-q^k.
LevinResult levin_check(const BraidWord& b, int order);

// Matches a Burau determinant ratio in t = q^2 against an Alexander-Conway
// ratio in q; sets the unit so that conway = sign * q^power * burau.
struct UnitMatch {
  bool equal = false;
  int sign = 1;
  int power = 0;
};
UnitMatch match_up_to_unit(const RatQ& burau_ratio_t, const RatQ& conway_ratio_q);

}  // namespace cpx
