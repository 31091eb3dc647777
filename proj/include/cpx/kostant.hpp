#pragma once

#include "cpx/algebra/int_laurent.hpp"
#include "cpx/algebra/rat_func.hpp"
#include "cpx/algebra/trunc_series.hpp"
#include "cpx/diagram.hpp"
#include "cpx/report.hpp"

#include <string>
#include <vector>

namespace cpx {

// Poincare series data of the Klein group attached to an affine diagram.
struct KleinGroupData {
  std::string type;  // "~E8" etc.
  Family family = Family::AffA;
  int n = 0;  // rank; vertices are 0..n
  int a = 0;
  int b = 0;
  int h = 0;
  Int orderB = 0;
  std::vector<IntLaurent> Z;  // indexed by vertex
  IntLaurent Zminus1;         // q^-1 (1 - q^a)(1 - q^b)
  Diagram diagram;

  // (1 - q^a)(1 - q^b).
  IntLaurent denominator() const;
  // Z_i for -1 <= i <= n.
  const IntLaurent& z(int i) const;
  // P_i = Z_i / ((1 - q^a)(1 - q^b)); P_-1 = q^-1.
  RatQ P(int i) const;
};

KleinGroupData klein_data(Family family, int n);
KleinGroupData klein_data(const std::string& type);

// Z_i = (1 + q^h) H_i0 / H_00 from the cofactor table of the affine diagram.
std::vector<IntLaurent> z_from_cramer(const KleinGroupData& data);

// The char polynomial of the affine diagram, the cofactor H_-1,0.
ZPoly h_minus1(const KleinGroupData& data);

TruncSeries poincare_series(const KleinGroupData& data, int i, int terms);

// which is 14, 15 or 16.
IdentityReport verify_system(const KleinGroupData& data, int which);

// Z_i H_j0 = Z_j H_i0 for every pair (the -1 vertex included) and
// q P_i H_-1,0 = H_i0 for every vertex.
std::vector<IdentityReport> ebeling_ratios(const KleinGroupData& data);

// The transcribed table against the Cramer recomputation.
IdentityReport table_check(const KleinGroupData& data);

// q ~A_2m^#(q + 1/q) = q^-2m (q^(2m+1) - 1)^2 for the cycle's characteristic
// polynomial (the recurrence value z - 2 when m = 0).
IdentityReport a2m_closed_form(int m);
// F_m = z^(2m+1) - sum_(i=1..m) C(2m+1, i) R_(m-i) - 2 with R_0 = z. As printed
// R_k = F_k; the corrected form uses R_k = F_k + 2 = q^(2k+1) + q^-(2k+1).
ZPoly a2m_recurrence(int m, bool corrected = false);
// The recurrence against the characteristic polynomial of the cycle, m >= 1.
IdentityReport a2m_recurrence_check(int m, bool corrected = false);

// P_i^2 q H_-1,0 = P_0 Ttilde_i - q^-1 T_i, checked after clearing denominators.
IdentityReport prop2_squares(const KleinGroupData& data, int i);

// Expansion of H_i0 / H_-1,0 at z = infinity against walk counts d_i0^k.
IdentityReport walk_series_check(const KleinGroupData& data, int i, int K);

// s with s^2 = (h + 2)^2 - 8|B|.
Int perfect_square_check(const KleinGroupData& data);

// Parent of i on the shortest path towards the auxiliary vertex; -1 for i = 0.
int toward_root(const KleinGroupData& data, int i);
// Vertices whose shortest path to -1 passes through i.
std::vector<int> q_set(const KleinGroupData& data, int i);

// P_j / P_(j->) for j = 0..n, trees only.
std::vector<RatQ> ratio_chain(const KleinGroupData& data);

}  // namespace cpx
