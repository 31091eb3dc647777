#pragma once

#include "cpx/algebra/det.hpp"
#include "cpx/algebra/int_laurent.hpp"
#include "cpx/algebra/matrix.hpp"
#include "cpx/algebra/rat_func.hpp"
#include "cpx/algebra/zpoly.hpp"
#include "cpx/diagram.hpp"

#include <cstddef>
#include <vector>

namespace cpx {

// qS + q^-1 S^t in the diagram's order.
Matrix<IntLaurent> coxeter_matrix(const Diagram& d);
IntLaurent coxeter_poly(const Diagram& d);

// (z-2)E + C indexed by vertex id: z on the diagonal, -a_ij elsewhere.
Matrix<ZPoly> char_matrix(const Diagram& d);
ZPoly char_poly(const Diagram& d);

struct CrossTerm {
  std::size_t i;
  std::size_t j;
  Int weight;  // a_pi * a_pj
  IntLaurent P;
};

struct BranchTerm {
  std::size_t i;
  Int weight;  // a_pi^2
  IntLaurent poly;  // coxeter_poly(d minus {p, i})
};

// G = z * head - sum branches - sum cross.
struct SchurStep {
  std::size_t pivot;
  IntLaurent head;
  std::vector<BranchTerm> branches;
  std::vector<CrossTerm> cross;

  IntLaurent reassemble() const;
};

// P_ij = q^(e_j - e_i) * cofactor_ij of the pivot-deleted matrix, where
// e_k = +1 when k comes after the pivot in the order and -1 otherwise.
// For the first vertex in the order this is the plain cofactor.
SchurStep schur_step(const Diagram& d, std::size_t pivot);

// z * prod T_i - sum_j Tbar_j prod_{i != j} T_i.
IntLaurent join_poly(const std::vector<Marked>& parts);

class CofactorTable {
 public:
  CofactorTable() = default;
  explicit CofactorTable(Matrix<ZPoly> h, ZPoly det) : h_(std::move(h)), det_(std::move(det)) {}

  std::size_t size() const { return h_.rows(); }
  const ZPoly& operator()(std::size_t i, std::size_t j) const { return h_(i, j); }
  const Matrix<ZPoly>& matrix() const { return h_; }
  // char_poly of the diagram.
  const ZPoly& det() const { return det_; }

  friend bool operator==(const CofactorTable&, const CofactorTable&) = default;

 private:
  Matrix<ZPoly> h_;
  ZPoly det_;
};

// Entries are computed in parallel over (i, j) pairs with OpenMP.
CofactorTable cofactors(const Diagram& d);
// Single-threaded reference with the same result.
CofactorTable cofactors_serial(const Diagram& d);

// Sum over simple paths Q from i to j of a(Q) * char_poly(d minus Q).
ZPoly path_sum_H(const Diagram& d, std::size_t i, std::size_t j);

// (A^k)_ij for k = 0..K with A the weight matrix.
std::vector<Int> walk_gf(const Diagram& d, std::size_t i, std::size_t j, int K);
// Coefficients of z^(-k-1) in H_ij / char_poly at z = infinity.
std::vector<Rational> walk_expansion(const Diagram& d, std::size_t i, std::size_t j, int K);

// H_ij^2 - (G_{\i} G_{\j} - G G_{\ij}), which vanishes identically.
ZPoly identity7_check(const Diagram& d, std::size_t i, std::size_t j);

struct DivideReport {
  std::size_t p = 0, r = 0, s = 0;
  IntLaurent G;
  // G det(M11)^(s-1) = det(det(M11) z E - M21 adj(M11) M12).
  bool schur_holds = false;
  // Displayed identity, both sides as reduced rational functions in z.
  RatZ lhs;
  RatZ rhs;
  bool equal = false;
};

// Blocks A (p x r), B (r x s), C (p x s) with AB = 2C; d is taken as s.
DivideReport divide_identity(const Matrix<Int>& A, const Matrix<Int>& B, const Matrix<Int>& C);
// The 3x3 block matrix built from A, B, C.
Matrix<IntLaurent> divide_matrix(const Matrix<Int>& A, const Matrix<Int>& B, const Matrix<Int>& C);

}  // namespace cpx
