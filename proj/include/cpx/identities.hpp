#pragma once

#include "cpx/algebra/integer.hpp"
#include "cpx/coxeter.hpp"
#include "cpx/diagram.hpp"
#include "cpx/kostant.hpp"
#include "cpx/report.hpp"

#include <cstddef>
#include <vector>

namespace cpx {

// Bez(G, G\p) against the branch and cross terms of schur_step(d, pivot).
IdentityReport cd_coxeter(const Diagram& d, std::size_t pivot);
// Same with Wronskians and the structure term 1 - q^-2.
IdentityReport cd_wronskian(const Diagram& d, std::size_t pivot);

// A_k tail starting at the leaf `start`: C_i is the Coxeter polynomial with
// the first i tail vertices removed. Checks the three-term recurrence, the
// transfer-matrix form, the telescoped ratio, the continued fraction, and the
// Bezoutian and Wronskian sums for 1 <= i <= k-1.
std::vector<IdentityReport> chain_identities(const Diagram& d, std::size_t start, int k);

// Tail vertices v_1..v_k beginning at `start`; throws ShapeViolation.
std::vector<std::size_t> chain_tail(const Diagram& d, std::size_t start, int k);

// Bez(G#, H_ij) = sum_k H_ik(x) H_jk(y), and its diagonal limit
// Wr(G#, H_ij) = sum_k H_ik H_jk (which is sum_k H_ik^2 when i = j).
std::vector<IdentityReport> cd_char(const Diagram& d, std::size_t i, std::size_t j);
// Same with a precomputed cofactor table of d.
std::vector<IdentityReport> cd_char(const Diagram& d, const CofactorTable& h, std::size_t i, std::size_t j);

// The sampled Bezoutian matrix against (H_ik(x_l)) (H_jk(y_s))^t entrywise,
// and its determinant against the sum over m-subsets of minors.
IdentityReport binet_cauchy(const Diagram& d, std::size_t i, std::size_t j, const std::vector<Int>& xs,
                            const std::vector<Int>& ys);
IdentityReport binet_cauchy(const Diagram& d, const CofactorTable& h, std::size_t i, std::size_t j,
                            const std::vector<Int>& xs, const std::vector<Int>& ys);

// Bez(Z_-1, Z_0) = (1 - (xy)^-1) sum_k Z_k(x) Z_k(y), and the Wronskian form.
std::vector<IdentityReport> poincare_cd_root(const KleinGroupData& data);
// Bez(Z_(i->), Z_i) over the set Q_i, for ~D and ~E.
std::vector<IdentityReport> poincare_cd_branch(const KleinGroupData& data, int i);
// Bez(Z_(i-1), Z_i) + Bez(Z_(j+1), Z_j) = (1 - (xy)^-1) sum_(k=i..j) Z_k(x) Z_k(y)
// on the cycle, with Z_(n+1) = Z_0. 1 <= i <= j <= n.
std::vector<IdentityReport> poincare_cd_cycle(const KleinGroupData& data, int i, int j);
// Every applicable form for the type.
std::vector<IdentityReport> poincare_cd(const KleinGroupData& data);

}  // namespace cpx
