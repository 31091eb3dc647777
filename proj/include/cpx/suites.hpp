#pragma once

#include "cpx/diagram.hpp"
#include "cpx/kostant.hpp"
#include "cpx/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cpx {

struct CaseResult {
  std::string suite;
  std::string id;
  IdentityReport report;
  double elapsed_ms = 0;
};

// Identity names accepted by verify_identity.
const std::vector<std::string>& identity_names();

// Runs one identity on every applicable vertex, pair or tail of d.
std::vector<CaseResult> verify_identity(const std::string& name, const Diagram& d);

// A_n, D_n, E_n and their affine versions up to the given rank.
std::vector<Diagram> standard_diagrams(int max_rank);

std::vector<CaseResult> random_tree_suite(const std::vector<std::string>& names, int count, int max_vertices,
                                          std::uint64_t seed);

// which: all, 14, 15, 16, 17, table, squares, walks, cd.
std::vector<CaseResult> kostant_suite(const KleinGroupData& data, const std::string& which, int walk_terms = 20);

std::vector<CaseResult> braid_suite(std::uint64_t seed, int pairs = 200);

// Random (A, B = 2B', C = AB') triples with blocks up to 3 x 3. A case holds
// when the Schur factorization holds; the displayed identity is recorded in
// the note.
std::vector<CaseResult> divide_suite(std::uint64_t seed, int count = 20);

std::vector<CaseResult> verify_all(std::uint64_t seed);

// Stable order by (suite, id).
void sort_cases(std::vector<CaseResult>& cases);

}  // namespace cpx
