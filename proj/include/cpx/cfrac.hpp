#pragma once

#include "cpx/algebra/rat_func.hpp"
#include "cpx/diagram.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace cpx {

// Branching continued fraction. A Branch node has value
// 1 / (z - sum_k weight_k * value(child_k)); a Closing node has value 1/r.
struct CFrac {
  enum class Kind { Branch, Closing };

  Kind kind = Kind::Branch;
  std::string label;
  std::vector<Int> weights;
  std::vector<CFrac> children;
  RatZ closing;

  static CFrac leaf(std::string label) { return CFrac{Kind::Branch, std::move(label), {}, {}, RatZ()}; }
  static CFrac close(const RatZ& r) { return CFrac{Kind::Closing, "r", {}, {}, r}; }
};

// Expansion of prod(components of d minus root) / d rooted at `root`;
// each child edge carries weight a^2.
CFrac expand_tree(const Diagram& d, std::size_t root);

// Two-branch fraction for A_n / ~A_n cut after `depth` steps
// (default floor(n/2)), closed by r = 1/G_depth.
CFrac expand_cycle(int n, int depth = -1);

RatZ evaluate(const CFrac& c);

// Occurrences of z, not counting any inside closing terms.
std::size_t z_count(const CFrac& c);

// Node labelled `label` in the expansion, or nullptr.
const CFrac* find_node(const CFrac& c, const std::string& label);

enum class CFracFormat { Ascii, Latex };
std::string render(const CFrac& c, CFracFormat format);

}  // namespace cpx
