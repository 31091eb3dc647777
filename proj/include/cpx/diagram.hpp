#pragma once

#include "cpx/algebra/integer.hpp"
#include "cpx/algebra/matrix.hpp"

#include <cstddef>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace cpx {

enum class Family { A, D, E, AffA, AffD, AffE };

// Finite graph without loops or multiple edges, symmetric integer edge
// weights, and an explicit vertex order used to build matrices.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(std::size_t n);
  explicit Diagram(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t v) const;
  std::size_t find(std::string_view label) const;

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  int weight(std::size_t i, std::size_t j) const;
  void set_weight(std::size_t i, std::size_t j, int w);
  void add_edge(std::size_t i, std::size_t j, int w = 1) { set_weight(i, j, w); }

  std::vector<std::size_t> neighbors(std::size_t v) const;
  std::size_t degree(std::size_t v) const { return neighbors(v).size(); }
  std::size_t edge_count() const;

  // order()[k] is the vertex placed at matrix position k.
  const std::vector<std::size_t>& order() const { return order_; }
  void set_order(std::vector<std::size_t> order);
  std::vector<std::size_t> positions() const;

  // Upper unitriangular, -a_ij above the diagonal, rows in order().
  Matrix<Int> seifert() const;
  // C = S + S^t, in order().
  Matrix<Int> symmetric_form() const;
  // Weight matrix indexed by vertex id.
  Matrix<Int> adjacency() const;

  std::vector<std::vector<std::size_t>> components() const;
  bool is_connected() const { return components().size() <= 1; }
  bool is_tree() const;

  void check_vertex(std::size_t v) const;

 private:
  std::vector<std::string> labels_;
  std::vector<int> w_;
  std::vector<std::size_t> order_;
  std::string name_;
};

Diagram build(Family family, int n);

// "A5", "D7", "E8", "~A4", "~D6", "~E7".
Diagram build_named(std::string_view name);
bool is_builtin_name(std::string_view name);

// Induced subdiagram on the remaining vertices, order inherited.
Diagram delete_vertices(const Diagram& d, const std::vector<std::size_t>& remove);

struct Marked {
  Diagram diagram;
  std::size_t vertex;
};

// New vertex "*" at index 0 joined by weight-1 edges to every marked vertex.
// Part vertices are relabeled "<part>.<label>".
Diagram join(const std::vector<Marked>& parts);
Diagram disjoint_union(const std::vector<Diagram>& parts);

struct BipartiteResult {
  bool ok = false;
  std::vector<std::size_t> order;
  std::vector<std::size_t> odd_cycle;
};

BipartiteResult bipartite_order(const Diagram& d);

// Text format: "n <count>", then "i j w" per edge, optional "order i0 i1 ...".
Diagram parse_diagram(std::string_view text);
std::string to_text(const Diagram& d);
// Built-in name or path to a diagram file.
Diagram load_diagram(std::string_view spec);

// Vertex k > 0 attaches to a uniformly chosen earlier vertex; weights are
// drawn from 1..max_weight.
Diagram random_tree(std::mt19937_64& rng, std::size_t n, int max_weight = 2);

}  // namespace cpx
