#include "cpx/diagram.hpp"

#include "cpx/errors.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>

namespace cpx {

Diagram::Diagram(std::size_t n) : labels_(n), w_(n * n, 0), order_(n) {
  for (std::size_t v = 0; v < n; ++v) labels_[v] = std::to_string(v);
  std::iota(order_.begin(), order_.end(), 0);
}

Diagram::Diagram(std::vector<std::string> labels)
    : labels_(std::move(labels)), w_(labels_.size() * labels_.size(), 0), order_(labels_.size()) {
  std::iota(order_.begin(), order_.end(), 0);
}

void Diagram::check_vertex(std::size_t v) const {
  if (v >= size()) throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v) + " of " + std::to_string(size()));
}

const std::string& Diagram::label(std::size_t v) const {
  check_vertex(v);
  return labels_[v];
}

std::size_t Diagram::find(std::string_view label) const {
  for (std::size_t v = 0; v < size(); ++v)
    if (labels_[v] == label) return v;
  throw Error(Errc::UnknownVertex, "no vertex labelled " + std::string(label));
}

int Diagram::weight(std::size_t i, std::size_t j) const {
  check_vertex(i);
  check_vertex(j);
  return w_[i * size() + j];
}

void Diagram::set_weight(std::size_t i, std::size_t j, int w) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw Error(Errc::DomainError, "loops are not allowed");
  w_[i * size() + j] = w;
  w_[j * size() + i] = w;
}

std::vector<std::size_t> Diagram::neighbors(std::size_t v) const {
  check_vertex(v);
  std::vector<std::size_t> r;
  for (std::size_t u = 0; u < size(); ++u)
    if (w_[v * size() + u] != 0) r.push_back(u);
  return r;
}

std::size_t Diagram::edge_count() const {
  std::size_t e = 0;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (w_[i * size() + j] != 0) ++e;
  return e;
}

void Diagram::set_order(std::vector<std::size_t> order) {
  if (order.size() != size()) throw Error(Errc::SizeMismatch, "order length differs from vertex count");
  std::vector<bool> seen(size(), false);
  for (auto v : order) {
    check_vertex(v);
    if (seen[v]) throw Error(Errc::DomainError, "order repeats vertex " + std::to_string(v));
    seen[v] = true;
  }
  order_ = std::move(order);
}

std::vector<std::size_t> Diagram::positions() const {
  std::vector<std::size_t> p(size());
  for (std::size_t k = 0; k < size(); ++k) p[order_[k]] = k;
  return p;
}

Matrix<Int> Diagram::seifert() const {
  const std::size_t n = size();
  Matrix<Int> s(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    s(k, k) = 1;
    for (std::size_t l = k + 1; l < n; ++l) s(k, l) = -weight(order_[k], order_[l]);
  }
  return s;
}

Matrix<Int> Diagram::symmetric_form() const {
  Matrix<Int> s = seifert();
  return s + s.transpose();
}

Matrix<Int> Diagram::adjacency() const {
  const std::size_t n = size();
  Matrix<Int> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = w_[i * n + j];
  return a;
}

std::vector<std::vector<std::size_t>> Diagram::components() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(size(), false);
  for (std::size_t s = 0; s < size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (auto u : neighbors(v))
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Diagram::is_tree() const { return !empty() && is_connected() && edge_count() + 1 == size(); }

namespace {

Diagram path(std::size_t n) {
  Diagram d(n);
  for (std::size_t v = 0; v + 1 < n; ++v) d.add_edge(v, v + 1);
  return d;
}

}  // namespace

Diagram build(Family family, int n) {
  auto bad = [&](const char* what) { return Error(Errc::BadRank, std::string(what) + " with rank " + std::to_string(n)); };
  Diagram d;
  switch (family) {
    case Family::A:
      if (n < 0) throw bad("A");
      d = path(static_cast<std::size_t>(n));
      d.set_name("A" + std::to_string(n));
      break;
    case Family::D:
      if (n < 4) throw bad("D");
      d = Diagram(static_cast<std::size_t>(n));
      for (int v = 0; v + 1 < n - 1; ++v) d.add_edge(static_cast<std::size_t>(v), static_cast<std::size_t>(v + 1));
      d.add_edge(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n - 3));
      d.set_name("D" + std::to_string(n));
      break;
    case Family::E:
      if (n < 6 || n > 8) throw bad("E");
      d = Diagram(static_cast<std::size_t>(n));
      for (int v = 0; v + 1 < n - 1; ++v) d.add_edge(static_cast<std::size_t>(v), static_cast<std::size_t>(v + 1));
      d.add_edge(static_cast<std::size_t>(n - 1), 2);
      d.set_name("E" + std::to_string(n));
      break;
    case Family::AffA:
      if (n < 1) throw bad("~A");
      d = Diagram(static_cast<std::size_t>(n + 1));
      if (n == 1) {
        d.add_edge(0, 1, 2);
      } else {
        for (int v = 0; v <= n; ++v) d.add_edge(static_cast<std::size_t>(v), static_cast<std::size_t>((v + 1) % (n + 1)));
      }
      d.set_name("~A" + std::to_string(n));
      break;
    case Family::AffD: {
      if (n < 4) throw bad("~D");
      d = Diagram(static_cast<std::size_t>(n + 1));
      auto u = [](int v) { return static_cast<std::size_t>(v); };
      d.add_edge(0, 1);
      for (int v = 1; v < n - 3; ++v) d.add_edge(u(v), u(v + 1));
      d.add_edge(u(n - 2), 1);
      d.add_edge(u(n - 1), u(n - 3));
      d.add_edge(u(n), u(n - 3));
      d.set_name("~D" + std::to_string(n));
      break;
    }
    case Family::AffE:
      if (n == 6) {
        d = Diagram(7);
        d.add_edge(0, 1);
        d.add_edge(1, 2);
        d.add_edge(2, 3);
        d.add_edge(3, 4);
        d.add_edge(2, 5);
        d.add_edge(5, 6);
      } else if (n == 7) {
        d = Diagram(8);
        for (std::size_t v = 0; v < 6; ++v) d.add_edge(v, v + 1);
        d.add_edge(7, 3);
      } else if (n == 8) {
        d = Diagram(9);
        for (std::size_t v = 0; v < 7; ++v) d.add_edge(v, v + 1);
        d.add_edge(8, 5);
      } else {
        throw bad("~E");
      }
      d.set_name("~E" + std::to_string(n));
      break;
  }
  return d;
}

namespace {

bool split_name(std::string_view name, Family& family, int& n) {
  bool affine = false;
  if (!name.empty() && name.front() == '~') {
    affine = true;
    name.remove_prefix(1);
  }
  if (name.size() < 2) return false;
  char f = name.front();
  std::string_view digits = name.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) return false;
  if (digits.size() > 4) return false;
  n = std::stoi(std::string(digits));
  switch (f) {
    case 'A': family = affine ? Family::AffA : Family::A; return true;
    case 'D': family = affine ? Family::AffD : Family::D; return true;
    case 'E': family = affine ? Family::AffE : Family::E; return true;
    default: return false;
  }
}

}  // namespace

bool is_builtin_name(std::string_view name) {
  Family f;
  int n;
  return split_name(name, f, n);
}

Diagram build_named(std::string_view name) {
  Family f;
  int n;
  if (!split_name(name, f, n)) throw Error(Errc::BadType, "unknown diagram name " + std::string(name));
  return build(f, n);
}

Diagram delete_vertices(const Diagram& d, const std::vector<std::size_t>& remove) {
  std::vector<bool> gone(d.size(), false);
  for (auto v : remove) {
    d.check_vertex(v);
    gone[v] = true;
  }
  std::vector<std::size_t> keep;
  std::vector<std::size_t> index(d.size(), 0);
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < d.size(); ++v) {
    if (gone[v]) continue;
    index[v] = keep.size();
    keep.push_back(v);
    labels.push_back(d.label(v));
  }
  Diagram r(std::move(labels));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      int w = d.weight(keep[a], keep[b]);
      if (w != 0) r.set_weight(a, b, w);
    }
  std::vector<std::size_t> order;
  for (auto v : d.order())
    if (!gone[v]) order.push_back(index[v]);
  r.set_order(std::move(order));
  return r;
}

namespace {

// Copies parts into a fresh diagram after `offset` leading vertices.
Diagram assemble(const std::vector<const Diagram*>& parts, std::vector<std::string> head) {
  const std::size_t offset = head.size();
  std::vector<std::string> labels = std::move(head);
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (const auto& l : parts[p]->labels()) labels.push_back(std::to_string(p) + "." + l);
  Diagram r(std::move(labels));
  std::vector<std::size_t> order(offset);
  std::iota(order.begin(), order.end(), 0);
  std::size_t base = offset;
  for (const auto* part : parts) {
    for (std::size_t i = 0; i < part->size(); ++i)
      for (std::size_t j = i + 1; j < part->size(); ++j) {
        int w = part->weight(i, j);
        if (w != 0) r.set_weight(base + i, base + j, w);
      }
    for (auto v : part->order()) order.push_back(base + v);
    base += part->size();
  }
  r.set_order(std::move(order));
  return r;
}

}  // namespace

Diagram join(const std::vector<Marked>& parts) {
  std::vector<const Diagram*> ds;
  for (const auto& m : parts) {
    m.diagram.check_vertex(m.vertex);
    ds.push_back(&m.diagram);
  }
  Diagram r = assemble(ds, {"*"});
  std::size_t base = 1;
  for (const auto& m : parts) {
    r.add_edge(0, base + m.vertex, 1);
    base += m.diagram.size();
  }
  return r;
}

Diagram disjoint_union(const std::vector<Diagram>& parts) {
  std::vector<const Diagram*> ds;
  for (const auto& d : parts) ds.push_back(&d);
  return assemble(ds, {});
}

BipartiteResult bipartite_order(const Diagram& d) {
  const std::size_t n = d.size();
  std::vector<int> color(n, -1);
  std::vector<std::size_t> parent(n, n);
  BipartiteResult res;
  for (std::size_t s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      for (auto u : d.neighbors(v)) {
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          parent[u] = v;
          q.push(u);
        } else if (color[u] == color[v]) {
          // Odd cycle: tree paths from u and v to their common ancestor plus the edge.
          std::vector<std::size_t> pu{u}, pv{v};
          while (parent[pu.back()] != n) pu.push_back(parent[pu.back()]);
          while (parent[pv.back()] != n) pv.push_back(parent[pv.back()]);
          while (pu.size() > 1 && pv.size() > 1 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
            pu.pop_back();
            pv.pop_back();
          }
          res.odd_cycle.assign(pv.begin(), pv.end());
          res.odd_cycle.insert(res.odd_cycle.end(), pu.rbegin() + 1, pu.rend());
          return res;
        }
      }
    }
  }
  res.ok = true;
  for (int c = 0; c < 2; ++c)
    for (std::size_t v = 0; v < n; ++v)
      if (color[v] == c) res.order.push_back(v);
  return res;
}

Diagram parse_diagram(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_n = false;
  Diagram d;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "n") {
      long n;
      if (have_n || !(ls >> n) || n < 0) throw Error(Errc::ParseError, "bad header: " + line);
      d = Diagram(static_cast<std::size_t>(n));
      have_n = true;
    } else if (head == "order") {
      if (!have_n) throw Error(Errc::ParseError, "order before header");
      std::vector<std::size_t> order;
      long v;
      while (ls >> v) {
        if (v < 0) throw Error(Errc::ParseError, "negative vertex in order");
        order.push_back(static_cast<std::size_t>(v));
      }
      d.set_order(std::move(order));
    } else {
      if (!have_n) throw Error(Errc::ParseError, "edge before header");
      long i, j, w;
      std::istringstream es(line);
      if (!(es >> i >> j >> w) || i < 0 || j < 0) throw Error(Errc::ParseError, "bad edge line: " + line);
      std::string extra;
      if (es >> extra) throw Error(Errc::ParseError, "trailing text: " + line);
      d.set_weight(static_cast<std::size_t>(i), static_cast<std::size_t>(j), static_cast<int>(w));
    }
  }
  if (!have_n) throw Error(Errc::ParseError, "missing header line \"n <count>\"");
  return d;
}

std::string to_text(const Diagram& d) {
  std::ostringstream out;
  out << "n " << d.size() << "\n";
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (d.weight(i, j) != 0) out << i << " " << j << " " << d.weight(i, j) << "\n";
  out << "order";
  for (auto v : d.order()) out << " " << v;
  out << "\n";
  return out.str();
}

Diagram load_diagram(std::string_view spec) {
  if (is_builtin_name(spec)) return build_named(spec);
  std::ifstream in{std::string(spec)};
  if (!in) throw Error(Errc::UsageError, "not a diagram name or readable file: " + std::string(spec));
  std::stringstream buf;
  buf << in.rdbuf();
  Diagram d = parse_diagram(buf.str());
  d.set_name(std::string(spec));
  return d;
}

Diagram random_tree(std::mt19937_64& rng, std::size_t n, int max_weight) {
  Diagram d(n);
  for (std::size_t v = 1; v < n; ++v) {
    std::size_t parent = static_cast<std::size_t>(rng() % v);
    int w = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_weight));
    d.add_edge(v, parent, w);
  }
  return d;
}

}  // namespace cpx
