#include "cpx/coxeter.hpp"

#include "cpx/errors.hpp"

#include <omp.h>

namespace cpx {

namespace {

const IntLaurent& zq() {
  static const IntLaurent z = IntLaurent::q() + IntLaurent::monomial(1, -1);
  return z;
}

}  // namespace

Matrix<IntLaurent> coxeter_matrix(const Diagram& d) {
  const std::size_t n = d.size();
  const auto& ord = d.order();
  Matrix<IntLaurent> m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    m(k, k) = zq();
    for (std::size_t l = k + 1; l < n; ++l) {
      int a = d.weight(ord[k], ord[l]);
      if (a == 0) continue;
      m(k, l) = IntLaurent::monomial(-a, 1);
      m(l, k) = IntLaurent::monomial(-a, -1);
    }
  }
  return m;
}

IntLaurent coxeter_poly(const Diagram& d) { return det_exact(coxeter_matrix(d)); }

Matrix<ZPoly> char_matrix(const Diagram& d) {
  const std::size_t n = d.size();
  Matrix<ZPoly> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = ZPoly::z();
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && d.weight(i, j) != 0) m(i, j) = ZPoly(-d.weight(i, j));
  }
  return m;
}

ZPoly char_poly(const Diagram& d) { return det_exact(char_matrix(d)); }

IntLaurent SchurStep::reassemble() const {
  IntLaurent g = zq() * head;
  for (const auto& b : branches) g -= b.poly * b.weight;
  for (const auto& c : cross) g -= c.P * c.weight;
  return g;
}

SchurStep schur_step(const Diagram& d, std::size_t pivot) {
  d.check_vertex(pivot);
  SchurStep st;
  st.pivot = pivot;
  Diagram rest = delete_vertices(d, {pivot});
  st.head = coxeter_poly(rest);

  // Vertex v of d (v != pivot) is vertex v - (v > pivot) of rest.
  auto rest_id = [&](std::size_t v) { return v - (v > pivot ? 1 : 0); };
  const auto pos = d.positions();
  const auto rest_pos = rest.positions();
  auto after = [&](std::size_t v) { return pos[v] > pos[pivot] ? 1 : -1; };

  std::vector<std::size_t> nb = d.neighbors(pivot);
  for (auto i : nb) {
    Int a = d.weight(pivot, i);
    st.branches.push_back({i, a * a, coxeter_poly(delete_vertices(d, {pivot, i}))});
  }
  if (nb.size() > 1) {
    Matrix<IntLaurent> n = coxeter_matrix(rest);
    for (auto i : nb)
      for (auto j : nb) {
        if (i == j) continue;
        IntLaurent c = cofactor(n, rest_pos[rest_id(i)], rest_pos[rest_id(j)]);
        if (c.is_zero()) continue;
        Int w = Int(d.weight(pivot, i)) * d.weight(pivot, j);
        st.cross.push_back({i, j, w, c.shift(after(j) - after(i))});
      }
  }
  return st;
}

IntLaurent join_poly(const std::vector<Marked>& parts) {
  std::vector<IntLaurent> t, tbar;
  for (const auto& m : parts) {
    m.diagram.check_vertex(m.vertex);
    t.push_back(coxeter_poly(m.diagram));
    tbar.push_back(coxeter_poly(delete_vertices(m.diagram, {m.vertex})));
  }
  IntLaurent prod = 1;
  for (const auto& x : t) prod *= x;
  IntLaurent g = zq() * prod;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    IntLaurent term = tbar[j];
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (i != j) term *= t[i];
    g -= term;
  }
  return g;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> upper_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

}  // namespace

CofactorTable cofactors(const Diagram& d) {
  const Matrix<ZPoly> m = char_matrix(d);
  const std::size_t n = d.size();
  const auto pairs = upper_pairs(n);
  Matrix<ZPoly> h(n, n);
  if (n <= 1) {
    if (n == 1) h(0, 0) = 1;
    return CofactorTable(std::move(h), det_exact(m));
  }
  const long count = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) {
    auto [i, j] = pairs[static_cast<std::size_t>(k)];
    h(i, j) = cofactor(m, i, j);
  }
  for (auto [i, j] : pairs) h(j, i) = h(i, j);
  // Expansion along row 0 reuses the table for the determinant.
  ZPoly det;
  for (std::size_t j = 0; j < n; ++j) det += m(0, j) * h(0, j);
  return CofactorTable(std::move(h), std::move(det));
}

CofactorTable cofactors_serial(const Diagram& d) {
  const Matrix<ZPoly> m = char_matrix(d);
  const std::size_t n = d.size();
  Matrix<ZPoly> h(n, n);
  if (n <= 1) {
    if (n == 1) h(0, 0) = 1;
    return CofactorTable(std::move(h), det_exact(m));
  }
  for (auto [i, j] : upper_pairs(n)) {
    h(i, j) = cofactor(m, i, j);
    h(j, i) = h(i, j);
  }
  ZPoly det;
  for (std::size_t j = 0; j < n; ++j) det += m(0, j) * h(0, j);
  return CofactorTable(std::move(h), std::move(det));
}

ZPoly path_sum_H(const Diagram& d, std::size_t i, std::size_t j) {
  d.check_vertex(i);
  d.check_vertex(j);
  ZPoly total;
  std::vector<std::size_t> path{i};
  std::vector<bool> on(d.size(), false);
  on[i] = true;
  auto visit = [&](auto&& self, std::size_t v, const Int& w) -> void {
    if (v == j) {
      total += char_poly(delete_vertices(d, path)) * w;
      return;
    }
    for (auto u : d.neighbors(v)) {
      if (on[u]) continue;
      on[u] = true;
      path.push_back(u);
      self(self, u, w * d.weight(v, u));
      path.pop_back();
      on[u] = false;
    }
  };
  visit(visit, i, Int(1));
  return total;
}

std::vector<Int> walk_gf(const Diagram& d, std::size_t i, std::size_t j, int K) {
  d.check_vertex(i);
  d.check_vertex(j);
  const Matrix<Int> a = d.adjacency();
  const std::size_t n = d.size();
  // Row vector e_i A^k.
  std::vector<Int> row(n, Int(0));
  row[i] = 1;
  std::vector<Int> out;
  for (int k = 0; k <= K; ++k) {
    out.push_back(row[j]);
    std::vector<Int> next(n, Int(0));
    for (std::size_t s = 0; s < n; ++s) {
      if (row[s] == 0) continue;
      for (std::size_t t = 0; t < n; ++t)
        if (a(s, t) != 0) next[t] += row[s] * a(s, t);
    }
    row = std::move(next);
  }
  return out;
}

std::vector<Rational> walk_expansion(const Diagram& d, std::size_t i, std::size_t j, int K) {
  CofactorTable h = cofactors(d);
  return expand_at_infinity(h(i, j), h.det(), K);
}

ZPoly identity7_check(const Diagram& d, std::size_t i, std::size_t j) {
  if (i == j) throw Error(Errc::DomainError, "cofactor square identity needs distinct vertices");
  d.check_vertex(i);
  d.check_vertex(j);
  CofactorTable h = cofactors(d);
  ZPoly gi = char_poly(delete_vertices(d, {i}));
  ZPoly gj = char_poly(delete_vertices(d, {j}));
  ZPoly gij = char_poly(delete_vertices(d, {i, j}));
  return h(i, j) * h(i, j) - (gi * gj - h.det() * gij);
}

}  // namespace cpx
