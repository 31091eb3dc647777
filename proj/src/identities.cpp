#include "cpx/identities.hpp"

#include "cpx/algebra/det.hpp"
#include "cpx/coxeter.hpp"
#include "cpx/errors.hpp"

#include <algorithm>
#include <functional>

namespace cpx {

namespace {

const IntLaurent& zq() {
  static const IntLaurent z = IntLaurent::q() + IntLaurent::monomial(1, -1);
  return z;
}

IntLaurent wr_structure() { return IntLaurent(1) - IntLaurent::monomial(1, -2); }

std::string vname(const Diagram& d, std::size_t v) { return d.name() + " vertex " + d.label(v); }

IntLaurent as_laurent(const ZPoly& p) { return IntLaurent::from_poly(p); }

template <class F>
void for_each_subset(std::size_t n, std::size_t m, F f) {
  std::vector<std::size_t> idx(m);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
    if (pos == m) {
      f(idx);
      return;
    }
    for (std::size_t k = from; k + (m - pos) <= n; ++k) {
      idx[pos] = k;
      rec(pos + 1, k + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

IdentityReport cd_coxeter(const Diagram& d, std::size_t pivot) {
  d.check_vertex(pivot);
  SchurStep s = schur_step(d, pivot);
  IntLaurent G = coxeter_poly(d);
  BiLaurent rhs = one_minus_inv_xy() * BiLaurent::outer(s.head, s.head);
  for (const auto& b : s.branches) rhs += b.weight * bezoutian(s.head, b.poly);
  for (const auto& c : s.cross) rhs += c.weight * bezoutian(s.head, c.P);
  return make_report("eq4", vname(d, pivot), bezoutian(G, s.head), rhs);
}

IdentityReport cd_wronskian(const Diagram& d, std::size_t pivot) {
  d.check_vertex(pivot);
  SchurStep s = schur_step(d, pivot);
  IntLaurent G = coxeter_poly(d);
  IntLaurent rhs = wr_structure() * s.head * s.head;
  for (const auto& b : s.branches) rhs += b.weight * wronskian(s.head, b.poly);
  for (const auto& c : s.cross) rhs += c.weight * wronskian(s.head, c.P);
  return make_report("eq5", vname(d, pivot), wronskian(G, s.head), rhs);
}

std::vector<std::size_t> chain_tail(const Diagram& d, std::size_t start, int k) {
  d.check_vertex(start);
  if (k < 1) throw Error(Errc::ShapeViolation, "tail length must be positive");
  std::vector<std::size_t> tail{start};
  while (static_cast<int>(tail.size()) < k) {
    std::size_t v = tail.back();
    auto nb = d.neighbors(v);
    std::size_t prev = tail.size() > 1 ? tail[tail.size() - 2] : d.size();
    std::vector<std::size_t> fwd;
    for (auto u : nb)
      if (u != prev) fwd.push_back(u);
    if (fwd.size() != 1 || d.weight(v, fwd[0]) != 1 || (prev != d.size() && d.weight(v, prev) != 1))
      throw Error(Errc::ShapeViolation, "vertex " + d.label(v) + " is not an inner vertex of an A-tail");
    if (std::find(tail.begin(), tail.end(), fwd[0]) != tail.end())
      throw Error(Errc::ShapeViolation, "tail closes into a cycle at " + d.label(fwd[0]));
    tail.push_back(fwd[0]);
  }
  return tail;
}

std::vector<IdentityReport> chain_identities(const Diagram& d, std::size_t start, int k) {
  auto tail = chain_tail(d, start, k);
  std::vector<IntLaurent> C;
  for (int i = 0; i <= k; ++i)
    C.push_back(coxeter_poly(delete_vertices(d, std::vector<std::size_t>(tail.begin(), tail.begin() + i))));
  const std::string base = d.name() + " tail " + d.label(start) + " k=" + std::to_string(k);
  std::vector<IdentityReport> out;
  if (k < 2) return out;

  const IntLaurent D = C[0] * C[2] - C[1] * C[1];
  Matrix<IntLaurent> T(2, 2), M0(2, 2), P = Matrix<IntLaurent>::identity(2);
  T(0, 1) = 1;
  T(1, 0) = -1;
  T(1, 1) = zq();
  M0(0, 0) = C[0];
  M0(0, 1) = M0(1, 0) = C[1];
  M0(1, 1) = C[2];

  auto uk = static_cast<std::size_t>(k);
  const RatQ tail_ratio(C[uk - 1], C[uk]);
  BiLaurent bez_sum;
  IntLaurent wr_sum;
  std::vector<IdentityReport> bez, wr;
  // Walk i downward so the sums over j = i..k-1 accumulate.
  for (int i = k - 1; i >= 1; --i) {
    auto ui = static_cast<std::size_t>(i);
    bez_sum += BiLaurent::outer(C[ui], C[ui]);
    wr_sum += C[ui] * C[ui];
    bez.push_back(make_report("chain-bez", base + " i=" + std::to_string(i), bezoutian(C[ui - 1], C[ui]),
                              one_minus_inv_xy() * bez_sum + bezoutian(C[uk - 1], C[uk])));
    wr.push_back(make_report("chain-wr", base + " i=" + std::to_string(i), wronskian(C[ui - 1], C[ui]),
                             wr_structure() * wr_sum + wronskian(C[uk - 1], C[uk])));
  }
  for (int i = 1; i <= k - 1; ++i) {
    auto ui = static_cast<std::size_t>(i);
    const std::string sub = base + " i=" + std::to_string(i);
    out.push_back(make_report("chain-recurrence", sub, C[ui - 1] + C[ui + 1], zq() * C[ui]));

    Matrix<IntLaurent> Mi(2, 2);
    Mi(0, 0) = C[ui - 1];
    Mi(0, 1) = Mi(1, 0) = C[ui];
    Mi(1, 1) = C[ui + 1];
    Matrix<IntLaurent> rhs = P * M0;
    out.push_back(make_vector_report("chain-transfer", sub,
                                     std::vector<IntLaurent>{Mi(0, 0), Mi(0, 1), Mi(1, 0), Mi(1, 1)},
                                     std::vector<IntLaurent>{rhs(0, 0), rhs(0, 1), rhs(1, 0), rhs(1, 1)}));
    P = T * P;

    RatQ sum;
    for (int j = i + 1; j <= k; ++j) {
      auto uj = static_cast<std::size_t>(j);
      sum = sum + RatQ(IntLaurent(1), C[uj - 1] * C[uj]);
    }
    out.push_back(make_report("chain-ratio", sub, RatQ(C[ui - 1], C[ui]), RatQ(D) * sum + tail_ratio));

    RatQ v(C[uk], C[uk - 1]);
    for (int s = 0; s < k - i; ++s) v = (RatQ(zq()) - v).inverse();
    out.push_back(make_report("chain-cfrac", sub, RatQ(C[ui], C[ui - 1]), v));
  }
  out.insert(out.end(), bez.rbegin(), bez.rend());
  out.insert(out.end(), wr.rbegin(), wr.rend());
  return out;
}

std::vector<IdentityReport> cd_char(const Diagram& d, std::size_t i, std::size_t j) {
  return cd_char(d, cofactors(d), i, j);
}

std::vector<IdentityReport> cd_char(const Diagram& d, const CofactorTable& h, std::size_t i, std::size_t j) {
  d.check_vertex(i);
  d.check_vertex(j);
  const IntLaurent G = as_laurent(h.det());
  const IntLaurent Hij = as_laurent(h(i, j));
  BiLaurent rhs;
  IntLaurent diag;
  for (std::size_t k = 0; k < h.size(); ++k) {
    IntLaurent a = as_laurent(h(i, k)), b = as_laurent(h(j, k));
    rhs += BiLaurent::outer(a, b);
    diag += a * b;
  }
  const std::string sub = d.name() + " (" + d.label(i) + "," + d.label(j) + ")";
  std::vector<IdentityReport> out;
  out.push_back(make_report("eq8", sub, bezoutian(G, Hij), rhs));
  out.push_back(make_report("eq9", sub, wronskian(G, Hij), diag));
  return out;
}

IdentityReport binet_cauchy(const Diagram& d, std::size_t i, std::size_t j, const std::vector<Int>& xs,
                            const std::vector<Int>& ys) {
  return binet_cauchy(d, cofactors(d), i, j, xs, ys);
}

IdentityReport binet_cauchy(const Diagram& d, const CofactorTable& h, std::size_t i, std::size_t j,
                            const std::vector<Int>& xs, const std::vector<Int>& ys) {
  d.check_vertex(i);
  d.check_vertex(j);
  const std::size_t m = xs.size(), n = d.size();
  if (ys.size() != m || m == 0 || m > n)
    throw Error(Errc::SizeMismatch, "need equal sample lists of length 1.." + std::to_string(n));
  const BiLaurent bez = bezoutian(as_laurent(h.det()), as_laurent(h(i, j)));

  Matrix<Int> B(m, m), Hx(m, n), Hy(m, n);
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t k = 0; k < n; ++k) {
      Hx(l, k) = h(i, k).eval(xs[l]);
      Hy(l, k) = h(j, k).eval(ys[l]);
    }
  std::vector<ZPoly> lhs, rhs;
  Matrix<Int> prod = Hx * Hy.transpose();
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t s = 0; s < m; ++s) {
      Rational v = bez.eval(Rational(xs[l]), Rational(ys[s]));
      B(l, s) = boost::multiprecision::numerator(v);
      lhs.emplace_back(B(l, s));
      rhs.emplace_back(prod(l, s));
    }
  std::vector<std::size_t> all_rows(m);
  for (std::size_t l = 0; l < m; ++l) all_rows[l] = l;
  Int sum = 0;
  for_each_subset(n, m, [&](const std::vector<std::size_t>& cols) {
    sum += det_bareiss(Hx.select(all_rows, cols)) * det_bareiss(Hy.select(all_rows, cols));
  });
  lhs.emplace_back(det_bareiss(B));
  rhs.emplace_back(sum);
  IdentityReport r = make_vector_report("eq11-12", d.name() + " (" + d.label(i) + "," + d.label(j) + ") m=" + std::to_string(m), lhs, rhs);
  r.note = "entries of the sampled Bezoutian matrix, then its determinant";
  return r;
}

namespace {

std::vector<IdentityReport> pair_forms(const std::string& name, const std::string& sub, const BiLaurent& bez_lhs,
                                       const IntLaurent& wr_lhs, const std::vector<int>& ks,
                                       const KleinGroupData& data) {
  BiLaurent s;
  IntLaurent w;
  for (int k : ks) {
    s += BiLaurent::outer(data.z(k), data.z(k));
    w += data.z(k) * data.z(k);
  }
  std::vector<IdentityReport> out;
  out.push_back(make_report(name + "-bez", sub, bez_lhs, one_minus_inv_xy() * s));
  out.push_back(make_report(name + "-wr", sub, wr_lhs, wr_structure() * w));
  return out;
}

std::vector<int> all_vertices(const KleinGroupData& data) {
  std::vector<int> ks;
  for (int k = 0; k <= data.n; ++k) ks.push_back(k);
  return ks;
}

}  // namespace

std::vector<IdentityReport> poincare_cd_root(const KleinGroupData& data) {
  const IntLaurent& zm = data.z(-1);
  const IntLaurent& z0 = data.z(0);
  auto out = pair_forms("eq18", data.type, bezoutian(zm, z0), wronskian(zm, z0), all_vertices(data), data);
  out[1].name = "eq19";
  out[0].name = "eq18";
  return out;
}

std::vector<IdentityReport> poincare_cd_branch(const KleinGroupData& data, int i) {
  if (data.family == Family::AffA) throw Error(Errc::BadType, "branch forms need ~D or ~E, got " + data.type);
  int up = toward_root(data, i);
  const IntLaurent& a = data.z(up);
  const IntLaurent& b = data.z(i);
  return pair_forms("branch", data.type + " vertex " + std::to_string(i), bezoutian(a, b), wronskian(a, b),
                    q_set(data, i), data);
}

std::vector<IdentityReport> poincare_cd_cycle(const KleinGroupData& data, int i, int j) {
  if (data.family != Family::AffA) throw Error(Errc::BadType, data.type + " is not a cycle");
  if (i < 1 || j < i || j > data.n) throw Error(Errc::IndexOutOfRange, "need 1 <= i <= j <= n");
  const IntLaurent& zi0 = data.z(i - 1);
  const IntLaurent& zi = data.z(i);
  const IntLaurent& zj = data.z(j);
  const IntLaurent& zj1 = data.z(j + 1 > data.n ? 0 : j + 1);
  std::vector<int> ks;
  for (int k = i; k <= j; ++k) ks.push_back(k);
  auto out = pair_forms("cycle", data.type + " (" + std::to_string(i) + "," + std::to_string(j) + ")",
                        bezoutian(zi0, zi) + bezoutian(zj1, zj), wronskian(zi0, zi) + wronskian(zj1, zj), ks, data);
  out[0].name = "eq20";
  out[1].name = "eq21";
  return out;
}

std::vector<IdentityReport> poincare_cd(const KleinGroupData& data) {
  auto out = poincare_cd_root(data);
  if (data.family != Family::AffA) {
    for (int i = 0; i <= data.n; ++i) {
      auto r = poincare_cd_branch(data, i);
      out.insert(out.end(), r.begin(), r.end());
    }
  }
  if (data.family == Family::AffA) {
    for (int i = 1; i <= data.n; ++i)
      for (int j = i; j <= data.n; ++j) {
        auto r = poincare_cd_cycle(data, i, j);
        out.insert(out.end(), r.begin(), r.end());
      }
  }
  return out;
}

}  // namespace cpx
