#include "cpx/kostant.hpp"

#include "cpx/coxeter.hpp"
#include "cpx/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <initializer_list>
#include <queue>

namespace cpx {

namespace {

IntLaurent from_exponents(std::initializer_list<int> es) {
  IntLaurent p;
  for (int e : es) p += IntLaurent::monomial(1, e);
  return p;
}

IntLaurent one_minus_qk(int k) { return IntLaurent(1) - IntLaurent::monomial(1, k); }

std::string family_prefix(Family f) {
  switch (f) {
    case Family::AffA: return "~A";
    case Family::AffD: return "~D";
    case Family::AffE: return "~E";
    default: return "";
  }
}

std::vector<int> distances_to_zero(const Diagram& d) {
  std::vector<int> dist(d.size(), -1);
  std::queue<std::size_t> q;
  dist[0] = 0;
  q.push(0);
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto u : d.neighbors(v))
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        q.push(u);
      }
  }
  return dist;
}

void check_index(const KleinGroupData& data, int i, int lo) {
  if (i < lo || i > data.n) throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(i) + " of " + data.type);
}

}  // namespace

IntLaurent KleinGroupData::denominator() const { return one_minus_qk(a) * one_minus_qk(b); }

const IntLaurent& KleinGroupData::z(int i) const {
  check_index(*this, i, -1);
  return i < 0 ? Zminus1 : Z[static_cast<std::size_t>(i)];
}

RatQ KleinGroupData::P(int i) const {
  check_index(*this, i, -1);
  if (i < 0) return RatQ(IntLaurent::monomial(1, -1));
  return RatQ(Z[static_cast<std::size_t>(i)], denominator());
}

KleinGroupData klein_data(Family family, int n) {
  KleinGroupData k;
  k.family = family;
  k.n = n;
  k.type = family_prefix(family) + std::to_string(n);
  switch (family) {
    case Family::AffA:
      if (n < 1) throw Error(Errc::BadType, "~A needs rank >= 1");
      k.a = 2;
      k.b = n + 1;
      for (int i = 0; i <= n; ++i) k.Z.push_back(IntLaurent::monomial(1, i) + IntLaurent::monomial(1, n - i + 1));
      break;
    case Family::AffD:
      if (n < 4) throw Error(Errc::BadType, "~D needs rank >= 4");
      k.a = 4;
      k.b = 2 * n - 4;
      k.Z.resize(static_cast<std::size_t>(n) + 1);
      k.Z[0] = from_exponents({0, 2 * n - 2});
      for (int c = 1; c <= n - 3; ++c) k.Z[static_cast<std::size_t>(c)] = from_exponents({c, c + 2, 2 * n - 4 - c, 2 * n - 2 - c});
      k.Z[static_cast<std::size_t>(n - 2)] = from_exponents({2, 2 * n - 4});
      k.Z[static_cast<std::size_t>(n - 1)] = from_exponents({n - 2, n});
      k.Z[static_cast<std::size_t>(n)] = from_exponents({n - 2, n});
      break;
    case Family::AffE:
      if (n == 6) {
        k.a = 6;
        k.b = 8;
        k.Z = {from_exponents({0, 12}),          from_exponents({1, 5, 7, 11}), from_exponents({2, 4, 6, 6, 8, 10}),
               from_exponents({3, 5, 7, 9}),     from_exponents({4, 8}),        from_exponents({3, 5, 7, 9}),
               from_exponents({4, 8})};
      } else if (n == 7) {
        k.a = 8;
        k.b = 12;
        k.Z = {from_exponents({0, 18}),
               from_exponents({1, 7, 11, 17}),
               from_exponents({2, 6, 8, 10, 12, 16}),
               from_exponents({3, 5, 7, 9, 9, 11, 13, 15}),
               from_exponents({4, 6, 8, 10, 12, 14}),
               from_exponents({5, 7, 11, 13}),
               from_exponents({6, 12}),
               from_exponents({4, 8, 10, 14})};
      } else if (n == 8) {
        k.a = 12;
        k.b = 20;
        k.Z = {from_exponents({0, 30}),
               from_exponents({1, 11, 19, 29}),
               from_exponents({2, 10, 12, 18, 20, 28}),
               from_exponents({3, 9, 11, 13, 17, 19, 21, 27}),
               from_exponents({4, 8, 10, 12, 14, 16, 18, 20, 22, 26}),
               from_exponents({5, 7, 9, 11, 13, 15, 15, 17, 19, 21, 23, 25}),
               from_exponents({6, 8, 12, 14, 16, 18, 22, 24}),
               from_exponents({7, 13, 17, 23}),
               from_exponents({6, 10, 14, 16, 20, 24})};
      } else {
        throw Error(Errc::BadType, "~E needs rank 6, 7 or 8");
      }
      break;
    default:
      throw Error(Errc::BadType, "Klein group data exists only for affine types");
  }
  k.h = k.a + k.b - 2;
  k.orderB = Int(k.a) * k.b / 2;
  k.Zminus1 = (one_minus_qk(k.a) * one_minus_qk(k.b)).shift(-1);
  k.diagram = build(family, n);
  return k;
}

KleinGroupData klein_data(const std::string& type) {
  Diagram d = build_named(type);
  if (type.empty() || type.front() != '~') throw Error(Errc::BadType, type + " is not an affine type");
  Family f = type[1] == 'A' ? Family::AffA : type[1] == 'D' ? Family::AffD : Family::AffE;
  return klein_data(f, std::stoi(type.substr(2)));
}

std::vector<IntLaurent> z_from_cramer(const KleinGroupData& data) {
  CofactorTable h = cofactors(data.diagram);
  const IntLaurent top = IntLaurent(1) + IntLaurent::monomial(1, data.h);
  const IntLaurent h00 = z_substitute(h(0, 0));
  std::vector<IntLaurent> out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    RatQ zi(top * z_substitute(h(i, 0)), h00);
    if (!(zi.den() == IntLaurent(1))) throw Error(Errc::NotDivisible, "Cramer ratio for vertex " + std::to_string(i) + " is not a Laurent polynomial");
    out.push_back(zi.num());
  }
  return out;
}

ZPoly h_minus1(const KleinGroupData& data) { return char_poly(data.diagram); }

TruncSeries poincare_series(const KleinGroupData& data, int i, int terms) {
  check_index(data, i, -1);
  return series_divide(data.z(i), data.denominator(), terms);
}

IdentityReport verify_system(const KleinGroupData& data, int which) {
  const Matrix<ZPoly> m = char_matrix(data.diagram);
  const std::size_t n = m.rows();
  const std::string subject = data.type;
  if (which == 16) {
    CofactorTable h = cofactors(data.diagram);
    std::vector<ZPoly> lhs(n), rhs(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) lhs[j] += h(i, 0) * m(i, j);
    rhs[0] = h_minus1(data);
    return make_vector_report("system16", subject, lhs, rhs);
  }
  if (which == 15) {
    std::vector<IntLaurent> lhs(n), rhs(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) lhs[j] += data.Z[i] * z_substitute(m(i, j));
    rhs[0] = data.Zminus1;
    return make_vector_report("system15", subject, lhs, rhs);
  }
  if (which == 14) {
    std::vector<RatQ> lhs(n), rhs(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) lhs[j] = lhs[j] + data.P(static_cast<int>(i)) * RatQ(z_substitute(m(i, j)));
    rhs[0] = data.P(-1);
    return make_vector_report("system14", subject, lhs, rhs);
  }
  throw Error(Errc::UsageError, "system must be 14, 15 or 16");
}

std::vector<IdentityReport> ebeling_ratios(const KleinGroupData& data) {
  CofactorTable h = cofactors(data.diagram);
  const int n = data.n;
  auto H = [&](int i) { return i < 0 ? z_substitute(h.det()) : z_substitute(h(static_cast<std::size_t>(i), 0)); };
  std::vector<IdentityReport> out;
  for (int i = -1; i <= n; ++i) {
    std::vector<IntLaurent> lhs, rhs;
    for (int j = -1; j <= n; ++j) {
      lhs.push_back(data.z(i) * H(j));
      rhs.push_back(data.z(j) * H(i));
    }
    out.push_back(make_vector_report("eq17", data.type + " vertex " + std::to_string(i), lhs, rhs));
  }
  const RatQ q(IntLaurent::q());
  for (int i = 0; i <= n; ++i) {
    out.push_back(make_report("eq17-series", data.type + " vertex " + std::to_string(i), q * data.P(i) * RatQ(H(-1)),
                              RatQ(H(i))));
  }
  return out;
}

IdentityReport table_check(const KleinGroupData& data) {
  return make_vector_report("cramer-table", data.type, z_from_cramer(data), data.Z);
}

ZPoly a2m_recurrence(int m, bool corrected) {
  if (m < 0) throw Error(Errc::DomainError, "m must be nonnegative");
  const ZPoly z = ZPoly::z();
  std::vector<ZPoly> r{z};
  ZPoly f;
  for (int k = 0; k <= m; ++k) {
    f = pow(z, 2 * k + 1) - ZPoly(2);
    Int binom = 1;
    for (int i = 1; i <= k; ++i) {
      binom = binom * (2 * k + 2 - i) / i;
      f -= r[static_cast<std::size_t>(k - i)] * binom;
    }
    if (k > 0) r.push_back(corrected ? f + ZPoly(2) : f);
  }
  return f;
}

IdentityReport a2m_closed_form(int m) {
  if (m < 0) throw Error(Errc::DomainError, "m must be nonnegative");
  ZPoly f = m == 0 ? a2m_recurrence(0) : char_poly(build(Family::AffA, 2 * m));
  IntLaurent closed = pow(IntLaurent::monomial(1, 2 * m + 1) - IntLaurent(1), 2).shift(-2 * m);
  return make_report("a2m-closed", "~A" + std::to_string(2 * m), z_substitute(f).shift(1), closed);
}

IdentityReport a2m_recurrence_check(int m, bool corrected) {
  if (m < 1) throw Error(Errc::DomainError, "the cycle ~A_2m needs m >= 1");
  IdentityReport r = make_report(corrected ? "a2m-recurrence-corrected" : "a2m-recurrence", "~A" + std::to_string(2 * m),
                                 a2m_recurrence(m, corrected), char_poly(build(Family::AffA, 2 * m)));
  return r;
}

IdentityReport prop2_squares(const KleinGroupData& data, int i) {
  check_index(data, i, 1);
  const Diagram& d = data.diagram;
  const std::size_t v = static_cast<std::size_t>(i);
  IntLaurent T = coxeter_poly(delete_vertices(d, {0, v}));
  IntLaurent Tt = coxeter_poly(delete_vertices(d, {v}));
  IntLaurent H = z_substitute(h_minus1(data));
  const IntLaurent& Zi = data.Z[v];
  IntLaurent lhs = Zi * Zi * H.shift(1);
  IntLaurent rhs = data.denominator() * (data.Z[0] * Tt - data.Zminus1 * T);
  return make_report("prop2-squares", data.type + " vertex " + std::to_string(i), lhs, rhs);
}

IdentityReport walk_series_check(const KleinGroupData& data, int i, int K) {
  check_index(data, i, 0);
  CofactorTable h = cofactors(data.diagram);
  auto exp = expand_at_infinity(h(static_cast<std::size_t>(i), 0), h.det(), K);
  auto walks = walk_gf(data.diagram, static_cast<std::size_t>(i), 0, K);
  IdentityReport r;
  r.name = "walks";
  r.subject = data.type + " vertex " + std::to_string(i) + " K=" + std::to_string(K);
  for (int k = 0; k <= K; ++k) {
    std::string sep = k ? ", " : "";
    r.lhs += sep + to_string(exp[static_cast<std::size_t>(k)]);
    r.rhs += sep + walks[static_cast<std::size_t>(k)].str();
    if (exp[static_cast<std::size_t>(k)] != Rational(walks[static_cast<std::size_t>(k)])) ++r.residual_terms;
  }
  r.residual = std::to_string(r.residual_terms) + " mismatched coefficients";
  r.holds = r.residual_terms == 0;
  return r;
}

Int perfect_square_check(const KleinGroupData& data) {
  Int v = Int(data.h + 2) * (data.h + 2) - 8 * data.orderB;
  if (v < 0) throw Error(Errc::NotASquare, v.str() + " is negative");
  Int s = boost::multiprecision::sqrt(v);
  if (s * s != v) throw Error(Errc::NotASquare, v.str() + " is not a perfect square");
  return s;
}

int toward_root(const KleinGroupData& data, int i) {
  check_index(data, i, 0);
  if (i == 0) return -1;
  auto dist = distances_to_zero(data.diagram);
  for (auto u : data.diagram.neighbors(static_cast<std::size_t>(i)))
    if (dist[u] == dist[static_cast<std::size_t>(i)] - 1) return static_cast<int>(u);
  throw Error(Errc::DomainError, "disconnected diagram");
}

std::vector<int> q_set(const KleinGroupData& data, int i) {
  check_index(data, i, 0);
  auto dist = distances_to_zero(data.diagram);
  // Distances from i.
  std::vector<int> di(data.diagram.size(), -1);
  std::queue<std::size_t> q;
  di[static_cast<std::size_t>(i)] = 0;
  q.push(static_cast<std::size_t>(i));
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto u : data.diagram.neighbors(v))
      if (di[u] < 0) {
        di[u] = di[v] + 1;
        q.push(u);
      }
  }
  std::vector<int> out;
  for (std::size_t k = 0; k < data.diagram.size(); ++k)
    if (di[k] >= 0 && dist[k] == di[k] + dist[static_cast<std::size_t>(i)]) out.push_back(static_cast<int>(k));
  return out;
}

std::vector<RatQ> ratio_chain(const KleinGroupData& data) {
  if (!data.diagram.is_tree()) throw Error(Errc::BadType, data.type + " is not a tree");
  std::vector<RatQ> out;
  for (int j = 0; j <= data.n; ++j) out.push_back(RatQ(data.z(j), data.z(toward_root(data, j))));
  return out;
}

}  // namespace cpx
