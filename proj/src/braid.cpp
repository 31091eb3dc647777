#include "cpx/braid.hpp"

#include "cpx/algebra/det.hpp"
#include "cpx/diagram.hpp"
#include "cpx/errors.hpp"

#include <cstdlib>
#include <sstream>

namespace cpx {

BraidWord::BraidWord(int strands_, std::vector<int> word_) : strands(strands_), word(std::move(word_)) {
  if (strands < 1) throw Error(Errc::DomainError, "a braid needs at least one strand");
  for (int l : word)
    if (l == 0 || std::abs(l) >= strands)
      throw Error(Errc::IndexOutOfRange, "generator s" + std::to_string(std::abs(l)) + " in B_" + std::to_string(strands));
}

BraidWord BraidWord::parse(std::string_view text, int strands) {
  std::istringstream in{std::string(text)};
  std::string tok;
  std::vector<int> w;
  while (in >> tok) {
    int sign = 1;
    std::string t = tok;
    if (!t.empty() && t[0] == '-') {
      sign = -1;
      t = t.substr(1);
    }
    if (t.size() < 2 || t[0] != 's' || t.find_first_not_of("0123456789", 1) != std::string::npos)
      throw Error(Errc::ParseError, "bad braid token '" + tok + "'");
    w.push_back(sign * std::stoi(t.substr(1)));
  }
  return BraidWord(strands, std::move(w));
}

BraidWord BraidWord::inverse() const {
  std::vector<int> w(word.rbegin(), word.rend());
  for (int& l : w) l = -l;
  return BraidWord(strands, std::move(w));
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
  if (strands != o.strands) throw Error(Errc::StrandMismatch, "braids on different strand counts");
  std::vector<int> w = word;
  w.insert(w.end(), o.word.begin(), o.word.end());
  return BraidWord(strands, std::move(w));
}

std::vector<int> BraidWord::permutation() const {
  std::vector<int> pos(static_cast<std::size_t>(strands));
  for (int p = 0; p < strands; ++p) pos[static_cast<std::size_t>(p)] = p + 1;
  for (int l : word) {
    auto k = static_cast<std::size_t>(std::abs(l));
    std::swap(pos[k - 1], pos[k]);
  }
  return pos;
}

bool BraidWord::is_pure() const {
  auto p = permutation();
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] != static_cast<int>(k) + 1) return false;
  return true;
}

std::string BraidWord::str() const {
  if (word.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) s += ' ';
    s += (word[k] < 0 ? "-s" : "s") + std::to_string(std::abs(word[k]));
  }
  return s;
}

BraidWord random_braid(std::mt19937_64& rng, int strands, std::size_t length) {
  std::vector<int> w;
  if (strands < 2) return BraidWord(strands, w);
  for (std::size_t k = 0; k < length; ++k) {
    int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(strands - 1));
    w.push_back(rng() % 2 ? g : -g);
  }
  return BraidWord(strands, std::move(w));
}

namespace {

const IntLaurent kT = IntLaurent::q();
const IntLaurent kTinv = IntLaurent::monomial(1, -1);

void require_pure(const BraidWord& b) {
  if (!b.is_pure()) throw Error(Errc::NotPure, "braid " + b.str() + " permutes its strands");
}

}  // namespace

BurauImage burau_generator(int strands, int letter, BurauKind kind) {
  const int k = std::abs(letter);
  if (k < 1 || k >= strands) throw Error(Errc::IndexOutOfRange, "generator s" + std::to_string(k));
  const bool inv = letter < 0;
  if (kind == BurauKind::Unreduced) {
    auto m = BurauImage::identity(static_cast<std::size_t>(strands));
    auto a = static_cast<std::size_t>(k - 1);
    if (!inv) {
      m(a, a) = IntLaurent(1) - kT;
      m(a, a + 1) = kT;
      m(a + 1, a) = 1;
      m(a + 1, a + 1) = 0;
    } else {
      m(a, a) = 0;
      m(a, a + 1) = 1;
      m(a + 1, a) = kTinv;
      m(a + 1, a + 1) = IntLaurent(1) - kTinv;
    }
    return m;
  }
  const int size = strands - 1;
  auto m = BurauImage::identity(static_cast<std::size_t>(size));
  IntLaurent block[3][3] = {{1, kT, 0}, {0, -kT, 0}, {0, 1, 1}};
  if (inv) {
    IntLaurent ib[3][3] = {{1, 1, 0}, {0, -kTinv, 0}, {0, kTinv, 1}};
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) block[r][c] = ib[r][c];
  }
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      int R = k - 2 + r, C = k - 2 + c;
      if (R < 0 || C < 0 || R >= size || C >= size) continue;
      m(static_cast<std::size_t>(R), static_cast<std::size_t>(C)) = block[r][c];
    }
  return m;
}

BurauImage burau(const BraidWord& b, BurauKind kind) {
  const std::size_t dim = static_cast<std::size_t>(kind == BurauKind::Unreduced ? b.strands : b.strands - 1);
  auto m = BurauImage::identity(dim);
  for (int l : b.word) m = m * burau_generator(b.strands, l, kind);
  return m;
}

IntLaurent burau_det(const BraidWord& b, BurauKind kind) {
  auto m = burau(b, kind);
  return det_exact(BurauImage::identity(m.rows()) - m);
}

RatQ det_ratio(const BraidWord& L, const BraidWord& B, BurauKind kind) {
  if (L.strands != B.strands) throw Error(Errc::StrandMismatch, "braids on different strand counts");
  IntLaurent den = burau_det(B * L, kind);
  if (den.is_zero()) throw Error(Errc::ZeroDenominator, "det(E - beta(BL)) vanishes");
  return RatQ(burau_det(L, kind), den);
}

std::vector<FreeWord> artin_action(const BraidWord& b) {
  const int n = b.strands;
  std::vector<FreeWord> img(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) img[static_cast<std::size_t>(j - 1)] = {j};
  auto subst = [&](const FreeWord& pattern) {
    FreeWord out;
    for (int l : pattern) {
      const FreeWord& w = img[static_cast<std::size_t>(std::abs(l) - 1)];
      if (l > 0) {
        out.insert(out.end(), w.begin(), w.end());
      } else {
        FreeWord inv = free_inverse(w);
        out.insert(out.end(), inv.begin(), inv.end());
      }
    }
    return free_reduce(out);
  };
  for (int g : b.word) {
    const int k = std::abs(g);
    FreeWord pk = g > 0 ? FreeWord{k, k + 1, -k} : FreeWord{k + 1};
    FreeWord pk1 = g > 0 ? FreeWord{k} : FreeWord{-(k + 1), k, k + 1};
    FreeWord a = subst(pk), c = subst(pk1);
    img[static_cast<std::size_t>(k - 1)] = std::move(a);
    img[static_cast<std::size_t>(k)] = std::move(c);
  }
  return img;
}

std::vector<FreeWord> longitudes(const BraidWord& b) {
  require_pure(b);
  auto img = artin_action(b);
  std::vector<FreeWord> out;
  for (int i = 1; i <= b.strands; ++i) {
    const FreeWord& w = img[static_cast<std::size_t>(i - 1)];
    const std::size_t m = w.size() / 2;
    FreeWord head(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(m));
    FreeWord tail(w.begin() + static_cast<std::ptrdiff_t>(m) + 1, w.end());
    if (w.size() % 2 == 0 || w[m] != i || free_inverse(head) != tail)
      throw Error(Errc::DomainError, "image of x" + std::to_string(i) + " is not a conjugate of x" + std::to_string(i));
    while (!head.empty() && std::abs(head.back()) == i) head.pop_back();
    const int e = exponent_sum(head);
    FreeWord l(static_cast<std::size_t>(std::abs(e)), e > 0 ? -i : i);
    out.push_back(free_concat(l, head));
  }
  return out;
}

int linking_number(const BraidWord& b, int i, int j) {
  require_pure(b);
  if (i < 1 || j < 1 || i > b.strands || j > b.strands) throw Error(Errc::IndexOutOfRange, "strand index");
  if (i == j) return 0;
  std::vector<int> pos(static_cast<std::size_t>(b.strands));
  for (int p = 0; p < b.strands; ++p) pos[static_cast<std::size_t>(p)] = p + 1;
  int count = 0;
  for (int l : b.word) {
    auto k = static_cast<std::size_t>(std::abs(l));
    int a = pos[k - 1], c = pos[k];
    if ((a == i && c == j) || (a == j && c == i)) count += l > 0 ? 1 : -1;
    std::swap(pos[k - 1], pos[k]);
  }
  return count / 2;
}

Int MilnorTable::at(const std::vector<int>& indices) const {
  auto it = mu.find(indices);
  return it == mu.end() ? Int(0) : it->second;
}

MilnorTable milnor(const BraidWord& b, int order) {
  if (order < 1) throw Error(Errc::DomainError, "Milnor order must be positive");
  auto ls = longitudes(b);
  MilnorTable t;
  t.strands = b.strands;
  t.order = order;
  const int n = b.strands;
  for (int i = 1; i <= n; ++i) {
    MagnusSeries s = magnus(ls[static_cast<std::size_t>(i - 1)], n, order - 1);
    for (int L = 1; L <= order - 1; ++L) {
      const auto& bucket = s.bucket(L);
      for (std::size_t idx = 0; idx < bucket.size(); ++idx) {
        if (bucket[idx] == 0) continue;
        std::vector<int> seq(static_cast<std::size_t>(L) + 1);
        std::size_t x = idx;
        for (int p = L; p-- > 0;) {
          seq[static_cast<std::size_t>(p)] = static_cast<int>(x % static_cast<std::size_t>(n)) + 1;
          x /= static_cast<std::size_t>(n);
        }
        seq[static_cast<std::size_t>(L)] = i;
        t.mu[seq] = bucket[idx];
      }
    }
  }
  return t;
}

IntLaurent alexander_conway(const Matrix<Int>& seifert) {
  const std::size_t n = seifert.rows();
  Matrix<IntLaurent> m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = IntLaurent::monomial(seifert(r, c), 1) - IntLaurent::monomial(seifert(c, r), -1);
  IntLaurent d = det_exact(m);
  return n % 2 ? -d : d;
}

namespace {

IntLaurent torus_2k(int k) {
  if (k == 0) return 0;
  const int a = std::abs(k);
  if (a == 1) return 1;
  Matrix<Int> s = build(Family::A, a - 1).seifert();
  if (k < 0) s = s.transpose().map([](const Int& v) { return Int(-v); });
  return alexander_conway(s);
}

}  // namespace

IntLaurent alexander_conway_named(std::string_view name) {
  if (name == "unknot") return 1;
  if (name == "unlink") return 0;
  if (name == "hopf") return torus_2k(2);
  if (name == "trefoil") return torus_2k(3);
  if (name.size() > 5 && name.substr(0, 4) == "T(2," && name.back() == ')') {
    std::string inner(name.substr(4, name.size() - 5));
    try {
      std::size_t used = 0;
      int k = std::stoi(inner, &used);
      if (used == inner.size()) return torus_2k(k);
    } catch (const std::exception&) {
    }
  }
  throw Error(Errc::UnknownClosure, "no catalogued Alexander-Conway polynomial for '" + std::string(name) + "'");
}

IntLaurent alexander_conway_closure(const BraidWord& b) {
  if (b.strands == 1) return 1;
  if (b.strands != 2) throw Error(Errc::UnknownClosure, "closures are catalogued for 2-strand braids only");
  return torus_2k(exponent_sum(b.word));
}

IntLaurent alexander_conway_horizontal(const BraidWord& b) {
  if (b.strands != 2) throw Error(Errc::UnknownClosure, "horizontal closures are catalogued for 2 strands only");
  require_pure(b);
  return 1;
}

TruncSeries conway_in_u(const IntLaurent& a, int order) {
  TruncSeries s = TruncSeries::constant(0, order);
  for (int e = a.low(); e <= a.high(); ++e) {
    Int c = a.coeff(e);
    if (c != 0) s += series_pow1p(Rational(e, 2), order) * Rational(c);
  }
  return s;
}

LevinResult levin_check(const BraidWord& b, int order) {
  if (b.strands != 2) throw Error(Errc::UnknownClosure, "the Levin check covers 2-strand string links");
  require_pure(b);
  LevinResult res;
  const IntLaurent av = alexander_conway_closure(b);
  const IntLaurent ah = alexander_conway_horizontal(b);
  res.lhs = conway_in_u(av, order) / conway_in_u(ah, order);

  auto ls = longitudes(b);
  MagnusSeries s = magnus(ls[0], 2, order);
  std::vector<Rational> sums(static_cast<std::size_t>(order) + 1, Rational(0));
  // S_k sums the coefficients of words of length k + 1 ending in u_1.
  for (int L = 1; L <= order; ++L) {
    const auto& bucket = s.bucket(L);
    Int acc = 0;
    for (std::size_t idx = 0; idx < bucket.size(); idx += 2) acc += bucket[idx];
    sums[static_cast<std::size_t>(L)] = Rational(acc);
  }
  res.rhs = series_sqrt1p(order) * TruncSeries(order, 0, sums);

  IdentityReport& r = res.report;
  r.name = "levin";
  r.subject = b.str() + " order " + std::to_string(order);
  const int vl = res.lhs.valuation(), vr = res.rhs.valuation();
  if (vr > order || vl > order) {
    res.degenerate = true;
    r.holds = vr > order && vl > order;
    r.residual_terms = r.holds ? 0 : 1;
    r.lhs = res.lhs.str();
    r.rhs = res.rhs.str();
    r.residual = r.holds ? "0" : "one side vanishes";
    r.note = "degenerate: vanishing Milnor sum";
    return res;
  }
  TruncSeries target = res.rhs;
  if (vl == vr) {
    Rational c = res.lhs.coeff(vl) / res.rhs.coeff(vr);
    if (c == 1 || c == -1) {
      res.unit_sign = c == 1 ? 1 : -1;
      if (vl + 1 <= order) {
        Rational k2 = 2 * (res.lhs.coeff(vl + 1) * res.unit_sign - res.rhs.coeff(vr + 1)) / res.rhs.coeff(vr);
        if (boost::multiprecision::denominator(k2) == 1) res.unit_power = static_cast<int>(boost::multiprecision::numerator(k2));
      }
    }
    target = res.rhs * series_pow1p(Rational(res.unit_power, 2), order) * Rational(res.unit_sign);
  }
  TruncSeries diff = res.lhs - target;
  r.lhs = res.lhs.str();
  r.rhs = target.str();
  r.residual = diff.str();
  for (int e = diff.low(); e <= order; ++e)
    if (diff.coeff(e) != 0) ++r.residual_terms;
  r.holds = r.residual_terms == 0;
  r.note = "unit " + std::string(res.unit_sign < 0 ? "-" : "") + "q^" + std::to_string(res.unit_power);
  return res;
}

UnitMatch match_up_to_unit(const RatQ& burau_ratio_t, const RatQ& conway_ratio_q) {
  RatQ bq(burau_ratio_t.num().substitute_power(2), burau_ratio_t.den().substitute_power(2));
  UnitMatch m;
  if (bq.is_zero() || conway_ratio_q.is_zero()) {
    m.equal = bq.is_zero() && conway_ratio_q.is_zero();
    return m;
  }
  RatQ u = conway_ratio_q / bq;
  if (!(u.den() == IntLaurent(1)) || u.num().term_count() != 1) return m;
  Int c = u.num().coeff(u.num().low());
  if (c != 1 && c != -1) return m;
  m.equal = true;
  m.sign = c == 1 ? 1 : -1;
  m.power = u.num().low();
  return m;
}

}  // namespace cpx
