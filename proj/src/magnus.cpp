#include "cpx/magnus.hpp"

#include "cpx/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace cpx {

FreeWord free_reduce(const FreeWord& w) {
  FreeWord out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

FreeWord free_inverse(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

FreeWord free_concat(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

int exponent_sum(const FreeWord& w) {
  int s = 0;
  for (int l : w) s += l > 0 ? 1 : -1;
  return s;
}

int exponent_sum(const FreeWord& w, int generator) {
  int s = 0;
  for (int l : w)
    if (std::abs(l) == generator) s += l > 0 ? 1 : -1;
  return s;
}

std::string free_str(const FreeWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ' ';
    s += "x" + std::to_string(std::abs(w[k]));
    if (w[k] < 0) s += "^-1";
  }
  return s;
}

namespace {

std::size_t ipow(int n, int e) {
  std::size_t r = 1;
  for (int k = 0; k < e; ++k) r *= static_cast<std::size_t>(n);
  return r;
}

}  // namespace

MagnusSeries::MagnusSeries(int n, int order) : n_(n), order_(order) {
  if (n < 1 || order < 0) throw Error(Errc::DomainError, "Magnus series needs n >= 1 and order >= 0");
  c_.resize(static_cast<std::size_t>(order) + 1);
  for (int L = 0; L <= order; ++L) c_[static_cast<std::size_t>(L)].assign(ipow(n, L), Int(0));
}

MagnusSeries MagnusSeries::one(int n, int order) {
  MagnusSeries s(n, order);
  s.c_[0][0] = 1;
  return s;
}

MagnusSeries MagnusSeries::letter(int n, int order, int signed_letter) {
  MagnusSeries s = one(n, order);
  s.mul_letter(signed_letter);
  return s;
}

Int MagnusSeries::coeff(const std::vector<int>& word) const {
  if (static_cast<int>(word.size()) > order_) throw Error(Errc::IndexOutOfRange, "word longer than the truncation order");
  std::size_t idx = 0;
  for (int l : word) {
    if (l < 1 || l > n_) throw Error(Errc::IndexOutOfRange, "variable u" + std::to_string(l));
    idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(l - 1);
  }
  return c_[word.size()][idx];
}

void MagnusSeries::set(const std::vector<int>& word, const Int& v) {
  if (static_cast<int>(word.size()) > order_) throw Error(Errc::IndexOutOfRange, "word longer than the truncation order");
  std::size_t idx = 0;
  for (int l : word) {
    if (l < 1 || l > n_) throw Error(Errc::IndexOutOfRange, "variable u" + std::to_string(l));
    idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(l - 1);
  }
  c_[word.size()][idx] = v;
}

MagnusSeries& MagnusSeries::mul_letter(int signed_letter) {
  const int k = std::abs(signed_letter);
  if (k < 1 || k > n_) throw Error(Errc::IndexOutOfRange, "generator x" + std::to_string(k));
  const std::size_t n = static_cast<std::size_t>(n_);
  const std::size_t off = static_cast<std::size_t>(k - 1);
  if (signed_letter > 0) {
    // S (1 + u_k): bucket L gains bucket L-1 with u_k appended.
    for (int L = order_; L >= 1; --L) {
      auto& dst = c_[static_cast<std::size_t>(L)];
      const auto& src = c_[static_cast<std::size_t>(L - 1)];
      for (std::size_t i = 0; i < src.size(); ++i)
        if (src[i] != 0) dst[i * n + off] += src[i];
    }
  } else {
    // S (1 - u_k + u_k^2 - ...) = S - (S u_k) applied recursively: T_L = S_L - T_(L-1) u_k.
    for (int L = 1; L <= order_; ++L) {
      auto& dst = c_[static_cast<std::size_t>(L)];
      const auto& src = c_[static_cast<std::size_t>(L - 1)];
      for (std::size_t i = 0; i < src.size(); ++i)
        if (src[i] != 0) dst[i * n + off] -= src[i];
    }
  }
  return *this;
}

MagnusSeries MagnusSeries::operator-(const MagnusSeries& o) const {
  if (n_ != o.n_ || order_ != o.order_) throw Error(Errc::DimensionMismatch, "Magnus series of different shapes");
  MagnusSeries r = *this;
  for (std::size_t L = 0; L < c_.size(); ++L)
    for (std::size_t i = 0; i < c_[L].size(); ++i) r.c_[L][i] -= o.c_[L][i];
  return r;
}

std::size_t MagnusSeries::term_count() const {
  std::size_t t = 0;
  for (const auto& b : c_) t += static_cast<std::size_t>(std::count_if(b.begin(), b.end(), [](const Int& v) { return v != 0; }));
  return t;
}

std::string MagnusSeries::str() const {
  std::string s;
  const std::size_t n = static_cast<std::size_t>(n_);
  for (std::size_t L = 0; L < c_.size(); ++L) {
    for (std::size_t i = 0; i < c_[L].size(); ++i) {
      const Int& v = c_[L][i];
      if (v == 0) continue;
      std::vector<std::size_t> letters(L);
      std::size_t idx = i;
      for (std::size_t p = L; p-- > 0;) {
        letters[p] = idx % n;
        idx /= n;
      }
      std::string mono;
      for (std::size_t p = 0; p < L; ++p) mono += (p ? "*u" : "u") + std::to_string(letters[p] + 1);
      bool neg = v < 0;
      Int a = neg ? Int(-v) : v;
      std::string term;
      if (L == 0) {
        term = to_string(a);
      } else {
        term = a == 1 ? mono : to_string(a) + "*" + mono;
      }
      if (s.empty()) {
        s = (neg ? "-" : "") + term;
      } else {
        s += (neg ? " - " : " + ") + term;
      }
    }
  }
  return s.empty() ? "0" : s;
}

namespace {

void check_shapes(const MagnusSeries& a, const MagnusSeries& b) {
  if (a.variables() != b.variables() || a.order() != b.order())
    throw Error(Errc::DimensionMismatch, "Magnus series of different shapes");
}

void fill_bucket(std::vector<Int>& dst, const MagnusSeries& a, const MagnusSeries& b, int L) {
  for (int la = 0; la <= L; ++la) {
    const auto& A = a.bucket(la);
    const auto& B = b.bucket(L - la);
    const std::size_t width = B.size();
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (A[i] == 0) continue;
      for (std::size_t j = 0; j < width; ++j)
        if (B[j] != 0) dst[i * width + j] += A[i] * B[j];
    }
  }
}

}  // namespace

MagnusSeries multiply(const MagnusSeries& a, const MagnusSeries& b) {
  check_shapes(a, b);
  MagnusSeries r(a.n_, a.order_);
  const int top = a.order_;
#pragma omp parallel for schedule(dynamic)
  for (int L = top; L >= 0; --L) fill_bucket(r.c_[static_cast<std::size_t>(L)], a, b, L);
  return r;
}

MagnusSeries multiply_serial(const MagnusSeries& a, const MagnusSeries& b) {
  check_shapes(a, b);
  MagnusSeries r(a.n_, a.order_);
  for (int L = 0; L <= a.order_; ++L) fill_bucket(r.c_[static_cast<std::size_t>(L)], a, b, L);
  return r;
}

MagnusSeries magnus(const FreeWord& w, int n, int order) {
  MagnusSeries s = MagnusSeries::one(n, order);
  for (int l : w) s.mul_letter(l);
  return s;
}

}  // namespace cpx
