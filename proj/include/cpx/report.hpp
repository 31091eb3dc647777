#pragma once

#include "cpx/algebra/bi_laurent.hpp"
#include "cpx/algebra/int_laurent.hpp"
#include "cpx/algebra/rat_func.hpp"
#include "cpx/algebra/zpoly.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace cpx {

// Outcome of one exact identity check. Polynomials are kept in canonical
// text form; holds is true exactly when the residual is zero.
struct IdentityReport {
  std::string name;
  std::string subject;
  std::string lhs;
  std::string rhs;
  std::string residual;
  std::size_t residual_terms = 0;
  bool holds = false;
  std::string note;
};

inline std::size_t term_count(const ZPoly& p) {
  return static_cast<std::size_t>(std::count_if(p.coeffs().begin(), p.coeffs().end(), [](const Int& c) { return c != 0; }));
}
inline std::size_t term_count(const IntLaurent& p) { return p.term_count(); }
inline std::size_t term_count(const BiLaurent& p) { return p.term_count(); }
template <class P>
std::size_t term_count(const RatFunc<P>& f) {
  return term_count(f.num());
}

inline std::string text(const ZPoly& p) { return p.str(); }
inline std::string text(const IntLaurent& p) { return p.str(); }
inline std::string text(const BiLaurent& p) { return p.str(); }
template <class P>
std::string text(const RatFunc<P>& f) {
  return f.str();
}

template <class T>
IdentityReport make_report(std::string name, std::string subject, const T& lhs, const T& rhs) {
  IdentityReport r;
  r.name = std::move(name);
  r.subject = std::move(subject);
  T res = lhs - rhs;
  r.lhs = text(lhs);
  r.rhs = text(rhs);
  r.residual = text(res);
  r.residual_terms = term_count(res);
  r.holds = r.residual_terms == 0;
  return r;
}

// Componentwise vector identity folded into one report.
template <class T>
IdentityReport make_vector_report(std::string name, std::string subject, const std::vector<T>& lhs,
                                  const std::vector<T>& rhs) {
  IdentityReport r;
  r.name = std::move(name);
  r.subject = std::move(subject);
  if (lhs.size() != rhs.size()) {
    r.note = "length mismatch";
    r.residual_terms = std::max(lhs.size(), rhs.size());
    return r;
  }
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    T res = lhs[k] - rhs[k];
    std::string sep = k ? "; " : "";
    r.lhs += sep + text(lhs[k]);
    r.rhs += sep + text(rhs[k]);
    r.residual += sep + text(res);
    r.residual_terms += term_count(res);
  }
  r.holds = r.residual_terms == 0;
  return r;
}

inline bool all_hold(const std::vector<IdentityReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.holds; });
}

}  // namespace cpx
