#include "cpx/cli.hpp"

#include "cpx/algebra/parse.hpp"
#include "cpx/braid.hpp"
#include "cpx/cfrac.hpp"
#include "cpx/coxeter.hpp"
#include "cpx/errors.hpp"
#include "cpx/identities.hpp"
#include "cpx/kostant.hpp"
#include "cpx/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace cpx {

using json = nlohmann::ordered_json;

const std::vector<CommandInfo>& dispatch_table() {
  static const std::vector<CommandInfo> table{
      {"algebra", "zsub", {"z_substitute"}},
      {"algebra", "qtoz", {"q_to_z"}},
      {"algebra", "det", {"det_exact"}},
      {"algebra", "bez", {"bezoutian"}},
      {"algebra", "wr", {"wronskian"}},
      {"algebra", "sqrt1p", {"series_sqrt1p"}},
      {"diagram", "show", {"build"}},
      {"diagram", "delete", {"delete"}},
      {"diagram", "join", {"join", "join_poly"}},
      {"diagram", "bipartite", {"bipartite_order"}},
      {"coxeter", "", {"coxeter_poly", "char_poly", "schur_step", "cofactors", "path_sum_H", "walk_gf", "identity7_check"}},
      {"divide", "", {"divide_identity"}},
      {"cfrac", "", {"expand_tree", "expand_cycle", "evaluate", "render"}},
      {"verify", "", {"cd_coxeter", "cd_wronskian", "chain_identities", "cd_char", "binet_cauchy", "run"}},
      {"kostant", "",
       {"klein_data", "poincare_series", "verify_system", "ebeling_ratios", "a2m_closed_form", "prop2_squares",
        "walk_series_check", "perfect_square_check", "poincare_cd"}},
      {"braid", "burau", {"burau"}},
      {"braid", "ratio", {"det_ratio"}},
      {"braid", "artin", {"artin_action"}},
      {"braid", "longitudes", {"longitudes"}},
      {"braid", "magnus", {"magnus"}},
      {"braid", "milnor", {"milnor"}},
      {"braid", "levin", {"levin_check"}},
  };
  return table;
}

namespace {

CLI::App* sub_with_common(CLI::App& app, const std::string& name, const std::string& help, RunConfig& c) {
  auto* s = app.add_subcommand(name, help);
  s->add_flag("--json", c.json, "JSON output");
  s->add_flag("--timing", c.timing, "include elapsed_ms in JSON records");
  s->add_option("--seed", c.seed, "random seed");
  return s;
}

void build_app(CLI::App& app, RunConfig& c) {
  app.require_subcommand(1);

  auto* cox = sub_with_common(app, "coxeter", "Coxeter or characteristic polynomial of a diagram", c);
  cox->add_option("--diagram", c.diagram, "built-in name or diagram file")->required();
  cox->add_flag("--char", c.char_poly, "characteristic polynomial in z");
  cox->add_option("--order", c.vertex_order, "vertex order, labels separated by spaces");
  cox->add_option("--schur", c.schur, "print the Schur step at this vertex index");
  cox->add_flag("--cofactors", c.cofactors, "print the cofactor table H_ij");
  cox->add_option("--path", c.pair, "path sum H_ij for vertex indices i j")->expected(2);
  cox->add_option("--walks", c.terms, "walk counts up to this length for the --path pair");

  auto* cf = sub_with_common(app, "cfrac", "branching continued fraction", c);
  cf->add_option("--diagram", c.diagram, "tree diagram");
  cf->add_option("--root", c.root, "root vertex label");
  cf->add_option("--format", c.format, "latex, ascii or eval")->check(CLI::IsMember({"latex", "ascii", "eval"}));
  cf->add_option("--cycle", c.cycle, "two-branch expansion for the n-cycle");
  cf->add_option("--depth", c.depth, "cut depth for --cycle");

  auto* ver = sub_with_common(app, "verify", "check an identity", c);
  ver->add_option("identity", c.sub, "identity name or 'all'")->required();
  ver->add_option("--diagram", c.diagram, "diagram to check");
  ver->add_option("--random-trees", c.random_trees, "number of random weighted trees");
  ver->add_option("--max-vertices", c.max_vertices, "vertex bound for random trees");

  auto* ko = sub_with_common(app, "kostant", "Poincare series of Klein groups", c);
  ko->add_option("--type", c.type, "affine type such as ~E8");
  ko->add_option("--series", c.series, "print the series of this vertex (-1 allowed)");
  ko->add_option("--terms", c.terms, "number of series terms");
  ko->add_option("--verify", c.check, "all, 14, 15, 16, 17, table, exponents, squares, walks, cd, chain, a2m");
  ko->add_option("--a2m", c.a2m, "closed form for the odd cycle ~A_2m");

  auto* br = sub_with_common(app, "braid", "Burau, Artin action, Magnus and Milnor invariants", c);
  br->add_option("action", c.sub, "burau, ratio, artin, longitudes, magnus, milnor, levin")
      ->required()
      ->check(CLI::IsMember({"burau", "ratio", "artin", "longitudes", "magnus", "milnor", "levin"}));
  br->add_option("--word", c.word, "braid word, e.g. \"s1 s1 -s2\"");
  br->add_option("--by", c.by, "the braid B in det(E-b(L))/det(E-b(BL))");
  br->add_option("--free", c.free_word, "free group word, e.g. \"x1 x2^-1\"");
  br->add_option("--strands", c.strands, "strand count (default: from the word)");
  br->add_flag("--reduced", c.reduced, "reduced Burau representation");
  br->add_option("--order", c.order, "truncation order");

  auto* al = sub_with_common(app, "algebra", "polynomial utilities", c);
  al->add_option("action", c.sub, "zsub, qtoz, bez, wr, sqrt1p, det")
      ->required()
      ->check(CLI::IsMember({"zsub", "qtoz", "bez", "wr", "sqrt1p", "det"}));
  al->add_option("--f", c.f, "first polynomial");
  al->add_option("--g", c.g, "second polynomial");
  al->add_option("--order", c.order, "series order");
  al->add_option("--diagram", c.diagram, "diagram whose Coxeter matrix is used by det");

  auto* dg = sub_with_common(app, "diagram", "diagram operations", c);
  dg->add_option("action", c.sub, "show, delete, join, bipartite")
      ->required()
      ->check(CLI::IsMember({"show", "delete", "join", "bipartite"}));
  dg->add_option("--diagram", c.diagram, "diagram; for join a list name:label separated by commas");
  dg->add_option("--vertices", c.vertices, "labels to delete");

  auto* dv = sub_with_common(app, "divide", "block identity for AB = 2C", c);
  dv->add_option("--A", c.A, "rows separated by ';'");
  dv->add_option("--B", c.B, "rows separated by ';'");
  dv->add_option("--C", c.C, "rows separated by ';'");
  dv->add_option("--random", c.random, "number of random triples");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

Matrix<Int> parse_matrix(const std::string& text, const char* name) {
  auto rows = split(text, ';');
  if (rows.empty()) throw Error(Errc::UsageError, std::string("empty matrix ") + name);
  std::vector<std::vector<Int>> v;
  for (const auto& r : rows) {
    std::vector<Int> row;
    for (const auto& w : words(r)) {
      try {
        row.emplace_back(w);
      } catch (const std::exception&) {
        throw Error(Errc::ParseError, std::string("bad entry '") + w + "' in " + name);
      }
    }
    v.push_back(row);
  }
  Matrix<Int> m(v.size(), v[0].size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].size() != v[0].size()) throw Error(Errc::DimensionMismatch, std::string("ragged matrix ") + name);
    for (std::size_t j = 0; j < v[i].size(); ++j) m(i, j) = v[i][j];
  }
  return m;
}

FreeWord parse_free(const std::string& text) {
  FreeWord w;
  for (std::string t : words(text)) {
    int sign = 1;
    if (!t.empty() && t[0] == '-') {
      sign = -1;
      t = t.substr(1);
    }
    if (t.size() > 3 && t.substr(t.size() - 3) == "^-1") {
      sign = -sign;
      t = t.substr(0, t.size() - 3);
    }
    if (t.size() < 2 || t[0] != 'x' || t.find_first_not_of("0123456789", 1) != std::string::npos)
      throw Error(Errc::ParseError, "bad free-group token '" + t + "'");
    w.push_back(sign * std::stoi(t.substr(1)));
  }
  return w;
}

Diagram load_with_order(const RunConfig& c) {
  if (c.diagram.empty()) throw Error(Errc::UsageError, "--diagram is required");
  Diagram d = load_diagram(c.diagram);
  if (!c.vertex_order.empty()) {
    std::vector<std::size_t> ord;
    for (const auto& l : words(c.vertex_order)) ord.push_back(d.find(l));
    d.set_order(ord);
  }
  return d;
}

std::string order_text(const Diagram& d) {
  std::string s;
  for (auto v : d.order()) s += (s.empty() ? "" : " ") + d.label(v);
  return s;
}

json case_json(const CaseResult& r, bool timing) {
  json j;
  j["suite"] = r.suite;
  j["case"] = r.id;
  j["holds"] = r.report.holds;
  j["residual_terms"] = r.report.residual_terms;
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

int emit_cases(const std::vector<CaseResult>& cases, const RunConfig& c, std::ostream& out) {
  std::size_t failed = 0;
  for (const auto& r : cases) {
    if (!r.report.holds) ++failed;
    if (c.json) {
      out << case_json(r, c.timing).dump() << '\n';
    } else {
      out << (r.report.holds ? "PASS " : "FAIL ") << r.suite << ": " << r.id;
      if (!r.report.holds) out << "  residual " << r.report.residual;
      if (!r.report.note.empty()) out << "  [" << r.report.note << "]";
      out << '\n';
    }
  }
  if (!c.json) out << cases.size() << " cases, " << failed << " failed\n";
  return failed ? 1 : 0;
}

int emit_reports(const std::string& suite, const std::vector<IdentityReport>& reports, const RunConfig& c,
                 std::ostream& out) {
  std::vector<CaseResult> cases;
  for (const auto& r : reports) cases.push_back(CaseResult{suite, r.name + " " + r.subject, r, 0});
  return emit_cases(cases, c, out);
}

int cmd_coxeter(const RunConfig& c, std::ostream& out) {
  Diagram d = load_with_order(c);
  if (c.schur >= 0) {
    SchurStep s = schur_step(d, static_cast<std::size_t>(c.schur));
    out << "head: " << s.head.str() << '\n';
    for (const auto& b : s.branches) out << "branch " << d.label(b.i) << " weight " << b.weight.str() << ": " << b.poly.str() << '\n';
    for (const auto& x : s.cross)
      out << "cross " << d.label(x.i) << "," << d.label(x.j) << " weight " << x.weight.str() << ": " << x.P.str() << '\n';
    out << "reassembled: " << s.reassemble().str() << '\n';
    return s.reassemble() == coxeter_poly(d) ? 0 : 1;
  }
  if (c.cofactors) {
    CofactorTable h = cofactors(d);
    for (std::size_t i = 0; i < h.size(); ++i)
      for (std::size_t j = i; j < h.size(); ++j)
        out << "H(" << d.label(i) << "," << d.label(j) << ") = " << h(i, j).str() << '\n';
    return 0;
  }
  if (c.pair.size() == 2) {
    std::size_t i = d.find(c.pair[0]), j = d.find(c.pair[1]);
    out << "path sum: " << path_sum_H(d, i, j).str() << '\n';
    auto w = walk_gf(d, i, j, c.terms);
    out << "walks:";
    for (const auto& x : w) out << ' ' << x.str();
    out << '\n';
    ZPoly r = identity7_check(d, i, j);
    out << "eq7 residual: " << r.str() << '\n';
    return r.is_zero() ? 0 : 1;
  }
  std::string poly = c.char_poly ? char_poly(d).str() : coxeter_poly(d).str();
  if (c.json) {
    json j;
    j["diagram"] = d.name();
    j["order"] = order_text(d);
    j["poly"] = poly;
    out << j.dump() << '\n';
  } else {
    out << poly << '\n';
  }
  return 0;
}

int cmd_cfrac(const RunConfig& c, std::ostream& out) {
  CFrac f;
  if (c.cycle >= 1) {
    f = expand_cycle(c.cycle, c.depth);
  } else {
    Diagram d = load_with_order(c);
    std::size_t root = c.root.empty() ? 0 : d.find(c.root);
    f = expand_tree(d, root);
  }
  if (c.format == "eval") {
    out << evaluate(f).str() << '\n' << "z count: " << z_count(f) << '\n';
  } else {
    out << render(f, c.format == "latex" ? CFracFormat::Latex : CFracFormat::Ascii) << '\n';
  }
  return 0;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  std::vector<CaseResult> cases;
  if (c.sub == "all") {
    cases = verify_all(c.seed);
  } else {
    const auto& names = identity_names();
    if (std::find(names.begin(), names.end(), c.sub) == names.end())
      throw Error(Errc::UsageError, "unknown identity '" + c.sub + "'");
    if (!c.diagram.empty()) cases = verify_identity(c.sub, load_with_order(c));
    if (c.random_trees > 0) {
      auto rt = random_tree_suite({c.sub}, c.random_trees, c.max_vertices, c.seed);
      cases.insert(cases.end(), rt.begin(), rt.end());
    }
    if (c.diagram.empty() && c.random_trees <= 0) throw Error(Errc::UsageError, "give --diagram or --random-trees");
    sort_cases(cases);
  }
  return emit_cases(cases, c, out);
}

int cmd_kostant(const RunConfig& c, std::ostream& out) {
  if (c.a2m >= 0) {
    std::vector<IdentityReport> rs{a2m_closed_form(c.a2m)};
    if (c.a2m >= 1) {
      rs.push_back(a2m_recurrence_check(c.a2m, false));
      rs.push_back(a2m_recurrence_check(c.a2m, true));
    }
    if (!c.json) out << "printed recurrence: " << a2m_recurrence(c.a2m).str() << '\n';
    return emit_reports("kostant", rs, c, out);
  }
  if (c.type.empty()) throw Error(Errc::UsageError, "--type or --a2m is required");
  KleinGroupData k = klein_data(c.type);
  if (c.series >= -1) {
    TruncSeries s = poincare_series(k, c.series, c.terms);
    if (c.json) {
      json j;
      j["type"] = k.type;
      j["vertex"] = c.series;
      j["series"] = s.str('q');
      out << j.dump() << '\n';
    } else {
      out << s.str('q') << '\n';
    }
    return 0;
  }
  if (!c.json) {
    out << k.type << ": a=" << k.a << " b=" << k.b << " h=" << k.h << " |B|=" << k.orderB.str() << '\n';
    out << "Z-1 = " << k.Zminus1.str() << '\n';
    for (int i = 0; i <= k.n; ++i) out << "Z" << i << " = " << k.z(i).str() << '\n';
  }
  if (c.check.empty()) {
    if (c.json) {
      json z = json::array();
      for (int i = -1; i <= k.n; ++i) z.push_back(k.z(i).str());
      out << json{{"type", k.type}, {"a", k.a}, {"b", k.b}, {"h", k.h}, {"orderB", k.orderB.str()}, {"Z", z}}.dump()
          << '\n';
    }
    return 0;
  }
  return emit_cases(kostant_suite(k, c.check, c.terms), c, out);
}

int cmd_braid(const RunConfig& c, std::ostream& out) {
  auto strands_of = [&](const std::string& text) {
    if (c.strands > 0) return c.strands;
    int top = 0;
    for (const auto& w : words(text)) {
      std::string t = w[0] == '-' ? w.substr(1) : w;
      if (t.size() > 1) top = std::max(top, std::atoi(t.c_str() + 1));
    }
    return top + 1;
  };
  const std::string& a = c.sub;
  if (a == "magnus") {
    FreeWord w = parse_free(c.free_word);
    int n = c.strands;
    for (int l : w) n = std::max(n, std::abs(l));
    MagnusSeries s = magnus(w, std::max(n, 1), c.order < 0 ? 4 : c.order);
    out << s.str() << '\n';
    return 0;
  }
  BraidWord b = BraidWord::parse(c.word, strands_of(c.word));
  if (a == "burau") {
    BurauImage m = burau(b, c.reduced ? BurauKind::Reduced : BurauKind::Unreduced);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " | " : "") << m(i, j).str('t');
      out << '\n';
    }
    return 0;
  }
  if (a == "ratio") {
    BraidWord by = BraidWord::parse(c.by, b.strands);
    RatQ r = det_ratio(b, by, BurauKind::Reduced);
    out << r.num().str('t');
    if (!(r.den() == IntLaurent(1))) out << " / (" << r.den().str('t') << ")";
    out << '\n';
    if (b.strands == 2) {
      RatQ cw(alexander_conway_closure(b), alexander_conway_closure(by * b));
      UnitMatch m = match_up_to_unit(r, cw);
      out << "closure ratio: " << cw.str() << '\n';
      out << (m.equal ? "matches" : "differs") << " up to unit " << (m.sign < 0 ? "-" : "") << "q^" << m.power << '\n';
      return m.equal ? 0 : 1;
    }
    return 0;
  }
  if (a == "artin") {
    auto img = artin_action(b);
    for (std::size_t i = 0; i < img.size(); ++i) out << "x" << i + 1 << " -> " << free_str(img[i]) << '\n';
    return 0;
  }
  if (a == "longitudes") {
    auto ls = longitudes(b);
    for (std::size_t i = 0; i < ls.size(); ++i) out << "l" << i + 1 << " = " << free_str(ls[i]) << '\n';
    return 0;
  }
  if (a == "milnor") {
    MilnorTable t = milnor(b, c.order < 0 ? 4 : c.order);
    if (c.json) {
      json arr = json::array();
      for (const auto& [seq, v] : t.mu) arr.push_back(json{{"indices", seq}, {"mu", v.str()}});
      out << json{{"word", b.str()}, {"order", t.order}, {"mu", arr}}.dump() << '\n';
    } else {
      for (const auto& [seq, v] : t.mu) {
        out << "mu(";
        for (std::size_t k = 0; k < seq.size(); ++k) out << (k ? "," : "") << seq[k];
        out << ") = " << v.str() << '\n';
      }
    }
    return 0;
  }
  // levin
  LevinResult r = levin_check(b, c.order < 0 ? 16 : c.order);
  if (!c.json) {
    out << "A_V/A_H: " << r.lhs.str() << '\n' << "Milnor side: " << r.rhs.str() << '\n';
  }
  return emit_reports("braid", {r.report}, c, out);
}

int cmd_algebra(const RunConfig& c, std::ostream& out) {
  const std::string& a = c.sub;
  if (a == "zsub") {
    out << z_substitute(parse_zpoly(c.f)).str() << '\n';
  } else if (a == "qtoz") {
    out << q_to_z(parse_laurent(c.f)).str() << '\n';
  } else if (a == "bez") {
    out << bezoutian(parse_laurent(c.f), parse_laurent(c.g)).str() << '\n';
  } else if (a == "wr") {
    out << wronskian(parse_laurent(c.f), parse_laurent(c.g)).str() << '\n';
  } else if (a == "sqrt1p") {
    out << series_sqrt1p(c.order < 0 ? 8 : c.order).str() << '\n';
  } else {
    Diagram d = load_with_order(c);
    out << det_exact(coxeter_matrix(d)).str() << '\n';
  }
  return 0;
}

int cmd_diagram(const RunConfig& c, std::ostream& out) {
  const std::string& a = c.sub;
  if (a == "join") {
    std::vector<Marked> parts;
    for (const auto& item : split(c.diagram, ',')) {
      auto colon = item.rfind(':');
      if (colon == std::string::npos) throw Error(Errc::UsageError, "join parts are name:label");
      std::string name = item.substr(0, colon);
      name.erase(0, name.find_first_not_of(' '));
      Diagram d = load_diagram(name);
      parts.push_back(Marked{d, d.find(item.substr(colon + 1))});
    }
    Diagram j = join(parts);
    out << to_text(j);
    out << "join_poly: " << join_poly(parts).str() << '\n';
    out << "coxeter: " << coxeter_poly(j).str() << '\n';
    return 0;
  }
  Diagram d = load_with_order(c);
  if (a == "show") {
    out << to_text(d);
  } else if (a == "delete") {
    std::vector<std::size_t> rm;
    for (const auto& l : words(c.vertices)) rm.push_back(d.find(l));
    out << to_text(delete_vertices(d, rm));
  } else {
    BipartiteResult b = bipartite_order(d);
    if (b.ok) {
      out << "bipartite order:";
      for (auto v : b.order) out << ' ' << d.label(v);
    } else {
      out << "odd cycle:";
      for (auto v : b.odd_cycle) out << ' ' << d.label(v);
    }
    out << '\n';
  }
  return 0;
}

int cmd_divide(const RunConfig& c, std::ostream& out) {
  if (c.random > 0) return emit_cases(divide_suite(c.seed, c.random), c, out);
  DivideReport r = divide_identity(parse_matrix(c.A, "A"), parse_matrix(c.B, "B"), parse_matrix(c.C, "C"));
  if (c.json) {
    out << json{{"p", r.p}, {"r", r.r}, {"s", r.s}, {"G", r.G.str()}, {"schur_holds", r.schur_holds},
                {"lhs", r.lhs.str()}, {"rhs", r.rhs.str()}, {"equal", r.equal}}
               .dump()
        << '\n';
  } else {
    out << "G = " << r.G.str() << '\n';
    out << "schur factorization " << (r.schur_holds ? "holds" : "fails") << '\n';
    out << "lhs = " << r.lhs.str() << '\n' << "rhs = " << r.rhs.str() << '\n';
    out << "displayed identity " << (r.equal ? "holds" : "differs") << '\n';
  }
  return r.schur_holds ? 0 : 1;
}

}  // namespace

bool parse_args(int argc, const char* const* argv, RunConfig& config, std::ostream& out) {
  CLI::App app{"cpx: exact Coxeter polynomial, Poincare series and braid toolkit", "cpx"};
  build_app(app, config);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return false;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return false;
  } catch (const CLI::ParseError& e) {
    throw Error(Errc::UsageError, e.what());
  }
  for (auto* s : app.get_subcommands()) config.command = s->get_name();
  return true;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.command == "coxeter") return cmd_coxeter(c, out);
    if (c.command == "cfrac") return cmd_cfrac(c, out);
    if (c.command == "verify") return cmd_verify(c, out);
    if (c.command == "kostant") return cmd_kostant(c, out);
    if (c.command == "braid") return cmd_braid(c, out);
    if (c.command == "algebra") return cmd_algebra(c, out);
    if (c.command == "diagram") return cmd_diagram(c, out);
    if (c.command == "divide") return cmd_divide(c, out);
    throw Error(Errc::UsageError, "unknown command '" + c.command + "'");
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.code() == Errc::UsageError ? 2 : 3;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  try {
    if (!parse_args(argc, argv, c, out)) return 0;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 2;
  }
  return run(c, out, err);
}

}  // namespace cpx
