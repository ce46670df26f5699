#include "polygroth/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "polygroth/briangram.hpp"
#include "polygroth/dsl.hpp"
#include "polygroth/errors.hpp"
#include "polygroth/euler.hpp"
#include "polygroth/grothendieck.hpp"
#include "polygroth/motivic.hpp"
#include "polygroth/onedim.hpp"
#include "polygroth/verify/checks.hpp"

namespace polygroth {

namespace {

using Json = nlohmann::ordered_json;

struct Source {
  std::string expr;
  std::string file;

  std::string text() const {
    if (!expr.empty() && !file.empty()) throw UsageError("give either -e or an input file, not both");
    if (!expr.empty()) return expr;
    if (file.empty()) throw UsageError("no input: pass -e EXPR or an input file");
    std::ifstream in(file);
    if (!in) throw UsageError("cannot read " + file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
};

struct Options {
  bool json = false;
  Limits limits;
  Source source;
  std::size_t face = 0;
  bool verify = false;
  std::string exterior;
  std::string gamma;
  std::string filter = "*";
};

bool starts_with_dim(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos || line[p] == '#') continue;
    return line.compare(p, 3, "dim") == 0;
  }
  return false;
}

ConstructibleSet read_set(const Options& o) {
  const std::string text = o.source.text();
  ConstructibleSet C = starts_with_dim(text) ? parse_constructible(text)
                                             : ConstructibleSet::from_polyhedron(parse_polyhedron(text));
  check_dim(C.dim(), o.limits);
  return C;
}

HPolyhedron read_polyhedron(const Options& o) {
  HPolyhedron P = parse_polyhedron(o.source.text());
  check_dim(P.dim(), o.limits);
  return P;
}

Json int_json(const Int& z) {
  if (!z.fits_slong_p()) throw ResourceError("integer too large for JSON output");
  return Json(static_cast<std::int64_t>(z.get_si()));
}

Json row_json(const Row& r) {
  Json a = Json::array();
  for (const auto& x : r.a) a.push_back(int_json(x));
  return Json{{"a", a}, {"b", to_string(r.b)}};
}

Json rows_json(const HPolyhedron& P) {
  Json rows = Json::array();
  for (const auto& r : P.rows()) rows.push_back(row_json(r));
  return rows;
}

Json vec_json(const QVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json poly_json(const IntPoly& p) {
  Json out = Json::array();
  for (auto c : p.coeffs()) out.push_back(c);
  return out;
}

void print_rows(std::ostream& out, const HPolyhedron& P, const std::string& indent = "") {
  for (const auto& r : P.rows()) out << indent << render_row(r) << '\n';
}

std::string tight_list(const std::vector<std::size_t>& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + "]";
}

QVec parse_point(const std::string& text) {
  QVec x;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) x.push_back(parse_rational(item));
  return x;
}

SubgroupQ parse_gamma(const std::string& text) {
  if (text.empty() || text == "div") return SubgroupQ::divisible();
  return SubgroupQ::cyclic(parse_rational(text));
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

int cmd_faces(const Options& o, std::ostream& out) {
  const HPolyhedron P = read_polyhedron(o);
  const auto fs = faces(P, o.limits);
  const HPolyhedron parent = fs.front().parent;
  if (o.json) {
    Json list = Json::array();
    for (const auto& f : fs) list.push_back({{"dim", f.dim}, {"tight", f.tight}, {"witness", vec_json(f.witness)}});
    emit(out, {{"dim", P.dim()}, {"rows", rows_json(parent)}, {"faces", list}});
    return 0;
  }
  out << "faces=" << fs.size() << '\n';
  for (std::size_t i = 0; i < parent.rows().size(); ++i) out << "row " << i << ": " << render_row(parent.rows()[i]) << '\n';
  for (std::size_t i = 0; i < fs.size(); ++i)
    out << "face " << i << ": dim=" << fs[i].dim << " tight=" << tight_list(fs[i].tight)
        << " witness=" << to_string(fs[i].witness) << '\n';
  return 0;
}

int cmd_recession(const Options& o, std::ostream& out) {
  const RecessionData r = recession(read_polyhedron(o));
  if (o.json) {
    Json basis = Json::array();
    for (const auto& v : r.lin_basis) basis.push_back(vec_json(v));
    emit(out, {{"ell", r.ell}, {"rec", rows_json(r.rec)}, {"lin_basis", basis}});
    return 0;
  }
  out << "ell=" << r.ell << '\n';
  out << "rec:\n";
  print_rows(out, r.rec, "  ");
  out << "lin:\n";
  for (const auto& v : r.lin_basis) out << "  " << to_string(v) << '\n';
  return 0;
}

int cmd_tangent(const Options& o, std::ostream& out) {
  const auto fs = faces(read_polyhedron(o), o.limits);
  if (o.face >= fs.size()) throw UsageError("face index out of range (" + std::to_string(fs.size()) + " faces)");
  const Face& F = fs[o.face];
  const HPolyhedron T = tangent_cone(F);
  if (o.json) {
    emit(out, {{"face", o.face}, {"dim", F.dim}, {"cone", rows_json(T)}});
    return 0;
  }
  out << "face=" << o.face << " dim=" << F.dim << '\n';
  print_rows(out, T);
  return 0;
}

int cmd_bg(const Options& o, std::ostream& out) {
  const HPolyhedron P = read_polyhedron(o);
  const BGDecomposition d = bg_decompose(P, o.limits);
  std::optional<bool> verified;
  if (o.verify) verified = bg_verify(d, o.limits);
  std::optional<std::int64_t> chi_v;
  if (!o.exterior.empty()) {
    const QVec x = parse_point(o.exterior);
    if (x.size() != P.dim()) throw UsageError("exterior point has the wrong length");
    chi_v = visible_union_chi(P, x, o.limits);
  }
  if (o.json) {
    Json terms = Json::array();
    for (const auto& t : d.terms) terms.push_back({{"sign", t.sign}, {"face_dim", t.face.dim}, {"cone", rows_json(t.cone)}});
    Json j{{"ell", d.ell}, {"terms", terms}};
    if (verified) j["verified"] = *verified;
    if (chi_v) j["chi_U_v"] = *chi_v;
    emit(out, j);
    return 0;
  }
  out << "ell=" << d.ell << " terms=" << d.terms.size() << '\n';
  for (const auto& t : d.terms) {
    out << (t.sign > 0 ? "+" : "-") << " face_dim=" << t.face.dim << '\n';
    if (t.cone.rows().empty()) out << "  true\n";
    print_rows(out, t.cone, "  ");
  }
  if (verified) out << "verified=" << (*verified ? "true" : "false") << '\n';
  if (chi_v) out << "chi_U_v=" << *chi_v << '\n';
  return 0;
}

int cmd_chi(const Options& o, std::ostream& out) {
  const EulerPair e = euler_pair(read_set(o), o.limits);
  if (o.json) {
    emit(out, {{"chi", e.chi}, {"chi_b", e.chi_b}});
  } else {
    out << "chi=" << e.chi << " chi_b=" << e.chi_b << '\n';
  }
  return 0;
}

int cmd_class(const Options& o, std::ostream& out) {
  const ConstructibleSet C = read_set(o);
  const GradedClass k = class_of(C, o.limits);
  if (o.json) {
    Json terms = Json::array();
    for (const auto& [n, c] : k.terms()) terms.push_back({{"n", n}, {"u", c.first}, {"v", c.second}});
    emit(out, {{"dim", C.dim()}, {"c0", k.c0()}, {"terms", terms}, {"text", k.render()}});
  } else {
    out << k.render() << '\n';
  }
  return 0;
}

int cmd_ungraded(const Options& o, std::ostream& out) {
  const UngradedClass u = ungraded(class_of(read_set(o), o.limits));
  if (o.json) {
    emit(out, {{"chi", u.chi}, {"chi_b", u.chi_b}});
  } else {
    out << "(" << u.chi << ", " << u.chi_b << ")\n";
  }
  return 0;
}

int cmd_chi_gamma(const Options& o, std::ostream& out) {
  const SubgroupQ g = parse_gamma(o.gamma);
  const ConstructibleSet C = read_set(o);
  const std::int64_t value = chi_gamma(C, g);
  if (o.json) {
    emit(out, {{"gamma", g.render()}, {"canonical", canonicalize(C).render()}, {"chi_gamma", value}});
  } else {
    out << value << '\n';
  }
  return 0;
}

std::string sign_string(const std::vector<int>& s) {
  std::string out;
  for (int x : s) out += x < 0 ? '-' : x > 0 ? '+' : '0';
  return out;
}

int cmd_cells(const Options& o, std::ostream& out) {
  const ConstructibleSet C = read_set(o);
  const CellComplex cx = cell_complex(C.dim(), hyperplanes_of(C), o.limits);
  if (o.json) {
    Json hs = Json::array();
    for (const auto& h : cx.hyperplanes) hs.push_back(row_json(Row{h.a, h.b}));
    Json cells = Json::array();
    for (const auto& c : cx.cells)
      cells.push_back({{"signs", c.signs}, {"dim", c.dim}, {"witness", vec_json(c.witness)}, {"member", C.contains(c.witness)}});
    emit(out, {{"dim", cx.dim}, {"hyperplanes", hs}, {"cells", cells}});
    return 0;
  }
  out << "hyperplanes=" << cx.hyperplanes.size() << " cells=" << cx.cells.size() << '\n';
  for (std::size_t i = 0; i < cx.hyperplanes.size(); ++i) {
    const Hyperplane& h = cx.hyperplanes[i];
    out << "h" << i << ": " << render_linear(h.a) << " = " << to_string(h.b) << '\n';
  }
  for (const auto& c : cx.cells)
    out << sign_string(c.signs) << " dim=" << c.dim << " witness=" << to_string(c.witness)
        << (C.contains(c.witness) ? " in" : " out") << '\n';
  return 0;
}

int cmd_motivic(const Options& o, std::ostream& out) {
  const SemialgDesc s = parse_semialg(o.source.text());
  check_dim(s.n, o.limits);
  const VFClass x = semialg_class(s, o.limits);
  const LPoly p = psi(x);
  const bool kernel = in_kernel_psi(x);
  if (o.json) {
    emit(out, {{"f", poly_json(x.f())}, {"g", poly_json(x.g())}, {"psi", poly_json(p)}, {"in_kernel", kernel},
               {"text", x.render()}});
  } else {
    out << x.render() << '\n' << "psi=" << p.render("L") << '\n' << "in_kernel=" << (kernel ? "true" : "false") << '\n';
  }
  return 0;
}

int cmd_verify_suite(const Options& o, std::ostream& out, std::ostream& err) {
  const auto results = verify::run_checks(o.filter);
  if (results.empty()) {
    err << "error: no check matches '" << o.filter << "'\n";
    return 2;
  }
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (o.json) {
    Json checks = Json::array();
    for (const auto& r : results)
      checks.push_back({{"name", r.name}, {"criterion", r.criterion}, {"passed", r.passed}, {"detail", r.detail}});
    emit(out, {{"checks", checks}, {"passed", all}});
  } else {
    std::size_t ok = 0;
    for (const auto& r : results) {
      ok += r.passed;
      out << (r.passed ? "PASS " : "FAIL ") << r.name << " [" << r.criterion << "] " << r.detail << '\n';
    }
    out << "passed " << ok << "/" << results.size() << '\n';
  }
  return all ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Grothendieck-ring invariants of rational polyhedra and constructible sets", "polygroth"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--max-hyperplanes", o.limits.max_hyperplanes, "cap on arrangement size")->check(CLI::PositiveNumber);
  app.add_option("--max-dim", o.limits.max_dim, "cap on ambient dimension")->check(CLI::PositiveNumber);

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("-e,--expr", o.source.expr, "inline input");
    sub->add_option("file", o.source.file, "input file");
    return sub;
  };
  auto* faces_cmd = with_input(app.add_subcommand("faces", "face lattice of a polyhedron"));
  auto* recession_cmd = with_input(app.add_subcommand("recession", "recession cone and lineality"));
  auto* tangent_cmd = with_input(app.add_subcommand("tangent", "tangent cone at a face"));
  tangent_cmd->add_option("--face", o.face, "face index as listed by `faces`")->required();
  auto* bg_cmd = with_input(app.add_subcommand("bg", "Brianchon-Gram decomposition"));
  bg_cmd->add_flag("--verify", o.verify, "check the identity exactly");
  bg_cmd->add_option("--exterior", o.exterior, "comma-separated exterior point for the visible union");
  auto* chi_cmd = with_input(app.add_subcommand("chi", "chi and chi_b"));
  auto* class_cmd = with_input(app.add_subcommand("class", "graded class in Z[u,v]/(uv)"));
  auto* ungraded_cmd = with_input(app.add_subcommand("ungraded", "image in Z x Z"));
  auto* gamma_cmd = with_input(app.add_subcommand("chi-gamma", "chi_Gamma of a set in R^1"));
  gamma_cmd->add_option("--gamma", o.gamma, "generator q of qZ, or `div` for Q")->required();
  auto* cells_cmd = with_input(app.add_subcommand("cells", "cells of the arrangement"));
  auto* motivic_cmd = with_input(app.add_subcommand("motivic", "class of a tropical-preimage set"));
  auto* suite_cmd = app.add_subcommand("verify-suite", "run the acceptance checks");
  suite_cmd->add_option("--filter", o.filter, "glob on check names");

  std::vector<const char*> argv{"polygroth"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (faces_cmd->parsed()) return cmd_faces(o, out);
    if (recession_cmd->parsed()) return cmd_recession(o, out);
    if (tangent_cmd->parsed()) return cmd_tangent(o, out);
    if (bg_cmd->parsed()) return cmd_bg(o, out);
    if (chi_cmd->parsed()) return cmd_chi(o, out);
    if (class_cmd->parsed()) return cmd_class(o, out);
    if (ungraded_cmd->parsed()) return cmd_ungraded(o, out);
    if (gamma_cmd->parsed()) return cmd_chi_gamma(o, out);
    if (cells_cmd->parsed()) return cmd_cells(o, out);
    if (motivic_cmd->parsed()) return cmd_motivic(o, out);
    if (suite_cmd->parsed()) return cmd_verify_suite(o, out, err);
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << '\n';
    return 2;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace polygroth
