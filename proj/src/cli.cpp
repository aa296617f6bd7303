#include "lsb/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "lsb/claims.hpp"
#include "lsb/cocycle_solver.hpp"
#include "lsb/equivalence.hpp"
#include "lsb/poissonlie.hpp"

namespace lsb {
namespace {

struct Options {
  std::string algebra = "super_e2";
  std::string file, r, family, params, structure, group = "super-e2", format = "table", filter, report, manifest,
      scale;
  bool strict = false;
};

// Exit code 2 for bad input, independent of where it is detected.
struct UsageError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool machine(const Options& o) {
  if (o.format != "table" && o.format != "machine") throw UsageError("--format must be table or machine");
  return o.format == "machine";
}

// Algebra plus r-matrix from --r text or --family.
std::pair<SuperLieAlgebra, RMatrix> r_input(const Options& o, std::vector<Relation>& relations) {
  if (!o.family.empty()) {
    FamilyValue f = lookup_family(o.family, parse_params(o.params));
    if (!f.r) throw UsageError(o.family + " is a cobracket family; use cobracket-check");
    relations = f.relations;
    return {builtin(f.algebra), *f.r};
  }
  if (o.r.empty()) throw UsageError("give --r or --family");
  SuperLieAlgebra A = load_algebra(o.algebra);
  relations.assign(parameter_relations().begin(), parameter_relations().end());
  return {A, parse_rmatrix(A, parameter_ring(), o.r)};
}

void print_report(std::ostream& out, const SuperLieAlgebra& A, const AxiomReport& rep) { out << rep.summary(A); }

int cmd_validate(const Options& o, std::ostream& out) {
  SuperLieAlgebra A = o.file.empty() ? load_algebra(o.algebra) : parse_algebra(read_file(o.file));
  AxiomReport rep = validate(A);
  print_report(out, A, rep);
  return rep.ok() ? 0 : 1;
}

int cmd_cobracket_check(const Options& o, std::ostream& out) {
  SuperLieAlgebra A = load_algebra(o.algebra);
  Cobracket d;
  std::vector<Relation> relations;
  if (!o.family.empty()) {
    FamilyValue f = lookup_family(o.family, parse_params(o.params));
    A = builtin(f.algebra);
    if (f.delta) {
      d = *f.delta;
    } else {
      d = coboundary_delta(A, *f.r);
    }
    relations = f.relations;
  } else if (!o.file.empty()) {
    d = specialize(parse_cobracket(A, parameter_ring(), read_file(o.file)), parse_params(o.params));
    relations.assign(parameter_relations().begin(), parameter_relations().end());
  } else {
    throw UsageError("give --family or --file");
  }
  AxiomReport rep = check_cobracket(A, d, relations);
  if (machine(o)) {
    for (const auto& ax : rep.axioms) out << ax << "\t" << (rep.passes(ax) ? "pass" : "fail") << "\n";
    for (const auto& v : rep.violations) {
      out << v.axiom;
      for (int i : v.indices) out << "\t" << i;
      out << "\t" << v.residual << "\n";
    }
  } else {
    out << render_cobracket(A, d);
    print_report(out, A, rep);
  }
  return rep.ok() ? 0 : 1;
}

int cmd_schouten(const Options& o, std::ostream& out) {
  std::vector<Relation> relations;
  auto [A, r] = r_input(o, relations);
  GradedTensor s = schouten(A, r).map([&](const SuperScalar& x) { return reduce_all(x, relations); });
  std::string status = to_string(cybe_status(A, r, relations));
  if (machine(o)) {
    out << "status\t" << status << "\n";
    for (const auto& [key, c] : s.coefficients())
      out << A.basis_name(key[0]) << "\t" << A.basis_name(key[1]) << "\t" << A.basis_name(key[2]) << "\t" << c << "\n";
  } else {
    out << "r = " << render_wedge(A, r.tensor()) << "\n";
    out << "[[r,r]] = " << render_tensor(A, s) << "\n";
    out << status << "\n";
  }
  return 0;
}

int cmd_coboundary(const Options& o, std::ostream& out) {
  std::vector<Relation> relations;
  auto [A, r] = r_input(o, relations);
  Cobracket d = coboundary_delta(A, r);
  AxiomReport rep = check_cobracket(A, d, relations);
  out << render_cobracket(A, d);
  if (!machine(o)) print_report(out, A, rep);
  return rep.ok() ? 0 : 1;
}

int cmd_solve_cocycle(const Options& o, std::ostream& out) {
  SuperLieAlgebra A = load_algebra(o.file.empty() ? o.algebra : o.file);
  LinearSystem sys = build_cocycle_system(A);
  SolutionFamily F = solve_cocycle(A, sys);
  std::vector<Cobracket> cob = coboundary_space(A);
  out << "unknowns\t" << sys.unknowns.size() << "\n";
  out << "equations\t" << sys.equations.size() << "\n";
  out << "rank\t" << sys.unknowns.size() - F.nullity() << "\n";
  out << "nullity\t" << F.nullity() << "\n";
  out << "coboundary-dimension\t" << cob.size() << "\n";
  for (std::size_t i = 0; i < F.cobrackets.size(); ++i) {
    out << "basis t" << i + 1 << "\n" << render_cobracket(A, F.cobrackets[i]);
  }
  for (const auto& c : cojacobi_constraints(A, F)) out << "constraint\t" << c << "\n";
  return 0;
}

int cmd_verify_orbits(const Options& o, std::ostream& out) {
  bool m = machine(o);
  int failures = 0;
  for (const auto& c : verify_orbit_claims()) {
    if (!c.passed) ++failures;
    if (m)
      out << c.id << "\t" << (c.passed ? "pass" : "fail") << "\t" << c.witness << "; " << c.detail << "\n";
    else
      out << std::left << std::setw(20) << c.id << (c.passed ? "pass  " : "FAIL  ") << c.statement << "\n"
          << std::string(26, ' ') << "witness: " << c.witness << "\n";
  }
  return failures ? 1 : 0;
}

int cmd_poisson(const Options& o, std::ostream& out) {
  Group g = parse_group(o.group);
  if (o.structure.empty()) throw UsageError("give --structure (" + std::string(g == Group::OSp ? "1..3" : "i..vi") + ")");
  PoissonStructure P = named_structure(g, o.structure);
  Rational scale = g == Group::OSp ? 2 : 1;
  if (!o.scale.empty()) {
    try {
      scale = Rational(o.scale);
      scale.canonicalize();
    } catch (const std::exception&) {
      throw UsageError("bad --scale " + o.scale);
    }
  }
  auto rows = render_table(P, scale);
  if (!machine(o)) {
    out << to_string(g) << " structure " << o.structure;
    if (scale != 1) out << " (brackets multiplied by " << scale << ")";
    out << "\n";
  }
  for (const auto& row : rows) {
    if (machine(o))
      out << row.pair << " = " << row.value << "\n";
    else
      out << "  " << std::left << std::setw(16) << row.pair << row.value << "\n";
  }
  return 0;
}

int cmd_verify_paper(const Options& o, std::ostream& out) {
  auto specs = load_manifest(o.manifest.empty() ? default_manifest_path() : o.manifest);
  auto results = run_claims(specs, o.filter);
  if (results.empty()) throw UsageError("no claim matches filter '" + o.filter + "'");
  int pass = 0, fail = 0, errata = 0;
  std::ostringstream machine_text;
  for (const auto& r : results) {
    switch (r.status) {
      case ClaimResult::Status::Pass:
        ++pass;
        break;
      case ClaimResult::Status::Fail:
        ++fail;
        break;
      case ClaimResult::Status::Erratum:
        ++errata;
        break;
    }
    machine_text << r.id << "\t" << to_string(r.status) << "\t" << r.detail << "\n";
  }
  if (machine(o)) {
    out << machine_text.str();
  } else {
    for (const auto& r : results)
      out << std::left << std::setw(34) << r.id << std::setw(9) << to_string(r.status) << r.anchor << "\n"
          << std::string(34, ' ') << r.detail << "\n";
    out << results.size() << " claims: " << pass << " pass, " << fail << " fail, " << errata << " errata\n";
  }
  if (!o.report.empty()) {
    std::ofstream rep(o.report);
    if (!rep) throw UsageError("cannot write " + o.report);
    rep << machine_text.str();
  }
  return fail > 0 || (o.strict && errata > 0) ? 1 : 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lie super-bialgebra and Poisson-Lie verification tool", "lsb"};
  app.require_subcommand(1);
  Options o;

  auto add_algebra = [&](CLI::App* c) { c->add_option("--algebra", o.algebra, "osp12, super_e2 or a path to an algebra file"); };
  auto add_format = [&](CLI::App* c) { c->add_option("--format", o.format, "table or machine"); };
  auto add_family = [&](CLI::App* c) {
    c->add_option("--family", o.family, "named family, e.g. e2-case-B or osp-r3");
    c->add_option("--params", o.params, "parameter values, e.g. a=1,b=0,c=0");
  };

  auto* validate_cmd = app.add_subcommand("validate", "check grading, antisymmetry and Jacobi");
  add_algebra(validate_cmd);
  validate_cmd->add_option("--file", o.file, "algebra file");

  auto* cob_cmd = app.add_subcommand("cobracket-check", "check the four bialgebra axioms");
  add_algebra(cob_cmd);
  add_family(cob_cmd);
  add_format(cob_cmd);
  cob_cmd->add_option("--file", o.file, "cobracket file with 'delta X = ...' rows");

  auto* sch_cmd = app.add_subcommand("schouten", "Schouten bracket and CYBE status of an r-matrix");
  add_algebra(sch_cmd);
  add_family(sch_cmd);
  add_format(sch_cmd);
  sch_cmd->add_option("--r", o.r, "r-matrix, e.g. \"1 H^P+\"");

  auto* cb_cmd = app.add_subcommand("coboundary", "cobracket of an r-matrix and its axiom check");
  add_algebra(cb_cmd);
  add_family(cb_cmd);
  add_format(cb_cmd);
  cb_cmd->add_option("--r", o.r, "r-matrix");

  auto* solve_cmd = app.add_subcommand("solve-cocycle", "general solution of the cocycle equations");
  add_algebra(solve_cmd);
  add_format(solve_cmd);
  solve_cmd->add_option("--file", o.file, "algebra file");

  auto* orbit_cmd = app.add_subcommand("verify-orbits", "equivalences with their frozen witnesses");
  add_format(orbit_cmd);

  auto* poisson_cmd = app.add_subcommand("poisson", "Poisson-Lie bracket table");
  poisson_cmd->add_option("--group", o.group, "super-e2 or osp");
  poisson_cmd->add_option("--structure", o.structure, "i..vi for super-e2, 1..3 for osp");
  poisson_cmd->add_option("--scale", o.scale, "multiply every bracket (default 2 for osp, 1 for super-e2)");
  add_format(poisson_cmd);

  auto* registry_cmd = app.add_subcommand("verify-paper", "run the claim registry");
  registry_cmd->add_option("--filter", o.filter, "only claims whose id starts with this prefix");
  registry_cmd->add_flag("--strict", o.strict, "count errata as failures");
  registry_cmd->add_option("--report", o.report, "write the machine report to this file");
  registry_cmd->add_option("--manifest", o.manifest, "claim registry file");
  add_format(registry_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(o, out);
    if (cob_cmd->parsed()) return cmd_cobracket_check(o, out);
    if (sch_cmd->parsed()) return cmd_schouten(o, out);
    if (cb_cmd->parsed()) return cmd_coboundary(o, out);
    if (solve_cmd->parsed()) return cmd_solve_cocycle(o, out);
    if (orbit_cmd->parsed()) return cmd_verify_orbits(o, out);
    if (poisson_cmd->parsed()) return cmd_poisson(o, out);
    if (registry_cmd->parsed()) return cmd_verify_paper(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace lsb
