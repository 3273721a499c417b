#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "oidforge/brackets.hpp"
#include "oidforge/catalog.hpp"
#include "oidforge/construct.hpp"
#include "oidforge/errors.hpp"
#include "oidforge/io.hpp"
#include "oidforge/isotropy.hpp"

using namespace oidforge;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

// Thrown for failures that are verdicts about the input rather than malformed input.
struct VerificationFailure {
  std::string message;
};

struct Options {
  std::string in, gens, out, order, point, chi, kind, vars;
  std::vector<std::string> phi, ideal;
  int max_arity = -1;
  std::uint64_t seed = 0;
  bool verify = false;
};

std::vector<std::string> split_commas(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& s : items) {
    std::size_t start = 0;
    while (true) {
      std::size_t pos = s.find(',', start);
      std::string part = s.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
      if (part.find_first_not_of(' ') != std::string::npos) out.push_back(part);
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
  }
  return out;
}

// Identifiers occurring in the polynomials, in alphabetical order.
std::vector<std::string> infer_vars(const std::vector<std::string>& polys) {
  std::set<std::string> names;
  for (const auto& p : polys)
    for (std::size_t i = 0; i < p.size();) {
      if (std::isalpha(static_cast<unsigned char>(p[i])) || p[i] == '_') {
        std::size_t j = i;
        while (j < p.size() && (std::isalnum(static_cast<unsigned char>(p[j])) || p[j] == '_')) ++j;
        names.insert(p.substr(i, j - i));
        i = j;
      } else {
        ++i;
      }
    }
  return {names.begin(), names.end()};
}

RingPtr make_ring(const Options& o, const std::vector<std::string>& polys, std::vector<std::string> required = {}) {
  std::vector<std::string> vars = o.vars.empty() ? infer_vars(polys) : split_commas({o.vars});
  for (const auto& r : required)
    if (std::find(vars.begin(), vars.end(), r) == vars.end()) vars.push_back(r);
  if (o.vars.empty() && !required.empty()) {
    // Required variables come first, in the given order.
    std::vector<std::string> rest;
    for (const auto& v : vars)
      if (std::find(required.begin(), required.end(), v) == required.end()) rest.push_back(v);
    vars = required;
    vars.insert(vars.end(), rest.begin(), rest.end());
  }
  if (vars.empty()) throw ParseError("no variables given or found");
  return Ring::make(vars, MonomialOrder::parse(o.order.empty() ? "grevlex" : o.order));
}

void print_tables(const LieInftyAlgebroid& alg) {
  std::cout << "ranks:";
  for (int r : alg.ranks()) std::cout << " " << r;
  std::cout << "\n";
  for (const auto& [k, t] : alg.brackets) {
    std::size_t nonzero = 0;
    for (const auto& [w, v] : t.values)
      if (!is_zero(v)) ++nonzero;
    std::cout << "l" << k << ": " << nonzero << " nonzero entries\n";
  }
}

bool verify_and_report(const LieInftyAlgebroid& alg, int max_arity, Json& artifact) {
  CheckReport r = check_algebroid(alg, max_arity);
  std::cout << "verify: " << r.str() << "\n";
  artifact["report"] = report_to_json(r);
  return r.ok;
}

void isotropy_report(const LieInftyAlgebroid& alg, const std::string& point, Json& artifact) {
  QVector m = parse_point(point);
  IsotropyAlgebra g = isotropy_lie_algebra(alg, m);
  bool regular = is_regular(alg, m);
  Minimality mm = minimality_at(alg, m);
  std::cout << "isotropy at (" << point << "): dimension " << g.dimension() << ", "
            << (regular ? "regular" : "singular") << " point, resolution "
            << (mm.minimal ? "minimal" : "not minimal") << " there\n";
  for (int i = 0; i < g.dimension(); ++i)
    for (int j = i + 1; j < g.dimension(); ++j) {
      std::string rhs;
      for (int k = 0; k < g.dimension(); ++k) {
        const Q& c = g.structure[i][j][k];
        if (sgn(c) == 0) continue;
        rhs += (rhs.empty() ? "" : " + ") + ("(" + to_string(c) + ")*b" + std::to_string(k + 1));
      }
      if (!rhs.empty()) std::cout << "  [b" << i + 1 << ", b" << j + 1 << "] = " << rhs << "\n";
    }
  artifact["isotropy"] = isotropy_to_json(g, regular);
}

int finish(const LieInftyAlgebroid& alg, const Options& o, Json artifact, bool ok) {
  print_tables(alg);
  if (!o.point.empty()) isotropy_report(alg, o.point, artifact);
  if (!o.out.empty()) {
    Json j = algebroid_to_json(alg);
    for (auto& [k, v] : artifact.items()) j[k] = v;
    if (o.out == "-")
      std::cout << dump(j);
    else
      write_json_file(o.out, j);
  }
  return ok ? kOk : kCheckFailed;
}

int run_resolve(const Options& o) {
  Session s = session_from_json(read_json_file(o.gens), o.order);
  FreeResolution res = free_resolution(s.generators, s.ring);
  ExactnessCertificate cert = certify_exactness(res);
  bool ok = cert.verify(res) && complex_defect(res).empty();
  std::cout << "ranks:";
  for (int r : res.ranks) std::cout << " " << r;
  std::cout << "\nexactness certificate: " << (ok ? "verified" : "FAILED") << "\n";
  if (!o.out.empty()) {
    Json j = resolution_to_json(res);
    j["certified"] = ok;
    if (o.out == "-")
      std::cout << dump(j);
    else
      write_json_file(o.out, j);
  }
  return ok ? kOk : kCheckFailed;
}

int run_build(const Options& o) {
  Session s = session_from_json(read_json_file(o.gens), o.order);
  FreeResolution res = free_resolution(s.generators, s.ring);
  BuildOptions opts;
  opts.max_arity = o.max_arity;
  opts.seed = o.seed;
  LieInftyAlgebroid alg = build_all(res, opts);
  Json artifact = Json::object();
  bool ok = !o.verify || verify_and_report(alg, o.max_arity, artifact);
  return finish(alg, o, artifact, ok);
}

int run_catalog(const Options& o) {
  std::vector<std::string> phis = split_commas(o.phi);
  if (phis.empty()) throw ParseError("catalog needs --phi");
  LieInftyAlgebroid alg;
  if (o.kind == "koszul") {
    if (phis.size() != 1) throw ParseError("koszul takes a single --phi");
    RingPtr r = make_ring(o, phis);
    alg = koszul_foliation(Poly::parse(r, phis[0]));
  } else if (o.kind == "vanishing") {
    RingPtr r = make_ring(o, phis);
    std::vector<Poly> ps;
    for (const auto& p : phis) ps.push_back(Poly::parse(r, p));
    alg = vanishing_ideal(ps);
  } else if (o.kind == "hyperelliptic") {
    if (phis.size() != 1) throw ParseError("hyperelliptic takes a single --phi (the polynomial h)");
    RingPtr r = make_ring(o, phis, {"x", "y"});
    if (r->vars()[0] != "x" || r->vars()[1] != "y") throw ParseError("hyperelliptic needs variables x,y first");
    alg = hyperelliptic(Poly::parse(r, phis[0])).alg;
  } else {
    throw ParseError("unknown catalog '" + o.kind + "'");
  }
  Json artifact = Json::object();
  bool ok = !o.verify || verify_and_report(alg, o.max_arity, artifact);
  return finish(alg, o, artifact, ok);
}

int run_verify(const Options& o) {
  LieInftyAlgebroid alg = algebroid_from_json(read_json_file(o.in));
  Json artifact = Json::object();
  bool ok = verify_and_report(alg, o.max_arity, artifact);
  if (!o.out.empty()) {
    if (o.out == "-")
      std::cout << dump(artifact);
    else
      write_json_file(o.out, artifact);
  }
  return ok ? kOk : kCheckFailed;
}

int run_isotropy(const Options& o) {
  LieInftyAlgebroid alg = algebroid_from_json(read_json_file(o.in));
  Json artifact = Json::object();
  isotropy_report(alg, o.point, artifact);
  if (!o.out.empty()) {
    if (o.out == "-")
      std::cout << dump(artifact);
    else
      write_json_file(o.out, artifact);
  }
  return kOk;
}

int run_restrict(const Options& o) {
  LieInftyAlgebroid alg = algebroid_from_json(read_json_file(o.in));
  std::vector<Poly> ideal;
  for (const auto& p : split_commas(o.ideal)) ideal.push_back(Poly::parse(alg.ring(), p));
  if (ideal.empty()) throw ParseError("restrict needs --ideal");
  LieInftyAlgebroid out;
  try {
    out = restrict_to(alg, ideal);
  } catch (const NotLieRinehartIdeal& e) {
    throw VerificationFailure{e.what()};
  }
  Json artifact = Json::object();
  bool ok = !o.verify || verify_and_report(out, o.max_arity, artifact);
  return finish(out, o, artifact, ok);
}

int run_rescale(const Options& o) {
  LieInftyAlgebroid alg = algebroid_from_json(read_json_file(o.in));
  LieInftyAlgebroid out = rescale(alg, Poly::parse(alg.ring(), o.chi));
  Json artifact = Json::object();
  bool ok = !o.verify || verify_and_report(out, o.max_arity, artifact);
  return finish(out, o, artifact, ok);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oidforge: universal Lie infinity-algebroids of singular foliations"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--json-out", o.out, "Write the JSON artifact here ('-' for stdout)");
    c->add_option("--max-arity", o.max_arity, "Highest bracket arity to build or check");
  };

  auto* resolve = app.add_subcommand("resolve", "Free resolution of a session's module, with exactness certificate");
  resolve->add_option("--gens,--in", o.gens, "Session file")->required();
  resolve->add_option("--order", o.order, "Monomial order (grevlex or lex)");
  resolve->add_option("--json-out", o.out, "Write the resolution here ('-' for stdout)");

  auto* build = app.add_subcommand("build", "Build the universal Lie infinity-algebroid of a session");
  build->add_option("--gens,--in", o.gens, "Session file")->required();
  build->add_option("--order", o.order, "Monomial order (grevlex or lex)");
  build->add_option("--seed", o.seed, "Tie-break seed for the lifts of l_3 and above");
  build->add_flag("--verify", o.verify, "Check every higher Jacobi identity");
  build->add_option("--isotropy,--point", o.point, "Report the isotropy Lie algebra at this point");
  add_common(build);

  auto* catalog = app.add_subcommand("catalog", "Closed-form algebroids");
  catalog->add_option("kind", o.kind, "koszul, vanishing or hyperelliptic")->required();
  catalog->add_option("--phi", o.phi, "Defining polynomial(s)")->required();
  catalog->add_option("--vars", o.vars, "Comma-separated variables (default: those occurring in --phi)");
  catalog->add_option("--order", o.order, "Monomial order (grevlex or lex)");
  catalog->add_flag("--verify", o.verify, "Check every higher Jacobi identity");
  catalog->add_option("--isotropy,--point", o.point, "Report the isotropy Lie algebra at this point");
  add_common(catalog);

  auto* verify = app.add_subcommand("verify", "Check a serialized algebroid");
  verify->add_option("--in", o.in, "Algebroid JSON")->required();
  add_common(verify);

  auto* isotropy = app.add_subcommand("isotropy", "Isotropy Lie algebra of a serialized algebroid");
  isotropy->add_option("--in", o.in, "Algebroid JSON")->required();
  isotropy->add_option("--point", o.point, "Comma-separated rational coordinates")->required();
  isotropy->add_option("--json-out", o.out, "Write the JSON report here ('-' for stdout)");

  auto* restrict_cmd = app.add_subcommand("restrict", "Restrict to the zero set of an invariant ideal");
  restrict_cmd->add_option("--in", o.in, "Algebroid JSON")->required();
  restrict_cmd->add_option("--ideal", o.ideal, "Ideal generator(s)")->required();
  restrict_cmd->add_flag("--verify", o.verify, "Check the restricted structure");
  restrict_cmd->add_option("--isotropy,--point", o.point, "Report the isotropy Lie algebra at this point");
  add_common(restrict_cmd);

  auto* rescale_cmd = app.add_subcommand("rescale", "Multiply the foliation by a function");
  rescale_cmd->add_option("--in", o.in, "Algebroid JSON")->required();
  rescale_cmd->add_option("--chi", o.chi, "The function")->required();
  rescale_cmd->add_flag("--verify", o.verify, "Check the rescaled structure");
  rescale_cmd->add_option("--isotropy,--point", o.point, "Report the isotropy Lie algebra at this point");
  add_common(rescale_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (resolve->parsed()) return run_resolve(o);
    if (build->parsed()) return run_build(o);
    if (catalog->parsed()) return run_catalog(o);
    if (verify->parsed()) return run_verify(o);
    if (isotropy->parsed()) return run_isotropy(o);
    if (restrict_cmd->parsed()) return run_restrict(o);
    if (rescale_cmd->parsed()) return run_rescale(o);
  } catch (const VerificationFailure& e) {
    std::cout << "FAILED: " << e.message << "\n";
    return kCheckFailed;
  } catch (const LiftFailed& e) {
    std::cout << "FAILED: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const ClosednessViolated& e) {
    std::cout << "FAILED: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const AnchorNotMorphism& e) {
    std::cout << "FAILED: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const NotExact& e) {
    std::cout << "FAILED: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
