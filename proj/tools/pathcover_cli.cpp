// pathcover: covers, power-path witnesses, constructions, verification,
// Ramsey formulas and exhaustive searches over two-coloured complete graphs.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "pathcover/certificate_io.hpp"
#include "pathcover/colouring.hpp"
#include "pathcover/errors.hpp"
#include "pathcover/oracle.hpp"
#include "pathcover/partition.hpp"
#include "pathcover/ramsey.hpp"
#include "pathcover/ramsey_search.hpp"
#include "pathcover/validate.hpp"

using namespace pathcover;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct Params {
  int n = 0, m = 0, l = 0, t = 0, k = 0, host_order = 0, chi = 0, sigma = 0;
  std::string family;
};

void add_params(CLI::App* app, Params& p) {
  app->add_option("--n", p.n, "path order n");
  app->add_option("--m", p.m, "second target order m");
  app->add_option("--l", p.l, "second part size l (haggkvist)");
  app->add_option("--t", p.t, "number of parts t");
  app->add_option("--k", p.k, "power exponent k");
  app->add_option("--host-order", p.host_order, "|G| (burr)");
  app->add_option("--chi", p.chi, "chromatic number of H (burr)");
  app->add_option("--sigma", p.sigma, "least colour class of H (burr)");
}

RamseyFormulaQuery query_of(const Params& p) {
  RamseyFormulaQuery q;
  q.family = ramsey_family_from_string(p.family);
  q.n = p.n;
  q.m = p.m;
  q.l = p.l;
  q.t = p.t;
  q.k = p.k;
  q.host_order = p.host_order;
  q.chi = p.chi;
  q.sigma = p.sigma;
  return q;
}

void add_budget(CLI::App* app, SearchBudget& b) {
  app->add_option("--max-nodes", b.max_nodes, "node expansion cap");
  app->add_option("--max-seconds", b.max_seconds, "time cap in seconds");
  app->add_option("--max-vertices", b.max_vertices, "vertex cap");
}

std::string join(const std::vector<Vertex>& vs) {
  std::string out;
  for (Vertex v : vs) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

struct CoverArgs {
  std::string shape, in, out;
  int k = 1;
  int gap = 0;
};

int run_cover(const CoverArgs& a) {
  const Colouring g = read_colouring(a.in);
  CertificateDocument doc;
  ShapeKind kind = shape_kind_from_string(a.shape);
  if (kind == ShapeKind::PathBipartite && a.gap > 0) kind = ShapeKind::PathBipartiteGap;
  doc.cert.shape = CoverShape{kind, a.k, a.gap, 0};
  try {
    switch (kind) {
      case ShapeKind::TwoPath:
        doc.cert = to_certificate(two_path_cover(g));
        break;
      case ShapeKind::PathBipartite:
        doc.cert = to_certificate(path_bipartite_cover(g), {kind, 1, 0, 0});
        break;
      case ShapeKind::PathBipartiteGap:
        doc.cert = to_certificate(path_bipartite_gap(g, a.gap), {kind, 1, a.gap, 0});
        break;
      case ShapeKind::PathMultipartite:
        doc.cert = to_certificate(path_multipartite_cover(g, a.k), {kind, a.k, 0, 0});
        break;
      case ShapeKind::TreeMultipartite:
        doc.cert = to_certificate(tree_multipartite_cover(g, a.k), a.k);
        break;
      case ShapeKind::PathsConnected:
        doc.cert = to_certificate(paths_multipartite_connected(g, a.k), {kind, a.k, 0, 0});
        break;
      case ShapeKind::WeakTree:
        doc.cert = to_certificate(weak_tree_cover(g, a.k), a.k);
        break;
      case ShapeKind::PowerPath:
        throw PreconditionError("power-path is produced by `witness power-path`, not `cover`");
    }
  } catch (const InternalError& e) {
    doc.valid = false;
    doc.error = e.what();
    doc.state = e.state();
    write_certificate(a.out, doc);
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailed;
  }
  const ValidationReport report = validate_cover(g, doc.cert);
  doc.valid = report.ok();
  if (!doc.valid) doc.error = report.summary();
  write_certificate(a.out, doc);
  std::cout << report.summary() << "\n";
  return doc.valid ? kOk : kFailed;
}

struct WitnessArgs {
  std::string in, out;
  int n = 0, k = 0;
};

int run_witness(const WitnessArgs& a) {
  const Colouring g = read_colouring(a.in);
  CertificateDocument doc;
  doc.cert.shape = CoverShape{ShapeKind::PowerPath, a.k, 0, a.n};
  try {
    PowerPathReport rep;
    doc.cert.power = power_path_witness(g, a.n, a.k, &rep);
    static const char* kRoutes[] = {"blue-path", "large-component", "separated-set", "multipartition"};
    std::cout << "route " << kRoutes[static_cast<int>(rep.route)];
    if (rep.band >= 0) std::cout << " band " << rep.band;
    std::cout << "\npower " << join(doc.cert.power->vertices) << "\n";
  } catch (const InternalError& e) {
    doc.valid = false;
    doc.error = e.what();
    doc.state = e.state();
    if (!a.out.empty()) write_certificate(a.out, doc);
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailed;
  }
  if (!a.out.empty()) write_certificate(a.out, doc);
  return kOk;
}

int run_construct(const Params& p, const std::string& out) {
  const Colouring g = extremal_construction(query_of(p));
  if (out.empty()) {
    std::cout << serialize(g);
  } else {
    write_colouring(out, g);
    std::cout << "order " << g.order() << "\n";
  }
  return kOk;
}

int run_verify(const std::string& in, const std::string& cert_path) {
  const Colouring g = read_colouring(in);
  const CertificateDocument doc = read_certificate(cert_path);
  if (!doc.valid) {
    std::cout << "certificate flagged invalid: " << doc.error << "\n";
    return kFailed;
  }
  const ValidationReport report = validate_cover(g, doc.cert);
  std::cout << report.summary() << "\n";
  return report.ok() ? kOk : kFailed;
}

int run_formula(const Params& p) {
  const RamseyValue v = ramsey_formula(query_of(p));
  std::cout << v.value << (v.lower_bound ? " (lower bound)" : "") << "\n";
  return kOk;
}

std::pair<RamseyTarget, RamseyTarget> targets_of(const Params& p) {
  const RamseyFamily f = ramsey_family_from_string(p.family);
  if (p.n < 1) throw PreconditionError("--n must be positive");
  const RamseyTarget red = RamseyTarget::path(Colour::Red, p.n);
  switch (f) {
    case RamseyFamily::PathPath:
      if (p.m < 1) throw PreconditionError("--m must be positive");
      return {red, RamseyTarget::path(Colour::Blue, p.m)};
    case RamseyFamily::PathPower:
      if (p.k < 1) throw PreconditionError("--k must be positive");
      return {red, RamseyTarget::power(Colour::Blue, p.m > 0 ? p.m : p.n, p.k)};
    case RamseyFamily::PathMultipartite:
      if (p.m < 1 || p.t < 1) throw PreconditionError("--m and --t must be positive");
      return {red, RamseyTarget::multipartite(Colour::Blue, p.m, p.t)};
    default:
      throw PreconditionError("ramsey search supports path-path, path-power and path-multipartite");
  }
}

struct SearchArgs {
  Params params;
  RamseySearchOptions options;
  bool no_prune = false;
  std::string out;
};

int run_search(SearchArgs a) {
  a.options.prune = !a.no_prune;
  const auto [red, blue] = targets_of(a.params);
  const RamseySearchResult r = ramsey_exhaustive(red, blue, a.options);
  std::cout << "targets " << red.describe() << " vs " << blue.describe() << "\n";
  std::cout << "free";
  for (std::uint64_t c : r.free_counts) std::cout << " " << c;
  std::cout << "\n";
  if (r.value) {
    std::cout << "R = " << *r.value << "\n";
  } else {
    std::cout << "R > " << a.options.max_n << "\n";
  }
  if (!a.out.empty() && r.extremal) write_colouring(a.out, *r.extremal);
  return kOk;
}

struct OracleArgs {
  std::string in;
  int m = 0, t = 1;
  SearchBudget budget;
};

int run_longest(const OracleArgs& a) {
  const PathResult r = longest_red_path_exact(read_colouring(a.in), a.budget);
  std::cout << r.order << "\npath " << join(r.path.vertices) << "\n";
  return kOk;
}

int run_power(const OracleArgs& a) {
  const PowerResult r = largest_blue_power_exact(read_colouring(a.in), a.t, a.budget);
  std::cout << r.order << "\npower " << join(r.power.vertices) << "\n";
  return kOk;
}

int run_multipartite(const OracleArgs& a) {
  const auto w = has_blue_balanced_multipartite(read_colouring(a.in), a.m, a.t, a.budget);
  std::cout << (w ? "yes" : "no") << "\n";
  if (w) {
    for (VertexSet p : w->parts) std::cout << "part " << join(p.to_vector()) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covers, witnesses and Ramsey searches for two-coloured complete graphs"};
  app.require_subcommand(1);

  CoverArgs cover;
  auto* cover_cmd = app.add_subcommand("cover", "cover a colouring and write a certificate");
  cover_cmd->add_option("--shape", cover.shape, "two-path|path-bipartite|path-multipartite|tree-multipartite|paths-connected|weak-tree")->required();
  cover_cmd->add_option("--k", cover.k, "number of paths, leaves or parts parameter");
  cover_cmd->add_option("--gap", cover.gap, "part size difference for path-bipartite");
  cover_cmd->add_option("--in", cover.in, "colouring file")->required();
  cover_cmd->add_option("--out", cover.out, "certificate file")->required();

  WitnessArgs witness;
  auto* witness_cmd = app.add_subcommand("witness", "constructive witnesses");
  witness_cmd->require_subcommand(1);
  auto* power_cmd = witness_cmd->add_subcommand("power-path", "blue P_n^k in a colouring with no red P_n");
  power_cmd->add_option("--n", witness.n, "path order")->required();
  power_cmd->add_option("--k", witness.k, "power exponent")->required();
  power_cmd->add_option("--in", witness.in, "colouring file")->required();
  power_cmd->add_option("--out", witness.out, "certificate file");

  Params construct;
  std::string construct_out;
  auto* construct_cmd = app.add_subcommand("construct", "extremal lower-bound colouring");
  construct_cmd->add_option("--family", construct.family, "path-power|path-multipartite|haggkvist|burr")->required();
  add_params(construct_cmd, construct);
  construct_cmd->add_option("--out", construct_out, "colouring file (stdout if omitted)");

  std::string verify_in, verify_cert;
  auto* verify_cmd = app.add_subcommand("verify", "check a certificate against a colouring");
  verify_cmd->add_option("--in", verify_in, "colouring file")->required();
  verify_cmd->add_option("--cert", verify_cert, "certificate file")->required();

  auto* ramsey_cmd = app.add_subcommand("ramsey", "Ramsey numbers");
  ramsey_cmd->require_subcommand(1);
  Params formula;
  auto* formula_cmd = ramsey_cmd->add_subcommand("formula", "evaluate a closed formula");
  formula_cmd->add_option("--family", formula.family, "path-path|path-multipartite|path-power|haggkvist|burr")->required();
  add_params(formula_cmd, formula);
  SearchArgs search;
  auto* search_cmd = ramsey_cmd->add_subcommand("search", "exhaustive search over colourings");
  search_cmd->add_option("--family", search.params.family, "path-path|path-power|path-multipartite")->required();
  add_params(search_cmd, search.params);
  search_cmd->add_option("--max-n", search.options.max_n, "largest order to enumerate")->required();
  search_cmd->add_option("--jobs", search.options.jobs, "worker threads");
  search_cmd->add_flag("--no-prune", search.no_prune, "enumerate labelled colourings without isomorphism pruning");
  search_cmd->add_option("--out", search.out, "write a target-free colouring of the largest order reached");
  add_budget(search_cmd, search.options.budget);

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "exact brute-force searches");
  oracle_cmd->require_subcommand(1);
  auto* longest_cmd = oracle_cmd->add_subcommand("longest-red-path", "maximum order of a red path");
  auto* bluepow_cmd = oracle_cmd->add_subcommand("largest-blue-power", "maximum order of a blue t-th power of a path");
  bluepow_cmd->add_option("--t", oracle.t, "exponent")->required();
  auto* multi_cmd = oracle_cmd->add_subcommand("blue-multipartite", "blue balanced complete t-partite with parts of size m");
  multi_cmd->add_option("--m", oracle.m, "part size")->required();
  multi_cmd->add_option("--t", oracle.t, "number of parts")->required();
  for (auto* cmd : {longest_cmd, bluepow_cmd, multi_cmd}) {
    cmd->add_option("--in", oracle.in, "colouring file")->required();
    add_budget(cmd, oracle.budget);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*cover_cmd) return run_cover(cover);
    if (*power_cmd) return run_witness(witness);
    if (*construct_cmd) return run_construct(construct, construct_out);
    if (*verify_cmd) return run_verify(verify_in, verify_cert);
    if (*formula_cmd) return run_formula(formula);
    if (*search_cmd) return run_search(search);
    if (*longest_cmd) return run_longest(oracle);
    if (*bluepow_cmd) return run_power(oracle);
    if (*multi_cmd) return run_multipartite(oracle);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n" << e.state() << "\n";
    return kFailed;
  }
  return kUsage;
}
