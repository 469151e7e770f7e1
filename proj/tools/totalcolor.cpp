#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "totalcolor/builders.hpp"
#include "totalcolor/certificate.hpp"
#include "totalcolor/claims.hpp"
#include "totalcolor/exact.hpp"
#include "totalcolor/graph_io.hpp"
#include "totalcolor/strategies.hpp"

using namespace totalcolor;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

class UsageError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct GraphOptions
{
  std::string family;
  int n = 0;
  int k = 0;
  std::vector<int> t1;
  std::vector<int> t2;
  std::vector<int> diffs;
  std::string variant = "same-difference";
  int d = 0;
  int base = 0;
};

struct Output
{
  std::string format = "json";
  std::string path;
};

void add_graph_options(CLI::App* cmd, GraphOptions& g)
{
  cmd->add_option("--family", g.family, "graph family")->required();
  cmd->add_option("--n", g.n, "order parameter");
  cmd->add_option("--k", g.k, "second parameter");
  cmd->add_option("--t1", g.t1, "dihedral rotation exponents")->delimiter(',');
  cmd->add_option("--t2", g.t2, "dihedral reflection indices")->delimiter(',');
  cmd->add_option("--diffs", g.diffs, "circulant differences")->delimiter(',');
}

void add_output(CLI::App* cmd, Output& o, std::vector<std::string> formats)
{
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
  cmd->add_option("--out", o.path, "output file (default stdout)");
}

Recipe recipe_of(const GraphOptions& o)
{
  Recipe r;
  try {
    r.family = graph_family_from_name(o.family);
  }
  catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  r.n = o.n;
  r.k = o.k;
  if (r.family == GraphFamily::Circulant)
    r.rotations = o.diffs;
  else if (r.family == GraphFamily::Dihedral) {
    r.rotations = o.t1;
    r.reflections = o.t2;
  }
  return r;
}

Graph graph_of(const GraphOptions& o)
{
  const Recipe r = recipe_of(o);
  if (r.family == GraphFamily::Explicit)
    throw UsageError("explicit graphs cannot be built from flags");
  try {
    return build_graph(r);
  }
  catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void emit(const Output& o, const std::string& text)
{
  if (o.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + o.path);
  out << text;
}

Json read_json(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw UsageError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Json::parse(buffer.str());
}

std::string dump(const Json& j)
{
  return j.dump(2) + "\n";
}

int run_build(const GraphOptions& g, const Output& o)
{
  const Graph graph = graph_of(g);
  emit(o, o.format == "dot" ? graph_to_dot(graph) : dump(graph_to_json(graph)));
  return exit_ok;
}

int run_color(const GraphOptions& g, const std::string& strategy, std::int64_t budget, const Output& o)
{
  ColorRequest request;
  request.recipe = recipe_of(g);
  if (request.recipe.family == GraphFamily::Explicit)
    throw UsageError("explicit graphs cannot be built from flags");
  request.strategy = strategy_from_name(strategy);
  request.budget = budget;
  request.dihedral_variant = g.variant;
  request.d = g.d;
  request.base_index = g.base;
  Construction c = [&] {
    try {
      return color_graph(request);
    }
    catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  if (!c.ok) {
    std::cerr << "construction failed: " << c.failure << "\n";
    for (const std::string& line : c.log)
      std::cerr << "  " << line << "\n";
    return exit_failure;
  }
  emit(o, o.format == "dot" ? coloring_to_dot(c.graph, c.coloring) : dump(certificate_to_json(c)));
  return exit_ok;
}

int run_verify(const std::string& path, const Output& o)
{
  Json doc;
  try {
    doc = read_json(path);
  }
  catch (const Json::parse_error& e) {
    std::cerr << "invalid certificate: " << e.what() << "\n";
    return exit_failure;
  }
  const CertificateCheck check = verify_certificate(doc);
  Json report;
  report["valid"] = check.valid;
  report["problems"] = check.problems;
  Json violations = Json::array();
  if (check.graph)
    for (const Violation& v : check.report.violations)
      violations.push_back(describe(*check.graph, v));
  report["violations"] = violations;
  if (check.valid)
    report["palette"] = check.report.palette;
  if (o.format == "table") {
    std::ostringstream out;
    out << (check.valid ? "VALID" : "INVALID");
    if (check.valid)
      out << " palette " << check.report.palette;
    out << "\n";
    for (const std::string& p : check.problems)
      out << "problem: " << p << "\n";
    for (const auto& v : violations)
      out << "violation: " << v.get<std::string>() << "\n";
    emit(o, out.str());
  }
  else {
    emit(o, dump(report));
  }
  return check.valid ? exit_ok : exit_failure;
}

int run_exact(const GraphOptions& g, std::int64_t budget, const Output& o)
{
  const Graph graph = graph_of(g);
  const TypeResult t = classify_type(graph, budget);
  Json j;
  j["recipe"] = recipe_to_json(graph.recipe());
  j["max_degree"] = t.max_degree;
  j["exact"] = t.chi.exact;
  j["chi"] = t.chi.exact ? Json(t.chi.upper) : Json(nullptr);
  j["lower"] = t.chi.lower;
  j["upper"] = t.chi.upper;
  j["type"] = total_type_name(t.type);
  j["nodes"] = t.chi.nodes;
  if (o.format == "table") {
    std::ostringstream out;
    if (t.chi.exact)
      out << "chi'' = " << t.chi.upper;
    else
      out << "chi'' in [" << t.chi.lower << ", " << t.chi.upper << "]";
    out << "  Delta = " << t.max_degree << "  " << total_type_name(t.type) << "  nodes " << t.chi.nodes << "\n";
    emit(o, out.str());
  }
  else {
    emit(o, dump(j));
  }
  return exit_ok;
}

int run_claims(bool all, const ClaimInstance& single, const std::string& manifest_path, std::int64_t budget,
               const Output& o)
{
  std::vector<ClaimInstance> instances;
  if (all)
    instances = default_claim_matrix();
  else if (!single.theorem.empty())
    instances.push_back(single);
  else
    throw UsageError("claims needs --all or --theorem");

  std::vector<ClaimReport> reports;
  for (const ClaimInstance& in : instances) {
    try {
      reports.push_back(audit_claim(in, budget));
    }
    catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  std::optional<ManifestCheck> check;
  if (!manifest_path.empty())
    check = check_manifest(reports, manifest_from_json(read_json(manifest_path)));

  if (o.format == "json") {
    Json rows = Json::array();
    for (const ClaimReport& r : reports)
      rows.push_back(report_to_json(r));
    Json doc{{"budget", budget}, {"reports", rows}};
    if (check)
      doc["manifest"] = {{"matches", check->matches()}, {"unexpected", check->unexpected}, {"missing", check->missing}};
    emit(o, dump(doc));
  }
  else {
    std::string text = reports_table(reports);
    if (check) {
      text += check->matches() ? "manifest: every non-passing row is documented\n" : "manifest: MISMATCH\n";
      for (const std::string& u : check->unexpected)
        text += "  undocumented: " + u + "\n";
      for (const std::string& m : check->missing)
        text += "  documented but absent: " + m + "\n";
    }
    emit(o, text);
  }

  if (check)
    return check->matches() ? exit_ok : exit_failure;
  for (const ClaimReport& r : reports)
    if (!r.passing())
      return exit_failure;
  return exit_ok;
}

int run_export(const std::string& path, const Output& o)
{
  const Json doc = read_json(path);
  if (doc.contains("vertex_colors")) {
    const CertificateCheck check = verify_certificate(doc);
    if (!check.graph || !check.coloring) {
      std::cerr << "cannot read certificate\n";
      for (const std::string& p : check.problems)
        std::cerr << "  " << p << "\n";
      return exit_failure;
    }
    emit(o, o.format == "dot" ? coloring_to_dot(*check.graph, *check.coloring) : dump(doc));
    return exit_ok;
  }
  const Graph graph = graph_from_json(doc);
  emit(o, o.format == "dot" ? graph_to_dot(graph) : dump(graph_to_json(graph)));
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Total colorings of Cayley, circulant and Kneser-complement graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  std::int64_t budget = default_budget();
  app.add_option("--budget", budget, "search-node budget (default TOTALCOLOR_BUDGET or 5000000)")
    ->check(CLI::PositiveNumber);

  GraphOptions build_graph_opts;
  Output build_out;
  auto* build = app.add_subcommand("build", "emit a graph");
  add_graph_options(build, build_graph_opts);
  add_output(build, build_out, {"json", "dot"});

  GraphOptions color_graph;
  Output color_out;
  std::string strategy = "theorem";
  auto* color = app.add_subcommand("color", "emit a total coloring certificate");
  add_graph_options(color, color_graph);
  add_output(color, color_out, {"json", "dot"});
  color->add_option("--strategy", strategy, "theorem, greedy or exact")
    ->check(CLI::IsMember({"theorem", "greedy", "exact"}));
  color->add_option("--variant", color_graph.variant, "dihedral variant")
    ->check(CLI::IsMember({"same-difference", "complement"}));
  color->add_option("--d", color_graph.d, "complement step d");
  color->add_option("--base", color_graph.base, "complement base index");

  std::string verify_path;
  Output verify_out;
  auto* verify = app.add_subcommand("verify", "check a certificate");
  verify->add_option("certificate", verify_path, "certificate JSON")->required();
  add_output(verify, verify_out, {"json", "table"});

  GraphOptions exact_graph;
  Output exact_out;
  auto* exact = app.add_subcommand("exact", "exact total chromatic number or bounds");
  add_graph_options(exact, exact_graph);
  add_output(exact, exact_out, {"json", "table"});

  bool all = false;
  ClaimInstance single;
  std::string manifest;
  Output claims_out;
  claims_out.format = "table";
  auto* claims = app.add_subcommand("claims", "audit theorem claims");
  claims->add_flag("--all", all, "audit the default matrix");
  claims->add_option("--theorem", single.theorem, "theorem id");
  claims->add_option("--n", single.n, "instance n");
  claims->add_option("--k", single.k, "instance k");
  claims->add_option("--t1", single.t1, "rotation exponents")->delimiter(',');
  claims->add_option("--t2", single.t2, "reflection indices")->delimiter(',');
  claims->add_option("--manifest", manifest, "expected non-passing rows");
  add_output(claims, claims_out, {"table", "json"});

  std::string export_path;
  Output export_out;
  auto* exporter = app.add_subcommand("export", "convert a graph or certificate");
  exporter->add_option("input", export_path, "graph or certificate JSON")->required();
  add_output(exporter, export_out, {"json", "dot"});

  try {
    app.parse(argc, argv);
  }
  catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  }
  catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*build)
      return run_build(build_graph_opts, build_out);
    if (*color)
      return run_color(color_graph, strategy, budget, color_out);
    if (*verify)
      return run_verify(verify_path, verify_out);
    if (*exact)
      return run_exact(exact_graph, budget, exact_out);
    if (*claims)
      return run_claims(all, single, manifest, budget, claims_out);
    if (*exporter)
      return run_export(export_path, export_out);
  }
  catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_usage;
  }
  catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_failure;
  }
  return exit_usage;
}
