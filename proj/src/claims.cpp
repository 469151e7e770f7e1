#include "totalcolor/claims.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "totalcolor/builders.hpp"
#include "totalcolor/construction.hpp"
#include "totalcolor/dihedral_colorer.hpp"
#include "totalcolor/edge_coloring.hpp"
#include "totalcolor/exact.hpp"
#include "totalcolor/kneser.hpp"
#include "totalcolor/permutation_colorers.hpp"

namespace totalcolor {

std::string_view verdict_name(Verdict v)
{
  switch (v) {
  case Verdict::Confirmed: return "CONFIRMED";
  case Verdict::BoundOnly: return "BOUND_ONLY";
  case Verdict::RefutedAtInstance: return "REFUTED_AT_INSTANCE";
  case Verdict::Inapplicable: return "INAPPLICABLE";
  }
  return "INAPPLICABLE";
}

Verdict verdict_from_name(std::string_view name)
{
  for (Verdict v : {Verdict::Confirmed, Verdict::BoundOnly, Verdict::RefutedAtInstance, Verdict::Inapplicable})
    if (verdict_name(v) == name)
      return v;
  throw std::invalid_argument("unknown verdict: " + std::string(name));
}

namespace {

std::string join(const std::vector<int>& xs)
{
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

bool acceptable(Verdict v)
{
  return v == Verdict::Confirmed || v == Verdict::BoundOnly;
}

Verdict judge(ClaimKind kind, int claimed, int lower, std::optional<int> upper)
{
  if (kind == ClaimKind::Exact) {
    if (upper && *upper == lower)
      return lower == claimed ? Verdict::Confirmed : Verdict::RefutedAtInstance;
    if (claimed < lower || (upper && claimed > *upper))
      return Verdict::RefutedAtInstance;
    return Verdict::BoundOnly;
  }
  if (upper && *upper <= claimed)
    return Verdict::Confirmed;
  if (lower > claimed)
    return Verdict::RefutedAtInstance;
  return Verdict::BoundOnly;
}

void describe_graph(ClaimReport& r, const Graph& g)
{
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  r.max_degree = g.max_degree();
}

void absorb_construction(ClaimReport& r, const Construction& c)
{
  r.construction_log = c.log;
  if (c.ok)
    r.constructed = c.palette();
  else
    r.construction_failure = c.failure;
}

/// Runs the total-coloring solver unless the construction already meets
/// the lower bound or the total graph is too large.
void run_total_solver(ClaimReport& r, const Graph& g, std::int64_t budget)
{
  const int delta = g.max_degree();
  r.lower = delta + 1;
  r.upper = r.constructed;
  if (r.constructed && *r.constructed == delta + 1) {
    r.solver = "not run: the construction meets the lower bound Delta+1";
    return;
  }
  const int size = g.vertex_count() + g.edge_count();
  if (size > solver_size_limit) {
    r.solver = "not run: total graph has " + std::to_string(size) + " vertices (limit " +
               std::to_string(solver_size_limit) + ")";
    return;
  }
  const ChromaticResult chi = total_chromatic_number(g, budget);
  r.solver_lower = chi.lower;
  r.solver_upper = chi.upper;
  r.solver_exact = chi.exact;
  r.solver_nodes = chi.nodes;
  r.solver = chi.exact ? "exact after " + std::to_string(chi.nodes) + " nodes"
                       : "budget of " + std::to_string(budget) + " nodes exhausted";
  r.lower = std::max(r.lower, chi.lower);
  r.upper = r.upper ? std::min(*r.upper, chi.upper) : chi.upper;
  if (chi.exact && r.constructed && *r.constructed < chi.upper)
    r.notes.push_back("construction palette " + std::to_string(*r.constructed) + " is below the solver's optimum " +
                      std::to_string(chi.upper));
}

/// Statement from the numbers, proof step from the construction.
void conclude(ClaimReport& r)
{
  r.statement = judge(r.kind, r.claimed, r.lower, r.upper);
  if (r.constructed)
    r.proof_step = judge(r.kind, r.claimed, *r.constructed, *r.constructed);
  else
    r.proof_step = Verdict::RefutedAtInstance;
  if (r.quantity == "chi''" && r.settled()) {
    r.tcc = r.lower >= r.max_degree + 1 && r.lower <= r.max_degree + 2;
    if (!*r.tcc)
      r.notes.push_back("chi'' = " + std::to_string(r.lower) + " lies outside [Delta+1, Delta+2]");
  }
}

void mark_inapplicable(ClaimReport& r, std::string reason)
{
  r.statement = Verdict::Inapplicable;
  r.proof_step = Verdict::Inapplicable;
  r.notes.push_back(std::move(reason));
}

/// The usual flow: build by construction, then solver, then verdicts.
ClaimReport audit_total(ClaimReport r, const Construction& c, std::int64_t budget)
{
  describe_graph(r, c.graph);
  absorb_construction(r, c);
  run_total_solver(r, c.graph, budget);
  conclude(r);
  return r;
}

ClaimReport start(const ClaimInstance& in, ClaimKind kind, int claimed, std::string claim)
{
  ClaimReport r;
  r.instance = in;
  r.kind = kind;
  r.claimed = claimed;
  r.claim = std::move(claim);
  return r;
}

void require_n(const ClaimInstance& in, int min)
{
  if (in.n < min)
    throw std::invalid_argument(in.theorem + " needs n >= " + std::to_string(min));
}

ClaimReport audit_sn_tm(const ClaimInstance& in, std::int64_t budget)
{
  require_n(in, 3);
  ClaimReport r = start(in, ClaimKind::Exact, in.n, "chi'' = n");
  return audit_total(std::move(r), total_color_sn_tm(in.n), budget);
}

ClaimReport audit_proposition(const ClaimInstance& in, std::int64_t budget)
{
  require_n(in, 3);
  ClaimReport r = start(in, ClaimKind::AtMost, 3, "odd n: an equitable split into 3 independent classes exists");
  r.quantity = "vertex classes";
  const Graph g = permutation_cayley(GraphFamily::SnTm, in.n).graph;
  describe_graph(r, g);
  if (in.n % 2 == 0) {
    mark_inapplicable(r, "n is even");
    return r;
  }
  try {
    const VertexPartition p = equitable_three_partition(g, in.n, budget);
    const auto conflicts = dependent_pairs(g, p);
    if (conflicts.empty() && p.covers(g.vertex_count())) {
      r.constructed = 3;
      std::string sizes;
      for (const auto& cls : p.classes)
        sizes += (sizes.empty() ? "" : ",") + std::to_string(cls.size());
      r.construction_log.push_back("class sizes " + sizes);
    }
    else {
      r.construction_failure = std::to_string(conflicts.size()) + " dependent pairs";
    }
  }
  catch (const ConstructionError& e) {
    r.construction_failure = e.what();
  }
  const ChromaticResult chi = exact_chromatic_number(g, 1, std::max(1, g.vertex_count()), budget);
  r.solver_lower = chi.lower;
  r.solver_upper = chi.upper;
  r.solver_exact = chi.exact;
  r.solver_nodes = chi.nodes;
  r.solver = chi.exact ? "chromatic number " + std::to_string(chi.upper) : "chromatic number bounds only";
  r.lower = chi.lower;
  r.upper = r.constructed ? std::min(*r.constructed, chi.upper) : chi.upper;
  conclude(r);
  return r;
}

ClaimReport audit_an_star3(const ClaimInstance& in, std::int64_t budget)
{
  require_n(in, 4);
  const Construction c = total_color_an_star3(in.n, budget);
  const int delta = c.graph.max_degree();
  ClaimReport r = start(in, ClaimKind::AtMost, delta + 2, "satisfies TCC: chi'' <= Delta+2");
  r.notes.push_back("the proof counts 3+(n-3) = " + std::to_string(in.n) + " colors, below the lower bound Delta+1 = " +
                    std::to_string(delta + 1));
  return audit_total(std::move(r), c, budget);
}

ClaimReport audit_adjacent_cycle(const ClaimInstance& in, GroupKind kind, std::int64_t budget)
{
  require_n(in, 3);
  const GraphFamily family = kind == GroupKind::Symmetric ? GraphFamily::SnAdjacentCycle
                                                          : GraphFamily::AnThreeCycleNCycle;
  std::optional<Graph> g;
  std::string reason;
  try {
    g = permutation_cayley(family, in.n).graph;
  }
  catch (const std::invalid_argument& e) {
    reason = e.what();
  }
  if (!g) {
    ClaimReport r = start(in, ClaimKind::Exact, 0, "type I: chi'' = Delta+1");
    mark_inapplicable(r, "graph undefined: " + reason);
    return r;
  }
  ClaimReport r = start(in, ClaimKind::Exact, g->max_degree() + 1, "type I: chi'' = Delta+1");
  OrbitOptions options;
  options.budget = budget;
  try {
    return audit_total(std::move(r), total_color_adjacent_cycle(kind, in.n, options, budget), budget);
  }
  catch (const std::invalid_argument& e) {
    describe_graph(r, *g);
    mark_inapplicable(r, std::string("construction undefined: ") + e.what());
    return r;
  }
}

void dihedral_notes(ClaimReport& r, const Construction& c)
{
  for (const char* key : {"rotation_vertex_palette", "rotation_total_palette", "transfer_j"}) {
    auto it = c.stats.find(key);
    if (it != c.stats.end())
      r.notes.push_back(std::string(key) + " = " + std::to_string(it->second));
  }
}

ClaimReport audit_dihedral(const ClaimInstance& in, std::int64_t budget)
{
  DihedralColoringSpec spec;
  ClaimReport r;
  if (in.theorem == "dihedral-interval") {
    if (in.n < 3 || in.k < 1)
      throw std::invalid_argument("dihedral-interval needs n and k");
    spec = DihedralColoringSpec::interval(in.n, in.k);
    r = start(in, ClaimKind::AtMost, 2 * in.k + 3, "chi'' <= 2k+3");
  }
  else if (in.theorem == "dihedral-same-difference") {
    if (in.n < 3 || in.t1.empty())
      throw std::invalid_argument("dihedral-same-difference needs n and T1");
    spec = DihedralColoringSpec::same_difference(in.n, in.t1, in.t2);
    const int t = static_cast<int>(in.t1.size() + in.t2.size());
    r = start(in, ClaimKind::AtMost, t + 2, "chi'' <= |T|+2");
  }
  else {
    if (in.k < 1)
      throw std::invalid_argument("dihedral-complement needs k");
    spec = DihedralColoringSpec::complement_family(in.k);
  }
  if (const auto problems = spec.validate(); !problems.empty()) {
    r.instance = in;
    mark_inapplicable(r, problems.front());
    return r;
  }
  if (in.theorem == "dihedral-complement") {
    const int t = static_cast<int>(spec.t1.size() + spec.t2.size());
    r = start(in, ClaimKind::AtMost, t + 2, "chi'' <= |T|+2");
    const int n = spec.n;
    r.notes.push_back("the example states |T|+1 = " + std::to_string(t + 1) + " and 2n-2k-2 = " +
                      std::to_string(2 * n - 2 * in.k - 2));
  }
  const Construction c = dihedral_total_color(spec, budget);
  dihedral_notes(r, c);
  return audit_total(std::move(r), c, budget);
}

ClaimReport audit_kneser(const ClaimInstance& in, std::int64_t budget)
{
  if (in.n < 2 || in.k < 1 || in.k > in.n)
    throw std::invalid_argument("kneser needs 1 <= k <= n");
  ClaimReport r = start(in, ClaimKind::AtMost, 0, "chi'' <= Delta+3");
  if (in.n % 2 != 0 || in.n % in.k != 0) {
    const Graph g = kneser_complement_graph(in.n, in.k);
    describe_graph(r, g);
    r.claimed = g.max_degree() + 3;
    mark_inapplicable(r, "hypothesis fails: n even and k | n");
    return r;
  }
  const Construction c = kneser_complement_total(in.n, in.k, budget);
  r.claimed = c.graph.max_degree() + 3;
  {
    long long kneser_degree = 1;
    for (int i = 0; i < in.k; ++i)
      kneser_degree = kneser_degree * (in.n - in.k - i) / (i + 1);
    r.notes.push_back("the proof's budget C(n-k,k)+3 = " + std::to_string(kneser_degree + 3));
  }
  r = audit_total(std::move(r), c, budget);
  if (c.inapplicable) {
    r.statement = Verdict::Inapplicable;
    r.proof_step = Verdict::RefutedAtInstance;
    r.notes.push_back("statement left open: the proof's clique partition does not exist");
  }
  return r;
}

/// Checks the three S_4 classes as printed.
ClaimReport audit_published_example(const ClaimInstance& in, std::int64_t)
{
  static const std::vector<std::vector<std::string>> printed{
    {"e", "(23)", "(124)", "(1324)", "(134)", "(1234)", "(142)", "(1432)"},
    {"(12)", "(132)", "(24)", "(243)", "(1342)", "(12)(34)", "(14)", "(14)(23)"},
    {"(13)", "(123)", "(1243)", "(13)(24)", "(34)", "(234)", "(143)", "(1423)"},
  };
  ClaimReport r = start(in, ClaimKind::Exact, 0, "the printed S_4 classes are independent with perfect matchings");
  r.quantity = "dependent pairs";
  const CayleyGraph<Permutation> cg = permutation_cayley(GraphFamily::SnTm, 4);
  describe_graph(r, cg.graph);
  VertexPartition p;
  for (const auto& cls : printed) {
    std::vector<int> ids;
    for (const std::string& text : cls)
      ids.push_back(cg.vertex_of(text == "e" ? Permutation::identity(4) : Permutation::parse(text, 4)));
    p.classes.push_back(std::move(ids));
  }
  if (!p.covers(cg.graph.vertex_count()))
    r.notes.push_back("the printed classes do not cover S_4");
  const auto conflicts = dependent_pairs(cg.graph, p);
  for (const auto& [u, v] : conflicts)
    r.notes.push_back("adjacent in one class: " + cg.elements[u].to_string() + " ~ " + cg.elements[v].to_string());
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      const Matching m = matching_between_classes(cg.graph, p.classes[a], p.classes[b]);
      r.construction_log.push_back("classes " + std::to_string(a) + "," + std::to_string(b) + ": matching of " +
                                   std::to_string(m.edges.size()) + " edges" + (m.perfect ? " (perfect)" : ""));
    }
  r.constructed = static_cast<int>(conflicts.size());
  r.solver = "not needed: direct count";
  r.lower = *r.constructed;
  r.upper = r.constructed;
  conclude(r);
  return r;
}

using Auditor = std::function<ClaimReport(const ClaimInstance&, std::int64_t)>;

const std::map<std::string, Auditor>& auditors()
{
  static const std::map<std::string, Auditor> table{
    {"sn-tm", audit_sn_tm},
    {"proposition", audit_proposition},
    {"an-star3", audit_an_star3},
    {"sn-adjacent-cycle",
     [](const ClaimInstance& in, std::int64_t b) { return audit_adjacent_cycle(in, GroupKind::Symmetric, b); }},
    {"an-adjacent-cycle",
     [](const ClaimInstance& in, std::int64_t b) { return audit_adjacent_cycle(in, GroupKind::Alternating, b); }},
    {"dihedral-interval", audit_dihedral},
    {"dihedral-same-difference", audit_dihedral},
    {"dihedral-complement", audit_dihedral},
    {"kneser", audit_kneser},
    {"published-s4-example", audit_published_example},
  };
  return table;
}

}  // namespace

std::string ClaimInstance::label() const
{
  std::string out;
  auto add = [&](const std::string& part) { out += (out.empty() ? "" : " ") + part; };
  if (n > 0)
    add("n=" + std::to_string(n));
  if (k > 0)
    add("k=" + std::to_string(k));
  if (!t1.empty())
    add("T1=" + join(t1));
  if (!t2.empty())
    add("T2=" + join(t2));
  return out.empty() ? "-" : out;
}

bool ClaimReport::passing() const
{
  return acceptable(statement) && acceptable(proof_step);
}

std::vector<std::string> theorem_ids()
{
  std::vector<std::string> out;
  for (const auto& [id, fn] : auditors())
    out.push_back(id);
  return out;
}

ClaimReport audit_claim(const ClaimInstance& instance, std::int64_t budget)
{
  auto it = auditors().find(instance.theorem);
  if (it == auditors().end())
    throw std::invalid_argument("unknown theorem id: " + instance.theorem);
  return it->second(instance, budget);
}

std::vector<ClaimInstance> default_claim_matrix()
{
  std::vector<ClaimInstance> out;
  for (int n : {3, 4, 5})
    out.push_back({"sn-tm", n});
  for (int n : {3, 5})
    out.push_back({"proposition", n});
  for (int n : {4, 5})
    out.push_back({"an-star3", n});
  for (int n : {3, 4, 5})
    out.push_back({"sn-adjacent-cycle", n});
  for (int n : {4, 5})
    out.push_back({"an-adjacent-cycle", n});
  out.push_back({"dihedral-interval", 36, 4});
  out.push_back({"dihedral-interval", 12, 1});
  out.push_back({"dihedral-same-difference", 18, 0, {1, 2, 3, 4, 14, 15, 16, 17}, {0, 2}});
  out.push_back({"dihedral-same-difference", 12, 0, {1, 11}, {0, 1}});
  for (int k : {1, 2, 3})
    out.push_back({"dihedral-complement", 0, k});
  for (auto [n, k] : {std::pair{4, 2}, {6, 2}, {6, 3}, {8, 4}, {8, 2}})
    out.push_back({"kneser", n, k});
  out.push_back({"published-s4-example"});
  return out;
}

std::int64_t default_budget()
{
  constexpr std::int64_t fallback = 5'000'000;
  const char* env = std::getenv("TOTALCOLOR_BUDGET");
  if (!env)
    return fallback;
  const std::string_view text(env);
  std::int64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value <= 0)
    return fallback;
  return value;
}

Json report_to_json(const ClaimReport& r)
{
  Json j;
  j["theorem"] = r.instance.theorem;
  j["instance"] = r.instance.label();
  Json params = Json::object();
  if (r.instance.n > 0)
    params["n"] = r.instance.n;
  if (r.instance.k > 0)
    params["k"] = r.instance.k;
  if (!r.instance.t1.empty())
    params["t1"] = r.instance.t1;
  if (!r.instance.t2.empty())
    params["t2"] = r.instance.t2;
  j["parameters"] = params;
  j["quantity"] = r.quantity;
  j["graph"] = {{"vertices", r.vertices}, {"edges", r.edges}, {"max_degree", r.max_degree}};
  j["constructed"] = r.constructed ? Json(*r.constructed) : Json(nullptr);
  if (!r.construction_failure.empty())
    j["construction_failure"] = r.construction_failure;
  j["solver"] = {{"summary", r.solver},
                 {"lower", r.solver_lower ? Json(*r.solver_lower) : Json(nullptr)},
                 {"upper", r.solver_upper ? Json(*r.solver_upper) : Json(nullptr)},
                 {"exact", r.solver_exact},
                 {"nodes", r.solver_nodes}};
  j["bounds"] = {{"lower", r.lower}, {"upper", r.upper ? Json(*r.upper) : Json(nullptr)}};
  j["exact"] = r.settled() ? Json(r.lower) : Json(nullptr);
  j["claim"] = r.claim;
  j["claim_kind"] = r.kind == ClaimKind::Exact ? "EXACT" : "AT_MOST";
  j["claimed"] = r.claimed;
  j["verdict"] = verdict_name(r.statement);
  j["proof_step"] = verdict_name(r.proof_step);
  j["tcc"] = r.tcc ? Json(*r.tcc) : Json(nullptr);
  j["notes"] = r.notes;
  j["construction_log"] = r.construction_log;
  return j;
}

std::string reports_table(const std::vector<ClaimReport>& reports)
{
  const std::vector<std::string> head{"theorem", "instance", "constructed", "exact", "claimed", "verdict", "proof step"};
  std::vector<std::vector<std::string>> rows{head};
  for (const ClaimReport& r : reports) {
    std::string exact;
    if (r.settled())
      exact = std::to_string(r.lower);
    else
      exact = "[" + std::to_string(r.lower) + "," + (r.upper ? std::to_string(*r.upper) : "?") + "]";
    std::string claimed = (r.kind == ClaimKind::Exact ? "= " : "<= ") + std::to_string(r.claimed);
    if (r.vertices == 0 && r.statement == Verdict::Inapplicable)
      exact = claimed = "-";
    rows.push_back({r.instance.theorem, r.instance.label(), r.constructed ? std::to_string(*r.constructed) : "failed",
                    exact, claimed, std::string(verdict_name(r.statement)), std::string(verdict_name(r.proof_step))});
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << row[i];
      if (i + 1 < row.size())
        out << std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << '\n';
  }
  return out.str();
}

std::vector<ManifestEntry> manifest_from_json(const Json& doc)
{
  if (!doc.is_object() || !doc.contains("non_passing") || !doc["non_passing"].is_array())
    throw std::invalid_argument("manifest needs a non_passing array");
  std::vector<ManifestEntry> out;
  for (const Json& e : doc["non_passing"])
    out.push_back({e.at("theorem").get<std::string>(), e.at("instance").get<std::string>(),
                   verdict_from_name(e.at("statement").get<std::string>()),
                   verdict_from_name(e.at("proof_step").get<std::string>())});
  return out;
}

Json manifest_to_json(const std::vector<ManifestEntry>& entries)
{
  Json list = Json::array();
  for (const ManifestEntry& e : entries)
    list.push_back({{"theorem", e.theorem},
                    {"instance", e.instance},
                    {"statement", verdict_name(e.statement)},
                    {"proof_step", verdict_name(e.proof_step)}});
  return Json{{"non_passing", list}};
}

ManifestCheck check_manifest(const std::vector<ClaimReport>& reports, const std::vector<ManifestEntry>& manifest)
{
  auto name = [](const ManifestEntry& e) {
    return e.theorem + " " + e.instance + " " + std::string(verdict_name(e.statement)) + "/" +
           std::string(verdict_name(e.proof_step));
  };
  std::vector<ManifestEntry> seen;
  for (const ClaimReport& r : reports)
    if (!r.passing())
      seen.push_back({r.instance.theorem, r.instance.label(), r.statement, r.proof_step});
  ManifestCheck out;
  for (const ManifestEntry& e : seen)
    if (std::find(manifest.begin(), manifest.end(), e) == manifest.end())
      out.unexpected.push_back(name(e));
  for (const ManifestEntry& e : manifest)
    if (std::find(seen.begin(), seen.end(), e) == seen.end())
      out.missing.push_back(name(e));
  return out;
}

}  // namespace totalcolor
