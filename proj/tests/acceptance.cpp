#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "totalcolor/builders.hpp"
#include "totalcolor/certificate.hpp"
#include "totalcolor/circulant_colorers.hpp"
#include "totalcolor/claims.hpp"
#include "totalcolor/dihedral_colorer.hpp"
#include "totalcolor/edge_coloring.hpp"
#include "totalcolor/exact.hpp"
#include "totalcolor/kneser.hpp"
#include "totalcolor/permutation_colorers.hpp"
#include "support/oracle.hpp"

using namespace totalcolor;

namespace {

struct Outcome
{
  bool pass = true;
  std::vector<std::string> details;

  void require(bool ok, const std::string& what)
  {
    if (!ok) {
      pass = false;
      details.push_back("FAILED " + what);
    }
  }
  void note(const std::string& what) { details.push_back(what); }
};

class Stopwatch
{
public:
  double seconds() const
  {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fixed(double x)
{
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << x;
  return out.str();
}

void require_runtime(Outcome& o, const Stopwatch& w, double limit)
{
  const double t = w.seconds();
  o.require(t < limit, "runtime " + fixed(t) + " s exceeds " + fixed(limit) + " s");
  o.note("runtime " + fixed(t) + " s");
}

/// Replaces one decimal digit of value with a different digit.
int mutate_digit(int value, std::mt19937& rng)
{
  std::string text = std::to_string(value);
  const std::size_t pos = std::uniform_int_distribution<std::size_t>(0, text.size() - 1)(rng);
  char c = text[pos];
  while (c == text[pos] || (pos == 0 && c == '0' && text.size() > 1))
    c = static_cast<char>('0' + std::uniform_int_distribution<int>(0, 9)(rng));
  text[pos] = c;
  return std::stoi(text);
}

Json mutate(const Json& doc, std::mt19937& rng)
{
  Json out = doc;
  const int kind = std::uniform_int_distribution<int>(0, 9)(rng);
  auto& vertices = out["vertex_colors"];
  auto& edges = out["edge_colors"];
  const bool use_vertex = edges.empty() || std::uniform_int_distribution<int>(0, 1)(rng) == 0;
  if (kind < 7) {
    if (use_vertex) {
      const std::size_t i = std::uniform_int_distribution<std::size_t>(0, vertices.size() - 1)(rng);
      vertices[i] = mutate_digit(vertices[i].get<int>(), rng);
    }
    else {
      auto it = edges.begin();
      std::advance(it, std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng));
      *it = mutate_digit(it->get<int>(), rng);
    }
  }
  else if (kind == 7) {
    auto it = edges.begin();
    if (!edges.empty()) {
      std::advance(it, std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng));
      edges.erase(it);
    }
    else {
      vertices.erase(vertices.size() - 1);
    }
  }
  else if (kind == 8) {
    const std::size_t i = std::uniform_int_distribution<std::size_t>(0, vertices.size() - 1)(rng);
    vertices[i] = nullptr;
  }
  else {
    const std::size_t i = std::uniform_int_distribution<std::size_t>(0, vertices.size() - 1)(rng);
    const std::size_t j = (i + 1) % vertices.size();
    if (vertices[i] == vertices[j])
      vertices[i] = mutate_digit(vertices[i].get<int>(), rng);
    else
      std::swap(vertices[i], vertices[j]);
  }
  return out;
}

Outcome verifier_fuzz()
{
  Outcome o;
  Stopwatch w;
  std::vector<Json> originals;
  auto add = [&](const Construction& c) {
    if (c.ok)
      originals.push_back(certificate_to_json(c));
    else
      o.require(false, "construction for the corpus failed: " + c.failure);
  };
  add(total_color_sn_tm(3));
  add(total_color_sn_tm(4));
  add(total_color_an_star3(4));
  add(total_color_adjacent_cycle(GroupKind::Symmetric, 4));
  add(total_color_adjacent_cycle(GroupKind::Alternating, 5));
  add(dihedral_total_color(DihedralColoringSpec::interval(12, 1)));
  add(dihedral_total_color(DihedralColoringSpec::same_difference(12, {1, 11}, {0, 1})));
  add(canonical_power_cycle_total(15, 2));
  add(clique_canonical_total(5));
  add(kneser_complement_total(4, 2));
  add(kneser_complement_total(6, 3));
  const Graph petersen = petersen_graph();
  originals.push_back(certificate_to_json(petersen, greedy_total_coloring(petersen)));
  const Graph c5 = cycle_graph(5);
  originals.push_back(
    certificate_to_json(c5, total_coloring_from(c5, total_chromatic_number(c5, 100000).coloring)));

  int false_rejects = 0;
  for (const Json& doc : originals)
    if (!verify_certificate(Json::parse(doc.dump())).valid)
      ++false_rejects;

  std::mt19937 rng(1000);
  int false_accepts = 0;
  int silent = 0;
  constexpr int mutants = 1000;
  for (int i = 0; i < mutants; ++i) {
    const Json& doc = originals[i % originals.size()];
    const Json bad = mutate(doc, rng);
    const CertificateCheck check = verify_certificate(Json::parse(bad.dump()));
    if (check.valid)
      ++false_accepts;
    if (check.problems.size() + check.report.violations.size() == 0)
      ++silent;
  }
  o.require(false_rejects == 0, std::to_string(false_rejects) + " valid certificates rejected");
  o.require(false_accepts == 0, std::to_string(false_accepts) + " mutants accepted");
  o.require(silent == 0, std::to_string(silent) + " mutants rejected without a reported violation");
  o.note(std::to_string(mutants) + " mutants over " + std::to_string(originals.size()) + " certificates");
  require_runtime(o, w, 10);
  return o;
}

Outcome sn_tm_audit()
{
  Outcome o;
  Stopwatch w;
  const int vertices[] = {6, 24, 120};
  for (int n = 3; n <= 5; ++n) {
    const Construction c = total_color_sn_tm(n);
    o.require(c.ok, "construction n=" + std::to_string(n) + ": " + c.failure);
    o.require(c.graph.vertex_count() == vertices[n - 3], "vertex count at n=" + std::to_string(n));
    o.require(c.ok && verify_total(c.graph, c.coloring).valid(), "verifier at n=" + std::to_string(n));
    o.require(c.palette() == n, "palette " + std::to_string(c.palette()) + " at n=" + std::to_string(n));
    ClaimInstance in;
    in.theorem = "sn-tm";
    in.n = n;
    const ClaimReport r = audit_claim(in, default_budget());
    o.require(r.statement == Verdict::Confirmed, "claim verdict at n=" + std::to_string(n));
  }
  for (int n = 3; n <= 4; ++n) {
    const TypeResult t = classify_type(permutation_cayley(GraphFamily::SnTm, n).graph, default_budget());
    o.require(t.chi.exact && t.chi.upper == n, "exact chi'' at n=" + std::to_string(n));
    o.require(t.type == TotalType::TypeI, "Type I at n=" + std::to_string(n));
    o.note("n=" + std::to_string(n) + " chi''=" + std::to_string(t.chi.upper) + " after " +
           std::to_string(t.chi.nodes) + " nodes");
  }
  require_runtime(o, w, 300);
  return o;
}

Outcome published_example()
{
  Outcome o;
  ClaimInstance in;
  in.theorem = "published-s4-example";
  const ClaimReport r = audit_claim(in, default_budget());
  o.require(r.constructed == 0, std::to_string(r.constructed.value_or(-1)) + " adjacent pairs inside the printed classes");
  for (const std::string& note : r.notes)
    o.note(note);
  for (const std::string& line : r.construction_log) {
    o.note(line);
    o.require(line.find("8 edges (perfect)") != std::string::npos, "perfect matching of size 8: " + line);
  }
  return o;
}

Outcome dihedral_audits()
{
  Outcome o;
  Stopwatch w;
  const Construction d72 = dihedral_total_color(DihedralColoringSpec::interval(36, 4));
  o.require(d72.ok && verify_total(d72.graph, d72.coloring).valid(), "D_72 verifier: " + d72.failure);
  o.require(d72.palette() <= 11, "D_72 palette " + std::to_string(d72.palette()));
  const auto it = d72.stats.find("rotation_vertex_palette");
  o.require(it != d72.stats.end() && it->second == 9, "D_72 rotation vertex palette 9");
  o.note("D_72 palette " + std::to_string(d72.palette()) + ", rotation vertex palette " +
         (it == d72.stats.end() ? std::string("?") : std::to_string(it->second)));

  const auto d36_spec = DihedralColoringSpec::same_difference(18, {1, 2, 3, 4, 14, 15, 16, 17}, {0, 2});
  const Construction d36 = dihedral_total_color(d36_spec);
  o.require(d36.ok && verify_total(d36.graph, d36.coloring).valid(), "D_36 verifier: " + d36.failure);
  o.require(d36.palette() <= 12, "D_36 palette " + std::to_string(d36.palette()));
  o.note("D_36 palette " + std::to_string(d36.palette()));

  for (int k = 1; k <= 2; ++k) {
    const auto spec = DihedralColoringSpec::complement_family(k);
    const Construction c = dihedral_total_color(spec);
    const int t = static_cast<int>(spec.t1.size() + spec.t2.size());
    o.require(c.ok && verify_total(c.graph, c.coloring).valid(), "complement k=" + std::to_string(k) + ": " + c.failure);
    o.note("complement k=" + std::to_string(k) + " palette " + std::to_string(c.palette()) + " vs |T|+1 = " +
           std::to_string(t + 1) + " and 2n-2k-2 = " + std::to_string(2 * spec.n - 2 * k - 2));
  }
  require_runtime(o, w, 30);
  return o;
}

Outcome canonical_power_cycles()
{
  Outcome o;
  Stopwatch w;
  int count = 0;
  for (int k = 1; 2 * k + 1 <= 200; ++k)
    for (int n = 2 * k + 1; n <= 200; n += 2 * k + 1) {
      const Construction c = canonical_power_cycle_total(n, k);
      ++count;
      if (!c.ok || c.palette() != 2 * k + 1)
        o.require(false, "(n,k) = (" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
  o.note(std::to_string(count) + " instances");
  require_runtime(o, w, 10);
  return o;
}

Outcome kneser_audit()
{
  Outcome o;
  Stopwatch w;
  for (auto [n, k] : {std::pair{4, 2}, {6, 3}}) {
    const Construction c = kneser_complement_total(n, k);
    const std::string name = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
    o.require(c.ok && verify_total(c.graph, c.coloring).valid(), name + " verifier: " + c.failure);
    o.require(c.palette() <= c.graph.max_degree() + 3, name + " palette above Delta+3");
    o.note(name + " palette " + std::to_string(c.palette()) + ", Delta+3 = " + std::to_string(c.graph.max_degree() + 3));
  }
  const CliquePartitionResult none = kneser_clique_partition(6, 2);
  o.require(!none.exists && none.exhausted, "(6,2) nonexistence certificate");
  o.note(none.certificate);
  ClaimInstance in;
  in.theorem = "kneser";
  in.n = 6;
  in.k = 2;
  const ClaimReport r = audit_claim(in, default_budget());
  o.require(r.proof_step == Verdict::RefutedAtInstance, "(6,2) proof step REFUTED_AT_INSTANCE");
  const ChromaticResult octa = total_chromatic_number(kneser_complement_graph(4, 2), default_budget());
  o.require(octa.exact && octa.upper == 5, "chi''(octahedron) = 5");
  require_runtime(o, w, 120);
  return o;
}

Outcome oracle_equivalence()
{
  Outcome o;
  Stopwatch w;
  int compared = 0;
  for (const Graph& g : oracle::oracle_corpus()) {
    if (g.vertex_count() + g.edge_count() > 24)
      continue;
    const ChromaticResult r = total_chromatic_number(g, default_budget());
    const int naive = oracle::naive_total_chromatic_number(g);
    o.require(r.exact && r.upper == naive, "mismatch on a graph with " + std::to_string(g.vertex_count()) +
                                              " vertices: solver " + std::to_string(r.upper) + ", naive " +
                                              std::to_string(naive));
    ++compared;
  }
  o.require(total_chromatic_number(cycle_graph(5), default_budget()).upper == 4, "chi''(C_5) = 4");
  o.require(total_chromatic_number(cycle_graph(6), default_budget()).upper == 3, "chi''(C_6) = 3");
  o.require(total_chromatic_number(complete_graph(4), default_budget()).upper == 5, "chi''(K_4) = 5");
  o.note(std::to_string(compared) + " graphs compared");
  require_runtime(o, w, 300);
  return o;
}

Outcome tcc_sweep()
{
  Outcome o;
  std::vector<ClaimReport> reports;
  for (const ClaimInstance& in : default_claim_matrix())
    reports.push_back(audit_claim(in, default_budget()));
  int settled = 0;
  for (const ClaimReport& r : reports)
    if (r.tcc) {
      ++settled;
      o.require(*r.tcc, "TCC fails at " + r.instance.theorem + " " + r.instance.label());
    }
  std::ifstream in(TOTALCOLOR_MANIFEST);
  o.require(static_cast<bool>(in), "manifest readable");
  if (in) {
    const ManifestCheck check = check_manifest(reports, manifest_from_json(Json::parse(in)));
    for (const std::string& u : check.unexpected)
      o.require(false, "undocumented non-passing row " + u);
    for (const std::string& m : check.missing)
      o.require(false, "documented row absent " + m);
  }
  o.note(std::to_string(reports.size()) + " rows, " + std::to_string(settled) + " with chi'' settled");
  return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria()
{
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> list{
    {"verifier fuzz suite", verifier_fuzz},
    {"S_n with T_m audit", sn_tm_audit},
    {"published S_4 classes", published_example},
    {"dihedral audits", dihedral_audits},
    {"canonical power of cycle", canonical_power_cycles},
    {"Kneser complement audit", kneser_audit},
    {"oracle equivalence", oracle_equivalence},
    {"TCC sweep and audit manifest", tcc_sweep},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv)
{
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i)
    selected.push_back(std::atoi(argv[i]));
  if (selected.empty())
    for (int i = 1; i <= static_cast<int>(criteria().size()); ++i)
      selected.push_back(i);

  bool all = true;
  for (int id : selected) {
    if (id < 1 || id > static_cast<int>(criteria().size())) {
      std::cerr << "no criterion " << id << "\n";
      return 2;
    }
    const auto& [name, run] = criteria()[id - 1];
    Outcome o;
    try {
      o = run();
    }
    catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << name << "\n";
    for (const std::string& d : o.details)
      std::cout << "    " << d << "\n";
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
