// Command-line frontend: spectra, quotients, walks, entropy reports and
// pair verdicts for the bundled cospectral families and examples.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "cospec/entangle.hpp"
#include "cospec/families.hpp"
#include "cospec/io.hpp"
#include "cospec/spectral.hpp"
#include "cospec/strata.hpp"
#include "cospec/walk.hpp"

using nlohmann::ordered_json;
namespace cs = cospec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUndecided = 2;

double sig(double x) { return cs::round_sig(x); }

ordered_json json_vector(const std::vector<double>& xs) {
  ordered_json a = ordered_json::array();
  for (double x : xs) a.push_back(sig(x));
  return a;
}

ordered_json json_matrix(const cs::Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(sig(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json json_partition(const cs::VertexPartition& p) {
  ordered_json blocks = ordered_json::array();
  for (const auto& b : p.blocks) blocks.push_back(b);
  return blocks;
}

struct GraphSource {
  cs::Graph graph;
  std::optional<cs::ExampleFixture> fixture;
  std::optional<cs::FamilyInstance> family;
  std::string label;
};

struct SpecOptions {
  std::vector<std::string> files, examples, families, positional;
  int a = 1, b = 3;

  void attach(CLI::App* cmd, bool pair) {
    cmd->add_option("--file", files, "graph file (JSON or text)");
    cmd->add_option("--example", examples, "bundled example name (e.g. Q4, HOFFMAN)");
    cmd->add_option("--family", families, "family tag: g4, g5, t4, t5");
    cmd->add_option("--a", a, "family parameter a")->capture_default_str();
    cmd->add_option("--b", b, "family parameter b")->capture_default_str();
    cmd->add_option("spec", positional,
                    "graph spec: file:PATH | example:NAME | family:TAG[:a:b]")
        ->expected(0, pair ? 2 : 1);
  }
};

GraphSource load_file(const std::string& path) {
  const std::string text = cs::read_file(path);
  GraphSource src;
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    src.graph = cs::parse_graph_json(text);
  else
    src.graph = cs::parse_graph_text(text);
  src.label = src.graph.name().empty() ? path : src.graph.name();
  return src;
}

GraphSource load_example(const std::string& name) {
  GraphSource src;
  src.fixture = cs::example(name);
  src.graph = src.fixture->graph;
  src.label = src.graph.name();
  return src;
}

GraphSource load_family(const std::string& tag, int a, int b) {
  GraphSource src;
  src.family = cs::build_family(cs::family_tag_from_string(tag), a, b);
  src.graph = src.family->graph;
  src.label = src.graph.name();
  return src;
}

GraphSource parse_spec_string(const std::string& spec, int default_a, int default_b) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() >= 2 && parts[0] == "file")
    return load_file(spec.substr(5));
  if (parts.size() == 2 && parts[0] == "example")
    return load_example(parts[1]);
  if (parts.size() >= 2 && parts[0] == "family") {
    int a = parts.size() > 2 ? std::stoi(parts[2]) : default_a;
    int b = parts.size() > 3 ? std::stoi(parts[3]) : default_b;
    return load_family(parts[1], a, b);
  }
  throw cs::BadParams("cannot parse graph spec '" + spec + "'");
}

std::vector<GraphSource> resolve_graphs(const SpecOptions& opt, size_t expected) {
  std::vector<GraphSource> out;
  for (const auto& s : opt.positional) out.push_back(parse_spec_string(s, opt.a, opt.b));
  for (const auto& f : opt.files) out.push_back(load_file(f));
  for (const auto& e : opt.examples) out.push_back(load_example(e));
  for (const auto& f : opt.families) out.push_back(load_family(f, opt.a, opt.b));
  if (out.size() != expected)
    throw cs::BadParams("expected " + std::to_string(expected) + " graph(s), got " +
                        std::to_string(out.size()));
  return out;
}

int default_origin(const GraphSource& src) {
  return src.fixture ? src.fixture->origin : 0;
}

cs::VertexPartition partition_for(const GraphSource& src, std::optional<int> origin,
                                  const std::string& partition_file) {
  if (!partition_file.empty()) return cs::read_partition_json_file(partition_file);
  if (origin) return cs::bfs_stratification(src.graph, *origin).partition;
  if (src.fixture) return src.fixture->canonical_strata;
  return cs::bfs_stratification(src.graph, default_origin(src)).partition;
}

/// "strata:<i>-<j>" from the BFS strata of origin, or a comma list of
/// 0-based vertex indices.
std::vector<int> resolve_part_a(const GraphSource& src, const std::string& spec, int origin) {
  std::vector<int> part;
  if (spec.rfind("strata:", 0) == 0) {
    const std::string range = spec.substr(7);
    const auto dash = range.find('-');
    const int lo = std::stoi(range.substr(0, dash));
    const int hi = dash == std::string::npos ? lo : std::stoi(range.substr(dash + 1));
    auto strata = cs::bfs_stratification(src.graph, origin).partition;
    if (lo < 0 || hi >= strata.block_count() || lo > hi)
      throw cs::BadParams("strata range " + range + " out of bounds");
    for (int i = lo; i <= hi; ++i)
      part.insert(part.end(), strata.blocks[i].begin(), strata.blocks[i].end());
    return part;
  }
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) part.push_back(std::stoi(tok));
  return part;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// --------------------------------------------------------------- commands

struct CommonFlags {
  double g = 0.1;
  double tol = 1e-8;
  std::string log_base_spec = "2";
  std::string grid = "0:10:0.1";
  std::string format = "json";
  std::optional<int> origin;
  std::string partition_file;
  std::string part_a = "strata:0-1";
  std::int64_t cap = cs::FermionSpace::kDefaultCap;

  double log_base = 2.0;  // resolved from log_base_spec

  void attach(CLI::App* cmd) {
    cmd->add_option("--g", g, "oscillator coupling strength")->capture_default_str();
    cmd->add_option("--tol", tol, "comparison tolerance")->capture_default_str();
    cmd->add_option("--log-base", log_base_spec, "entropy log base: 2 (bits) or e (nats)")
        ->capture_default_str();
    cmd->add_option("--grid", grid, "time grid start:stop:step")->capture_default_str();
    cmd->add_option("--format", format, "output format: json|csv")->capture_default_str();
    cmd->add_option("--origin", origin, "origin vertex for BFS strata (0-based)");
    cmd->add_option("--partition", partition_file, "partition JSON file");
    cmd->add_option("--partA", part_a, "entropy split: strata:<i>-<j> or v1,v2,...")
        ->capture_default_str();
    cmd->add_option("--cap", cap, "fermion-space size cap")->capture_default_str();
  }

  cs::TimeGrid time_grid() const {
    cs::TimeGrid tg;
    if (std::sscanf(grid.c_str(), "%lf:%lf:%lf", &tg.start, &tg.stop, &tg.step) != 3)
      throw cs::BadParams("bad --grid, expected start:stop:step");
    return tg;
  }

  void resolve() {
    if (log_base_spec == "e" || log_base_spec == "nat")
      log_base = std::exp(1.0);
    else
      log_base = std::stod(log_base_spec);
    if (log_base <= 1.0) throw cs::BadParams("log base must exceed 1");
  }
};

int cmd_spectrum(const SpecOptions& spec, const CommonFlags& flags) {
  auto srcs = resolve_graphs(spec, 1);
  cs::Spectrum s = cs::sym_eig(srcs[0].graph.adjacency_matrix());
  if (flags.format == "csv") {
    for (double v : s.values) std::cout << cs::format_sig(v) << "\n";
    return kExitOk;
  }
  ordered_json j;
  j["graph"] = srcs[0].label;
  j["n"] = srcs[0].graph.order();
  j["eigenvalues"] = json_vector(s.values);
  emit(j);
  return kExitOk;
}

int cmd_cospectral(const SpecOptions& spec, const CommonFlags& flags) {
  auto srcs = resolve_graphs(spec, 2);
  auto r = cs::cospectral(srcs[0].graph, srcs[1].graph, flags.tol);
  ordered_json j;
  j["graphA"] = srcs[0].label;
  j["graphB"] = srcs[1].label;
  j["equal"] = r.equal;
  j["max_dev"] = std::isfinite(r.max_dev) ? ordered_json(sig(r.max_dev)) : ordered_json("inf");
  j["tol"] = sig(flags.tol);
  emit(j);
  return kExitOk;
}

int cmd_quotient(const SpecOptions& spec, const CommonFlags& flags) {
  auto srcs = resolve_graphs(spec, 1);
  auto p = partition_for(srcs[0], flags.origin, flags.partition_file);
  auto q = cs::quotient(srcs[0].graph, p, 1e-10);
  ordered_json j;
  j["graph"] = srcs[0].label;
  j["blocks"] = json_partition(p);
  j["matrix"] = json_matrix(q.matrix);
  j["residual"] = sig(q.residual);
  j["closed"] = q.closed;
  emit(j);
  return kExitOk;
}

int cmd_walk(const SpecOptions& spec, const CommonFlags& flags) {
  auto srcs = resolve_graphs(spec, 1);
  const int origin = flags.origin.value_or(default_origin(srcs[0]));
  cs::ProbabilityTable table;
  if (!flags.partition_file.empty())
    table = cs::stratum_probabilities(
        srcs[0].graph, cs::read_partition_json_file(flags.partition_file), origin,
        flags.time_grid());
  else
    table = cs::stratum_probabilities(srcs[0].graph, origin, flags.time_grid());

  if (flags.format == "json") {
    ordered_json j;
    j["graph"] = srcs[0].label;
    j["origin"] = origin;
    j["blocks"] = json_partition(table.partition);
    j["times"] = json_vector(table.times);
    j["probabilities"] = json_matrix(table.probabilities);
    j["partition_closed"] = table.partition_closed;
    j["dual_path_gap"] = sig(table.dual_path_gap);
    emit(j);
    return kExitOk;
  }
  std::cout << "t";
  for (int k = 0; k < table.partition.block_count(); ++k) std::cout << ",stratum_" << k;
  std::cout << "\n";
  for (size_t i = 0; i < table.times.size(); ++i) {
    std::cout << cs::format_sig(table.times[i]);
    for (int k2 = 0; k2 < table.probabilities.cols(); ++k2)
      std::cout << "," << cs::format_sig(table.probabilities(static_cast<int>(i), k2));
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_fermi_quotient(const SpecOptions& spec, const CommonFlags& flags) {
  auto srcs = resolve_graphs(spec, 1);
  if (!srcs[0].family)
    throw cs::BadParams("fermi-quotient needs a family spec (--family g4 --a 1 --b 3)");
  const auto& inst = *srcs[0].family;
  auto fq = cs::fermionic_quotient(inst, flags.cap);
  cs::Matrix reference = cs::reference_fermionic_quotient(inst.tag, inst.a, inst.b);
  ordered_json j;
  j["family"] = cs::to_string(inst.tag);
  j["a"] = inst.a;
  j["b"] = inst.b;
  j["particles"] = inst.a;
  j["matrix"] = json_matrix(fq.matrix);
  j["residual"] = sig(fq.residual);
  j["reference"] = json_matrix(reference);
  j["max_dev_from_reference"] = sig((fq.matrix - reference).cwiseAbs().maxCoeff());
  emit(j);
  return kExitOk;
}

int cmd_entropy(const SpecOptions& spec, const CommonFlags& flags) {
  auto srcs = resolve_graphs(spec, 1);
  const int origin = flags.origin.value_or(default_origin(srcs[0]));
  auto part_a = resolve_part_a(srcs[0], flags.part_a, origin);
  auto net = cs::potential_matrix(srcs[0].graph, flags.g);
  auto es = cs::bipartite_entropy(net.v, part_a, flags.log_base);
  ordered_json j;
  j["graph"] = srcs[0].label;
  j["partA"] = part_a;
  j["g"] = sig(flags.g);
  j["log_base"] = sig(flags.log_base);
  j["d"] = json_vector(es.d);
  j["nu"] = json_vector(es.nu);
  j["mode_entropies"] = json_vector(es.mode_entropies);
  j["total"] = sig(es.total);
  emit(j);
  return kExitOk;
}

struct DistinguishResult {
  ordered_json report;
  bool decided = false;
};

DistinguishResult distinguish_pair(const GraphSource& ga, const GraphSource& gb,
                                   const std::vector<std::string>& strategies,
                                   const CommonFlags& flags) {
  DistinguishResult out;
  out.report["graphA"] = ga.label;
  out.report["graphB"] = gb.label;

  auto uses = [&](const std::string& s) {
    return std::find(strategies.begin(), strategies.end(), s) != strategies.end();
  };

  auto cosp = cs::cospectral(ga.graph, gb.graph, flags.tol);
  out.report["cospectral"] = cosp.equal;
  if (uses("spectrum") && !cosp.equal) out.decided = true;

  ordered_json walk_report;
  if (uses("quotient") || uses("fermionic")) {
    cs::WalkVerdict verdict;
    if (uses("fermionic")) {
      if (!ga.family || !gb.family)
        throw cs::BadParams("fermionic strategy needs two family specs");
      verdict = cs::walk_verdict_fermionic(*ga.family, *gb.family, flags.tol);
    } else {
      auto pa = partition_for(ga, flags.origin, "");
      auto pb = partition_for(gb, flags.origin, "");
      verdict = cs::walk_verdict_quotient(ga.graph, pa, gb.graph, pb, flags.tol);
      if (verdict.outcome == cs::WalkOutcome::Inconclusive)
        verdict = cs::walk_verdict_traces(ga.graph, pa,
                                          flags.origin.value_or(default_origin(ga)), gb.graph,
                                          pb, flags.origin.value_or(default_origin(gb)),
                                          flags.time_grid(), flags.tol);
    }
    walk_report["verdict"] = verdict.outcome == cs::WalkOutcome::Distinguished
                                 ? "walk-distinguished"
                                 : "walk-inconclusive";
    ordered_json w;
    w["kind"] = verdict.witness.kind;
    if (verdict.witness.row >= 0) w["row"] = verdict.witness.row;
    if (verdict.witness.col >= 0) w["col"] = verdict.witness.col;
    if (verdict.witness.time) w["time"] = sig(*verdict.witness.time);
    w["gap"] = sig(verdict.witness.gap);
    walk_report["witness"] = std::move(w);
    if (verdict.outcome == cs::WalkOutcome::Distinguished) out.decided = true;
  } else {
    walk_report["verdict"] = "walk-skipped";
  }
  out.report["walk"] = std::move(walk_report);

  if (uses("entropy")) {
    const int oa = flags.origin.value_or(default_origin(ga));
    const int ob = flags.origin.value_or(default_origin(gb));
    auto part_a = resolve_part_a(ga, flags.part_a, oa);
    auto part_b = resolve_part_a(gb, flags.part_a, ob);
    double sa = cs::bipartite_entropy(cs::potential_matrix(ga.graph, flags.g).v, part_a,
                                      flags.log_base)
                    .total;
    double sb = cs::bipartite_entropy(cs::potential_matrix(gb.graph, flags.g).v, part_b,
                                      flags.log_base)
                    .total;
    ordered_json e;
    e["split"] = flags.part_a;
    e["g"] = sig(flags.g);
    e["S_A"] = sig(sa);
    e["S_B"] = sig(sb);
    e["delta"] = sig(std::abs(sa - sb));
    out.report["entropy"] = std::move(e);
    if (std::abs(sa - sb) > flags.tol) out.decided = true;
  }

  out.report["conclusion"] = out.decided ? "non-isomorphic" : "undecided";
  return out;
}

int cmd_distinguish(const SpecOptions& spec, const CommonFlags& flags,
                    const std::string& strategies_csv, const std::string& pairs_file,
                    bool parallel) {
  std::vector<std::string> strategies;
  std::stringstream ss(strategies_csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) strategies.push_back(tok);
  for (const auto& s : strategies)
    if (s != "spectrum" && s != "quotient" && s != "fermionic" && s != "entropy")
      throw cs::BadParams("unknown strategy '" + s + "'");

  if (pairs_file.empty()) {
    auto srcs = resolve_graphs(spec, 2);
    auto res = distinguish_pair(srcs[0], srcs[1], strategies, flags);
    emit(res.report);
    return res.decided ? kExitOk : kExitUndecided;
  }

  auto pairs_doc = nlohmann::json::parse(cs::read_file(pairs_file));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& p : pairs_doc)
    pairs.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());

  std::vector<DistinguishResult> results(pairs.size());
  auto run_one = [&](size_t i) {
    results[i] = distinguish_pair(parse_spec_string(pairs[i].first, spec.a, spec.b),
                                  parse_spec_string(pairs[i].second, spec.a, spec.b),
                                  strategies, flags);
  };
  if (parallel) {
    std::vector<std::future<void>> futs;
    for (size_t i = 0; i < pairs.size(); ++i)
      futs.push_back(std::async(std::launch::async, run_one, i));
    for (auto& f : futs) f.get();
  } else {
    for (size_t i = 0; i < pairs.size(); ++i) run_one(i);
  }

  ordered_json all = ordered_json::array();
  bool all_decided = true;
  for (auto& r : results) {
    all_decided = all_decided && r.decided;
    all.push_back(std::move(r.report));
  }
  emit(all);
  return all_decided ? kExitOk : kExitUndecided;
}

int cmd_families(const SpecOptions& spec, bool emit_graph) {
  if (emit_graph) {
    auto srcs = resolve_graphs(spec, 1);
    std::cout << cs::graph_to_json(srcs[0].graph, 0) << "\n";
    return kExitOk;
  }
  ordered_json j;
  j["families"] = {"G4", "G5", "T4", "T5"};
  ordered_json ex = ordered_json::array();
  for (const auto& name : cs::example_names()) ex.push_back(name);
  j["examples"] = std::move(ex);
  ordered_json pairs = ordered_json::array();
  for (const auto& [x, y] : cs::example_pairs()) pairs.push_back({x, y});
  j["pairs"] = std::move(pairs);
  emit(j);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cospectral-graph distinguishers: quotients, walks, entropy"};
  app.require_subcommand(1);

  SpecOptions spec[8];
  CommonFlags flags[8];
  std::string strategies = "spectrum,quotient,entropy";
  std::string pairs_file;
  bool parallel = false;
  bool emit_graph = false;

  auto* c_spec = app.add_subcommand("spectrum", "adjacency eigenvalues");
  spec[0].attach(c_spec, false);
  flags[0].attach(c_spec);

  auto* c_cosp = app.add_subcommand("cospectral", "compare two spectra");
  spec[1].attach(c_cosp, true);
  flags[1].attach(c_cosp);

  auto* c_quot = app.add_subcommand("quotient", "strata-basis quotient matrix");
  spec[2].attach(c_quot, false);
  flags[2].attach(c_quot);

  auto* c_walk = app.add_subcommand("walk", "per-stratum walk probabilities");
  spec[3].attach(c_walk, false);
  flags[3].attach(c_walk);

  auto* c_ferm = app.add_subcommand("fermi-quotient", "a-particle 8x8 quotient");
  spec[4].attach(c_ferm, false);
  flags[4].attach(c_ferm);

  auto* c_ent = app.add_subcommand("entropy", "bipartite entanglement entropy");
  spec[5].attach(c_ent, false);
  flags[5].attach(c_ent);

  auto* c_dist = app.add_subcommand("distinguish", "pair verdict");
  spec[6].attach(c_dist, true);
  flags[6].attach(c_dist);
  c_dist->add_option("--strategies", strategies,
                     "comma list of: spectrum,quotient,fermionic,entropy")
      ->capture_default_str();
  c_dist->add_option("--pairs", pairs_file, "JSON file with [[specA, specB], ...]");
  c_dist->add_flag("--parallel", parallel, "run batch pairs concurrently");

  auto* c_fam = app.add_subcommand("families", "list or emit bundled graphs");
  spec[7].attach(c_fam, false);
  c_fam->add_flag("--emit", emit_graph, "emit the selected graph as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    for (auto& f : flags) f.resolve();
    if (c_spec->parsed()) return cmd_spectrum(spec[0], flags[0]);
    if (c_cosp->parsed()) return cmd_cospectral(spec[1], flags[1]);
    if (c_quot->parsed()) return cmd_quotient(spec[2], flags[2]);
    if (c_walk->parsed()) return cmd_walk(spec[3], flags[3]);
    if (c_ferm->parsed()) return cmd_fermi_quotient(spec[4], flags[4]);
    if (c_ent->parsed()) return cmd_entropy(spec[5], flags[5]);
    if (c_dist->parsed())
      return cmd_distinguish(spec[6], flags[6], strategies, pairs_file, parallel);
    if (c_fam->parsed()) return cmd_families(spec[7], emit_graph);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
