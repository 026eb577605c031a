#include "kdense/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <optional>
#include <ostream>

#include "kdense/densest.hpp"
#include "kdense/eptas.hpp"
#include "kdense/fpt.hpp"
#include "kdense/io.hpp"
#include "kdense/oracle.hpp"
#include "kdense/reductions.hpp"

namespace kdense {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational parse_rational_arg(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError(flag + ": expected a rational P/Q, got '" + text + "'");
  }
}

Graph load_graph(const std::string& path) {
  try {
    return parse_edge_list(read_file(path));
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void emit(std::ostream& out, ResultDocument doc, std::chrono::steady_clock::time_point start) {
  doc.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out << doc.to_json().dump(2) << "\n";
}

struct Options {
  int threads = 0;

  std::string graph;
  std::optional<Vertex> include_vertex;
  std::string weights;
  std::string algo;
  std::int64_t k = 0;
  std::string eps;
  std::string alpha;

  std::string base;
  std::string out_prefix;

  std::string instance;
  std::string partition;
  std::int64_t h = 0;
  std::string v1;
  std::string v2;
};

void run_densest(const Options& o, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const Graph g = load_graph(o.graph);
  VertexWeights w;
  if (!o.weights.empty()) {
    try {
      w = parse_weights(read_file(o.weights), g.n());
    } catch (const ParseError& e) {
      throw std::runtime_error(o.weights + ": " + e.what());
    }
  }
  json params = json::object();
  if (o.include_vertex) params["include_vertex"] = *o.include_vertex;
  if (!o.weights.empty()) params["weighted"] = true;

  DensestResult r;
  if (o.algo == "peel") {
    if (o.include_vertex || !o.weights.empty()) throw UsageError("--algo peel takes neither --include-vertex nor --weights");
    r = peel_half_approx(g);
  } else if (o.include_vertex) {
    check_vertex(g, *o.include_vertex);
    r = w.all_zero() ? densest_with_vertex(g, *o.include_vertex) : densest_containing(g, VertexSet{*o.include_vertex}, {}, w);
  } else {
    r = densest_subgraph(g, w);
  }
  SolutionSet s{{r.set}, {r.density}, r.density};
  emit(out, make_document("densest", o.algo, params, s), start);
}

void run_topk(const Options& o, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  json params = {{"k", o.k}};
  std::optional<Rational> eps;
  if (!o.eps.empty()) {
    if (o.algo != "eptas") throw UsageError("--eps only applies to --algo eptas");
    eps = parse_rational_arg("--eps", o.eps);
  }
  const Graph g = load_graph(o.graph);
  if (o.algo == "exact") {
    emit(out, make_document("distinct", "fpt", params, fpt_topk(g, o.k)), start);
  } else if (o.algo == "oracle") {
    emit(out, make_document("distinct", "oracle", params, oracle_topk_distinct(g, o.k)), start);
  } else {
    EptasConfig cfg{o.k, eps.value_or(Rational(2))};
    params["eps"] = cfg.eps.to_string();
    const EptasReport rep = eptas_topk(g, cfg);
    ResultDocument doc = make_document("distinct", "eptas", params, rep.solution);
    json classes = json::array();
    for (SizeClass c : rep.classes) classes.push_back(to_string(c));
    doc.details = {{"used_oracle", rep.used_oracle}, {"size_classes", classes}};
    emit(out, std::move(doc), start);
  }
}

void run_disjoint(const Options& o, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const Graph g = load_graph(o.graph);
  const int k = static_cast<int>(o.k);
  const SolutionSet s = o.algo == "oracle" ? oracle_disjoint(g, k) : greedy_disjoint(g, k);
  emit(out, make_document("disjoint", o.algo, {{"k", o.k}}, s), start);
}

void run_overlap(const Options& o, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const Rational alpha = parse_rational_arg("--alpha", o.alpha);
  if (alpha < Rational(0) || alpha > Rational(1)) throw UsageError("--alpha must lie in [0, 1]");
  const Graph g = load_graph(o.graph);
  const SolutionSet s = oracle_overlap(g, static_cast<int>(o.k), alpha);
  emit(out, make_document("overlap", "oracle", {{"k", o.k}, {"alpha", alpha.to_string()}}, s), start);
}

void write_instance(const std::string& prefix, const Graph& built, const json& meta, std::ostream& out) {
  write_file(prefix + ".el", write_edge_list(built));
  write_file(prefix + ".json", meta.dump(2) + "\n");
  out << meta.dump(2) << "\n";
}

void run_gen_clique(const Options& o, std::ostream& out) {
  const auto inst = gen_from_clique_partition(load_graph(o.base), static_cast<int>(o.k));
  write_instance(o.out_prefix, inst.built, clique_partition_metadata(inst), out);
}

void run_gen_bisection(const Options& o, std::ostream& out) {
  const auto inst = gen_from_bisection(load_graph(o.base));
  write_instance(o.out_prefix, inst.built, bisection_metadata(inst), out);
}

void run_verify_bisection(const Options& o, std::ostream& out) {
  const BisectionInstance inst = load_bisection_instance(o.instance);
  const std::string text = read_file(o.partition);
  std::vector<VertexSet> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    const std::string line = text.substr(pos, end - pos);
    if (line.find_first_not_of(" \t\r") != std::string::npos && line[line.find_first_not_of(" \t\r")] != '#') {
      parts.push_back(parse_vertex_list(line));
    }
    pos = end + 1;
  }
  if (parts.size() != 2) throw std::runtime_error(o.partition + ": expected two lines, one per part");
  const BisectionCheck c = verify_bisection_equivalence(inst, parts[0], parts[1], o.h);
  json j = {{"check", "bisection"},
            {"h", o.h},
            {"cut", c.cut},
            {"total", c.total.to_string()},
            {"expected", c.expected.to_string()},
            {"holds", c.holds}};
  out << j.dump(2) << "\n";
}

void run_verify_normalize(const Options& o, std::ostream& out) {
  const BisectionInstance inst = load_bisection_instance(o.instance);
  const VertexSet v1 = parse_vertex_list(o.v1);
  const VertexSet v2 = parse_vertex_list(o.v2);
  const Normalization nz = normalize_overlap_solution(inst, v1, v2);
  const Graph& g = inst.built;
  json j = {{"check", "normalize"},
            {"y1", nz.y1.vertices()},
            {"y2", nz.y2.vertices()},
            {"input_total", (density_of(g, v1) + density_of(g, v2)).to_string()},
            {"output_total", (density_of(g, nz.y1) + density_of(g, nz.y2)).to_string()},
            {"step2_repaired", nz.step2_repaired},
            {"sides_non_decreasing", nz.sides_non_decreasing},
            {"trace", nz.trace}};
  out << j.dump(2) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k densest subgraphs: exact, approximate and brute-force solvers"};
  app.name("kdense");
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);

  std::function<void(std::ostream&)> action;

  auto* densest = app.add_subcommand("densest", "Exact densest subgraph");
  densest->add_option("file", o.graph, "Edge-list file")->required();
  densest->add_option("--include-vertex", o.include_vertex, "Require this vertex in the subgraph");
  densest->add_option("--weights", o.weights, "Vertex weights file (lines 'v w')");
  o.algo = "exact";
  densest->add_option("--algo", o.algo, "exact or peel (1/2-approximation)")
      ->check(CLI::IsMember({"exact", "peel"}))
      ->capture_default_str();
  densest->callback([&] { action = [&](std::ostream& s) { run_densest(o, s); }; });

  auto* topk = app.add_subcommand("topk", "k densest distinct subgraphs");
  topk->add_option("file", o.graph, "Edge-list file")->required();
  topk->add_option("--k", o.k, "Number of subgraphs")->required()->check(CLI::PositiveNumber);
  topk->add_option("--algo", o.algo, "exact, eptas or oracle")
      ->required()
      ->check(CLI::IsMember({"exact", "eptas", "oracle"}));
  topk->add_option("--eps", o.eps, "Approximation parameter P/Q > 1 (eptas, default 2)");
  topk->callback([&] { action = [&](std::ostream& s) { run_topk(o, s); }; });

  auto* disjoint = app.add_subcommand("disjoint", "k densest pairwise disjoint subgraphs");
  disjoint->add_option("file", o.graph, "Edge-list file")->required();
  disjoint->add_option("--k", o.k, "Number of subgraphs")->required()->check(CLI::PositiveNumber);
  disjoint->add_option("--algo", o.algo, "oracle or greedy")->required()->check(CLI::IsMember({"oracle", "greedy"}));
  disjoint->callback([&] { action = [&](std::ostream& s) { run_disjoint(o, s); }; });

  auto* overlap = app.add_subcommand("overlap", "k densest subgraphs with bounded pairwise overlap");
  overlap->add_option("file", o.graph, "Edge-list file")->required();
  overlap->add_option("--k", o.k, "Number of subgraphs (only 2)")->required()->check(CLI::Range(2, 2));
  overlap->add_option("--alpha", o.alpha, "Overlap bound P/Q in [0, 1]")->required();
  overlap->add_option("--algo", o.algo, "oracle")->required()->check(CLI::IsMember({"oracle"}));
  overlap->callback([&] { action = [&](std::ostream& s) { run_overlap(o, s); }; });

  auto* gen = app.add_subcommand("gen", "Write a reduction instance (<prefix>.el and <prefix>.json)");
  gen->require_subcommand(1);
  auto* gen_cp = gen->add_subcommand("clique-partition", "Base graph plus k-3 cliques");
  gen_cp->add_option("--base", o.base, "Base edge-list file")->required();
  gen_cp->add_option("--k", o.k, "k >= 3")->required();
  gen_cp->add_option("--out", o.out_prefix, "Output prefix")->required();
  gen_cp->callback([&] { action = [&](std::ostream& s) { run_gen_clique(o, s); }; });
  auto* gen_bi = gen->add_subcommand("bisection", "Clique joined to the base graph");
  gen_bi->add_option("--base", o.base, "Base edge-list file (even n)")->required();
  gen_bi->add_option("--out", o.out_prefix, "Output prefix")->required();
  gen_bi->callback([&] { action = [&](std::ostream& s) { run_gen_bisection(o, s); }; });

  auto* verify = app.add_subcommand("verify", "Check reduction properties on an instance");
  verify->require_subcommand(1);
  auto* ver_bi = verify->add_subcommand("bisection", "Compare a partition's lifted total with the cut formula");
  ver_bi->set_help_flag("--help", "Print this help message and exit");
  ver_bi->add_option("--instance", o.instance, "Instance prefix")->required();
  ver_bi->add_option("--partition", o.partition, "Two lines of base vertex ids")->required();
  ver_bi->add_option("--h", o.h, "Cut size")->required()->check(CLI::NonNegativeNumber);
  ver_bi->callback([&] { action = [&](std::ostream& s) { run_verify_bisection(o, s); }; });
  auto* ver_nz = verify->add_subcommand("normalize", "Normalize a feasible 2/3-overlap pair");
  ver_nz->add_option("--instance", o.instance, "Instance prefix")->required();
  ver_nz->add_option("--v1", o.v1, "First vertex list, e.g. 0,1,2")->required();
  ver_nz->add_option("--v2", o.v2, "Second vertex list")->required();
  ver_nz->callback([&] { action = [&](std::ostream& s) { run_verify_normalize(o, s); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "kdense: " << e.what() << "\n";
    return 2;
  }

  if (o.threads > 0) set_threads(o.threads);
  try {
    action(out);
  } catch (const UsageError& e) {
    err << "kdense: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "kdense: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace kdense
