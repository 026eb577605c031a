#include "kdense/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace kdense {

using nlohmann::json;

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

std::int64_t to_int(const Token& t, int line, const char* what) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || p != t.text.data() + t.text.size()) {
    throw ParseError(line, t.column, std::string("bad ") + what + " '" + std::string(t.text) + "'");
  }
  return v;
}

// Non-blank, non-comment lines with their 1-based line numbers.
std::vector<std::pair<int, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> out;
  int no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++no;
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') out.emplace_back(no, line);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "missing header 'n m'");
  const auto& [hline, htext] = lines.front();
  const auto head = split_tokens(htext);
  if (head.size() != 2) throw ParseError(hline, 1, "header must be 'n m'");
  const std::int64_t n = to_int(head[0], hline, "vertex count");
  const std::int64_t m = to_int(head[1], hline, "edge count");
  if (n < 0 || n > (1 << 30)) throw ParseError(hline, head[0].column, "vertex count out of range");
  if (m < 0) throw ParseError(hline, head[1].column, "edge count out of range");

  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [no, line] = lines[i];
    const auto tok = split_tokens(line);
    if (tok.size() != 2) throw ParseError(no, 1, "edge line must be 'u v'");
    const std::int64_t u = to_int(tok[0], no, "vertex");
    const std::int64_t v = to_int(tok[1], no, "vertex");
    if (u < 0 || u >= n) throw ParseError(no, tok[0].column, "vertex " + std::to_string(u) + " out of range");
    if (v < 0 || v >= n) throw ParseError(no, tok[1].column, "vertex " + std::to_string(v) + " out of range");
    if (u == v) throw ParseError(no, tok[0].column, "self-loop on vertex " + std::to_string(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (static_cast<std::int64_t>(edges.size()) != m) {
    throw ParseError(hline, head[1].column,
                     "header declares " + std::to_string(m) + " edges but " + std::to_string(edges.size()) +
                         " were given");
  }
  std::vector<std::pair<Edge, int>> keyed;
  keyed.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    keyed.push_back({{std::min(u, v), std::max(u, v)}, lines[i + 1].first});
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < keyed.size(); ++i) {
    if (keyed[i].first == keyed[i - 1].first) {
      throw ParseError(keyed[i].second, 1,
                       "duplicate edge " + std::to_string(keyed[i].first.first) + " " +
                           std::to_string(keyed[i].first.second));
    }
  }
  return build_graph(static_cast<Vertex>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

VertexWeights parse_weights(std::string_view text, Vertex n) {
  VertexWeights w(n);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (const auto& [no, line] : content_lines(text)) {
    const auto tok = split_tokens(line);
    if (tok.size() != 2) throw ParseError(no, 1, "weight line must be 'v w'");
    const std::int64_t v = to_int(tok[0], no, "vertex");
    const std::int64_t x = to_int(tok[1], no, "weight");
    if (v < 0 || v >= n) throw ParseError(no, tok[0].column, "vertex " + std::to_string(v) + " out of range");
    if (x < 0) throw ParseError(no, tok[1].column, "weights must be non-negative");
    if (seen[static_cast<std::size_t>(v)]) throw ParseError(no, 1, "vertex " + std::to_string(v) + " listed twice");
    seen[static_cast<std::size_t>(v)] = 1;
    w.set(static_cast<Vertex>(v), x);
  }
  return w;
}

VertexSet parse_vertex_list(std::string_view text) {
  std::string s(text);
  for (char& c : s) {
    if (c == ',' || c == '{' || c == '}' || c == '[' || c == ']') c = ' ';
  }
  std::vector<Vertex> v;
  for (const auto& t : split_tokens(s)) {
    const std::int64_t x = to_int(t, 1, "vertex");
    if (x < 0 || x > (1 << 30)) throw ParseError(1, t.column, "vertex out of range");
    v.push_back(static_cast<Vertex>(x));
  }
  return VertexSet(std::move(v));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << contents;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

json ResultDocument::to_json() const {
  json subs = json::array();
  for (std::size_t i = 0; i < subgraphs.size(); ++i) {
    subs.push_back({{"vertices", subgraphs[i].vertices()},
                    {"density", densities[i].to_string()},
                    {"density_decimal", densities[i].to_double()}});
  }
  json j = {{"problem", problem},
            {"algorithm", algorithm},
            {"parameters", parameters},
            {"subgraphs", subs},
            {"total", total.to_string()},
            {"total_decimal", total.to_double()},
            {"wall_time_ms", wall_time_ms}};
  if (!details.is_null()) j["details"] = details;
  return j;
}

ResultDocument ResultDocument::from_json(const json& j) {
  ResultDocument d;
  d.problem = j.at("problem").get<std::string>();
  d.algorithm = j.at("algorithm").get<std::string>();
  d.parameters = j.at("parameters");
  for (const auto& s : j.at("subgraphs")) {
    d.subgraphs.emplace_back(s.at("vertices").get<std::vector<Vertex>>());
    d.densities.push_back(Rational::parse(s.at("density").get<std::string>()));
  }
  d.total = Rational::parse(j.at("total").get<std::string>());
  d.wall_time_ms = j.value("wall_time_ms", 0.0);
  if (j.contains("details")) d.details = j.at("details");
  return d;
}

ResultDocument make_document(std::string problem, std::string algorithm, json parameters, const SolutionSet& s) {
  ResultDocument d;
  d.problem = std::move(problem);
  d.algorithm = std::move(algorithm);
  d.parameters = std::move(parameters);
  d.subgraphs = s.subgraphs;
  d.densities = s.densities;
  d.total = s.total;
  return d;
}

void verify_document(const Graph& g, const ResultDocument& doc, const VertexWeights& w) {
  if (doc.subgraphs.size() != doc.densities.size()) {
    throw std::runtime_error("document lists " + std::to_string(doc.subgraphs.size()) + " subgraphs but " +
                             std::to_string(doc.densities.size()) + " densities");
  }
  Density sum;
  for (std::size_t i = 0; i < doc.subgraphs.size(); ++i) {
    const Density d = density_of(g, doc.subgraphs[i], w);
    if (d != doc.densities[i]) {
      throw std::runtime_error("subgraph " + std::to_string(i) + " has density " + d.to_string() + ", document says " +
                               doc.densities[i].to_string());
    }
    sum += d;
  }
  if (sum != doc.total) {
    throw std::runtime_error("densities sum to " + sum.to_string() + ", document says " + doc.total.to_string());
  }
}

json bisection_metadata(const BisectionInstance& inst) {
  json values = json::object();
  for (std::int64_t h = 0; h <= inst.mb(); ++h) values[std::to_string(h)] = bisection_value(inst.nb(), inst.mb(), h).to_string();
  return {{"kind", "bisection"},
          {"n_B", inst.nb()},
          {"m_B", inst.mb()},
          {"alpha", BisectionInstance::alpha().to_string()},
          {"clique_vertices", inst.clique_ids.vertices()},
          {"base_vertices", inst.base_ids.vertices()},
          {"target_by_cut", values}};
}

json clique_partition_metadata(const CliquePartitionInstance& inst) {
  json added = json::array();
  for (const auto& c : inst.added_cliques) added.push_back(c.vertices());
  return {{"kind", "clique-partition"},
          {"k", inst.k},
          {"n_base", inst.base.n()},
          {"m_base", inst.base.m()},
          {"threshold", inst.threshold.to_string()},
          {"base_vertices", VertexSet::range(inst.base.n()).vertices()},
          {"added_cliques", added}};
}

BisectionInstance load_bisection_instance(const std::string& prefix) {
  const Graph built = parse_edge_list(read_file(prefix + ".el"));
  const json meta = json::parse(read_file(prefix + ".json"));
  if (meta.value("kind", std::string()) != "bisection") {
    throw std::runtime_error(prefix + ".json does not describe a bisection instance");
  }
  const auto nb = meta.at("n_B").get<Vertex>();
  const VertexSet base_ids(meta.at("base_vertices").get<std::vector<Vertex>>());
  if (built.n() != 2 * nb || base_ids.size() != static_cast<std::size_t>(nb) || base_ids.front() != nb) {
    throw std::runtime_error(prefix + ": vertex roles do not match the clique-then-base layout");
  }
  std::vector<Edge> base_edges;
  for (auto [u, v] : built.edges()) {
    if (u >= nb && v >= nb) base_edges.emplace_back(u - nb, v - nb);
  }
  BisectionInstance inst = gen_from_bisection(build_graph(nb, base_edges));
  if (inst.built.edges() != built.edges()) {
    throw std::runtime_error(prefix + ".el is not the bisection construction of its base graph");
  }
  return inst;
}

}  // namespace kdense
