#pragma once

#include <filesystem>
#include <json.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kdense/graph.hpp"
#include "kdense/reductions.hpp"
#include "kdense/solution.hpp"

namespace kdense {

/// Input-file failure with a 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// "n m" header, then m lines "u v"; blank lines and lines starting with '#'
/// are ignored.
Graph parse_edge_list(std::string_view text);
/// Canonical form: header plus edges sorted with u < v.
std::string write_edge_list(const Graph& g);

/// Lines "v w" with non-negative integer w; unlisted vertices weigh 0.
VertexWeights parse_weights(std::string_view text, Vertex n);

/// Comma- and/or whitespace-separated vertex ids.
VertexSet parse_vertex_list(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

/// JSON result document: problem, algorithm, parameters, subgraphs with
/// exact "p/q" densities plus decimals, exact total, wall time.
struct ResultDocument {
  std::string problem;
  std::string algorithm;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<VertexSet> subgraphs;
  std::vector<Density> densities;
  Density total;
  double wall_time_ms = 0.0;
  /// Algorithm-specific extras (omitted when null).
  nlohmann::json details;

  nlohmann::json to_json() const;
  static ResultDocument from_json(const nlohmann::json& j);
};

ResultDocument make_document(std::string problem, std::string algorithm, nlohmann::json parameters,
                             const SolutionSet& s);

/// Recomputes every density in the document from the graph (unweighted
/// unless `w` is given) and checks the stated total. Throws
/// std::runtime_error describing the first mismatch.
void verify_document(const Graph& g, const ResultDocument& doc, const VertexWeights& w = {});

nlohmann::json bisection_metadata(const BisectionInstance& inst);
nlohmann::json clique_partition_metadata(const CliquePartitionInstance& inst);

/// Reads `<prefix>.el` and `<prefix>.json` and rebuilds the instance,
/// checking that the stored graph matches the construction.
BisectionInstance load_bisection_instance(const std::string& prefix);

}  // namespace kdense
