#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "brute.hpp"
#include "kdense/io.hpp"
#include "kdense/oracle.hpp"

namespace kdense {
namespace {

std::pair<int, int> error_position(std::string_view text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  ADD_FAILURE() << "no ParseError for: " << text;
  return {0, 0};
}

TEST(ParseEdgeList, Triangle) {
  const Graph g = parse_edge_list("3 3\n0 1\n1 2\n0 2");
  EXPECT_EQ(g.n(), 3);
  EXPECT_EQ(g.m(), 3u);
}

TEST(ParseEdgeList, CommentsBlankLinesAndWhitespace) {
  const Graph g = parse_edge_list("# header next\n\n  4\t2 \r\n# edge\n3 0\n\n1   2\n");
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 3}, {1, 2}}));
}

TEST(ParseEdgeList, Diagnostics) {
  EXPECT_EQ(error_position("2 1\n0 0"), std::make_pair(2, 1));
  EXPECT_EQ(error_position("3 2\n0 1"), std::make_pair(1, 3));
  EXPECT_EQ(error_position("3 2\n0 1\n1 0"), std::make_pair(3, 1));
  EXPECT_EQ(error_position("3 1\n0 x"), std::make_pair(2, 3));
  EXPECT_EQ(error_position("3 1\n0 7"), std::make_pair(2, 3));
  EXPECT_EQ(error_position("3 1\n0 1 2"), std::make_pair(2, 1));
  EXPECT_EQ(error_position("three 0"), std::make_pair(1, 1));
  EXPECT_EQ(error_position("# nothing\n"), std::make_pair(1, 1));
  EXPECT_EQ(error_position("3"), std::make_pair(1, 1));
}

TEST(ParseEdgeList, MessagesNameTheProblem) {
  try {
    parse_edge_list("2 1\n0 0");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  try {
    parse_edge_list("3 2\n0 1");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("header declares 2 edges"), std::string::npos);
  }
}

TEST(WriteEdgeList, RoundTrip) {
  std::mt19937_64 rng(61);
  for (int iter = 0; iter < 50; ++iter) {
    const Graph g = brute::random_graph(1 + static_cast<Vertex>(rng() % 12), 0.4, rng);
    const std::string text = write_edge_list(g);
    EXPECT_EQ(write_edge_list(parse_edge_list(text)), text);
    EXPECT_EQ(parse_edge_list(text).edges(), g.edges());
  }
  EXPECT_EQ(write_edge_list(build_graph(3, {{2, 0}, {1, 0}})), "3 2\n0 1\n0 2\n");
}

TEST(ParseWeights, Basic) {
  const VertexWeights w = parse_weights("# w\n0 7\n2 1\n", 3);
  EXPECT_EQ(w[0], 7);
  EXPECT_EQ(w[1], 0);
  EXPECT_EQ(w[2], 1);
  EXPECT_THROW(parse_weights("3 1", 3), ParseError);
  EXPECT_THROW(parse_weights("0 -1", 3), ParseError);
  EXPECT_THROW(parse_weights("0 1\n0 2", 3), ParseError);
  EXPECT_THROW(parse_weights("0", 3), ParseError);
}

TEST(ParseVertexList, Formats) {
  EXPECT_EQ(parse_vertex_list("3,1,2"), (VertexSet{1, 2, 3}));
  EXPECT_EQ(parse_vertex_list("{0, 4}"), (VertexSet{0, 4}));
  EXPECT_EQ(parse_vertex_list("5 6"), (VertexSet{5, 6}));
  EXPECT_THROW(parse_vertex_list("1,a"), ParseError);
}

TEST(ResultDocument, JsonRoundTripAndVerify) {
  const Graph g = disjoint_union(complete_graph(4), complete_graph(3));
  const SolutionSet s = oracle_topk_distinct(g, 2);
  ResultDocument doc = make_document("distinct", "oracle", {{"k", 2}}, s);
  const nlohmann::json j = doc.to_json();
  EXPECT_EQ(j["total"], "39/14");
  EXPECT_EQ(j["subgraphs"][0]["density"], "3/2");
  EXPECT_DOUBLE_EQ(j["subgraphs"][0]["density_decimal"].get<double>(), 1.5);
  EXPECT_EQ(j["subgraphs"][1]["vertices"].size(), 7u);
  EXPECT_FALSE(j.contains("details"));

  const ResultDocument back = ResultDocument::from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back.subgraphs, doc.subgraphs);
  EXPECT_EQ(back.densities, doc.densities);
  EXPECT_EQ(back.total, doc.total);
  EXPECT_NO_THROW(verify_document(g, back));

  ResultDocument bad = back;
  bad.densities[1] = Rational(1);
  EXPECT_THROW(verify_document(g, bad), std::runtime_error);
  bad = back;
  bad.total = Rational(3);
  EXPECT_THROW(verify_document(g, bad), std::runtime_error);
}

TEST(Metadata, BisectionInstanceRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "kdense_io_test";
  std::filesystem::create_directories(dir);
  const std::string prefix = (dir / "c4").string();
  const BisectionInstance inst = gen_from_bisection(build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  const nlohmann::json meta = bisection_metadata(inst);
  EXPECT_EQ(meta["n_B"], 4);
  EXPECT_EQ(meta["m_B"], 4);
  EXPECT_EQ(meta["alpha"], "2/3");
  EXPECT_EQ(meta["target_by_cut"]["2"], "5");
  EXPECT_EQ(meta["clique_vertices"], nlohmann::json({0, 1, 2, 3}));
  write_file(prefix + ".el", write_edge_list(inst.built));
  write_file(prefix + ".json", meta.dump(2));

  const BisectionInstance back = load_bisection_instance(prefix);
  EXPECT_EQ(back.base.edges(), inst.base.edges());
  EXPECT_EQ(back.built.edges(), inst.built.edges());

  // A graph that is not the construction is rejected.
  write_file(prefix + ".el", write_edge_list(build_graph(8, {})));
  EXPECT_THROW(load_bisection_instance(prefix), std::runtime_error);
  EXPECT_THROW(load_bisection_instance((dir / "missing").string()), std::runtime_error);
  std::filesystem::remove_all(dir);
}

TEST(Metadata, CliquePartition) {
  const auto inst = gen_from_clique_partition(complete_graph(3), 5);
  const nlohmann::json meta = clique_partition_metadata(inst);
  EXPECT_EQ(meta["k"], 5);
  EXPECT_EQ(meta["threshold"], "2");
  EXPECT_EQ(meta["added_cliques"].size(), 2u);
}

}  // namespace
}  // namespace kdense
