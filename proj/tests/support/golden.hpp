#pragma once

#include <filesystem>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "kdense/cli.hpp"
#include "kdense/io.hpp"

namespace kdense::golden {

struct Case {
  std::string name;
  std::vector<std::string> args;  // graph file relative to the golden dir
  std::string expected;           // file name of the frozen document
};

inline std::vector<Case> cases() {
  return {
      {"topk_k3_exact", {"topk", "k3.el", "--k", "2", "--algo", "exact"}, "topk_k3_exact.json"},
      {"densest_k4k3", {"densest", "k4k3.el"}, "densest_k4k3.json"},
      {"overlap_c4built", {"overlap", "c4built.el", "--k", "2", "--alpha", "2/3", "--algo", "oracle"},
       "overlap_c4built.json"},
  };
}

inline std::string normalize_wall_time(const std::string& doc) {
  static const std::regex wall("\"wall_time_ms\": [^,\\n}]+");
  return std::regex_replace(doc, wall, "\"wall_time_ms\": 0");
}

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

inline Outcome run(std::vector<std::string> args, const std::filesystem::path& dir) {
  args[1] = (dir / args[1]).string();
  std::ostringstream out, err;
  Outcome o;
  o.code = run_cli(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

}  // namespace kdense::golden
