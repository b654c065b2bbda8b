#pragma once

#include <iosfwd>
#include <string>

#include "gainline/enumeration.hpp"

namespace gainline {

/// Parse failure with the offending line number.
struct io_error : std::runtime_error {
  int line;
  io_error(const std::string& what, int line_)
      : std::runtime_error(what + " (line " + std::to_string(line_) + ")"),
        line(line_) {}
};

/// Contents of a gain-graph file:
///   group <spec>
///   s <element-label>        (optional)
///   vertices <n>
///   edge <u> <v> <gain-label>   (one per edge, read as psi(u,v))
struct GainGraphInput {
  GainGraph graph;
  std::optional<Elem> s;
  std::string group_spec;
};

GainGraphInput read_gain_graph(std::istream& in);
GainGraphInput read_gain_graph_file(const std::string& path);
void write_gain_graph(std::ostream& out, const GainGraph& g,
                      const std::string& group_spec,
                      std::optional<Elem> s = std::nullopt);

/// JSON serialization of verdicts and witnesses (nlohmann::json text).
std::string verdict_to_json(const GainGraph& L, Elem s, const Verdict& v);

/// Re-verifies a serialized witness against the input using only parsing and
/// the verification predicates (no recognition search).
bool check_witness_json(const GainGraph& L, Elem s, const std::string& json_text,
                        std::string* why = nullptr);

std::string report_to_jsonl(const VerifyReport& r);

}  // namespace gainline
