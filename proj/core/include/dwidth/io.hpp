#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "dwidth/dag_decomposition.hpp"
#include "dwidth/dag_lean.hpp"
#include "dwidth/dpd_lean.hpp"
#include "dwidth/menger.hpp"
#include "dwidth/path_decomposition.hpp"

// JSON formats (0-based ids, keys sorted, arcs and bag contents ascending):
//   digraph          {"n": 3, "arcs": [[0,1], [1,2]]}
//   undirected graph {"n": 3, "edges": [[0,1], [1,2]]}
//   path decomp.     {"bags": [[0,1], [1,2]]}
//   DAG decomp.      {"dag": {"nodes": 2, "arcs": [[0,1]]}, "bags": [[0,1], [1,2]]}
//   path system      {"paths": [[2,0], [3]]}
// Parsers throw std::invalid_argument naming the offending field.
namespace dwidth::io {

using nlohmann::json;

json to_json(const Digraph& g);
json to_json(const UndirectedGraph& u);
json to_json(const PathDecomposition& d);
json to_json(const DagDecomposition& d);
json to_json(const PathSystem& p);
json to_json(const Separation& s);
json to_json(VertexSet s);
json to_json(const DpdViolation& w);
json to_json(const DagViolation& w);
json to_json(const LinkedViolation& w);
json to_json(const DagLinkedViolation& w);
json to_json(const Discrepancy& d);
json to_json(const DpdReport& r);
json to_json(const DagReport& r);

// Per step: {"witness", "separator", "fatness_before", "fatness_after"} plus
// any discrepancies.
json trace_to_json(const LeanifyResult& r);
json trace_to_json(const DagLeanifyResult& r);

Digraph digraph_from_json(const json& j);
UndirectedGraph undirected_from_json(const json& j);
PathDecomposition dpd_from_json(const json& j);
DagDecomposition dagdec_from_json(const json& j);

json read_json_file(const std::string& path);
// Two-space indented, trailing newline.
std::string dump(const json& j);

std::string to_dot(const PathDecomposition& d);
std::string to_dot(const DagDecomposition& d);
std::string to_dot(const Digraph& g);

}  // namespace dwidth::io
