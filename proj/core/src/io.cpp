#include "dwidth/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dwidth::io {
namespace {

const json& field(const json& j, const char* key, const char* what) {
  if (!j.is_object()) throw std::invalid_argument(std::string(what) + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) {
    throw std::invalid_argument(std::string(what) + ": missing field \"" + key + "\"");
  }
  return *it;
}

int integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw std::invalid_argument(where + ": expected an integer");
  const auto value = j.get<std::int64_t>();
  if (value < 0 || value > 1'000'000) throw std::invalid_argument(where + ": out of range");
  return static_cast<int>(value);
}

std::vector<std::pair<int, int>> pairs(const json& j, const std::string& where) {
  if (!j.is_array()) throw std::invalid_argument(where + ": expected an array of pairs");
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 2) throw std::invalid_argument(at + ": expected [u, v]");
    out.emplace_back(integer(j[i][0], at), integer(j[i][1], at));
  }
  return out;
}

VertexSet vertex_set(const json& j, const std::string& where) {
  if (!j.is_array()) throw std::invalid_argument(where + ": expected an array of vertices");
  VertexSet s;
  for (const json& v : j) {
    const int id = integer(v, where);
    if (id >= VertexSet::kMaxVertices) {
      throw std::invalid_argument(where + ": vertex " + std::to_string(id) + " exceeds the " +
                                  std::to_string(VertexSet::kMaxVertices) + "-vertex limit");
    }
    s.insert(id);
  }
  return s;
}

std::vector<VertexSet> bag_list(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("bags: expected an array");
  std::vector<VertexSet> bags;
  for (std::size_t i = 0; i < j.size(); ++i) {
    bags.push_back(vertex_set(j[i], "bags[" + std::to_string(i) + "]"));
  }
  return bags;
}

json arcs_json(const std::vector<Arc>& arcs) {
  json out = json::array();
  for (const Arc& a : arcs) out.push_back({a.tail, a.head});
  return out;
}

json bags_json(const std::vector<VertexSet>& bags) {
  json out = json::array();
  for (VertexSet bag : bags) out.push_back(to_json(bag));
  return out;
}

json fatness_json(const Fatness& f) { return f.counts(); }

std::string label(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

json discrepancies_json(const std::vector<Discrepancy>& ds) {
  json out = json::array();
  for (const Discrepancy& d : ds) out.push_back(to_json(d));
  return out;
}

}  // namespace

json to_json(VertexSet s) { return s.to_vector(); }

json to_json(const Digraph& g) { return json{{"n", g.n()}, {"arcs", arcs_json(g.arcs())}}; }

json to_json(const UndirectedGraph& u) {
  json edges = json::array();
  for (const Edge& e : u.edges()) edges.push_back({e.u, e.v});
  return json{{"n", u.n()}, {"edges", edges}};
}

json to_json(const PathDecomposition& d) { return json{{"bags", bags_json(d.bags)}}; }

json to_json(const DagDecomposition& d) {
  return json{{"dag", {{"nodes", d.dag.size()}, {"arcs", arcs_json(d.dag.arcs())}}},
              {"bags", bags_json(d.bags)}};
}

json to_json(const PathSystem& p) { return json{{"paths", p.paths}}; }

json to_json(const Separation& s) {
  return json{{"a", to_json(s.a)}, {"b", to_json(s.b)}, {"separator", to_json(s.separator())}};
}

json to_json(const DpdViolation& w) {
  return json{{"t1", w.t1},           {"t2", w.t2},
              {"k", w.k},             {"z1", to_json(w.z1)},
              {"z2", to_json(w.z2)},  {"certificate", to_json(w.certificate)}};
}

json to_json(const DagViolation& w) {
  return json{{"t1", w.t1},          {"t2", w.t2},         {"k", w.k},
              {"z1", to_json(w.z1)}, {"z2", to_json(w.z2)}, {"distance", w.distance},
              {"certificate", to_json(w.certificate)}};
}

json to_json(const LinkedViolation& w) {
  return json{{"t1", w.t1}, {"t2", w.t2}, {"k", w.k}, {"certificate", to_json(w.certificate)}};
}

json to_json(const DagLinkedViolation& w) {
  return json{{"t1", w.t1},
              {"t2", w.t2},
              {"k", w.k},
              {"distance", w.distance},
              {"certificate", to_json(w.certificate)}};
}

json to_json(const Discrepancy& d) {
  return json{{"check", d.check}, {"detail", d.detail}, {"fatal", d.fatal}};
}

json to_json(const DpdReport& r) {
  json out{{"valid", r.valid}};
  if (!r.valid) {
    out["condition"] = to_string(r.failed);
    out["message"] = r.message;
  }
  if (r.vertex) out["vertex"] = *r.vertex;
  if (r.triple) out["triple"] = *r.triple;
  if (r.arc) out["arc"] = {r.arc->tail, r.arc->head};
  if (r.equivalence_alarm) out["alarm"] = r.alarm;
  return out;
}

json to_json(const DagReport& r) {
  json out{{"valid", r.valid}};
  if (!r.valid) {
    out["condition"] = to_string(r.failed);
    out["message"] = r.message;
  }
  if (r.vertex) out["vertex"] = *r.vertex;
  if (r.triple) out["triple"] = *r.triple;
  if (r.dag_arc) out["dag_arc"] = {r.dag_arc->tail, r.dag_arc->head};
  if (r.root) out["root"] = *r.root;
  if (r.escaping_arc) out["escaping_arc"] = {r.escaping_arc->tail, r.escaping_arc->head};
  return out;
}

json trace_to_json(const LeanifyResult& r) {
  json steps = json::array();
  for (const RefinementStep& s : r.trace) {
    json step{{"witness", to_json(s.witness)},
              {"separator", to_json(s.separation.separator())},
              {"fatness_before", fatness_json(s.fatness_before)},
              {"fatness_after", fatness_json(s.fatness_after)},
              {"result", to_json(s.result)}};
    if (!s.discrepancies.empty()) step["discrepancies"] = discrepancies_json(s.discrepancies);
    steps.push_back(step);
  }
  json out{{"steps", steps}, {"lean", r.lean}};
  if (!r.stopped.empty()) out["stopped"] = r.stopped;
  return out;
}

json trace_to_json(const DagLeanifyResult& r) {
  json steps = json::array();
  for (const DagRefinementStep& s : r.trace) {
    json step{{"witness", to_json(s.witness)},
              {"separator", to_json(s.separation.separator())},
              {"fatness_before", fatness_json(s.fatness_before)},
              {"fatness_after", fatness_json(s.fatness_after)},
              {"result", to_json(s.result)}};
    if (s.pruned) step["pruned"] = true;
    if (!s.discrepancies.empty()) step["discrepancies"] = discrepancies_json(s.discrepancies);
    steps.push_back(step);
  }
  json out{{"steps", steps}, {"lean", r.lean}};
  if (!r.stopped.empty()) out["stopped"] = r.stopped;
  return out;
}

Digraph digraph_from_json(const json& j) {
  const int n = integer(field(j, "n", "digraph"), "n");
  std::vector<Arc> arcs;
  for (auto [u, v] : pairs(field(j, "arcs", "digraph"), "arcs")) arcs.push_back({u, v});
  try {
    return Digraph(n, arcs);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("digraph.arcs: ") + e.what());
  }
}

UndirectedGraph undirected_from_json(const json& j) {
  const int n = integer(field(j, "n", "undirected graph"), "n");
  std::vector<Edge> edges;
  for (auto [u, v] : pairs(field(j, "edges", "undirected graph"), "edges")) edges.push_back({u, v});
  try {
    return UndirectedGraph(n, edges);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("undirected graph.edges: ") + e.what());
  }
}

PathDecomposition dpd_from_json(const json& j) {
  return PathDecomposition{bag_list(field(j, "bags", "path decomposition"))};
}

DagDecomposition dagdec_from_json(const json& j) {
  const json& dag = field(j, "dag", "DAG decomposition");
  const int nodes = integer(field(dag, "nodes", "dag"), "dag.nodes");
  std::vector<Arc> arcs;
  for (auto [u, v] : pairs(field(dag, "arcs", "dag"), "dag.arcs")) arcs.push_back({u, v});
  std::vector<VertexSet> bags = bag_list(field(j, "bags", "DAG decomposition"));
  if (static_cast<int>(bags.size()) != nodes) {
    throw std::invalid_argument("DAG decomposition: " + std::to_string(bags.size()) +
                                " bags for " + std::to_string(nodes) + " nodes");
  }
  return DagDecomposition{Dag(nodes, arcs), std::move(bags)};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string to_dot(const PathDecomposition& d) {
  std::ostringstream out;
  out << "digraph dpd {\n  rankdir=LR;\n  node [shape=box];\n";
  for (int i = 0; i < d.size(); ++i) {
    out << "  x" << i << " [label=\"" << label(d.bags[i]) << "\"];\n";
  }
  for (int i = 0; i + 1 < d.size(); ++i) out << "  x" << i << " -> x" << i + 1 << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const DagDecomposition& d) {
  std::ostringstream out;
  out << "digraph dagdec {\n  node [shape=box];\n";
  for (int i = 0; i < d.dag.size(); ++i) {
    out << "  t" << i << " [label=\"" << label(d.bags[i]) << "\"];\n";
  }
  for (const Arc& a : d.dag.arcs()) out << "  t" << a.tail << " -> t" << a.head << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const Digraph& g) {
  std::ostringstream out;
  out << "digraph g {\n";
  for (int v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
  for (const Arc& a : g.arcs()) out << "  " << a.tail << " -> " << a.head << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace dwidth::io
