#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dwidth/dag_lean.hpp"
#include "dwidth/dpd_lean.hpp"
#include "dwidth/generate.hpp"
#include "dwidth/harness.hpp"
#include "dwidth/io.hpp"
#include "dwidth/limits.hpp"

using namespace dwidth;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

constexpr const char* kSchemaHelp = R"(Input formats (JSON, vertex and node ids 0-based):
  digraph          {"n": 3, "arcs": [[0,1], [1,2]]}
  undirected graph {"n": 3, "edges": [[0,1], [1,2]]}
  path decomp.     {"bags": [[0,1], [1,2]]}
  DAG decomp.      {"dag": {"nodes": 2, "arcs": [[0,1]]}, "bags": [[0,1], [1,2]]}
DWIDTH_MAX_N lifts the soft size limits of the exponential routines.
)";

// Usage errors raised after parsing (bad files, bad parameters).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

void emit(const json& j, const std::string& path) {
  if (!path.empty()) write_file(path, io::dump(j));
}

Digraph load_digraph(const std::string& path) { return io::digraph_from_json(io::read_json_file(path)); }

LeanReading parse_reading(const std::string& s) {
  if (s == "some-arc") return LeanReading::kSomeArc;
  if (s == "every-path") return LeanReading::kEveryPath;
  throw UsageError("unknown reading \"" + s + "\" (some-arc, every-path)");
}

struct Options {
  std::string input;
  std::string decomposition;
  std::string emit;
  std::string trace;
  std::string reading = "some-arc";
  std::string model = "gnp";
  std::string family = "path";
  std::string property;
  std::string replay;
  std::string kind;
  int n = 5;
  bool n_set = false;
  double p = 0.3;
  int trials = 100;
  std::uint64_t seed = 1;
  int k_max = -1;
  int max_steps = 0;
  int max_nodes = 512;
  int max_findings = 5;
  bool linked = false;
  bool no_explore = false;
  bool mutate = false;
  bool exhaustive = false;
  bool list = false;
};

int cmd_dpw(const Options& o) {
  const Digraph g = load_digraph(o.input);
  const ExactDpw e = exact_dpw(g);
  emit(io::to_json(e.decomposition), o.emit);
  std::cout << io::dump(json{{"dpw", e.width}, {"bags", e.decomposition.size()}});
  return kOk;
}

int cmd_dgw(const Options& o) {
  const Digraph g = load_digraph(o.input);
  const ExactDgw e = exact_dgw_tiny(g, o.k_max < 0 ? g.n() : o.k_max);
  json out;
  switch (e.status) {
    case DgwStatus::kFound:
      out = {{"status", "found"}, {"dgw", e.width}};
      emit(io::to_json(e.decomposition), o.emit);
      break;
    case DgwStatus::kUnknown:
      out = {{"status", "unknown"}, {"width", e.width}};
      break;
    case DgwStatus::kAboveKMax:
      out = {{"status", "above-k-max"}};
      break;
  }
  if (!e.message.empty()) out["message"] = e.message;
  std::cout << io::dump(out);
  return e.status == DgwStatus::kFound ? kOk : kFailed;
}

int cmd_validate_dpd(const Options& o) {
  const Digraph g = load_digraph(o.input);
  const DpdReport r = validate_dpd(g, io::dpd_from_json(io::read_json_file(o.decomposition)));
  std::cout << io::dump(io::to_json(r));
  return r.valid ? kOk : kFailed;
}

int cmd_validate_dagdec(const Options& o) {
  const Digraph g = load_digraph(o.input);
  const DagReport r = validate_dagdec(g, io::dagdec_from_json(io::read_json_file(o.decomposition)));
  std::cout << io::dump(io::to_json(r));
  return r.valid ? kOk : kFailed;
}

int cmd_check_lean_dpd(const Options& o) {
  const Digraph g = load_digraph(o.input);
  const PathDecomposition d = io::dpd_from_json(io::read_json_file(o.decomposition));
  const DpdReport r = validate_dpd(g, d);
  if (!r.valid) {
    std::cout << io::dump(json{{"validation", io::to_json(r)}});
    return kFailed;
  }
  json out;
  if (o.linked) {
    const auto v = check_linked_dpd(g, d);
    out = {{"linked", !v}};
    if (v) out["witness"] = io::to_json(*v);
  } else {
    const auto v = check_lean_dpd(g, d);
    out = {{"lean", !v}};
    if (v) out["witness"] = io::to_json(*v);
  }
  std::cout << io::dump(out);
  return out.contains("witness") ? kFailed : kOk;
}

int cmd_check_lean_dagdec(const Options& o) {
  const Digraph g = load_digraph(o.input);
  const DagDecomposition d = io::dagdec_from_json(io::read_json_file(o.decomposition));
  const LeanReading reading = parse_reading(o.reading);
  const DagReport r = validate_dagdec(g, d);
  if (!r.valid) {
    std::cout << io::dump(json{{"validation", io::to_json(r)}});
    return kFailed;
  }
  json out;
  if (o.linked) {
    const auto v = check_linked_dagdec(g, d);
    out = {{"linked", !v}};
    if (v) out["witness"] = io::to_json(*v);
  } else {
    const auto v = check_lean_dagdec(g, d, reading);
    out = {{"lean", !v}, {"reading", o.reading}};
    if (v) out["witness"] = io::to_json(*v);
  }
  std::cout << io::dump(out);
  return out.contains("witness") ? kFailed : kOk;
}

RefineOptions refine_options(const Options& o) {
  RefineOptions r;
  r.explore = !o.no_explore;
  return r;
}

int cmd_leanify_dpd(const Options& o) {
  const Digraph g = load_digraph(o.input);
  const PathDecomposition d = io::dpd_from_json(io::read_json_file(o.decomposition));
  const LeanifyResult r = leanify_dpd(g, d, o.max_steps, refine_options(o));
  emit(io::trace_to_json(r), o.trace);
  emit(io::to_json(r.decomposition), o.emit);
  std::cout << io::dump(io::to_json(r.decomposition));
  if (!r.lean) std::cerr << "not lean: " << r.stopped << "\n";
  return r.lean ? kOk : kFailed;
}

int cmd_leanify_dagdec(const Options& o) {
  const Digraph g = load_digraph(o.input);
  const DagDecomposition d = io::dagdec_from_json(io::read_json_file(o.decomposition));
  const DagLeanifyResult r = leanify_dagdec(g, d, o.max_steps, parse_reading(o.reading),
                                            o.max_nodes, refine_options(o));
  emit(io::trace_to_json(r), o.trace);
  emit(io::to_json(r.decomposition), o.emit);
  std::cout << io::dump(io::to_json(r.decomposition));
  if (!r.lean) std::cerr << "not lean: " << r.stopped << "\n";
  return r.lean ? kOk : kFailed;
}

GeneratorSpec generator_spec(const Options& o) {
  GeneratorSpec spec;
  spec.model = model_from_string(o.model);
  spec.n = o.n;
  spec.p = o.p;
  spec.family = o.family;
  spec.seed = o.seed;
  return spec;
}

int cmd_gen(const Options& o) {
  const json g = io::to_json(generate(generator_spec(o)));
  emit(g, o.emit);
  std::cout << io::dump(g);
  return kOk;
}

int cmd_fuzz(const Options& o) {
  if (o.list) {
    json out = json::array();
    for (const Property& p : properties()) {
      out.push_back({{"id", p.id},
                     {"summary", p.summary},
                     {"default_n", p.default_n},
                     {"mutation", p.supports_mutation}});
    }
    std::cout << io::dump(out);
    return kOk;
  }
  if (!o.replay.empty()) {
    const Finding f = finding_from_json(io::read_json_file(o.replay));
    const Outcome out = replay(f);
    json j{{"property", f.property}, {"reproduced", out.failure.has_value()}};
    if (out.failure) j["diagnostic"] = *out.failure;
    std::cout << io::dump(j);
    return out.failure ? kFailed : kOk;
  }
  if (o.property.empty()) throw UsageError("fuzz needs --property (or --list, --replay)");
  CorpusSpec corpus;
  corpus.property = o.property;
  corpus.generator = generator_spec(o);
  if (!o.n_set) corpus.generator.n = find_property(o.property).default_n;
  corpus.trials = o.trials;
  corpus.mutate = o.mutate;
  corpus.exhaustive = o.exhaustive;
  corpus.max_findings = o.max_findings;
  const PropertyReport report = run_property(corpus);
  const json j = to_json(report);
  emit(j, o.emit);
  std::cout << io::dump(j);
  return report.failures == 0 ? kOk : kFailed;
}

int cmd_export_dot(const Options& o) {
  const json j = io::read_json_file(o.input);
  std::string kind = o.kind;
  if (kind.empty()) {
    if (j.contains("dag")) {
      kind = "dagdec";
    } else if (j.contains("bags")) {
      kind = "dpd";
    } else {
      kind = "digraph";
    }
  }
  std::string dot;
  if (kind == "dagdec") {
    dot = io::to_dot(io::dagdec_from_json(j));
  } else if (kind == "dpd") {
    dot = io::to_dot(io::dpd_from_json(j));
  } else if (kind == "digraph") {
    dot = io::to_dot(io::digraph_from_json(j));
  } else {
    throw UsageError("unknown kind \"" + kind + "\" (digraph, dpd, dagdec)");
  }
  if (!o.emit.empty()) {
    write_file(o.emit, dot);
  } else {
    std::cout << dot;
  }
  return kOk;
}

int cmd_bidirect(const Options& o) {
  UndirectedGraph u;
  if (!o.input.empty()) {
    u = io::undirected_from_json(io::read_json_file(o.input));
  } else {
    u = family_graph(o.family, o.n);
  }
  const json g = io::to_json(bidirect(u));
  emit(g, o.emit);
  std::cout << io::dump(g);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directed pathwidth and DAG-width toolkit"};
  app.require_subcommand(1);
  app.footer(kSchemaHelp);
  Options o;

  const auto graph_in = [&](CLI::App* c) {
    c->add_option("-i,--input", o.input, "digraph JSON")->required()->check(CLI::ExistingFile);
  };
  const auto decomposition_in = [&](CLI::App* c) {
    c->add_option("-d,--decomposition", o.decomposition, "decomposition JSON")
        ->required()
        ->check(CLI::ExistingFile);
  };
  const auto emit_out = [&](CLI::App* c, const char* what) {
    c->add_option("--emit", o.emit, what);
  };
  const auto generator = [&](CLI::App* c) {
    c->add_option("--model", o.model, "gnp, random-dag, tournament, bidirect-gnp, bidirect-family");
    c->add_option("--n", o.n, "number of vertices (grid: side length)")
        ->each([&](const std::string&) { o.n_set = true; });
    c->add_option("--p", o.p, "arc or edge probability");
    c->add_option("--family", o.family, "path, cycle, clique, star, grid");
    c->add_option("--seed", o.seed, "random seed");
  };

  std::map<CLI::App*, int (*)(const Options&)> handlers;
  const auto sub = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    CLI::App* c = app.add_subcommand(name, help);
    c->footer(kSchemaHelp);
    handlers[c] = fn;
    return c;
  };

  CLI::App* c = sub("dpw", "exact directed pathwidth", cmd_dpw);
  graph_in(c);
  emit_out(c, "write the optimal decomposition here");

  c = sub("dgw-tiny", "exact DAG-width by the cop game (tiny graphs)", cmd_dgw);
  graph_in(c);
  c->add_option("--k-max", o.k_max, "largest number of cops tried (default n)");
  emit_out(c, "write the decomposition here");

  c = sub("validate-dpd", "check DPW-1..3", cmd_validate_dpd);
  graph_in(c);
  decomposition_in(c);

  c = sub("validate-dagdec", "check DGW-1..3", cmd_validate_dagdec);
  graph_in(c);
  decomposition_in(c);

  c = sub("check-lean-dpd", "exhaustive lean (or linked) check", cmd_check_lean_dpd);
  graph_in(c);
  decomposition_in(c);
  c->add_flag("--linked", o.linked, "check linkedness instead");

  c = sub("check-lean-dagdec", "exhaustive lean (or linked) check", cmd_check_lean_dagdec);
  graph_in(c);
  decomposition_in(c);
  c->add_option("--reading", o.reading, "some-arc or every-path");
  c->add_flag("--linked", o.linked, "check linkedness instead");

  c = sub("leanify-dpd", "refine a directed path decomposition until lean", cmd_leanify_dpd);
  graph_in(c);
  decomposition_in(c);
  emit_out(c, "write the final decomposition here");
  c->add_option("--trace", o.trace, "write the step trace here");
  c->add_option("--max-steps", o.max_steps, "step cap (0: 10·n·r)");
  c->add_flag("--no-explore", o.no_explore, "never retry another witness or separator");

  c = sub("leanify-dagdec", "refine a DAG decomposition until lean", cmd_leanify_dagdec);
  graph_in(c);
  decomposition_in(c);
  emit_out(c, "write the final decomposition here");
  c->add_option("--trace", o.trace, "write the step trace here");
  c->add_option("--max-steps", o.max_steps, "step cap (0: 10·n·|T|)");
  c->add_option("--max-nodes", o.max_nodes, "node cap on T");
  c->add_option("--reading", o.reading, "some-arc or every-path");
  c->add_flag("--no-explore", o.no_explore, "never retry another witness or separator");

  c = sub("gen", "generate a digraph", cmd_gen);
  generator(c);
  emit_out(c, "also write the digraph here");

  c = sub("fuzz", "run a property over a seeded corpus", cmd_fuzz);
  generator(c);
  c->add_option("--property", o.property, "property id (see --list)");
  c->add_option("--trials", o.trials, "number of instances");
  c->add_option("--max-findings", o.max_findings, "findings to shrink and report");
  c->add_flag("--mutate", o.mutate, "run against a deliberately broken validator");
  c->add_flag("--exhaustive", o.exhaustive, "every digraph on n <= 5 vertices");
  c->add_flag("--list", o.list, "list the properties");
  c->add_option("--replay", o.replay, "replay a finding JSON")->check(CLI::ExistingFile);
  emit_out(c, "also write the report here");

  c = sub("export-dot", "Graphviz DOT for a digraph or decomposition", cmd_export_dot);
  c->add_option("-i,--input", o.input, "JSON file")->required()->check(CLI::ExistingFile);
  c->add_option("--kind", o.kind, "digraph, dpd or dagdec (default: detect)");
  emit_out(c, "write the DOT here instead of stdout");

  c = sub("bidirect", "replace every edge by two opposite arcs", cmd_bidirect);
  c->add_option("-i,--input", o.input, "undirected graph JSON")->check(CLI::ExistingFile);
  c->add_option("--family", o.family, "path, cycle, clique, star, grid (without -i)");
  c->add_option("--n", o.n, "family size");
  emit_out(c, "also write the digraph here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    return handlers.at(chosen)(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << kSchemaHelp;
    return kUsage;
  } catch (const SizeLimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidDecomposition& e) {
    std::cerr << "invalid decomposition: " << e.what() << "\n";
    return kFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n" << kSchemaHelp;
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
