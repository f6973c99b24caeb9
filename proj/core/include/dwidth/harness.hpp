#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "dwidth/generate.hpp"
#include "dwidth/io.hpp"

namespace dwidth {

using io::json;

// Result of one property check on one instance.
struct Outcome {
  bool skipped = false;
  std::int64_t checks = 0;               // elementary assertions made
  std::optional<json> failure;           // diagnostic when the property fails
  std::map<std::string, std::int64_t> counters;
};

// A property sees the instance, a per-instance seed for any sampling it
// does, and the mutation flag. It must be a function of these three alone so
// that findings replay.
using PropertyCheck = std::function<Outcome(const Digraph&, std::uint64_t seed, bool mutate)>;

struct Property {
  std::string id;
  std::string summary;
  Model model = Model::kGnp;  // default corpus model
  int default_n = 5;
  bool supports_mutation = false;
  PropertyCheck check;
};

const std::vector<Property>& properties();
// Throws std::invalid_argument on an unknown id.
const Property& find_property(std::string_view id);

struct Finding {
  std::string property;
  json source;  // generator spec or exhaustive index
  std::uint64_t seed = 0;
  bool mutate = false;
  Digraph original;
  Digraph shrunk;
  json diagnostic;
};

struct CorpusSpec {
  std::string property;
  GeneratorSpec generator;  // generator.seed seeds the per-trial seeds
  int trials = 100;
  bool mutate = false;
  // Every digraph on generator.n vertices instead of random ones.
  bool exhaustive = false;
  int max_findings = 5;
};

struct PropertyReport {
  CorpusSpec corpus;
  std::int64_t instances = 0;
  std::int64_t skipped = 0;
  std::int64_t checks = 0;
  std::int64_t failures = 0;
  std::map<std::string, std::int64_t> counters;
  std::vector<Finding> findings;  // shrunk, at most corpus.max_findings
};

// Throws std::invalid_argument on an unknown property, a mutation request
// the property does not support, or an exhaustive sweep above 5 vertices.
PropertyReport run_property(const CorpusSpec& corpus);

// Deletes vertices, then arcs, while the check keeps failing.
Digraph shrink(const Property& property, const Digraph& g, std::uint64_t seed, bool mutate);

Outcome replay(const Finding& finding);

json to_json(const GeneratorSpec& spec);
json to_json(const Finding& finding);
json to_json(const PropertyReport& report);
Finding finding_from_json(const json& j);

// Random valid directed path decomposition: the interval layout of a random
// vertex order, with some intervals stretched.
PathDecomposition random_dpd(const Digraph& g, std::mt19937_64& rng);

// Random directed walk without repeated vertices; two or more vertices unless
// the start has no out-neighbour.
std::vector<int> random_path(const Digraph& g, std::mt19937_64& rng);

}  // namespace dwidth
