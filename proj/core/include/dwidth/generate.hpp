#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "dwidth/digraph.hpp"

namespace dwidth {

enum class Model { kGnp, kRandomDag, kTournament, kBidirectGnp, kBidirectFamily };

const char* to_string(Model m);
// Throws std::invalid_argument on an unknown name.
Model model_from_string(std::string_view name);

// The family models are path, cycle, clique, star (n vertices each) and grid
// (an n x n grid). The other models ignore `family`; bidirect-family ignores
// `p` and `seed`.
struct GeneratorSpec {
  Model model = Model::kGnp;
  int n = 0;
  double p = 0.5;
  std::string family = "path";
  std::uint64_t seed = 0;

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

// Bit-reproducible: the only randomness is the raw output of
// std::mt19937_64 seeded with spec.seed. Throws std::invalid_argument on bad
// parameters.
Digraph generate(const GeneratorSpec& spec);

UndirectedGraph family_graph(std::string_view family, int n);

// Uniform double in [0, 1) from the top 53 bits of one draw.
double unit(std::mt19937_64& rng);
// Uniform integer in [0, bound), bound > 0, by rejection.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace dwidth
