#ifndef CATROUTE_GENERATORS_HPP
#define CATROUTE_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "catroute/construction.hpp"
#include "catroute/graph.hpp"

namespace catroute {

enum class Family { GnpConnected, RandomTree, Path, Cycle, Grid, Star, Complete, WattsStrogatz };

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family f);

struct GeneratorSpec {
  Family family = Family::Path;
  std::size_t n = 1;
  double p = 0.1;          // gnp-connected edge probability
  double beta = 0.1;       // watts-strogatz rewiring probability
  std::size_t k = 4;       // watts-strogatz ring degree (even)
  std::size_t cols = 0;    // grid width; 0 = ceil(sqrt(n))
  std::uint64_t seed = 0;
  Method method = Method::Graph;  // construction used by the benchmark
};

/// Reads one spec object, e.g. {"family": "gnp-connected", "n": 50, "p": 0.1, "seed": 7}.
GeneratorSpec spec_from_json(const nlohmann::json& j);

/**
 * Deterministic connected graph for the spec.
 *
 * gnp-connected resamples up to 100 times, then links the components of the
 * last sample with random edges (so its distribution is only approximately
 * G(n, p) when p is near the connectivity threshold). watts-strogatz resamples
 * up to 100 times and throws GenerationError if it never comes out connected.
 */
Graph generate(const GeneratorSpec& spec);

/// Seeded source of integers that does not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [0, 1).
  double unit();
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Uniformly random labelled tree on n vertices (Pruefer sequence).
Graph random_tree(std::size_t n, Rng& rng);

/// Random tree where vertex i attaches to a uniform earlier vertex with < max_children children.
Graph random_recursive_tree(std::size_t n, std::size_t max_children, Rng& rng);

}  // namespace catroute

#endif  // CATROUTE_GENERATORS_HPP
