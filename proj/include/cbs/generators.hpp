#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "cbs/graph.hpp"

namespace cbs {

// Deterministic families. Every size below the family minimum throws DomainError.
Graph make_path(std::int64_t n);                  // n >= 1
Graph make_cycle(std::int64_t n);                 // n >= 3
Graph make_wheel(std::int64_t cycle_n);           // cycle 0..cycle_n-1, hub = cycle_n
Graph make_power_cycle(std::int64_t n, std::int64_t k);  // k >= 1, n > 2k + 1
Graph make_complete(std::int64_t n);              // n >= 1
Graph make_complete_bipartite(std::int64_t n1, std::int64_t n2);  // sides 0..n1-1 and n1..

/// Vertex (a, b) of G x H gets index a * |V_H| + b. Weights are dropped.
Graph cartesian_product(const Graph& g, const Graph& h);

/// G(n, p), redrawn with derived seeds until connected (at most 100 draws;
/// the last draw is returned even if it is disconnected, e.g. for p = 0).
Graph erdos_renyi(std::int64_t n, double p, std::uint64_t seed);

/// Triangle core, then each new vertex attaches to one existing vertex picked
/// with probability proportional to its degree. Exactly n edges; n >= 3.
Graph barabasi_albert(std::int64_t n, std::uint64_t seed);

/// Ring lattice of even degree k, then every non-lattice pair is linked
/// independently with probability p' = min(1, p * (n k / 2) / #non-lattice pairs),
/// so p * (n k / 2) edges are added on average. Nothing is rewired.
Graph watts_strogatz(std::int64_t n, std::int64_t k, double p, std::uint64_t seed);

/// Each vertex joins one of `communities` uniformly at random; pairs are
/// linked with p_intra inside a community and p_inter across.
Graph stochastic_block(std::int64_t n, std::int64_t communities, double p_intra, double p_inter,
                       std::uint64_t seed);

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Plain-text graph description, e.g. "family=ws n=100 k=4 p=0.1 seed=7".
///
/// Families and keys (n is always the total vertex count):
///   path n | cycle n | wheel n | pgc n k | complete n | cbg n1 n2
///   er n p [seed] | ba n [seed] | ws n k p [seed] | sbm n c p_intra p_inter [seed]
///   product g h m n   (g, h in {path, cycle, complete}; G has m vertices, H has n)
struct GeneratorSpec {
  std::string family;
  std::map<std::string, std::string, std::less<>> values;

  /// Throws FormatError on malformed tokens, unknown families or keys, and
  /// missing required keys.
  static GeneratorSpec parse(std::string_view text);
  /// Canonical form: family first, then keys in alphabetical order.
  std::string format() const;

  std::int64_t integer(std::string_view key) const;
  double real(std::string_view key) const;
  std::string_view text(std::string_view key) const;
  std::uint64_t seed() const;

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

/// Throws DomainError when parameters are outside the family's domain.
Graph build(const GeneratorSpec& spec);

}  // namespace cbs
