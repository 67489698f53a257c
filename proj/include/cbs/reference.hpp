#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cbs/generators.hpp"
#include "cbs/graph.hpp"

namespace cbs {

// Known optimal cyclic bandwidth sums. All throw DomainError below the
// family minimum.
std::int64_t optimum_path(std::int64_t n);   // n - 1, n >= 1
std::int64_t optimum_cycle(std::int64_t n);  // n, n >= 3

/// Wheel with n vertices in total (rim of n - 1 plus hub), n >= 4:
/// n + floor(n^2 / 4). Enumeration agrees with this reading for every wheel
/// with at most 9 vertices; counting only the rim does not.
std::int64_t optimum_wheel(std::int64_t n);

/// n k (k + 1) / 2 for the k-th power of the n-cycle, n > 2k + 1.
std::int64_t optimum_power_cycle(std::int64_t n, std::int64_t k);

/// Complete bipartite K_{n1,n2}: (n1 n2^2 + n1^2 n2 + [n1 odd] n2 + [n2 odd] n1) / 4.
std::int64_t optimum_complete_bipartite(std::int64_t n1, std::int64_t n2);

enum class Factor { Path, Cycle, Complete };

/// Known upper bound for G x H with |V_G| = m, |V_H| = n. Defined for the
/// ordered pairs P x P (m >= n), C x C (m >= n >= 3), K x K (m >= n), P x C,
/// P x K and C x K; anything else throws DomainError.
std::int64_t upper_bound_cartesian(Factor g, Factor h, std::int64_t m, std::int64_t n);

/// (median - ref) / ref. Throws DomainError if ref <= 0.
double relative_distance(double median, double ref);

struct OracleResult {
  std::int64_t optimum;
  Labeling witness;
};

inline constexpr std::size_t kOracleMaxVertices = 9;

/// Exhaustive minimum of the unweighted objective. Vertex 0 is pinned to
/// label 0 and mirror images are skipped, so (n - 1)! / 2 labelings are
/// scored. Throws DomainError when n > kOracleMaxVertices.
OracleResult brute_force_optimum(const Graph& graph);

enum class ReferenceKind { ExactOptimum, UpperBound };

std::string_view to_string(ReferenceKind kind);

struct ReferenceValue {
  ReferenceKind kind;
  std::int64_t value;
  std::string family;  // canonical spec text
};

/// Closed-form reference for a generated instance, if one is known.
/// Throws DomainError when the parameters are outside the formula's domain.
std::optional<ReferenceValue> reference_for(const GeneratorSpec& spec);

}  // namespace cbs
