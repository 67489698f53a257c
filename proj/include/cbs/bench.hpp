#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cbs/graph.hpp"
#include "cbs/reference.hpp"

namespace cbs {

/// Summary of R independent runs of the heuristic on one instance.
struct RunStats {
  std::string instance;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<double> values;  // CBS per repetition, by repetition index
  double median_cbs = 0;
  double mad_cbs = 0;
  double min_cbs = 0;
  std::optional<ReferenceValue> ref;
  std::optional<double> rd;  // relative distance of the median to ref
  double mean_time_s = 0;
};

/// Median; the mean of the two middle values for even sizes. Throws
/// ContractError on an empty sample.
double median(std::vector<double> values);

/// Median absolute deviation about the median, unscaled.
double median_absolute_deviation(const std::vector<double>& values);

/// Worker count: $CBS_JOBS if set to a positive integer, else the hardware
/// concurrency (at least 1).
unsigned default_jobs();

struct BenchOptions {
  std::size_t repetitions = 30;
  std::uint64_t seed = 42;
  unsigned jobs = 1;
};

/// Runs the heuristic `repetitions` times. Repetition r renames the vertices
/// with a random permutation drawn from derive_seed(seed, r), labels the
/// renamed graph, maps the labeling back and scores it on `graph`. Only the
/// heuristic itself is timed. Results do not depend on `jobs`.
RunStats run_instance(const Graph& graph, const std::string& name, const BenchOptions& options,
                      std::optional<ReferenceValue> ref = std::nullopt);

/// CBS of one randomized repetition (the unit of work of run_instance).
double run_once(const Graph& graph, std::uint64_t seed, std::uint64_t repetition,
                double* seconds = nullptr);

struct RobustnessRow {
  std::size_t k = 0;
  double median = 0;  // median over outer runs of the best of k inner runs
  double mad = 0;
  std::optional<double> rd;  // relative to overall_min; absent if overall_min is 0
};

struct RobustnessStats {
  std::string instance;
  std::vector<RobustnessRow> rows;  // in the order of k_set
  double overall_min = 0;
};

/// Best-of-k protocol. Outer run r draws max(k_set) inner repetitions from
/// derive_seed(seed, r); best-of-k is the minimum of the first k of them, so
/// medians never increase with k. Throws ContractError on k = 0 or empty k_set.
RobustnessStats run_robustness(const Graph& graph, const std::string& name,
                               const std::vector<std::size_t>& k_set,
                               const BenchOptions& options);

}  // namespace cbs
