#include "cbs/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "cbs/errors.hpp"
#include "cbs/merge.hpp"
#include "cbs/path_finder.hpp"
#include "cbs/random.hpp"

namespace cbs {

namespace {

// Calls work(i) for i in [0, count) on up to `jobs` threads; rethrows the
// first failure.
template <typename Work>
void parallel_for(std::size_t count, unsigned jobs, Work work) {
  const auto threads = std::min<std::size_t>(std::max(jobs, 1u), count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          work(i);
        } catch (...) {
          std::lock_guard lock(failure_lock);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

double median(std::vector<double> values) {
  if (values.empty()) throw ContractError("median of an empty sample");
  const auto mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
  const double upper = values[mid];
  if (values.size() % 2 == 1) return upper;
  const double lower = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
  return (lower + upper) / 2.0;
}

double median_absolute_deviation(const std::vector<double>& values) {
  const double m = median(values);
  std::vector<double> dev;
  dev.reserve(values.size());
  for (double v : values) dev.push_back(std::abs(v - m));
  return median(std::move(dev));
}

unsigned default_jobs() {
  if (const char* env = std::getenv("CBS_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

double run_once(const Graph& graph, std::uint64_t seed, std::uint64_t repetition, double* seconds) {
  Rng rng(derive_seed(seed, repetition));
  const auto rename = rng.permutation(graph.vertex_count());
  const Graph renamed = relabel_vertices(graph, rename);

  const auto start = std::chrono::steady_clock::now();
  const Labeling renamed_labels = merge_paths(find_paths(renamed), renamed);
  const auto stop = std::chrono::steady_clock::now();
  if (seconds) *seconds = std::chrono::duration<double>(stop - start).count();

  std::vector<Label> perm(graph.vertex_count());
  for (std::size_t u = 0; u < perm.size(); ++u) perm[u] = renamed_labels[rename[u]];
  return cyclic_bandwidth_sum(graph, Labeling(std::move(perm)));
}

RunStats run_instance(const Graph& graph, const std::string& name, const BenchOptions& options,
                      std::optional<ReferenceValue> ref) {
  if (options.repetitions == 0) throw ContractError("at least one repetition is required");
  RunStats stats;
  stats.instance = name;
  stats.n = graph.vertex_count();
  stats.m = graph.edge_count();
  stats.values.resize(options.repetitions);
  std::vector<double> times(options.repetitions);
  parallel_for(options.repetitions, options.jobs, [&](std::size_t r) {
    stats.values[r] = run_once(graph, options.seed, r, &times[r]);
  });
  stats.median_cbs = median(stats.values);
  stats.mad_cbs = median_absolute_deviation(stats.values);
  stats.min_cbs = *std::min_element(stats.values.begin(), stats.values.end());
  double total = 0;
  for (double t : times) total += t;
  stats.mean_time_s = total / static_cast<double>(times.size());
  if (ref && ref->value > 0) stats.rd = relative_distance(stats.median_cbs, static_cast<double>(ref->value));
  stats.ref = std::move(ref);
  return stats;
}

RobustnessStats run_robustness(const Graph& graph, const std::string& name,
                               const std::vector<std::size_t>& k_set,
                               const BenchOptions& options) {
  if (k_set.empty()) throw ContractError("robustness needs at least one k");
  if (options.repetitions == 0) throw ContractError("at least one outer repetition is required");
  for (auto k : k_set)
    if (k == 0) throw ContractError("k must be at least 1");
  const auto k_max = *std::max_element(k_set.begin(), k_set.end());

  // prefix_min[r][i] = best of inner runs 0..i of outer run r.
  std::vector<std::vector<double>> prefix_min(options.repetitions);
  parallel_for(options.repetitions, options.jobs, [&](std::size_t r) {
    const auto stream = derive_seed(options.seed, r);
    auto& best = prefix_min[r];
    best.resize(k_max);
    for (std::size_t i = 0; i < k_max; ++i) {
      const double v = run_once(graph, stream, i);
      best[i] = i == 0 ? v : std::min(best[i - 1], v);
    }
  });

  RobustnessStats stats;
  stats.instance = name;
  stats.overall_min = prefix_min.front().back();
  for (const auto& row : prefix_min) stats.overall_min = std::min(stats.overall_min, row.back());
  for (auto k : k_set) {
    std::vector<double> sample;
    for (const auto& row : prefix_min) sample.push_back(row[k - 1]);
    RobustnessRow out;
    out.k = k;
    out.median = median(sample);
    out.mad = median_absolute_deviation(sample);
    if (stats.overall_min > 0) out.rd = relative_distance(out.median, stats.overall_min);
    stats.rows.push_back(out);
  }
  return stats;
}

}  // namespace cbs
