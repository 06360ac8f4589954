#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "netent/error.hpp"
#include "netent/graph.hpp"
#include "netent/random.hpp"

namespace netent {

enum class path_method { exact, sampled };
enum class component_policy { largest, strict };

/// Measured macrostate of a graph: the three figures n, L, C.
struct network_stats {
  std::size_t node_count = 0;        // nodes measured
  std::size_t total_node_count = 0;  // nodes in the input graph
  std::size_t edge_count = 0;
  double path_length = 0.0;          // L: mean shortest-path steps over pairs
  double clustering = 0.0;           // C: mean local neighbour connectivity
  path_method method = path_method::exact;
  std::optional<std::size_t> sample_size;
  std::optional<std::uint64_t> seed;
  bool largest_component_only = false;
};

struct stats_options {
  enum class mode { automatic, exact, sampled };
  component_policy policy = component_policy::largest;
  mode sampling = mode::automatic;
  std::size_t sample_size = 1000;  // sources used when sampling
  std::uint64_t seed = 0;
  std::size_t exact_limit = 10000;  // automatic: exact up to this many nodes
  unsigned threads = 0;             // 0 = hardware concurrency
};

namespace detail {

// Hop counts from `source` to every reachable node; returns the distance
// sum and the number of nodes reached (including the source).
inline std::pair<std::uint64_t, std::size_t> bfs_distance_sum(const graph& g,
                                                              node_id source,
                                                              std::vector<std::int32_t>& dist,
                                                              std::vector<node_id>& queue) {
  dist.assign(g.node_count(), -1);
  queue.clear();
  queue.push_back(source);
  dist[source] = 0;
  std::uint64_t sum = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const node_id u = queue[head];
    for (node_id v : g.neighbors(u))
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        sum += static_cast<std::uint64_t>(dist[v]);
        queue.push_back(v);
      }
  }
  return {sum, queue.size()};
}

// Runs worker(begin, end) over [0, count) on `threads` threads. Each index
// owns its own output slot, so the result is independent of scheduling.
template <typename Worker>
inline void for_each_chunk(std::size_t count, unsigned threads, Worker worker) {
  unsigned want = threads != 0 ? threads : std::thread::hardware_concurrency();
  if (want == 0) want = 1;
  if (want > count) want = static_cast<unsigned>(count);
  if (want <= 1 || count < 128) {
    worker(std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(want);
  const std::size_t chunk = (count + want - 1) / want;
  for (unsigned t = 0; t < want; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(begin + chunk, count);
    if (begin >= end) break;
    pool.emplace_back(worker, begin, end);
  }
  for (auto& th : pool) th.join();
}

// Per-source distance sums for the given sources; flags any source whose
// BFS fails to reach the whole graph.
inline std::vector<std::uint64_t> distance_sums(const graph& g,
                                                std::span<const node_id> sources,
                                                unsigned threads) {
  std::vector<std::uint64_t> sums(sources.size(), 0);
  std::vector<char> complete(sources.size(), 0);
  for_each_chunk(sources.size(), threads, [&](std::size_t begin, std::size_t end) {
    std::vector<std::int32_t> dist;
    std::vector<node_id> queue;
    queue.reserve(g.node_count());
    for (std::size_t i = begin; i < end; ++i) {
      const auto [sum, reached] = bfs_distance_sum(g, sources[i], dist, queue);
      sums[i] = sum;
      complete[i] = reached == g.node_count() ? 1 : 0;
    }
  });
  for (std::size_t i = 0; i < sources.size(); ++i)
    if (!complete[i])
      fail(errc::disconnected_graph,
           "node '" + g.label(sources[i]) + "' cannot reach the whole graph");
  return sums;
}

}  // namespace detail

/// Mean shortest-path length over all unordered distinct node pairs,
/// by breadth-first search from every node.
inline double average_path_length_exact(const graph& g, unsigned threads = 0) {
  const std::size_t n = g.node_count();
  if (n < 2) fail(errc::too_few_nodes, "path length needs at least two nodes");
  std::vector<node_id> sources(n);
  std::iota(sources.begin(), sources.end(), 0u);
  const auto sums = detail::distance_sums(g, sources, threads);
  std::uint64_t total = 0;
  for (auto s : sums) total += s;
  // every unordered pair is counted once from each endpoint
  return static_cast<double>(total) /
         (static_cast<double>(n) * static_cast<double>(n - 1));
}

/// Mean distance from `sources` uniformly sampled distinct nodes to all
/// other nodes. Reproducible for a given seed; sources == n gives the
/// exact value.
inline double average_path_length_sampled(const graph& g, std::size_t sources,
                                          std::uint64_t seed, unsigned threads = 0) {
  const std::size_t n = g.node_count();
  if (n < 2) fail(errc::too_few_nodes, "path length needs at least two nodes");
  if (sources < 1 || sources > n)
    fail(errc::invalid_sample_size,
         std::to_string(sources) + " sources for " + std::to_string(n) + " nodes");
  rng_engine rng(seed);
  const auto picked = detail::sample_indices(rng, static_cast<std::uint32_t>(n),
                                             static_cast<std::uint32_t>(sources));
  const auto sums = detail::distance_sums(g, picked, threads);
  std::uint64_t total = 0;
  for (auto s : sums) total += s;
  return static_cast<double>(total) /
         (static_cast<double>(sources) * static_cast<double>(n - 1));
}

/// Mean over all nodes of the fraction of a node's neighbour pairs that
/// are themselves connected. Nodes of degree < 2 contribute 0.
inline double clustering_coefficient(const graph& g) {
  const auto n = static_cast<node_id>(g.node_count());
  double total = 0.0;
  for (node_id v = 0; v < n; ++v) {
    const auto nbrs = g.neighbors(v);
    const std::size_t k = nbrs.size();
    if (k < 2) continue;
    std::uint64_t links = 0;
    for (std::size_t i = 0; i + 1 < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (g.has_edge(nbrs[i], nbrs[j])) ++links;
    total += 2.0 * static_cast<double>(links) /
             (static_cast<double>(k) * static_cast<double>(k - 1));
  }
  return total / static_cast<double>(n);
}

/// Bundled n, L, C measurement. Disconnected input is restricted to its
/// largest component (and flagged) unless the policy is strict.
inline network_stats compute_stats(const graph& g, const stats_options& opt = {}) {
  network_stats out;
  out.total_node_count = g.node_count();

  const graph* target = &g;
  std::optional<graph> component;
  if (!is_connected(g)) {
    if (opt.policy == component_policy::strict)
      fail(errc::disconnected_graph, "graph has more than one component");
    component.emplace(largest_component(g));
    target = &*component;
    out.largest_component_only = true;
  }

  const std::size_t n = target->node_count();
  if (n < 2) fail(errc::too_few_nodes, "largest component has a single node");
  out.node_count = n;
  out.edge_count = target->edge_count();
  out.clustering = clustering_coefficient(*target);

  const bool sample =
      opt.sampling == stats_options::mode::sampled ||
      (opt.sampling == stats_options::mode::automatic && n > opt.exact_limit);
  if (sample) {
    const std::size_t sources = std::min(opt.sample_size, n);
    out.path_length = average_path_length_sampled(*target, sources, opt.seed, opt.threads);
    out.method = path_method::sampled;
    out.sample_size = sources;
    out.seed = opt.seed;
  } else {
    out.path_length = average_path_length_exact(*target, opt.threads);
    out.method = path_method::exact;
  }
  return out;
}

}  // namespace netent
