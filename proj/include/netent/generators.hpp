#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "netent/error.hpp"
#include "netent/graph.hpp"
#include "netent/random.hpp"

namespace netent {

/// K_n: every distinct pair joined by an edge.
inline graph complete_graph(std::size_t n) {
  if (n == 0) fail(errc::invalid_count, "node count must be >= 1");
  std::vector<edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (node_id u = 0; u < n; ++u)
    for (node_id v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return graph::with_default_labels(n, edges);
}

/// Ring of n nodes where each connects to the k/2 nearest on either side.
/// k must be even with 2 <= k < n.
inline graph ring_lattice(std::size_t n, std::size_t k) {
  if (n == 0) fail(errc::invalid_count, "node count must be >= 1");
  if (k < 2 || k % 2 != 0 || k >= n)
    fail(errc::invalid_degree, "degree must be even with 2 <= k < n");
  std::vector<edge> edges;
  edges.reserve(n * k / 2);
  for (node_id u = 0; u < n; ++u)
    for (std::size_t j = 1; j <= k / 2; ++j)
      edges.emplace_back(u, static_cast<node_id>((u + j) % n));
  return graph::with_default_labels(n, edges);
}

/// Small-world graph built by rewiring a ring lattice: every lattice edge
/// (u, u+j) is kept with probability 1-p or reconnected from u to a node
/// drawn uniformly from those not already adjacent. Edge count is
/// preserved; identical seeds give identical graphs on every platform.
inline graph watts_strogatz(std::size_t n, std::size_t k, double p,
                            std::uint64_t seed) {
  if (n == 0) fail(errc::invalid_count, "node count must be >= 1");
  if (k < 2 || k % 2 != 0 || k >= n)
    fail(errc::invalid_degree, "degree must be even with 2 <= k < n");
  if (!(p >= 0.0 && p <= 1.0))
    fail(errc::invalid_probability, "rewiring probability must be in [0, 1]");

  std::vector<std::unordered_set<node_id>> adj(n);
  for (node_id u = 0; u < n; ++u)
    for (std::size_t j = 1; j <= k / 2; ++j) {
      node_id v = static_cast<node_id>((u + j) % n);
      adj[u].insert(v);
      adj[v].insert(u);
    }

  rng_engine rng(seed);
  for (std::size_t j = 1; j <= k / 2; ++j)
    for (node_id u = 0; u < n; ++u) {
      if (!detail::flip(rng, p)) continue;
      if (adj[u].size() == n - 1) continue;  // already joined to everyone
      node_id w;
      do {
        w = static_cast<node_id>(detail::uniform_below(rng, n));
      } while (w == u || adj[u].count(w) != 0);
      node_id v = static_cast<node_id>((u + j) % n);
      adj[u].erase(v);
      adj[v].erase(u);
      adj[u].insert(w);
      adj[w].insert(u);
    }

  std::vector<edge> edges;
  edges.reserve(n * k / 2);
  for (node_id u = 0; u < n; ++u)
    for (node_id v : adj[u])
      if (u < v) edges.emplace_back(u, v);
  std::sort(edges.begin(), edges.end());
  return graph::with_default_labels(n, edges);
}

/// A uniform nested partition of leaves. Generation 0 is the single root
/// cluster holding every leaf; each cluster at generation g splits into
/// `branching` equal clusters at generation g+1, down to singleton leaves
/// at generation `depth`.
struct cluster_hierarchy {
  std::uint32_t branching = 0;
  std::uint32_t depth = 0;
  /// generations[g] lists the clusters of generation g; each cluster is a
  /// sorted vector of leaf ids.
  std::vector<std::vector<std::vector<std::uint32_t>>> generations;

  std::size_t leaf_count() const {
    if (generations.empty() || generations.front().empty()) return 0;
    return generations.front().front().size();
  }
};

/// Builds the uniform hierarchy with the given branching factor and depth.
/// Leaves are numbered 0..b^depth-1 in contiguous blocks, so sibling
/// clusters cover adjacent ranges. Leaf counts above 2^20 are refused.
inline cluster_hierarchy nested_hierarchy(std::uint32_t branching,
                                          std::uint32_t depth) {
  if (branching < 2) fail(errc::invalid_count, "branching factor must be >= 2");
  if (depth < 1) fail(errc::invalid_count, "depth must be >= 1");

  constexpr std::uint64_t max_leaves = std::uint64_t{1} << 20;
  std::uint64_t leaves = 1;
  for (std::uint32_t g = 0; g < depth; ++g) {
    leaves *= branching;
    if (leaves > max_leaves)
      fail(errc::overflow, "hierarchy would exceed 2^20 leaves");
  }

  cluster_hierarchy h;
  h.branching = branching;
  h.depth = depth;
  h.generations.resize(depth + 1);
  std::uint64_t count = 1;      // clusters in this generation
  std::uint64_t size = leaves;  // leaves per cluster
  for (std::uint32_t g = 0; g <= depth; ++g) {
    auto& gen = h.generations[g];
    gen.resize(count);
    for (std::uint64_t c = 0; c < count; ++c) {
      gen[c].resize(size);
      for (std::uint64_t i = 0; i < size; ++i)
        gen[c][i] = static_cast<std::uint32_t>(c * size + i);
    }
    count *= branching;
    size /= branching;
  }
  return h;
}

struct hierarchy_violation {
  std::uint32_t generation = 0;
  std::size_t cluster = 0;  // index within the generation, when applicable
  std::string reason;
};

struct hierarchy_check {
  bool ok = true;
  std::vector<hierarchy_violation> violations;
};

/// Checks the structural invariants of a hierarchy: generation g holds
/// exactly b^g clusters of b^(depth-g) leaves each, every generation
/// partitions the same leaf set, and each cluster nests inside a single
/// cluster of the previous generation.
inline hierarchy_check verify_hierarchy(const cluster_hierarchy& h) {
  hierarchy_check check;
  auto flag = [&](std::uint32_t g, std::size_t c, std::string reason) {
    check.ok = false;
    check.violations.push_back({g, c, std::move(reason)});
  };

  if (h.branching < 2 || h.depth < 1) {
    flag(0, 0, "branching factor must be >= 2 and depth >= 1");
    return check;
  }
  if (h.generations.size() != h.depth + 1) {
    flag(0, 0, "expected depth+1 generations, found " +
                   std::to_string(h.generations.size()));
    return check;
  }

  const std::size_t leaves = h.leaf_count();
  std::uint64_t expect_count = 1;
  for (std::uint32_t g = 0; g <= h.depth; ++g) {
    const auto& gen = h.generations[g];
    if (gen.size() != expect_count)
      flag(g, 0, "expected " + std::to_string(expect_count) + " clusters, found " +
                     std::to_string(gen.size()));
    const std::size_t expect_size = leaves / expect_count;
    std::vector<char> seen(leaves, 0);
    for (std::size_t c = 0; c < gen.size(); ++c) {
      if (gen[c].size() != expect_size)
        flag(g, c, "expected " + std::to_string(expect_size) + " leaves, found " +
                       std::to_string(gen[c].size()));
      for (std::uint32_t leaf : gen[c]) {
        if (leaf >= leaves) {
          flag(g, c, "leaf id " + std::to_string(leaf) + " out of range");
        } else if (seen[leaf]) {
          flag(g, c, "leaf " + std::to_string(leaf) + " appears twice");
        } else {
          seen[leaf] = 1;
        }
      }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      flag(g, 0, "generation does not cover every leaf");
    expect_count *= h.branching;
  }
  if (!check.ok) return check;  // nesting checks assume clean partitions

  for (std::uint32_t g = 0; g < h.depth; ++g) {
    std::vector<std::size_t> owner(leaves, 0);
    const auto& parents = h.generations[g];
    for (std::size_t c = 0; c < parents.size(); ++c)
      for (std::uint32_t leaf : parents[c]) owner[leaf] = c;
    const auto& children = h.generations[g + 1];
    for (std::size_t c = 0; c < children.size(); ++c)
      for (std::uint32_t leaf : children[c])
        if (owner[leaf] != owner[children[c].front()]) {
          flag(g + 1, c, "cluster straddles two parents");
          break;
        }
  }
  return check;
}

/// Renders a hierarchy as nested bracket lists with leaves as bare
/// numbers, e.g. branching 2 at depth 2 gives [[0,1],[2,3]].
inline std::string to_nested_text(const cluster_hierarchy& h) {
  if (!verify_hierarchy(h).ok)
    fail(errc::invalid_count, "hierarchy structure is not a valid nesting");

  // Children of a cluster are the next generation's clusters whose leaves
  // it contains, ordered by smallest leaf.
  const std::size_t leaves = h.leaf_count();
  std::vector<std::vector<std::vector<std::size_t>>> kids_by_gen(h.depth);
  for (std::uint32_t g = 0; g < h.depth; ++g) {
    std::vector<std::size_t> owner(leaves, 0);
    for (std::size_t c = 0; c < h.generations[g].size(); ++c)
      for (std::uint32_t leaf : h.generations[g][c]) owner[leaf] = c;
    kids_by_gen[g].resize(h.generations[g].size());
    const auto& next = h.generations[g + 1];
    std::vector<std::size_t> order(next.size());
    for (std::size_t c = 0; c < next.size(); ++c) order[c] = c;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return next[a].front() < next[b].front();
    });
    for (std::size_t c : order) kids_by_gen[g][owner[next[c].front()]].push_back(c);
  }

  std::string out;
  auto emit = [&](auto&& self, std::uint32_t g, std::size_t c) -> void {
    if (g == h.depth) {
      out += std::to_string(h.generations[g][c].front());
      return;
    }
    out += '[';
    const auto& kids = kids_by_gen[g][c];
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (i > 0) out += ',';
      self(self, g + 1, kids[i]);
    }
    out += ']';
  };
  emit(emit, 0, 0);
  return out;
}

}  // namespace netent
