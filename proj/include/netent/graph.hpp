#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "netent/error.hpp"

namespace netent {

using node_id = std::uint32_t;
using edge = std::pair<node_id, node_id>;

/// Undirected simple graph over densely indexed, labelled nodes.
///
/// Adjacency lists are sorted and deduplicated at construction, and
/// instances are immutable afterwards, so concurrent readers need no
/// locking. Duplicate input edges (either orientation) collapse silently;
/// self-loops are rejected.
class graph {
public:
  graph(std::vector<std::string> labels, std::span<const edge> edges)
      : labels_(std::move(labels)), adjacency_(labels_.size()) {
    if (labels_.empty()) fail(errc::invalid_count, "graph needs at least one node");
    const auto n = static_cast<node_id>(labels_.size());
    for (const auto& [u, v] : edges) {
      if (u >= n || v >= n) fail(errc::invalid_count, "edge endpoint out of range");
      if (u == v) fail(errc::self_loop, "node '" + labels_[u] + "' linked to itself");
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) {
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
      edge_count_ += nbrs.size();
    }
    edge_count_ /= 2;
  }

  /// Builds a graph whose labels are the decimal node indices.
  static graph with_default_labels(std::size_t node_count, std::span<const edge> edges) {
    std::vector<std::string> labels;
    labels.reserve(node_count);
    for (std::size_t i = 0; i < node_count; ++i) labels.push_back(std::to_string(i));
    return graph(std::move(labels), edges);
  }

  std::size_t node_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(node_id v) const { return labels_[v]; }

  std::span<const node_id> neighbors(node_id v) const { return adjacency_[v]; }
  std::size_t degree(node_id v) const { return adjacency_[v].size(); }

  bool has_edge(node_id u, node_id v) const {
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  /// All edges as (u, v) pairs with u < v, in ascending order.
  std::vector<edge> edges() const {
    std::vector<edge> out;
    out.reserve(edge_count_);
    for (node_id u = 0; u < adjacency_.size(); ++u)
      for (node_id v : adjacency_[u])
        if (v > u) out.emplace_back(u, v);
    return out;
  }

private:
  std::vector<std::string> labels_;
  std::vector<std::vector<node_id>> adjacency_;
  std::size_t edge_count_ = 0;
};

// ---------------------------------------------------------------------------
// Edge-list text format: one edge per line as two whitespace-separated
// labels; '#' starts a comment line; blank lines are ignored.
// ---------------------------------------------------------------------------

inline graph from_edge_list(std::istream& in) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, node_id> index_of;
  std::vector<edge> edges;

  const auto intern = [&](const std::string& label) {
    auto [it, inserted] = index_of.try_emplace(label, static_cast<node_id>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string a, b, extra;
    if (!(tokens >> a)) continue;       // blank line
    if (a.front() == '#') continue;     // comment
    if (!(tokens >> b) || (tokens >> extra))
      fail(errc::malformed_line,
           "line " + std::to_string(line_no) + ": expected exactly two labels");
    if (a == b)
      fail(errc::self_loop, "line " + std::to_string(line_no) + ": '" + a + "' to itself");
    // Intern left to right so ids follow first appearance in the file;
    // as call arguments the two interns would have unspecified order.
    const node_id u = intern(a);
    const node_id v = intern(b);
    edges.emplace_back(u, v);
  }
  if (labels.empty()) fail(errc::empty_input, "edge list contains no data lines");
  return graph(std::move(labels), edges);
}

inline graph from_edge_list(const std::string& text) {
  std::istringstream in(text);
  return from_edge_list(in);
}

inline void write_edge_list(const graph& g, std::ostream& out) {
  for (const auto& label : g.labels())
    if (label.empty() || label.front() == '#' ||
        label.find_first_of(" \t\r\n") != std::string::npos)
      fail(errc::malformed_line, "label '" + label + "' not representable in edge-list text");
  for (const auto& [u, v] : g.edges())
    out << g.label(u) << ' ' << g.label(v) << '\n';
}

inline std::string to_edge_list(const graph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

// ---------------------------------------------------------------------------
// Connectivity
// ---------------------------------------------------------------------------

/// Partition of the node set into connected components, each sorted
/// ascending; parts ordered by size descending, ties by smallest member.
inline std::vector<std::vector<node_id>> connected_components(const graph& g) {
  const auto n = static_cast<node_id>(g.node_count());
  std::vector<std::vector<node_id>> parts;
  std::vector<char> seen(n, 0);
  std::vector<node_id> queue;
  for (node_id start = 0; start < n; ++start) {
    if (seen[start]) continue;
    queue.assign(1, start);
    seen[start] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (node_id next : g.neighbors(queue[head]))
        if (!seen[next]) {
          seen[next] = 1;
          queue.push_back(next);
        }
    std::sort(queue.begin(), queue.end());
    parts.push_back(queue);
  }
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return parts;
}

inline bool is_connected(const graph& g) {
  return connected_components(g).size() == 1;
}

/// Induced subgraph on the largest component (ties broken by smallest
/// contained index); labels preserved, indices remapped densely.
inline graph largest_component(const graph& g) {
  const auto parts = connected_components(g);
  const auto& keep = parts.front();

  std::vector<node_id> remap(g.node_count(), 0);
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (node_id v : keep) {
    remap[v] = static_cast<node_id>(labels.size());
    labels.push_back(g.label(v));
  }
  std::vector<edge> edges;
  for (node_id v : keep)
    for (node_id w : g.neighbors(v))
      if (w > v) edges.emplace_back(remap[v], remap[w]);
  return graph(std::move(labels), edges);
}

}  // namespace netent
