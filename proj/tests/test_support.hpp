#pragma once

// Shared helpers for the test binaries.

#include <gtest/gtest.h>

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "netent/error.hpp"
#include "netent/graph.hpp"
#include "netent/random.hpp"

// Asserts that `expr` throws netent::error with the given code.
#define EXPECT_FAILS(expr, expected_code)                     \
  do {                                                        \
    try {                                                     \
      (void)(expr);                                           \
      ADD_FAILURE() << "expected " #expr " to throw";         \
    } catch (const netent::error& caught) {                   \
      EXPECT_EQ(caught.code(), (expected_code))               \
          << "wrong error code, message: " << caught.what();  \
    }                                                         \
  } while (0)

namespace support {

inline netent::graph make_graph(std::size_t n,
                                std::vector<netent::edge> edges) {
  return netent::graph::with_default_labels(n, edges);
}

/// Connected random graph: a random spanning tree (each node joins an
/// earlier one) plus up to `extra` additional distinct edges.
inline netent::graph random_connected_graph(netent::rng_engine& rng,
                                            std::size_t n, std::size_t extra) {
  std::vector<netent::edge> edges;
  std::set<std::pair<netent::node_id, netent::node_id>> present;
  auto push = [&](netent::node_id u, netent::node_id v) {
    if (u > v) std::swap(u, v);
    if (present.insert({u, v}).second) edges.push_back({u, v});
  };
  for (netent::node_id v = 1; v < n; ++v)
    push(static_cast<netent::node_id>(netent::detail::uniform_below(rng, v)), v);
  for (std::size_t i = 0; i < 4 * extra && present.size() < n - 1 + extra; ++i) {
    const auto u = static_cast<netent::node_id>(netent::detail::uniform_below(rng, n));
    const auto v = static_cast<netent::node_id>(netent::detail::uniform_below(rng, n));
    if (u != v) push(u, v);
  }
  return netent::graph::with_default_labels(n, edges);
}

}  // namespace support
