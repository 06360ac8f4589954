#pragma once

// Umbrella header: small-world graph statistics, network entropy, growth
// and dating estimates, generators, and the published-figure replication
// suite.

#include "netent/dynamics.hpp"
#include "netent/entropy.hpp"
#include "netent/error.hpp"
#include "netent/generators.hpp"
#include "netent/graph.hpp"
#include "netent/metrics.hpp"
#include "netent/random.hpp"
#include "netent/replication.hpp"
