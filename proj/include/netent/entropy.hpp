#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "netent/error.hpp"

namespace netent {

/// Entropy figures for one (n, L, C) macrostate.
///
/// `generations` is log_L(n), the number of nested cluster generations the
/// network supports; `entropy` scales that by the clustering coefficient;
/// `ideal_entropy` is the ln(n) benchmark of a maximally efficient network
/// (log base e).
struct entropy_report {
  double node_count = 0.0;     // n
  double path_length = 0.0;    // L, the log base
  double clustering = 0.0;     // C
  double generations = 0.0;    // log_L(n)
  double entropy = 0.0;        // C * log_L(n)
  double ideal_entropy = 0.0;  // ln(n)
};

namespace detail {

// Exact integer-power check: returns k with base^k == value, if any.
// Keeps generation counts integral where the inputs make them so; the
// floating log ratio alone can miss by an ulp (log(1e6)/log(10) != 6).
inline bool integral_log(double value, double base, double& out) {
  constexpr double exact_limit = 9007199254740992.0;  // 2^53
  if (value != std::floor(value) || base != std::floor(base)) return false;
  if (value < 2.0 || base < 2.0 || value > exact_limit || base > exact_limit) return false;
  const auto target = static_cast<std::uint64_t>(value);
  const auto b = static_cast<std::uint64_t>(base);
  std::uint64_t acc = 1;
  for (unsigned k = 1; k <= 64; ++k) {
    if (acc > target / b) return false;  // next multiply would overshoot
    acc *= b;
    if (acc == target) {
      out = static_cast<double>(k);
      return true;
    }
  }
  return false;
}

inline void check_node_count(double n) {
  if (!(n >= 1.0) || !std::isfinite(n))
    fail(errc::invalid_count, "node count must be a finite value >= 1");
}

inline void check_log_base(double base) {
  if (!(base > 1.0) || !std::isfinite(base))
    fail(errc::invalid_log_base, "log base must be a finite value > 1");
}

}  // namespace detail

/// log_L(n): the nested cluster generations of an n-node network with
/// path length L. Exact integer powers resolve to exact integers.
inline double cluster_generations(double node_count, double path_length) {
  detail::check_node_count(node_count);
  detail::check_log_base(path_length);
  if (node_count == 1.0) return 0.0;
  double exact = 0.0;
  if (detail::integral_log(node_count, path_length, exact)) return exact;
  return std::log(node_count) / std::log(path_length);
}

/// C * log_L(n), with the ideal ln(n) benchmark alongside.
/// A path length of 1 (complete graph) is rejected; only the ideal
/// benchmark is defined there.
inline entropy_report network_entropy(double node_count, double path_length,
                                      double clustering) {
  detail::check_node_count(node_count);
  detail::check_log_base(path_length);
  if (!(clustering >= 0.0 && clustering <= 1.0))
    fail(errc::invalid_coefficient, "clustering coefficient must lie in [0, 1]");
  entropy_report report;
  report.node_count = node_count;
  report.path_length = path_length;
  report.clustering = clustering;
  report.generations = cluster_generations(node_count, path_length);
  report.entropy = clustering * report.generations;
  report.ideal_entropy = std::log(node_count);
  return report;
}

/// Probability vector; nonnegative entries summing to 1 within 1e-9.
class distribution {
public:
  explicit distribution(std::vector<double> probabilities)
      : probabilities_(std::move(probabilities)) {
    if (probabilities_.empty())
      fail(errc::invalid_distribution, "distribution has no entries");
    double sum = 0.0, carry = 0.0;
    for (double p : probabilities_) {
      if (!(p >= 0.0) || !std::isfinite(p))
        fail(errc::invalid_distribution, "probabilities must be finite and >= 0");
      const double y = p - carry;
      const double t = sum + y;
      carry = (t - sum) - y;
      sum = t;
    }
    if (std::abs(sum - 1.0) > 1e-9)
      fail(errc::invalid_distribution,
           "probabilities sum to " + std::to_string(sum) + ", not 1");
  }

  static distribution uniform(std::size_t size) {
    if (size == 0) fail(errc::invalid_distribution, "uniform distribution over nothing");
    return distribution(std::vector<double>(size, 1.0 / static_cast<double>(size)));
  }

  std::span<const double> values() const { return probabilities_; }
  std::size_t size() const { return probabilities_.size(); }

private:
  std::vector<double> probabilities_;
};

/// scale * sum(-p_i log_base p_i), with 0*log(0) = 0. For the uniform
/// distribution over n outcomes this reduces to scale * log_base(n).
inline double shannon_entropy(const distribution& dist, double log_base,
                              double scale = 1.0) {
  detail::check_log_base(log_base);
  if (!(scale > 0.0) || !std::isfinite(scale))
    fail(errc::invalid_coefficient, "scale constant must be > 0");
  double sum = 0.0, carry = 0.0;  // compensated: up to 1e6 equal terms
  for (double p : dist.values()) {
    if (p == 0.0) continue;
    const double term = -p * std::log(p);
    const double y = term - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return scale * sum / std::log(log_base);
}

/// Combined multiplier of a social network carrying a conceptual network:
/// the product of the two entropies.
inline double conceptual_multiplier(double social_entropy, double conceptual_entropy) {
  if (social_entropy < 0.0 || conceptual_entropy < 0.0)
    fail(errc::negative_entropy, "entropies must be >= 0");
  return social_entropy * conceptual_entropy;
}

/// Rate gained by growing an n1-node network by `added` nodes at fixed L
/// and C: m * C * log_L(1 + added/n1). Equals m times the entropy
/// difference between the two sizes.
inline double value_delta(double process_rate, double clustering, double path_length,
                          double node_count, double added) {
  if (!(process_rate >= 0.0) || !std::isfinite(process_rate))
    fail(errc::invalid_rate, "rate must be >= 0");
  if (!(clustering >= 0.0 && clustering <= 1.0))
    fail(errc::invalid_coefficient, "clustering coefficient must lie in [0, 1]");
  detail::check_log_base(path_length);
  detail::check_node_count(node_count);
  if (!(added >= 0.0) || !std::isfinite(added))
    fail(errc::invalid_count, "added node count must be >= 0");
  return process_rate * clustering * std::log1p(added / node_count) /
         std::log(path_length);
}

}  // namespace netent
