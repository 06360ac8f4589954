#pragma once

#include <stdexcept>
#include <string>

namespace netent {

// One code per rejected precondition or input defect.
enum class errc {
  malformed_line,
  self_loop,
  empty_input,
  disconnected_graph,
  too_few_nodes,
  invalid_sample_size,
  invalid_log_base,
  invalid_count,
  invalid_coefficient,
  invalid_distribution,
  negative_entropy,
  invalid_quantity,
  invalid_interval,
  invalid_rate,
  invalid_multiplier,
  invalid_age,
  invalid_degree,
  invalid_probability,
  overflow,
};

inline const char* to_string(errc code) {
  switch (code) {
    case errc::malformed_line: return "malformed line";
    case errc::self_loop: return "self loop";
    case errc::empty_input: return "empty input";
    case errc::disconnected_graph: return "disconnected graph";
    case errc::too_few_nodes: return "too few nodes";
    case errc::invalid_sample_size: return "invalid sample size";
    case errc::invalid_log_base: return "invalid log base";
    case errc::invalid_count: return "invalid count";
    case errc::invalid_coefficient: return "invalid coefficient";
    case errc::invalid_distribution: return "invalid distribution";
    case errc::negative_entropy: return "negative entropy";
    case errc::invalid_quantity: return "invalid quantity";
    case errc::invalid_interval: return "invalid interval";
    case errc::invalid_rate: return "invalid rate";
    case errc::invalid_multiplier: return "invalid multiplier";
    case errc::invalid_age: return "invalid age";
    case errc::invalid_degree: return "invalid degree";
    case errc::invalid_probability: return "invalid probability";
    case errc::overflow: return "overflow";
  }
  return "unknown error";
}

/// Library exception; carries the failure category alongside the message.
class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace netent
