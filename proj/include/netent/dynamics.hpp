#pragma once

#include <cmath>
#include <string>

#include "netent/error.hpp"

namespace netent {

enum class time_unit { year, decade, millennium, million_years };

inline double years_per(time_unit unit) {
  switch (unit) {
    case time_unit::year: return 1.0;
    case time_unit::decade: return 10.0;
    case time_unit::millennium: return 1000.0;
    case time_unit::million_years: return 1e6;
  }
  return 1.0;
}

inline const char* to_string(time_unit unit) {
  switch (unit) {
    case time_unit::year: return "year";
    case time_unit::decade: return "decade";
    case time_unit::millennium: return "millennium";
    case time_unit::million_years: return "Myr";
  }
  return "year";
}

/// Continuous exponential rate m, as in q(t2) = q(t1) * e^{m t}.
struct rate_result {
  double rate = 0.0;
  time_unit unit = time_unit::year;
  double window_begin = 0.0;
  double window_end = 0.0;
};

enum class dating_model {
  exponential,  // t solves q_end = q_start * e^{m t}
  linear,       // t = H_end / m: constant absolute growth from zero
};

inline const char* to_string(dating_model model) {
  return model == dating_model::exponential ? "exponential" : "linear";
}

/// Estimated duration of a growth process, tagged with the model that
/// produced it.
struct dating_result {
  double duration = 0.0;
  time_unit unit = time_unit::year;
  dating_model model = dating_model::exponential;
  double rate = 0.0;
  double start_quantity = 0.0;
  double end_quantity = 0.0;
};

/// Average growth rate of a quantity that moved from q1 to q2 over
/// `elapsed` time units: m = ln(q2/q1) / t.
inline rate_result exponential_rate(double q1, double q2, double elapsed,
                                    time_unit unit = time_unit::year) {
  if (!(q1 > 0.0) || !(q2 > 0.0) || !std::isfinite(q1) || !std::isfinite(q2))
    fail(errc::invalid_quantity, "quantities must be finite and > 0");
  if (!(elapsed > 0.0) || !std::isfinite(elapsed))
    fail(errc::invalid_interval, "elapsed time must be > 0");
  return {std::log(q2 / q1) / elapsed, unit, 0.0, elapsed};
}

/// The same continuous rate expressed per a different time unit.
inline double rate_in(const rate_result& r, time_unit target) {
  return r.rate * years_per(target) / years_per(r.unit);
}

/// Rate of a networked process: the basal per-node rate times the
/// network entropy driving it.
inline double process_rate(double basal, double entropy) {
  return basal * entropy;
}

/// Per-node rate recovered from an observed networked rate by dividing
/// out the entropy multiplier.
inline double basal_rate(double observed, double multiplier) {
  if (!(multiplier > 0.0) || !std::isfinite(multiplier))
    fail(errc::invalid_multiplier, "multiplier must be > 0");
  return observed / multiplier;
}

/// Time for a quantity to grow from q_start to q_end at continuous rate m.
inline dating_result date_duration(double rate, double q_start, double q_end,
                                   time_unit unit = time_unit::year) {
  if (!(rate > 0.0) || !std::isfinite(rate))
    fail(errc::invalid_rate, "rate must be > 0");
  if (!(q_start > 0.0) || !(q_end > 0.0) || !std::isfinite(q_start) || !std::isfinite(q_end))
    fail(errc::invalid_quantity, "quantities must be finite and > 0");
  if (q_end < q_start)
    fail(errc::invalid_quantity, "end quantity below start quantity");
  return {std::log(q_end / q_start) / rate, unit, dating_model::exponential,
          rate, q_start, q_end};
}

/// Time to accumulate `end_entropy` at constant absolute rate m per unit
/// time: t = H_end / m. Kept distinct from the exponential solve; results
/// carry the linear tag.
inline dating_result linear_duration(double rate, double end_entropy,
                                     time_unit unit = time_unit::year) {
  if (!(rate > 0.0) || !std::isfinite(rate))
    fail(errc::invalid_rate, "rate must be > 0");
  if (!(end_entropy > 0.0) || !std::isfinite(end_entropy))
    fail(errc::invalid_quantity, "end entropy must be > 0");
  return {end_entropy / rate, unit, dating_model::linear, rate, 0.0, end_entropy};
}

/// Rescales a lexical divergence rate measured against an old ancestral-age
/// estimate onto a revised age: divergence * old_age / new_age.
inline double glotto_adjust(double divergence_per_kyr, double old_age_years,
                            double new_age_years) {
  if (!(divergence_per_kyr > 0.0) || !std::isfinite(divergence_per_kyr))
    fail(errc::invalid_quantity, "divergence must be > 0");
  if (!(old_age_years > 0.0) || !(new_age_years > 0.0) ||
      !std::isfinite(old_age_years) || !std::isfinite(new_age_years))
    fail(errc::invalid_age, "ages must be finite and > 0");
  return divergence_per_kyr * old_age_years / new_age_years;
}

/// Divergence attributed to each daughter language when two daughters
/// drift apart at the same rate: half the mutual divergence.
inline double per_daughter_rate(double divergence_per_kyr) {
  if (!(divergence_per_kyr >= 0.0) || !std::isfinite(divergence_per_kyr))
    fail(errc::invalid_quantity, "divergence must be >= 0");
  return divergence_per_kyr / 2.0;
}

}  // namespace netent
