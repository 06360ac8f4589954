// Acceptance gate: seventeen published-figure and property criteria, one
// verdict line each. Exits nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <string>

#include "netent/netent.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

namespace {

int failures = 0;

void verdict(int number, bool pass, const std::string& detail) {
  if (!pass) ++failures;
  std::printf("[criterion %02d] %s — %s\n", number, pass ? "PASS" : "FAIL",
              detail.c_str());
}

std::string num(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

bool within(double computed, double expected, double tolerance) {
  return std::abs(computed - expected) <= tolerance;
}

std::string show(const char* what, double computed, double expected,
                 double tolerance) {
  return std::string(what) + " = " + num(computed) + " (expected " +
         num(expected) + " ± " + num(tolerance) + ")";
}

}  // namespace

int main() {
  using namespace netent;

  // 1-2: cortical network entropy today and three million years ago.
  const double h_modern = network_entropy(1e11, 2.49, 0.53).entropy;
  verdict(1, within(h_modern, 14.71, 0.01),
          show("modern cortical entropy", h_modern, 14.71, 0.01));

  const double h_early = network_entropy(1e11 / 3.0, 2.49, 0.53).entropy;
  verdict(2, within(h_early, 14.077, 0.005),
          show("early cortical entropy", h_early, 14.077, 0.005));

  // 3: growth rate linking them over 3 Myr. The published 0.01478 comes
  // from the unrounded entropies, so the chain feeds criteria 1-2 through.
  const double m_neural =
      exponential_rate(h_early, h_modern, 3.0, time_unit::million_years).rate;
  verdict(3, within(m_neural, 0.01478, 1e-4),
          show("cortical growth rate /Myr", m_neural, 0.01478, 1e-4));

  // 4: constant-rate dating of cortical entropy; the exponential reading
  // of the same inputs is reported alongside for contrast.
  const double linear_myr =
      linear_duration(0.01478, 14.71, time_unit::million_years).duration;
  const double exp_myr =
      date_duration(0.01478, 1.0, 14.71, time_unit::million_years).duration;
  verdict(4, within(linear_myr, 995.0, 1.0),
          show("constant-rate dating, Myr", linear_myr, 995.0, 1.0) +
              "; exponential reading " + num(exp_myr) + " Myr");

  // 5: English-speaker network entropy at both endpoints.
  const double h_speakers_1989 = network_entropy(350e6, 3.65, 0.79).entropy;
  const double h_speakers_1657 = network_entropy(5281347.0, 3.65, 0.79).entropy;
  verdict(5,
          within(h_speakers_1989, 12.00, 0.01) &&
              within(h_speakers_1657, 9.445, 0.005),
          show("speaker entropy 1989", h_speakers_1989, 12.00, 0.01) + "; " +
              show("1657", h_speakers_1657, 9.445, 0.005));

  // 6: lexical network entropy at both endpoints.
  const double h_lexicon_1989 = network_entropy(616000.0, 2.67, 0.437).entropy;
  const double h_lexicon_1657 = network_entropy(200000.0, 2.67, 0.437).entropy;
  verdict(6,
          within(h_lexicon_1989, 5.93, 0.01) &&
              within(h_lexicon_1657, 5.431, 0.005),
          show("lexicon entropy 1989", h_lexicon_1989, 5.93, 0.01) + "; " +
              show("1657", h_lexicon_1657, 5.431, 0.005));

  // 7: multiplier from the published endpoint means.
  const double multiplier =
      conceptual_multiplier((9.445 + 12.00) / 2.0, (5.431 + 5.93) / 2.0);
  verdict(7, within(multiplier, 60.94, 0.05),
          show("entropy multiplier", multiplier, 60.94, 0.05));

  // 8: lexicon growth 1657-1989 expressed per decade.
  const rate_result lexical_rate = exponential_rate(200000.0, 616000.0, 332.0);
  const double per_decade = rate_in(lexical_rate, time_unit::decade);
  verdict(8, per_decade >= 0.033 && per_decade <= 0.035,
          "lexical growth/decade = " + num(per_decade) + " (expected in [0.033, 0.035])");

  // 9: basal rate after dividing out the multiplier.
  const double basal = basal_rate(lexical_rate.rate, 60.94);
  verdict(9, within(basal, 5.56e-5, 0.1e-5),
          show("basal lexical rate /yr", basal, 5.56e-5, 0.1e-5));

  // 10: divergence rescaling, per-daughter split, and the cross-check
  // against the independent basal-rate route.
  const double adjusted = glotto_adjust(0.14, 7037.0, 8700.0);
  const double per_daughter = per_daughter_rate(adjusted);
  const double cross_gap = std::abs(basal * 1000.0 - 0.0566) / 0.0566;
  verdict(10,
          within(adjusted, 0.1132, 0.0002) &&
              within(per_daughter, 0.0566, 0.0001) && cross_gap < 0.02,
          show("adjusted divergence /kyr", adjusted, 0.1132, 0.0002) + "; " +
              show("per daughter", per_daughter, 0.0566, 0.0001) +
              "; cross-check gap " + num(cross_gap) + " (< 0.02)");

  // 11: vocabulary origin dating.
  const double origin_years = date_duration(5.66e-5, 100.0, 616500.0).duration;
  verdict(11, within(origin_years, 154000.0, 2000.0),
          show("vocabulary origin, years", origin_years, 154000.0, 2000.0));

  // 12: lexical entropy from thesaurus-graph parameters.
  const double h_thesaurus = network_entropy(616000.0, 3.16, 0.53).entropy;
  verdict(12, within(h_thesaurus, 6.14, 0.01),
          show("thesaurus-based entropy", h_thesaurus, 6.14, 0.01));

  // 13: exact metrics agree with independent oracles on 50 seeded random
  // connected graphs of up to 64 nodes.
  {
    rng_engine rng(1301);
    double worst_l = 0.0, worst_c = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = 4 + detail::uniform_below(rng, 61);  // 4..64
      const graph g = support::random_connected_graph(rng, n, n);
      worst_l = std::max(worst_l, std::abs(average_path_length_exact(g) -
                                           oracle::average_path_length(g)));
      worst_c = std::max(worst_c, std::abs(clustering_coefficient(g) -
                                           oracle::clustering_coefficient(g)));
    }
    verdict(13, worst_l <= 1e-12 && worst_c <= 1e-12,
            "50 random graphs vs oracles: worst |dL| = " + num(worst_l) +
                ", worst |dC| = " + num(worst_c) + " (tolerance 1e-12)");
  }

  // 14: the uniform-distribution entropy reduces to C*log_L(n).
  {
    rng_engine rng(1401);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 2 + detail::uniform_below(rng, 999999);  // 2..1e6
      const double length = 1.2 + detail::uniform_unit(rng) * 8.8;
      const double c = 0.05 + detail::uniform_unit(rng) * 0.95;
      const double direct =
          network_entropy(static_cast<double>(n), length, c).entropy;
      const double shannon =
          shannon_entropy(distribution::uniform(n), length, c);
      worst = std::max(worst, std::abs(shannon - direct) / direct);
    }
    verdict(14, worst <= 1e-10,
            "20 uniform reductions: worst relative gap " + num(worst) +
                " (tolerance 1e-10)");
  }

  // 15: the added-node value formula equals the entropy difference, and
  // reproduces the speaker-population delta.
  {
    rng_engine rng(1501);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const double n1 = 10.0 + detail::uniform_unit(rng) * 1e9;
      const double added = (0.1 + detail::uniform_unit(rng) * 10.0) * n1;
      const double length = 1.5 + detail::uniform_unit(rng) * 8.5;
      const double c = 0.2 + detail::uniform_unit(rng) * 0.8;
      const double m = 0.01 + detail::uniform_unit(rng) * 5.0;
      const double direct = value_delta(m, c, length, n1, added);
      const double via_entropy =
          m * (network_entropy(n1 + added, length, c).entropy -
               network_entropy(n1, length, c).entropy);
      worst = std::max(worst, std::abs(direct - via_entropy) /
                                  std::abs(via_entropy));
    }
    const double population_delta =
        value_delta(1.0, 0.79, 3.65, 5281347.0, 350e6 - 5281347.0);
    verdict(15, worst <= 1e-10 && within(population_delta, 2.559, 0.005),
            "100 value-delta identities: worst relative gap " + num(worst) +
                "; " + show("population delta", population_delta, 2.559, 0.005));
  }

  // 16: slight rewiring keeps clustering but collapses path length.
  {
    const double c0 = clustering_coefficient(ring_lattice(1000, 10));
    const double l0 = average_path_length_exact(ring_lattice(1000, 10));
    double c_sum = 0.0, l_sum = 0.0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const graph g = watts_strogatz(1000, 10, 0.01, seed);
      c_sum += clustering_coefficient(g);
      l_sum += average_path_length_exact(g);
    }
    const double c_mean = c_sum / 5.0, l_mean = l_sum / 5.0;
    verdict(16, c_mean >= 0.9 * c0 && l_mean <= 0.5 * l0,
            "rewired p=0.01 over 5 seeds: mean C = " + num(c_mean) +
                " (needs >= " + num(0.9 * c0) + "), mean L = " + num(l_mean) +
                " (needs <= " + num(0.5 * l0) + ")");
  }

  // 17: the 27-leaf hierarchy verifies and has an exactly integral
  // generation count.
  {
    const cluster_hierarchy h = nested_hierarchy(3, 3);
    bool shape = verify_hierarchy(h).ok && h.generations.size() == 4;
    const std::size_t counts[] = {1, 3, 9, 27};
    const std::size_t sizes[] = {27, 9, 3, 1};
    for (std::size_t g = 0; g < 4 && shape; ++g) {
      shape = h.generations[g].size() == counts[g];
      for (const auto& cluster : h.generations[g])
        shape = shape && cluster.size() == sizes[g];
    }
    const double eta = cluster_generations(27.0, 3.0);
    verdict(17, shape && eta == 3.0,
            std::string("27-leaf hierarchy valid (1/3/9/27 clusters of 27/9/3/1), ") +
                "generations(27, 3) = " + num(eta) + " exactly");
  }

  std::printf("acceptance: %d/17 criteria pass\n", 17 - failures);
  return failures == 0 ? 0 : 1;
}
