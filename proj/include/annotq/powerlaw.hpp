#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "annotq/tokens.hpp"

namespace annotq {

/// Discrete power law over integers x >= x_min with exponent alpha:
/// p(x) = x^-alpha / zeta(alpha, x_min).
struct PowerLawModel {
  double alpha = 2.0;
  std::uint64_t x_min = 1;
};

/// Hurwitz zeta: sum over n >= 0 of (n + q)^-alpha, for alpha > 1, q >= 1.
/// Direct summation up to a fixed pivot plus an Euler-Maclaurin tail;
/// absolute error is below 1e-10 over alpha in (1, 60], q in [1, 1e12].
/// Throws std::domain_error for alpha <= 1.
double hurwitz_zeta(double alpha, std::uint64_t q);

/// log of hurwitz_zeta, same domain.
double log_hurwitz_zeta(double alpha, std::uint64_t q);

/// Throws std::domain_error when x < model.x_min or the model is invalid.
double pmf(std::uint64_t x, const PowerLawModel& model);

/// Sufficient statistics of a count multiset for the truncated likelihood:
/// the number of retained observations and their summed log counts.
struct SuffStats {
  std::uint64_t n = 0;
  double sum_log = 0.0;
};

SuffStats suff_stats(std::span<const std::uint64_t> counts, std::uint64_t x_min);

/// Truncated log-likelihood: observations below x_min contribute nothing.
/// Throws empty_support_error when no count reaches x_min.
double log_likelihood(const FrequencyTable& table, const PowerLawModel& model);
double log_likelihood(const SuffStats& stats, double alpha, std::uint64_t x_min);

/// Complementary cumulative points of the observed counts: for each distinct
/// count x, the fraction of word types occurring x or more times. Sorted
/// ascending in x; p at the smallest observed count is 1.
struct CcdfPoint {
  std::uint64_t x;
  double p;
};

std::vector<CcdfPoint> ccdf_points(const FrequencyTable& table);
std::vector<CcdfPoint> ccdf_points(std::span<const std::uint64_t> counts);

/// CSV with an "x,p" header row, probabilities printed with 9 significant digits.
std::string ccdf_to_csv(std::span<const CcdfPoint> points);

/// n independent draws from the model. Each draw derives its own generator
/// from (seed, index), so output is bit-identical for a given seed no matter
/// how the loop is scheduled.
std::vector<std::uint64_t> sample(const PowerLawModel& model, std::uint64_t n,
                                  std::uint64_t seed, int jobs = 0);

/// Serial reference for the sampling kernel; identical output to sample().
std::vector<std::uint64_t> sample_serial(const PowerLawModel& model, std::uint64_t n,
                                         std::uint64_t seed);

/// Maximum-likelihood exponent over alpha in (1, 5], by golden-section search
/// on the truncated log-likelihood. Deterministic. Used to seed the MCMC and
/// as a cross-check on the posterior mean.
double mle_alpha(const FrequencyTable& table, std::uint64_t x_min);
double mle_alpha(const SuffStats& stats, std::uint64_t x_min, double lo = 1.0,
                 double hi = 5.0);

/// Reading-effort bands for the fitted exponent.
enum class EffortBand {
  IncomprehensibleLow,   // alpha < 1.6
  LeastEffortAnnotator,  // 1.6 <= alpha < 2
  EqualEffort,           // alpha == 2
  LeastEffortAudience,   // 2 < alpha <= 2.4
  IncomprehensibleHigh,  // alpha > 2.4
};

EffortBand classify_alpha(double alpha);
std::string to_string(EffortBand band);

}  // namespace annotq
