#include "annotq/powerlaw.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "annotq/errors.hpp"

namespace annotq {

namespace {

// B_{2j} / (2j)! for j = 1..12; reciprocals of the classic (2j)!/B_{2j}
// expansion constants.
constexpr double kEmCoeff[12] = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -1.0 / 1.8924375803183791606e9,
    1.0 / 7.47242496e10,
    -1.0 / 2.950130727918164224e12,
    1.0 / 1.1646782814350067249e14,
    -1.0 / 4.5979787224074726105e15,
    1.0 / 1.8152105401943546773e17,
    -1.0 / 7.1661652561756670113e18,
};

// Tail of the zeta sum from pivot m: integral term, half correction, then
// the Euler-Maclaurin series with early exit once terms stop mattering.
double zeta_tail(double alpha, double m) {
  const double m_pow = std::pow(m, -alpha);
  double acc = m * m_pow / (alpha - 1.0) + 0.5 * m_pow;
  double rising = alpha;        // alpha * (alpha+1) * ... running product
  double scale = m_pow / m;     // m^(-alpha-1), then / m^2 each term
  for (int j = 0; j < 12; ++j) {
    const double term = kEmCoeff[j] * rising * scale;
    acc += term;
    if (std::fabs(term) < 1e-16 * std::fabs(acc)) break;
    rising *= (alpha + 2.0 * j + 1.0) * (alpha + 2.0 * j + 2.0);
    scale /= m * m;
  }
  return acc;
}

constexpr std::uint64_t kZetaPivot = 64;

void check_model(const PowerLawModel& model) {
  if (!(model.alpha > 1.0))
    throw std::domain_error("power-law exponent must exceed 1");
  if (model.x_min < 1) throw std::domain_error("x_min must be >= 1");
}

// splitmix64; used to derive independent per-draw generators
std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// uniform double in (0, 1]
double unit_uniform(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (index + 1));
  const std::uint64_t bits = splitmix64(s);
  return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

// Shared inverse-CCDF tables are built once per model: ccdf[k] = P(X >= x_min + k)
// for k = 0..len-1, strictly decreasing towards the tail cutoff.
struct SamplerTable {
  std::vector<double> ccdf;
  double z_full;
};

constexpr std::uint64_t kTableSpan = 1u << 20;
constexpr std::uint64_t kDrawCap = 1ULL << 62;

SamplerTable build_table(const PowerLawModel& model) {
  SamplerTable t;
  t.z_full = hurwitz_zeta(model.alpha, model.x_min);
  t.ccdf.resize(kTableSpan + 2);
  long double remaining = 1.0L;
  for (std::uint64_t k = 0; k <= kTableSpan + 1; ++k) {
    t.ccdf[k] = static_cast<double>(remaining);
    const long double p =
        powl(static_cast<long double>(model.x_min + k), -(long double)model.alpha) /
        static_cast<long double>(t.z_full);
    remaining -= p;
    if (remaining < 0) remaining = 0;
  }
  return t;
}

// Largest x with P(X >= x) >= u, resolved past the table by doubling and
// bisection on the analytic CCDF.
std::uint64_t draw_from_table(const SamplerTable& t, const PowerLawModel& model, double u) {
  const auto& c = t.ccdf;
  if (u > c[c.size() - 1]) {
    // binary search for the last index with ccdf >= u
    size_t lo = 0, hi = c.size() - 1;
    while (lo + 1 < hi) {
      const size_t mid = (lo + hi) / 2;
      (c[mid] >= u ? lo : hi) = mid;
    }
    return model.x_min + (c[hi] >= u ? hi : lo);
  }
  const auto ccdf_at = [&](std::uint64_t x) {
    return hurwitz_zeta(model.alpha, x) / t.z_full;
  };
  std::uint64_t lo = model.x_min + kTableSpan;  // ccdf(lo) >= u by construction
  std::uint64_t hi = lo;
  while (hi < kDrawCap && ccdf_at(hi * 2) >= u) {
    hi *= 2;
    lo = hi;
  }
  if (hi >= kDrawCap) return kDrawCap;
  hi *= 2;
  while (lo + 1 < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (ccdf_at(mid) >= u ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace

double hurwitz_zeta(double alpha, std::uint64_t q) {
  if (!(alpha > 1.0)) throw std::domain_error("hurwitz_zeta requires alpha > 1");
  if (q < 1) throw std::domain_error("hurwitz_zeta requires q >= 1");
  const std::uint64_t pivot = std::max(q, kZetaPivot);
  double direct = 0.0;
  for (std::uint64_t k = q; k < pivot; ++k)
    direct += std::pow(static_cast<double>(k), -alpha);
  return direct + zeta_tail(alpha, static_cast<double>(pivot));
}

double log_hurwitz_zeta(double alpha, std::uint64_t q) {
  return std::log(hurwitz_zeta(alpha, q));
}

double pmf(std::uint64_t x, const PowerLawModel& model) {
  check_model(model);
  if (x < model.x_min)
    throw std::domain_error("pmf argument below x_min");
  return std::pow(static_cast<double>(x), -model.alpha) /
         hurwitz_zeta(model.alpha, model.x_min);
}

SuffStats suff_stats(std::span<const std::uint64_t> counts, std::uint64_t x_min) {
  SuffStats s;
  for (const std::uint64_t c : counts) {
    if (c >= x_min) {
      ++s.n;
      s.sum_log += std::log(static_cast<double>(c));
    }
  }
  return s;
}

double log_likelihood(const SuffStats& stats, double alpha, std::uint64_t x_min) {
  if (stats.n == 0)
    throw empty_support_error("no word type reaches x_min = " + std::to_string(x_min));
  return -alpha * stats.sum_log -
         static_cast<double>(stats.n) * log_hurwitz_zeta(alpha, x_min);
}

double log_likelihood(const FrequencyTable& table, const PowerLawModel& model) {
  check_model(model);
  const auto counts = table.count_values();
  return log_likelihood(suff_stats(counts, model.x_min), model.alpha, model.x_min);
}

std::vector<CcdfPoint> ccdf_points(std::span<const std::uint64_t> counts) {
  if (counts.empty()) throw empty_support_error("ccdf of an empty table");
  std::map<std::uint64_t, std::uint64_t> freq;
  for (const auto c : counts) ++freq[c];
  std::vector<CcdfPoint> out;
  out.reserve(freq.size());
  const double total = static_cast<double>(counts.size());
  std::uint64_t at_or_above = counts.size();
  for (const auto& [x, n] : freq) {
    out.push_back({x, static_cast<double>(at_or_above) / total});
    at_or_above -= n;
  }
  return out;
}

std::vector<CcdfPoint> ccdf_points(const FrequencyTable& table) {
  const auto counts = table.count_values();
  return ccdf_points(counts);
}

std::string ccdf_to_csv(std::span<const CcdfPoint> points) {
  std::string out = "x,p\n";
  char buf[64];
  for (const auto& pt : points) {
    std::snprintf(buf, sizeof buf, "%llu,%.9g\n",
                  static_cast<unsigned long long>(pt.x), pt.p);
    out += buf;
  }
  return out;
}

std::vector<std::uint64_t> sample_serial(const PowerLawModel& model, std::uint64_t n,
                                         std::uint64_t seed) {
  check_model(model);
  const SamplerTable table = build_table(model);
  std::vector<std::uint64_t> out(n);
  for (std::uint64_t i = 0; i < n; ++i)
    out[i] = draw_from_table(table, model, unit_uniform(seed, i));
  return out;
}

std::vector<std::uint64_t> sample(const PowerLawModel& model, std::uint64_t n,
                                  std::uint64_t seed, int jobs) {
  check_model(model);
  const SamplerTable table = build_table(model);
  std::vector<std::uint64_t> out(n);
#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
    out[static_cast<std::uint64_t>(i)] =
        draw_from_table(table, model, unit_uniform(seed, static_cast<std::uint64_t>(i)));
#else
  (void)jobs;
  for (std::uint64_t i = 0; i < n; ++i)
    out[i] = draw_from_table(table, model, unit_uniform(seed, i));
#endif
  return out;
}

double mle_alpha(const SuffStats& stats, std::uint64_t x_min, double lo, double hi) {
  if (stats.n < 2)
    throw empty_support_error("need at least two word types at or above x_min = " +
                              std::to_string(x_min));
  const auto objective = [&](double a) { return log_likelihood(stats, a, x_min); };
  constexpr double kGolden = 0.6180339887498949;
  double a = std::nextafter(lo, hi), b = hi;
  double c = b - kGolden * (b - a);
  double d = a + kGolden * (b - a);
  double fc = objective(c), fd = objective(d);
  for (int it = 0; it < 200 && b - a > 1e-12; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = objective(d);
    }
  }
  return 0.5 * (a + b);
}

double mle_alpha(const FrequencyTable& table, std::uint64_t x_min) {
  const auto counts = table.count_values();
  return mle_alpha(suff_stats(counts, x_min), x_min);
}

EffortBand classify_alpha(double alpha) {
  if (alpha < 1.6) return EffortBand::IncomprehensibleLow;
  if (alpha < 2.0) return EffortBand::LeastEffortAnnotator;
  if (alpha == 2.0) return EffortBand::EqualEffort;
  if (alpha <= 2.4) return EffortBand::LeastEffortAudience;
  return EffortBand::IncomprehensibleHigh;
}

std::string to_string(EffortBand band) {
  switch (band) {
    case EffortBand::IncomprehensibleLow: return "incomprehensible_low";
    case EffortBand::LeastEffortAnnotator: return "least_effort_annotator";
    case EffortBand::EqualEffort: return "equal_effort";
    case EffortBand::LeastEffortAudience: return "least_effort_audience";
    case EffortBand::IncomprehensibleHigh: return "incomprehensible_high";
  }
  return "unknown";
}

}  // namespace annotq
