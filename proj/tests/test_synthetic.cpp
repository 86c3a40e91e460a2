#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/distributions/gamma.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "oracles.hpp"
#include "spikelv/error.hpp"
#include "spikelv/gof.hpp"
#include "spikelv/local_variation.hpp"
#include "spikelv/stats.hpp"
#include "spikelv/synthetic.hpp"

using namespace spikelv;

namespace {

double exp_cdf(double x, double xi) { return x <= 0 ? 0.0 : -std::expm1(-xi * x); }

// ---- stationary Poisson ----------------------------------------------------------

TEST(Poisson, CountWithinThreeSigma) {
  for (double xi : {0.001, 0.05, 1.0}) {
    const TimeSpan span{100.0, 100.0 + 200000.0};
    const double lambda = xi * span.length();
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto tr = gen_poisson(xi, span, seed);
      EXPECT_NEAR(static_cast<double>(tr.n_events), lambda, 3 * std::sqrt(lambda));
      const auto t = tr.times();
      if (!t.empty()) {
        EXPECT_GE(t.front(), span.start);
        EXPECT_LT(t.back(), span.end);
      }
    }
  }
}

TEST(Poisson, IntervalsPassKs) {
  const double xi = 0.2;
  const auto tr = gen_poisson_n(xi, 10001, 3);
  ASSERT_EQ(tr.intervals.size(), 10000u);
  const double d = ks_statistic(tr.intervals, [&](double x) { return exp_cdf(x, xi); });
  EXPECT_GT(ks_pvalue(d, tr.intervals.size()), 0.01);
  const auto span_tr = gen_poisson(xi, {0, 60000}, 4);
  const double d2 = ks_statistic(span_tr.intervals, [&](double x) { return exp_cdf(x, xi); });
  EXPECT_GT(ks_pvalue(d2, span_tr.intervals.size()), 0.01);
}

TEST(Poisson, KsDetectsWrongRate) {
  const auto tr = gen_poisson_n(0.2, 10001, 3);
  const double d = ks_statistic(tr.intervals, [](double x) { return exp_cdf(x, 0.22); });
  EXPECT_LT(ks_pvalue(d, tr.intervals.size()), 0.01);
}

TEST(Poisson, MeanLvIsOne) {
  std::vector<double> lv;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    lv.push_back(lv_from_intervals(gen_poisson_n(1.0, 1000, 100 + s).intervals).lv);
  }
  const auto m = oracle::mean_se(lv);
  EXPECT_NEAR(m.mean, 1.0, 0.01);
  EXPECT_NEAR(m.mean, 1.0, 3 * m.se);
}

// ---- nonstationary Poisson -----------------------------------------------------

TEST(Thinning, ConstantRateLooksLikePoisson) {
  const double xi = 0.05;
  const auto tr = gen_nonstationary_poisson(RateFunction::constant(xi), {0, 400000}, 8);
  EXPECT_NEAR(static_cast<double>(tr.n_events), xi * 400000, 3 * std::sqrt(xi * 400000));
  const double d = ks_statistic(tr.intervals, [&](double x) { return exp_cdf(x, xi); });
  EXPECT_GT(ks_pvalue(d, tr.intervals.size()), 0.01);
}

TEST(Thinning, SinusoidalRateKeepsLvNearOne) {
  // Mean gap of 100 s against a one-day period.
  const auto rate = RateFunction::sinusoidal(0.01, 0.8, 86400.0);
  std::vector<double> lv;
  for (std::uint64_t s = 0; s < 300; ++s) {
    const auto tr = gen_nonstationary_poisson(rate, {0, 30 * 86400.0}, 700 + s);
    lv.push_back(lv_from_intervals(tr.intervals).lv);
  }
  EXPECT_NEAR(oracle::mean_se(lv).mean, 1.0, 0.05);
}

// Mean L_V against the ratio of rate period to mean gap.
double sinusoidal_mean_lv(double ratio) {
  const double gap = 100.0;
  const auto rate = RateFunction::sinusoidal(1.0 / gap, 0.8, ratio * gap);
  std::vector<double> lv;
  for (std::uint64_t s = 0; s < 200; ++s) {
    lv.push_back(lv_from_intervals(gen_nonstationary_poisson(rate, {0, 2000 * gap}, 40 + s).intervals).lv);
  }
  return oracle::mean_se(lv).mean;
}

TEST(Thinning, SlowModulationKeepsBaseline) {
  for (double ratio : {100.0, 300.0, 1000.0}) EXPECT_NEAR(sinusoidal_mean_lv(ratio), 1.0, 0.02) << ratio;
}

TEST(Thinning, ModulationNearGapScaleRaisesLv) {
  EXPECT_GT(sinusoidal_mean_lv(2.0), 1.08);
  EXPECT_GT(sinusoidal_mean_lv(5.0), 1.05);
  EXPECT_GT(sinusoidal_mean_lv(2.0), sinusoidal_mean_lv(20.0));
  EXPECT_GT(sinusoidal_mean_lv(20.0), sinusoidal_mean_lv(100.0));
}

TEST(Thinning, BinCountsFollowIntegratedRate) {
  const double mean = 0.05, amp = 0.9, period = 86400.0;
  const auto rate = RateFunction::sinusoidal(mean, amp, period);
  const TimeSpan span{0, 3 * period};
  const auto tr = gen_nonstationary_poisson(rate, span, 42);
  const double bin = 3600.0;
  const std::size_t bins = static_cast<std::size_t>(span.length() / bin);
  std::vector<double> counts(bins, 0.0), expected(bins);
  for (double t : tr.times()) counts[static_cast<std::size_t>(t / bin)] += 1;
  const double w = 2 * std::numbers::pi / period;
  for (std::size_t b = 0; b < bins; ++b) {
    const double a = b * bin, c = (b + 1) * bin;
    expected[b] = mean * ((c - a) - amp / w * (std::cos(w * c) - std::cos(w * a)));
  }
  EXPECT_GT(pearson(counts, expected), 0.95);
}

TEST(Thinning, RateAboveBoundIsDetected) {
  RateFunction bad{[](double t) { return t > 500 ? 2.0 : 0.5; }, 1.0};
  EXPECT_THROW(gen_nonstationary_poisson(bad, {0, 1000}, 1), DataError);
  RateFunction negative{[](double) { return -0.1; }, 1.0};
  EXPECT_THROW(gen_nonstationary_poisson(negative, {0, 1000}, 1), DataError);
}

// ---- Gamma renewal ----------------------------------------------------------------

TEST(Gamma, ShapeOneIsExponential) {
  const double xi = 0.3;
  const auto tr = gen_gamma_renewal_n(xi, 1.0, 10001, 5);
  const double d = ks_statistic(tr.intervals, [&](double x) { return exp_cdf(x, xi); });
  EXPECT_GT(ks_pvalue(d, tr.intervals.size()), 0.01);
}

class GammaShapes : public ::testing::TestWithParam<double> {};

TEST_P(GammaShapes, IntervalsMatchClosedForm) {
  const double kappa = GetParam(), xi = 0.02;
  const auto tr = gen_gamma_renewal_n(xi, kappa, 20001, 6);
  const double d = ks_statistic(tr.intervals, [&](double x) {
    return x <= 0 ? 0.0 : boost::math::gamma_p(kappa, kappa * xi * x);
  });
  EXPECT_GT(ks_pvalue(d, tr.intervals.size()), 0.01);
  const auto m = oracle::mean_se(tr.intervals);
  EXPECT_NEAR(m.mean, 1.0 / xi, 3 * m.se);
  EXPECT_NEAR(m.sd * xi * std::sqrt(kappa), 1.0, 0.05);
}

TEST_P(GammaShapes, DensityIsNormalizedWithMeanOneOverXi) {
  const double kappa = GetParam(), xi = 0.5;
  boost::math::quadrature::exp_sinh<double> integrator;
  const auto f = [&](double x) { return gamma_interval_density(x, xi, kappa); };
  EXPECT_NEAR(integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity()), 1.0, 1e-8);
  const auto g = [&](double x) { return x * gamma_interval_density(x, xi, kappa); };
  EXPECT_NEAR(integrator.integrate(g, 0.0, std::numeric_limits<double>::infinity()), 1.0 / xi,
              1e-7);
  const boost::math::gamma_distribution<double> ref(kappa, 1.0 / (kappa * xi));
  for (double x : {0.01, 0.3, 1.0, 2.0, 7.5}) {
    EXPECT_LE(oracle::rel_diff(gamma_interval_density(x, xi, kappa), boost::math::pdf(ref, x)),
              1e-12);
  }
}

TEST_P(GammaShapes, MeanLvMatchesShapeRelation) {
  const double kappa = GetParam();
  std::vector<double> lv;
  for (std::uint64_t s = 0; s < 500; ++s) {
    lv.push_back(lv_from_intervals(gen_gamma_renewal_n(1.0, kappa, 1000, 3000 + s).intervals).lv);
  }
  const auto m = oracle::mean_se(lv);
  EXPECT_NEAR(m.mean, 3.0 / (2 * kappa + 1), 3 * m.se);
}

INSTANTIATE_TEST_SUITE_P(Grid, GammaShapes, ::testing::Values(0.25, 0.5, 1.0, 2.0, 4.0));

TEST(Gamma, SpanGeneratorMeanGap) {
  const double xi = 0.01;
  const auto tr = gen_gamma_renewal(xi, 0.5, {0, 2.0e6}, 77);
  const auto m = oracle::mean_se(tr.intervals);
  EXPECT_NEAR(m.mean, 1.0 / xi, 3 * m.se);
}

// ---- guards and invariants ------------------------------------------------------------

TEST(Guards, InvalidParameters) {
  EXPECT_THROW(gen_poisson(0.0, {0, 10}, 1), InvalidArgument);
  EXPECT_THROW(gen_poisson(1.0, {10, 10}, 1), InvalidArgument);
  EXPECT_THROW(gen_gamma_renewal(1.0, 0.0, {0, 10}, 1), InvalidArgument);
  EXPECT_THROW(gen_gamma_renewal(-1.0, 1.0, {0, 10}, 1), InvalidArgument);
  EXPECT_THROW(RateFunction::sinusoidal(1.0, 1.5, 10.0), InvalidArgument);
  EXPECT_THROW(gamma_interval_density(1.0, 1.0, 0.0), InvalidArgument);
}

TEST(Guards, ResourceLimit) {
  EXPECT_THROW(gen_poisson(10.0, {0, 2e7}, 1), InvalidArgument);
  EXPECT_THROW(gen_gamma_renewal(10.0, 0.5, {0, 2e7}, 1), InvalidArgument);
  EXPECT_THROW(gen_nonstationary_poisson(RateFunction::constant(10.0), {0, 2e7}, 1),
               InvalidArgument);
}

TEST(Invariants, DeterministicAndStrictlyIncreasing) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a = gen_gamma_renewal(0.5, 0.25, {0, 5000}, seed);
    const auto b = gen_gamma_renewal(0.5, 0.25, {0, 5000}, seed);
    EXPECT_EQ(a.intervals, b.intervals);
    EXPECT_EQ(a.first, b.first);
    for (double g : a.intervals) ASSERT_GT(g, 0.0);
    const auto t = a.times();
    for (std::size_t i = 1; i < t.size(); ++i) ASSERT_GE(t[i], t[i - 1]);
  }
  EXPECT_NE(gen_poisson(1.0, {0, 100}, 1).intervals, gen_poisson(1.0, {0, 100}, 2).intervals);
}

TEST(Invariants, QuantizationDedups) {
  const auto tr = gen_gamma_renewal(0.5, 0.25, {0, 20000}, 9);
  const auto secs = event_seconds(tr);
  const SpikeTrain q = quantize(tr, "q");
  EXPECT_EQ(q.p_raw(), tr.n_events);
  EXPECT_LE(q.n_spikes(), tr.n_events);
  EXPECT_LT(q.n_spikes(), tr.n_events);  // bursty at 2 s mean gap: collisions occur
  for (std::size_t i = 1; i < q.n_spikes(); ++i) ASSERT_LT(q.times()[i - 1], q.times()[i]);
  std::vector<std::int64_t> distinct(secs);
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  EXPECT_EQ(std::vector<std::int64_t>(q.times().begin(), q.times().end()), distinct);
}

TEST(Invariants, QuantizedCorpusWindowAndEmptyTrains) {
  std::vector<TagSpec> specs{{"a", ProcessKind::kPoisson, 0.01, 1, 0, 1, 1},
                             {"b", ProcessKind::kPoisson, 1e-9, 1, 0, 1, 2}};
  const TimeSpan span{10.5, 5000.0};
  const auto trains = generate_all(specs, span);
  const Corpus c = quantized_corpus(specs, trains, span);
  EXPECT_EQ(c.window(), (Window{10, 4999}));
  EXPECT_EQ(c.size(), trains[1].n_events == 0 ? 1u : 2u);
}

TEST(Invariants, GenerateAllMatchesSerial) {
  std::vector<TagSpec> specs;
  for (int k = 0; k < 64; ++k) {
    specs.push_back({"t" + std::to_string(k),
                     static_cast<ProcessKind>(k % 3), 0.01 * (1 + k % 5), 0.5, 0.5, 3600.0,
                     derive_seed(1, std::to_string(k))});
  }
  const TimeSpan span{0, 50000};
  const auto all = generate_all(specs, span);
  for (std::size_t k = 0; k < specs.size(); ++k) {
    EXPECT_EQ(all[k].intervals, generate(specs[k], span).intervals);
  }
}

TEST(ProcessNames, RoundTrip) {
  for (auto k : {ProcessKind::kPoisson, ProcessKind::kGamma, ProcessKind::kSinusoidal}) {
    EXPECT_EQ(parse_process_kind(to_string(k)), k);
  }
  EXPECT_THROW(parse_process_kind("hawkes"), InvalidArgument);
}

// ---- power law ------------------------------------------------------------------------

TEST(PowerLaw, FrequenciesMatchZetaTwo) {
  Philox4x32 rng(15);
  constexpr int kDraws = 200000;
  std::vector<double> hits(6, 0.0);
  for (int i = 0; i < kDraws; ++i) {
    const auto k = discrete_power_law(rng, 2.0);
    ASSERT_GE(k, 1u);
    if (k <= 5) hits[k] += 1;
  }
  const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
  for (int k = 1; k <= 5; ++k) {
    const double p = 1.0 / (k * k * zeta2);
    EXPECT_NEAR(hits[k] / kDraws, p, 4 * std::sqrt(p * (1 - p) / kDraws)) << k;
  }
}

TEST(PowerLaw, CutoffAndGuards) {
  Philox4x32 rng(16);
  for (int i = 0; i < 10000; ++i) ASSERT_LE(discrete_power_law(rng, 1.5, 10), 10u);
  EXPECT_THROW(discrete_power_law(rng, 1.0), InvalidArgument);
  EXPECT_THROW(discrete_power_law(rng, 2.0, 0), InvalidArgument);
}

}  // namespace
