#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "spikelv/error.hpp"
#include "spikelv/gof.hpp"
#include "spikelv/null_model.hpp"
#include "spikelv/stats.hpp"
#include "spikelv/synthetic.hpp"

using namespace spikelv;

namespace {

const PopularityClass kAll{"all", 1, kUnbounded};

double total_mass(const Histogram& h) {
  if (h.kind == HistogramKind::kCdf) return h.mass.empty() ? 0.0 : h.mass.back();
  double s = 0;
  for (std::size_t i = 0; i < h.bins(); ++i) s += h.mass[i] * (h.edges[i + 1] - h.edges[i]);
  return s;
}

// Trains with given popularities, one second each (p_raw from the count).
Corpus corpus_with_popularity(const std::vector<std::uint64_t>& ps) {
  std::vector<SpikeTrain> trains;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    trains.push_back(SpikeTrain("t" + std::to_string(k), {0}, {static_cast<std::uint32_t>(ps[k])}));
  }
  return Corpus(std::move(trains), Window{0, 1});
}

// Gamma renewal trains of fixed size, quantized; large gaps keep grid effects small.
Corpus gamma_corpus(const std::vector<double>& kappas, std::size_t n, double mean_gap,
                    std::uint64_t seed, std::vector<double>* truth = nullptr) {
  std::vector<SpikeTrain> trains;
  std::int64_t t_max = 0;
  for (std::size_t k = 0; k < kappas.size(); ++k) {
    auto tr = quantize(gen_gamma_renewal_n(1.0 / mean_gap, kappas[k], n, derive_seed(seed, std::to_string(k))),
                       "g" + std::to_string(100000 + k));
    t_max = std::max(t_max, tr.times().back());
    trains.push_back(std::move(tr));
  }
  if (truth) *truth = kappas;
  return Corpus(std::move(trains), Window{0, t_max + 1});
}

// ---- activity --------------------------------------------------------------------

TEST(Activity, Example) {
  const Corpus c({SpikeTrain::from_times("a", {0, 30, 61})}, Window{0, 119});
  const auto s = activity_series(c, 60);
  EXPECT_EQ(s.counts, (std::vector<std::uint64_t>{2, 1}));
  EXPECT_EQ(s.start, 0);
}

TEST(Activity, EmptyCorpusIsZero) {
  const Corpus c({}, Window{0, 599});
  const auto s = activity_series(c, 60);
  EXPECT_EQ(s.counts, std::vector<std::uint64_t>(10, 0));
}

TEST(Activity, BadBinWidth) {
  EXPECT_THROW(activity_series(Corpus({}, Window{0, 10}), 0), InvalidArgument);
}

TEST(Activity, TotalEqualsPopularityAndCoversWindow) {
  std::mt19937_64 rng(1);
  std::vector<SpikeTrain> trains;
  std::uint64_t total = 0;
  for (int k = 0; k < 100; ++k) {
    auto t = oracle::random_times(rng, 1 + k, 50, 1000 + k);
    std::vector<std::uint32_t> c(t.size());
    for (auto& x : c) x = 1 + rng() % 4;
    for (auto x : c) total += x;
    trains.push_back(SpikeTrain("t" + std::to_string(k), t, c));
  }
  const Corpus corpus(std::move(trains), Window{1000, 9000});
  for (std::int64_t bin : {1, 7, 60, 3600, 100000}) {
    const auto s = activity_series(corpus, bin);
    EXPECT_EQ(std::accumulate(s.counts.begin(), s.counts.end(), std::uint64_t{0}), total);
    EXPECT_EQ(static_cast<std::int64_t>(s.counts.size()), (8001 + bin - 1) / bin);
  }
}

TEST(Activity, SinusoidalAutocorrelationPeaksAtPeriod) {
  const double period = 86400.0;
  std::vector<TagSpec> specs;
  for (int k = 0; k < 200; ++k) {
    specs.push_back({"s" + std::to_string(k), ProcessKind::kSinusoidal, 0.002, 1, 0.8, period,
                     derive_seed(3, std::to_string(k))});
  }
  const TimeSpan span{0, 10 * period};
  const Corpus c = quantized_corpus(specs, generate_all(specs, span), span);
  const std::int64_t bin = 3600;
  const auto s = activity_series(c, bin);
  std::vector<double> x(s.counts.begin(), s.counts.end());
  const double m = std::accumulate(x.begin(), x.end(), 0.0) / x.size();
  for (auto& v : x) v -= m;
  auto acf = [&](std::size_t lag) {
    double num = 0, den = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      den += x[i] * x[i];
      if (i + lag < x.size()) num += x[i] * x[i + lag];
    }
    return num / den;
  };
  // Search lags between half a period and one and a half periods.
  std::size_t best = 0;
  double best_v = -2;
  for (std::size_t lag = 12; lag <= 36; ++lag) {
    if (acf(lag) > best_v) {
      best_v = acf(lag);
      best = lag;
    }
  }
  EXPECT_EQ(best, 24u);
  EXPECT_GT(best_v, 0.5);
  EXPECT_LT(acf(12), 0.0);
}

// ---- zipf and popularity ------------------------------------------------------------

TEST(Zipf, Example) {
  const auto rows = zipf_table(corpus_with_popularity({3, 7}));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].rank, 1u);
  EXPECT_EQ(rows[0].tag, "t1");
  EXPECT_EQ(rows[0].p, 7u);
  EXPECT_EQ(rows[1].tag, "t0");
  EXPECT_EQ(rows[1].p, 3u);
}

TEST(Zipf, TiesBrokenByTag) {
  const Corpus c({SpikeTrain("b", {0}, {2}), SpikeTrain("a", {0}, {2}), SpikeTrain("c", {0}, {5})},
                 Window{0, 1});
  const auto rows = zipf_table(c);
  EXPECT_EQ(rows[0].tag, "c");
  EXPECT_EQ(rows[1].tag, "a");
  EXPECT_EQ(rows[2].tag, "b");
}

TEST(Zipf, PermutationAndMonotone) {
  std::mt19937_64 rng(2);
  std::vector<std::uint64_t> ps;
  for (int i = 0; i < 5000; ++i) ps.push_back(1 + rng() % 50);
  const Corpus c = corpus_with_popularity(ps);
  const auto rows = zipf_table(c);
  std::set<std::string> tags;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    tags.insert(rows[i].tag);
    EXPECT_EQ(rows[i].rank, i + 1);
    if (i) ASSERT_GE(rows[i - 1].p, rows[i].p);
    EXPECT_EQ(c.find(rows[i].tag)->p_raw(), rows[i].p);
  }
  EXPECT_EQ(tags.size(), c.size());
}

TEST(Zipf, SharesCountExactly) {
  const auto s = popularity_shares(corpus_with_popularity({1, 1, 1, 2, 4, 5, 9, 1000, 1, 3}));
  EXPECT_EQ(s.tags, 10u);
  EXPECT_DOUBLE_EQ(s.share_p1, 0.4);
  EXPECT_DOUBLE_EQ(s.share_below5, 0.7);
}

TEST(PopularityPdf, AllOnesSingleBin) {
  const auto h = popularity_pdf(corpus_with_popularity(std::vector<std::uint64_t>(50, 1)), 10);
  EXPECT_EQ(h.occupied_bins(), 1u);
  EXPECT_EQ(h.edges[0], 1.0);
  EXPECT_EQ(h.edges[1], 2.0);
  EXPECT_DOUBLE_EQ(h.mass[0], 1.0);
  EXPECT_NEAR(total_mass(h), 1.0, 1e-9);
}

TEST(PopularityPdf, TwoTagsTwoBins) {
  const auto h = popularity_pdf(corpus_with_popularity({1, 1000}), 10);
  EXPECT_EQ(h.occupied_bins(), 2u);
  EXPECT_NEAR(total_mass(h), 1.0, 1e-9);
}

TEST(PopularityPdf, EdgesAreDistinctIntegers) {
  const auto h = popularity_pdf(corpus_with_popularity({1, 2, 3, 50, 12345}), 10);
  for (std::size_t i = 1; i < h.edges.size(); ++i) {
    EXPECT_GT(h.edges[i], h.edges[i - 1]);
    EXPECT_EQ(h.edges[i], std::floor(h.edges[i]));
  }
  EXPECT_GT(h.edges.back(), 12345.0);
}

TEST(PopularityPdf, PowerLawSlope) {
  Philox4x32 rng(77);
  std::vector<std::uint64_t> ps;
  for (int i = 0; i < 100000; ++i) ps.push_back(discrete_power_law(rng, 2.0, 1u << 30));
  const auto h = popularity_pdf(corpus_with_popularity(ps), 10);
  EXPECT_NEAR(total_mass(h), 1.0, 1e-9);
  EXPECT_NEAR(loglog_slope(h, 10), -2.0, 0.15);
}

TEST(PopularityPdf, SlopeOfExactPowerLawDensity) {
  // Histogram filled with the exact expected counts of k^-2.
  Histogram h;
  std::vector<std::uint64_t> edges{1};
  for (int k = 1; k <= 40; ++k) {
    const auto e = static_cast<std::uint64_t>(std::ceil(std::pow(10.0, k / 10.0) - 1e-9));
    if (e > edges.back()) edges.push_back(e);
  }
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    double p = 0;
    for (std::uint64_t k = edges[i]; k < edges[i + 1]; ++k) p += 1.0 / (double(k) * k);
    h.counts.push_back(1000);
    h.mass.push_back(p / (edges[i + 1] - edges[i]));
  }
  h.edges.assign(edges.begin(), edges.end());
  EXPECT_NEAR(loglog_slope(h), -2.0, 0.05);
}

// ---- interval histograms -------------------------------------------------------------

TEST(IntervalHistogram, RegularTrain) {
  const Corpus c({SpikeTrain::from_times("a", {0, 60, 120, 180})}, Window{0, 200});
  const auto h = interval_histogram(c, kAll, 60, HistogramKind::kPdf);
  ASSERT_EQ(h.bins(), 2u);
  EXPECT_EQ(h.edges[1], 60.0);
  EXPECT_EQ(h.edges[2], 120.0);
  EXPECT_DOUBLE_EQ(h.mass[1] * 60.0, 1.0);
  EXPECT_EQ(h.mass[0], 0.0);
}

TEST(IntervalHistogram, EmptyWhenNoIntervals) {
  const Corpus c({SpikeTrain::from_times("a", {5})}, Window{0, 10});
  EXPECT_TRUE(interval_histogram(c, kAll, 60, HistogramKind::kPdf).empty());
  EXPECT_THROW(interval_histogram(c, kAll, 0, HistogramKind::kPdf), InvalidArgument);
}

TEST(IntervalHistogram, DropUnitIntervalsIsDisplayOnly) {
  const Corpus c({SpikeTrain::from_times("a", {0, 1, 2, 10})}, Window{0, 10});
  const auto all = interval_histogram(c, kAll, 1, HistogramKind::kPdf);
  const auto dropped = interval_histogram(c, kAll, 1, HistogramKind::kPdf, true);
  EXPECT_EQ(all.samples, 3u);
  EXPECT_EQ(dropped.samples, 1u);
}

TEST(IntervalHistogram, MassAndCdfInvariants) {
  std::mt19937_64 rng(4);
  std::vector<SpikeTrain> trains;
  for (int k = 0; k < 60; ++k) {
    trains.push_back(SpikeTrain::from_times("t" + std::to_string(k),
                                            oracle::random_times(rng, 2 + k * 3, 10000, 0)));
  }
  const Corpus c(std::move(trains), Window{0, 10000000});
  for (std::int64_t bin : {1, 60, 480, 5400, 7200}) {
    const auto pdf = interval_histogram(c, kAll, bin, HistogramKind::kPdf);
    EXPECT_NEAR(total_mass(pdf), 1.0, 1e-9);
    const auto cdf = interval_histogram(c, kAll, bin, HistogramKind::kCdf);
    for (std::size_t i = 1; i < cdf.bins(); ++i) ASSERT_GE(cdf.mass[i], cdf.mass[i - 1]);
    EXPECT_NEAR(cdf.mass.back(), 1.0, 1e-9);
  }
}

TEST(IntervalHistogram, PoissonCorpusMatchesExponential) {
  const double xi = 0.001;
  std::vector<TagSpec> specs;
  for (int k = 0; k < 100; ++k) {
    specs.push_back({"p" + std::to_string(k), ProcessKind::kPoisson, xi, 1, 0, 1,
                     derive_seed(9, std::to_string(k))});
  }
  const TimeSpan span{0, 200000};
  const Corpus c = quantized_corpus(specs, generate_all(specs, span), span);
  std::vector<double> pooled;
  for (const auto& tr : c) {
    if (tr.n_spikes() < 2) continue;
    for (auto d : inter_event_intervals(tr)) pooled.push_back(static_cast<double>(d));
  }
  const double d = ks_statistic(pooled, [&](double x) { return -std::expm1(-xi * x); });
  EXPECT_GT(ks_pvalue(d, pooled.size()), 0.01);

  // The histogram CDF agrees with the empirical CDF of the same intervals.
  const auto cdf = interval_histogram(c, kAll, 480, HistogramKind::kCdf);
  ASSERT_EQ(cdf.samples, pooled.size());
  std::sort(pooled.begin(), pooled.end());
  for (std::size_t i = 0; i < cdf.bins(); i += 7) {
    const auto below = std::lower_bound(pooled.begin(), pooled.end(), cdf.edges[i + 1]) - pooled.begin();
    EXPECT_DOUBLE_EQ(cdf.mass[i], static_cast<double>(below) / pooled.size());
  }
}

TEST(IntervalHistogram, DailyPeriodicLowPopularityPeaks) {
  const double day = 86400.0;
  std::vector<TagSpec> specs;
  for (int k = 0; k < 40000; ++k) {
    specs.push_back({"d" + std::to_string(k), ProcessKind::kSinusoidal, 3.0 / (14 * day), 1, 1.0,
                     day, derive_seed(10, std::to_string(k))});
  }
  const TimeSpan span{0, 14 * day};
  const Corpus c = quantized_corpus(specs, generate_all(specs, span), span);
  const auto scheme = ClassScheme::default_scheme();
  const auto& low = scheme[1];  // p2-4
  const std::int64_t bin = default_interval_bin_width(low);
  const auto h = interval_histogram(c, low, bin, HistogramKind::kPdf);
  ASSERT_FALSE(h.empty());
  for (int k = 1; k <= 3; ++k) {
    const auto centre = static_cast<std::size_t>(k * day / bin);
    const std::size_t half = static_cast<std::size_t>(day / 2 / bin);
    std::size_t arg = centre - half;
    for (std::size_t i = centre - half; i <= centre + half && i < h.bins(); ++i) {
      if (h.mass[i] > h.mass[arg]) arg = i;
    }
    const double peak = (h.edges[arg] + h.edges[arg + 1]) / 2;
    EXPECT_NEAR(peak / day, k, 0.15) << "peak " << k;
  }
}

// ---- multiplicity --------------------------------------------------------------------

TEST(MultiplicityStats, MassSumsToOne) {
  const Corpus c({SpikeTrain("a", {1, 2, 3, 4}, {1, 5, 2, 1}), SpikeTrain("b", {1}, {40})},
                 Window{0, 10});
  const auto d = multiplicity_distribution(c, kAll);
  double s = 0;
  for (double p : d.probability) s += p;
  EXPECT_NEAR(s, 1.0, 1e-12);
  EXPECT_EQ(d.max_multiplicity, 40u);
  EXPECT_EQ(d.seconds, 5u);
}

// ---- class summaries -----------------------------------------------------------------

TEST(ClassSummaryStats, RegularTrainsHaveUndefinedZ) {
  std::vector<SpikeTrain> trains;
  for (int k = 0; k < 10; ++k) {
    trains.push_back(SpikeTrain::from_times("r" + std::to_string(k), {0, 10, 20, 30, 40, 50}));
  }
  const auto s = class_lv_summary(Corpus(std::move(trains), Window{0, 100}),
                                  ClassScheme::parse("1,5,50"));
  const auto& cls = s[1];
  EXPECT_EQ(cls.n, 10u);
  EXPECT_EQ(cls.mu_lv, 0.0);
  EXPECT_EQ(cls.sigma_lv, 0.0);
  EXPECT_FALSE(cls.z.has_value());
  EXPECT_EQ(s[0].n, 0u);
  EXPECT_FALSE(s[0].mu_lv.has_value());
  EXPECT_EQ(s[2].trains, 0u);
}

TEST(ClassSummaryStats, HandComputedValues) {
  // lv values 0.75 and 0 in one class: mu = 0.375, sigma = 0.75/sqrt(2).
  const Corpus c({SpikeTrain::from_times("a", {0, 1, 4}), SpikeTrain::from_times("b", {0, 2, 4}),
                  SpikeTrain::from_times("c", {0, 9})},
                 Window{0, 10});
  const auto s = class_lv_summary(c, ClassScheme::parse("1,100"));
  EXPECT_EQ(s[0].trains, 3u);
  EXPECT_EQ(s[0].n, 2u);
  EXPECT_DOUBLE_EQ(s[0].mean_p, 8.0 / 3.0);
  EXPECT_DOUBLE_EQ(*s[0].mu_lv, 0.375);
  EXPECT_DOUBLE_EQ(*s[0].sigma_lv, 0.75 / std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(*s[0].z, (0.375 - 1) * std::sqrt(2.0) / (0.75 / std::sqrt(2.0)));
}

TEST(ClassSummaryStats, PopularityOverrideMovesTrains) {
  const Corpus c({SpikeTrain::from_times("a", {0, 1, 4}), SpikeTrain::from_times("b", {0, 2, 4})},
                 Window{0, 10});
  const std::vector<std::uint64_t> p{1, 50};
  const auto s = class_lv_summary(c, ClassScheme::parse("1,2,5"), p);
  EXPECT_EQ(s[0].n, 1u);
  EXPECT_EQ(s[2].n, 1u);
  EXPECT_DOUBLE_EQ(s[2].mean_p, 50.0);
  const std::vector<std::uint64_t> wrong{1};
  EXPECT_THROW(class_lv_summary(c, ClassScheme::parse("1,2,5"), wrong), InvalidArgument);
}

TEST(ClassSummaryStats, GammaShapeFourClass) {
  const Corpus c = gamma_corpus(std::vector<double>(500, 4.0), 1000, 1.0e4, 41);
  const auto s = class_lv_summary(c, ClassScheme::default_scheme());
  const auto& cls = s[ClassScheme::default_scheme().index_of(1000)];
  ASSERT_EQ(cls.n, 500u);
  const double se = *cls.sigma_lv / std::sqrt(500.0);
  EXPECT_NEAR(*cls.mu_lv, 1.0 / 3.0, 3 * se);
  EXPECT_LT(*cls.z, -10);
}

TEST(ClassSummaryStats, NullCorpusAgreesWithTimeDependentPoisson) {
  // Bursty real corpus with a daily modulation of the merged support.
  std::vector<TagSpec> specs;
  for (int k = 0; k < 1500; ++k) {
    specs.push_back({"b" + std::to_string(k), ProcessKind::kGamma, (1 + k % 30) * 2e-5, 0.5, 0, 1,
                     derive_seed(12, std::to_string(k))});
  }
  const TimeSpan span{0, 14 * 86400.0};
  const Corpus real = quantized_corpus(specs, generate_all(specs, span), span);
  const Corpus null = randomize_corpus(real, 5);
  const auto scheme = ClassScheme::default_scheme();
  std::vector<std::uint64_t> p;
  for (const auto& tr : real) p.push_back(tr.p_raw());
  const auto sn = class_lv_summary(null, scheme, p);
  const auto sr = class_lv_summary(real, scheme);

  std::vector<TagSpec> pois;
  for (int k = 0; k < 1500; ++k) {
    pois.push_back({"q" + std::to_string(k), ProcessKind::kSinusoidal, (1 + k % 30) * 2e-5, 1,
                    0.5, 86400.0, derive_seed(13, std::to_string(k))});
  }
  const Corpus tdp = quantized_corpus(pois, generate_all(pois, span), span);
  const auto sp = class_lv_summary(tdp, scheme);

  int compared = 0;
  for (std::size_t c = 0; c < scheme.size(); ++c) {
    if (sn[c].z) EXPECT_LE(std::abs(*sn[c].z), 3.0) << scheme[c].label;
    if (sr[c].n >= 50) EXPECT_GT(*sr[c].z, 3.0) << scheme[c].label;
    if (sn[c].n >= 50 && sp[c].n >= 50) {
      const double se = std::hypot(*sn[c].sigma_lv / std::sqrt(double(sn[c].n)),
                                   *sp[c].sigma_lv / std::sqrt(double(sp[c].n)));
      EXPECT_NEAR(*sn[c].mu_lv, *sp[c].mu_lv, 3 * se) << scheme[c].label;
      ++compared;
    }
  }
  EXPECT_GE(compared, 2);
}

// ---- pearson -------------------------------------------------------------------------

TEST(Pearson, Examples) {
  const std::vector<double> x{1, 2, 3}, y{3, 2, 1};
  EXPECT_DOUBLE_EQ(pearson(x, x), 1.0);
  EXPECT_DOUBLE_EQ(pearson(x, y), -1.0);
}

TEST(Pearson, Errors) {
  const std::vector<double> x{1, 2, 3}, c{2, 2, 2}, s{1, 2};
  try {
    pearson(x, c);
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_STREQ(e.what(), "degenerate correlation input");
  }
  EXPECT_THROW(pearson(x, s), InvalidArgument);
  EXPECT_THROW(pearson(std::vector<double>{1}, std::vector<double>{1}), InvalidArgument);
}

TEST(Pearson, IndependentUniformsNearZero) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<double> x(10000), y(10000);
  for (auto& v : x) v = u(rng);
  for (auto& v : y) v = u(rng);
  EXPECT_LT(std::abs(pearson(x, y)), 0.05);
}

TEST(Pearson, SymmetryAndAffineInvariance) {
  std::mt19937_64 rng(6);
  std::normal_distribution<double> n(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> x(50), y(50);
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = n(rng);
      y[i] = 0.3 * x[i] + n(rng);
    }
    const double r = pearson(x, y);
    EXPECT_NEAR(pearson(y, x), r, 1e-12);
    std::vector<double> xa(x), yb(y);
    for (auto& v : xa) v = 3.5 * v - 100;
    for (auto& v : yb) v = 0.01 * v + 7;
    EXPECT_NEAR(pearson(xa, yb), r, 1e-12);
    // Oracle: textbook two-pass formula in long double.
    long double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
    mx /= x.size();
    my /= y.size();
    long double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      sxy += (x[i] - mx) * (y[i] - my);
      sxx += (x[i] - mx) * (x[i] - mx);
      syy += (y[i] - my) * (y[i] - my);
    }
    EXPECT_NEAR(r, static_cast<double>(sxy / std::sqrt(sxx * syy)), 1e-12);
  }
}

// ---- split-half ----------------------------------------------------------------------

TEST(SplitHalfStats, RegularTrainsFlagged) {
  std::vector<SpikeTrain> trains;
  for (int k = 0; k < 5; ++k) {
    trains.push_back(SpikeTrain::from_times("r" + std::to_string(k), {0, 3, 6, 9, 12, 15, 18}));
  }
  const auto rows = split_half_correlation(Corpus(std::move(trains), Window{0, 20}),
                                           ClassScheme::parse("1,5"));
  EXPECT_EQ(rows[1].n_pairs, 5u);
  EXPECT_FALSE(rows[1].r.has_value());
  EXPECT_EQ(rows[1].flag, "degenerate correlation input");
  EXPECT_EQ(rows[0].n_pairs, 0u);
  EXPECT_FALSE(rows[0].flag.empty());
}

TEST(SplitHalfStats, ShapeMixturePersists) {
  const std::vector<double> grid{0.25, 0.5, 1, 2, 4};
  std::vector<double> kappas;
  for (int k = 0; k < 1000; ++k) kappas.push_back(grid[k % grid.size()]);
  const Corpus c = gamma_corpus(kappas, 200, 1.0e4, 51);
  const auto rows = split_half_correlation(c, ClassScheme::default_scheme());
  const auto& row = rows[ClassScheme::default_scheme().index_of(200)];
  ASSERT_EQ(row.n_pairs, 1000u);
  EXPECT_GT(*row.r, 0.5);
}

TEST(SplitHalfStats, PoissonHasNoPersistence) {
  const Corpus c = gamma_corpus(std::vector<double>(2000, 1.0), 200, 1.0e4, 52);
  const auto rows = split_half_correlation(c, ClassScheme::default_scheme());
  const auto& row = rows[ClassScheme::default_scheme().index_of(200)];
  ASSERT_EQ(row.n_pairs, 2000u);
  EXPECT_LT(std::abs(*row.r), 3.0 / std::sqrt(2000.0));
}

TEST(SplitHalfStats, PrecomputedHalvesGiveSameResult) {
  const Corpus c = gamma_corpus(std::vector<double>(50, 0.5), 100, 1.0e3, 53);
  const auto a = split_half_correlation(c, ClassScheme::default_scheme());
  const auto b = split_half_correlation(c, ClassScheme::default_scheme(), corpus_split_half(c));
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].r, b[i].r);
}

// ---- value pdf -----------------------------------------------------------------------

TEST(ValuePdf, NormalizedOnRange) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0, 3);
  std::vector<double> v(1000);
  for (auto& x : v) x = u(rng);
  v.push_back(3.0);
  const auto h = value_pdf(v, 0, 3, 30);
  EXPECT_EQ(h.samples, v.size());
  EXPECT_NEAR(total_mass(h), 1.0, 1e-9);
  EXPECT_THROW(value_pdf(v, 1, 1, 3), InvalidArgument);
}

}  // namespace
