#pragma once

// Corpus-level descriptive statistics: activity series, popularity ranking
// and distribution, inter-event histograms, multiplicity distributions,
// per-class L_V summaries with z-scores, and split-half persistence.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spikelv/kernels.hpp"
#include "spikelv/popularity.hpp"
#include "spikelv/spike_train.hpp"

namespace spikelv {

enum class HistogramKind { kPdf, kCdf };

/// Bins [edges[i], edges[i+1]). For kPdf, mass is a density: sum of
/// mass[i] * width[i] is 1. For kCdf, mass[i] is the fraction of samples
/// below edges[i+1], ending at 1. An empty histogram has no samples.
struct Histogram {
  std::vector<double> edges;
  std::vector<double> mass;
  std::vector<std::uint64_t> counts;
  HistogramKind kind = HistogramKind::kPdf;
  std::uint64_t samples = 0;

  bool empty() const noexcept { return samples == 0; }
  std::size_t bins() const noexcept { return mass.size(); }
  std::size_t occupied_bins() const noexcept;
};

/// Event counts per bin of `bin_width` seconds starting at window.start; the
/// last bin may extend past window.end. Throws for bin_width < 1.
struct ActivitySeries {
  std::int64_t start = 0;
  std::int64_t bin_width = 1;
  std::vector<std::uint64_t> counts;
};
ActivitySeries activity_series(const Corpus& corpus, std::int64_t bin_width);

struct ZipfRow {
  std::size_t rank = 0;
  std::string tag;
  std::uint64_t p = 0;
};

/// Descending popularity; ties broken by ascending tag.
std::vector<ZipfRow> zipf_table(const Corpus& corpus);

struct PopularityShares {
  std::size_t tags = 0;
  double share_p1 = 0.0;      // fraction with p == 1
  double share_below5 = 0.0;  // fraction with p < 5
};
PopularityShares popularity_shares(const Corpus& corpus);

/// Log-binned density of p_raw. Bin edges are the distinct integers
/// ceil(10^(k / bins_per_decade)); the density of a bin is its share of tags
/// divided by the number of integers it spans.
Histogram popularity_pdf(const Corpus& corpus, int bins_per_decade);

/// Least-squares slope of log10(density) against log10 of the bin's
/// geometric centre, over bins holding at least min_count samples.
double loglog_slope(const Histogram& hist, std::uint64_t min_count = 1);

/// Pooled inter-event intervals of trains in the class, linear bins of
/// bin_width starting at 0. With drop_unit_intervals, intervals of exactly one
/// second are left out (display option; the data is unchanged).
Histogram interval_histogram(const Corpus& corpus, const PopularityClass& cls,
                             std::int64_t bin_width, HistogramKind kind,
                             bool drop_unit_intervals = false);

/// P(c_h): distribution of per-second multiplicity pooled over the class.
struct MultiplicityDistribution {
  std::vector<std::uint32_t> values;  // distinct c_h, ascending
  std::vector<double> probability;
  std::uint64_t seconds = 0;          // active seconds pooled
  std::uint32_t max_multiplicity = 0;

  bool empty() const noexcept { return seconds == 0; }
  double at(std::uint32_t c) const noexcept;
};
MultiplicityDistribution multiplicity_distribution(const Corpus& corpus,
                                                   const PopularityClass& cls);

/// Per-class L_V statistics against the Poisson baseline mu0 = 1:
/// z = (mu - 1) * sqrt(n) / sigma, sigma with the n-1 denominator.
struct ClassSummary {
  PopularityClass cls;
  std::size_t trains = 0;  // trains in the class, valid L_V or not
  double mean_p = 0.0;     // mean popularity over those trains (0 if none)
  std::size_t n = 0;       // trains with a valid L_V
  std::optional<double> mu_lv;
  std::optional<double> sigma_lv;
  std::optional<double> z;
};

/// Popularity used for class membership, indexed like corpus.trains().
/// Lets a randomized corpus be grouped by the popularity of its real tags.
using PopularityOverride = std::span<const std::uint64_t>;

std::vector<ClassSummary> class_lv_summary(const Corpus& corpus, const ClassScheme& scheme,
                                           PopularityOverride popularity = {});

/// Same, reusing already computed per-train L_V (corpus order).
std::vector<ClassSummary> class_lv_summary(const Corpus& corpus, const ClassScheme& scheme,
                                           std::span<const std::optional<LvResult>> lv,
                                           PopularityOverride popularity = {});

/// Product-moment correlation. Throws InvalidArgument on length mismatch,
/// fewer than two points, or "degenerate correlation input" (zero variance).
double pearson(std::span<const double> x, std::span<const double> y);

struct SplitHalfClass {
  PopularityClass cls;
  double mean_p = 0.0;        // over trains contributing a pair
  std::size_t n_pairs = 0;
  std::optional<double> r;    // nullopt when < 2 pairs or zero variance
  std::string flag;           // reason r is missing, empty otherwise
};

std::vector<SplitHalfClass> split_half_correlation(const Corpus& corpus,
                                                   const ClassScheme& scheme);
std::vector<SplitHalfClass> split_half_correlation(
    const Corpus& corpus, const ClassScheme& scheme,
    std::span<const std::optional<SplitHalf>> halves);

/// Linear-bin density of values on [lo, hi) with `bins` bins.
Histogram value_pdf(std::span<const double> values, double lo, double hi, std::size_t bins);

}  // namespace spikelv
