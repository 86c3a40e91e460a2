#include "spikelv/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "spikelv/error.hpp"

namespace spikelv {

namespace {

std::uint64_t popularity_of(const Corpus& corpus, PopularityOverride popularity, std::size_t k) {
  return popularity.empty() ? corpus.trains()[k].p_raw() : popularity[k];
}

void check_override(const Corpus& corpus, PopularityOverride popularity) {
  if (!popularity.empty() && popularity.size() != corpus.size()) {
    throw InvalidArgument("popularity override must have one entry per train");
  }
}

double mean_of(std::span<const double> v) {
  CompensatedSum s;
  for (double x : v) s.add(x);
  return s.value() / static_cast<double>(v.size());
}

}  // namespace

std::size_t Histogram::occupied_bins() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(counts.begin(), counts.end(), [](std::uint64_t c) { return c > 0; }));
}

ActivitySeries activity_series(const Corpus& corpus, std::int64_t bin_width) {
  if (bin_width < 1) throw InvalidArgument("bin width must be >= 1 second");
  const Window w = corpus.window();
  const std::int64_t n_bins = (w.length() + bin_width - 1) / bin_width;
  ActivitySeries out{w.start, bin_width, std::vector<std::uint64_t>(static_cast<std::size_t>(n_bins))};
  for (const auto& tr : corpus) {
    for (std::size_t i = 0; i < tr.n_spikes(); ++i) {
      out.counts[static_cast<std::size_t>((tr.times()[i] - w.start) / bin_width)] += tr.counts()[i];
    }
  }
  return out;
}

std::vector<ZipfRow> zipf_table(const Corpus& corpus) {
  std::vector<ZipfRow> rows;
  rows.reserve(corpus.size());
  for (const auto& tr : corpus) rows.push_back({0, tr.tag(), tr.p_raw()});
  std::sort(rows.begin(), rows.end(), [](const ZipfRow& a, const ZipfRow& b) {
    return a.p != b.p ? a.p > b.p : a.tag < b.tag;
  });
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].rank = i + 1;
  return rows;
}

PopularityShares popularity_shares(const Corpus& corpus) {
  PopularityShares s;
  s.tags = corpus.size();
  if (s.tags == 0) return s;
  std::size_t ones = 0, below5 = 0;
  for (const auto& tr : corpus) {
    ones += tr.p_raw() == 1;
    below5 += tr.p_raw() < 5;
  }
  s.share_p1 = static_cast<double>(ones) / static_cast<double>(s.tags);
  s.share_below5 = static_cast<double>(below5) / static_cast<double>(s.tags);
  return s;
}

Histogram popularity_pdf(const Corpus& corpus, int bins_per_decade) {
  if (bins_per_decade < 1) throw InvalidArgument("bins per decade must be >= 1");
  Histogram h;
  h.kind = HistogramKind::kPdf;
  if (corpus.empty()) return h;

  std::uint64_t p_max = 0;
  for (const auto& tr : corpus) p_max = std::max(p_max, tr.p_raw());

  std::vector<std::uint64_t> edges{1};
  for (int k = 1; edges.back() <= p_max; ++k) {
    const double v = std::pow(10.0, static_cast<double>(k) / bins_per_decade);
    const auto e = static_cast<std::uint64_t>(std::ceil(v * (1.0 - 1e-12)));
    if (e > edges.back()) edges.push_back(e);
  }

  h.counts.assign(edges.size() - 1, 0);
  for (const auto& tr : corpus) {
    if (tr.p_raw() == 0) continue;
    const auto it = std::upper_bound(edges.begin(), edges.end(), tr.p_raw());
    ++h.counts[static_cast<std::size_t>(it - edges.begin()) - 1];
    ++h.samples;
  }
  h.edges.assign(edges.begin(), edges.end());
  h.mass.resize(h.counts.size());
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    const double width = h.edges[i + 1] - h.edges[i];
    h.mass[i] = static_cast<double>(h.counts[i]) / (static_cast<double>(h.samples) * width);
  }
  return h;
}

double loglog_slope(const Histogram& hist, std::uint64_t min_count) {
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < hist.bins(); ++i) {
    if (hist.counts[i] < std::max<std::uint64_t>(min_count, 1)) continue;
    const double lo = hist.edges[i];
    const double hi_incl = hist.edges[i + 1] - 1.0;
    xs.push_back(std::log10(std::sqrt(lo * std::max(lo, hi_incl))));
    ys.push_back(std::log10(hist.mass[i]));
  }
  if (xs.size() < 2) throw InvalidArgument("need at least two populated bins for a slope");
  const double mx = mean_of(xs), my = mean_of(ys);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx == 0.0) throw InvalidArgument("degenerate slope input");
  return sxy / sxx;
}

Histogram interval_histogram(const Corpus& corpus, const PopularityClass& cls,
                             std::int64_t bin_width, HistogramKind kind,
                             bool drop_unit_intervals) {
  if (bin_width < 1) throw InvalidArgument("bin width must be >= 1 second");
  Histogram h;
  h.kind = kind;

  std::vector<std::int64_t> pooled;
  for (const auto& tr : corpus) {
    if (!cls.contains(tr.p_raw()) || tr.n_spikes() < 2) continue;
    const auto t = tr.times();
    for (std::size_t i = 1; i < t.size(); ++i) {
      const std::int64_t d = t[i] - t[i - 1];
      if (drop_unit_intervals && d == 1) continue;
      pooled.push_back(d);
    }
  }
  if (pooled.empty()) return h;

  const std::int64_t max_d = *std::max_element(pooled.begin(), pooled.end());
  const auto n_bins = static_cast<std::size_t>(max_d / bin_width + 1);
  h.counts.assign(n_bins, 0);
  for (auto d : pooled) ++h.counts[static_cast<std::size_t>(d / bin_width)];
  h.samples = pooled.size();
  h.edges.resize(n_bins + 1);
  for (std::size_t i = 0; i <= n_bins; ++i) {
    h.edges[i] = static_cast<double>(static_cast<std::int64_t>(i) * bin_width);
  }
  h.mass.resize(n_bins);
  const auto total = static_cast<double>(h.samples);
  if (kind == HistogramKind::kPdf) {
    for (std::size_t i = 0; i < n_bins; ++i) {
      h.mass[i] = static_cast<double>(h.counts[i]) / (total * static_cast<double>(bin_width));
    }
  } else {
    std::uint64_t running = 0;
    for (std::size_t i = 0; i < n_bins; ++i) {
      running += h.counts[i];
      h.mass[i] = static_cast<double>(running) / total;
    }
  }
  return h;
}

double MultiplicityDistribution::at(std::uint32_t c) const noexcept {
  auto it = std::lower_bound(values.begin(), values.end(), c);
  if (it == values.end() || *it != c) return 0.0;
  return probability[static_cast<std::size_t>(it - values.begin())];
}

MultiplicityDistribution multiplicity_distribution(const Corpus& corpus,
                                                   const PopularityClass& cls) {
  std::map<std::uint32_t, std::uint64_t> tally;
  MultiplicityDistribution out;
  for (const auto& tr : corpus) {
    if (!cls.contains(tr.p_raw())) continue;
    for (auto c : tr.counts()) {
      ++tally[c];
      ++out.seconds;
    }
  }
  for (const auto& [c, n] : tally) {
    out.values.push_back(c);
    out.probability.push_back(static_cast<double>(n) / static_cast<double>(out.seconds));
    out.max_multiplicity = c;
  }
  return out;
}

std::vector<ClassSummary> class_lv_summary(const Corpus& corpus, const ClassScheme& scheme,
                                           PopularityOverride popularity) {
  const auto lv = corpus_lv(corpus);
  return class_lv_summary(corpus, scheme, lv, popularity);
}

std::vector<ClassSummary> class_lv_summary(const Corpus& corpus, const ClassScheme& scheme,
                                           std::span<const std::optional<LvResult>> lv,
                                           PopularityOverride popularity) {
  check_override(corpus, popularity);
  if (lv.size() != corpus.size()) throw InvalidArgument("one L_V entry per train required");

  std::vector<std::vector<double>> values(scheme.size());
  std::vector<CompensatedSum> p_sum(scheme.size());
  std::vector<ClassSummary> out(scheme.size());
  for (std::size_t c = 0; c < scheme.size(); ++c) out[c].cls = scheme[c];

  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const std::uint64_t p = popularity_of(corpus, popularity, k);
    if (p < 1) continue;
    const std::size_t c = scheme.index_of(p);
    ++out[c].trains;
    p_sum[c].add(static_cast<double>(p));
    if (lv[k]) values[c].push_back(lv[k]->lv);
  }

  for (std::size_t c = 0; c < scheme.size(); ++c) {
    auto& s = out[c];
    if (s.trains > 0) s.mean_p = p_sum[c].value() / static_cast<double>(s.trains);
    const auto& v = values[c];
    s.n = v.size();
    if (s.n == 0) continue;
    const double mu = mean_of(v);
    s.mu_lv = mu;
    if (s.n < 2) continue;
    CompensatedSum ss;
    for (double x : v) ss.add((x - mu) * (x - mu));
    const double sigma = std::sqrt(ss.value() / static_cast<double>(s.n - 1));
    s.sigma_lv = sigma;
    if (sigma > 0.0) s.z = (mu - 1.0) * std::sqrt(static_cast<double>(s.n)) / sigma;
  }
  return out;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InvalidArgument("correlation inputs differ in length");
  if (x.size() < 2) throw InvalidArgument("correlation needs at least two points");
  const double mx = mean_of(x), my = mean_of(y);
  CompensatedSum sxy, sxx, syy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxy.add(dx * dy);
    sxx.add(dx * dx);
    syy.add(dy * dy);
  }
  if (!(sxx.value() > 0.0) || !(syy.value() > 0.0)) {
    throw InvalidArgument("degenerate correlation input");
  }
  const double r = sxy.value() / std::sqrt(sxx.value() * syy.value());
  return std::clamp(r, -1.0, 1.0);
}

std::vector<SplitHalfClass> split_half_correlation(const Corpus& corpus,
                                                   const ClassScheme& scheme) {
  const auto halves = corpus_split_half(corpus);
  return split_half_correlation(corpus, scheme, halves);
}

std::vector<SplitHalfClass> split_half_correlation(
    const Corpus& corpus, const ClassScheme& scheme,
    std::span<const std::optional<SplitHalf>> halves) {
  if (halves.size() != corpus.size()) throw InvalidArgument("one split entry per train required");
  std::vector<std::vector<double>> first(scheme.size()), second(scheme.size());
  std::vector<CompensatedSum> p_sum(scheme.size());

  for (std::size_t k = 0; k < corpus.size(); ++k) {
    if (!halves[k]) continue;
    const auto& tr = corpus.trains()[k];
    const std::size_t c = scheme.index_of(tr.p_raw());
    first[c].push_back(halves[k]->first.lv);
    second[c].push_back(halves[k]->second.lv);
    p_sum[c].add(static_cast<double>(tr.p_raw()));
  }

  std::vector<SplitHalfClass> out(scheme.size());
  for (std::size_t c = 0; c < scheme.size(); ++c) {
    auto& row = out[c];
    row.cls = scheme[c];
    row.n_pairs = first[c].size();
    if (row.n_pairs > 0) row.mean_p = p_sum[c].value() / static_cast<double>(row.n_pairs);
    if (row.n_pairs < 2) {
      row.flag = "fewer than 2 pairs";
      continue;
    }
    try {
      row.r = pearson(first[c], second[c]);
    } catch (const InvalidArgument& e) {
      row.flag = e.what();
    }
  }
  return out;
}

Histogram value_pdf(std::span<const double> values, double lo, double hi, std::size_t bins) {
  if (!(hi > lo) || bins == 0) throw InvalidArgument("value_pdf needs lo < hi and bins > 0");
  Histogram h;
  h.kind = HistogramKind::kPdf;
  h.counts.assign(bins, 0);
  const double width = (hi - lo) / static_cast<double>(bins);
  h.edges.resize(bins + 1);
  for (std::size_t i = 0; i <= bins; ++i) h.edges[i] = lo + width * static_cast<double>(i);
  for (double v : values) {
    if (v < lo || v > hi) continue;
    auto i = static_cast<std::size_t>((v - lo) / width);
    ++h.counts[std::min(i, bins - 1)];
    ++h.samples;
  }
  h.mass.assign(bins, 0.0);
  if (h.samples == 0) return h;
  for (std::size_t i = 0; i < bins; ++i) {
    h.mass[i] = static_cast<double>(h.counts[i]) / (static_cast<double>(h.samples) * width);
  }
  return h;
}

}  // namespace spikelv
