#include "spikelv/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <tuple>

#include <CLI11.hpp>

#include "spikelv/error.hpp"
#include "spikelv/event_io.hpp"
#include "spikelv/kernels.hpp"
#include "spikelv/local_variation.hpp"
#include "spikelv/null_model.hpp"
#include "spikelv/output.hpp"
#include "spikelv/popularity.hpp"
#include "spikelv/random.hpp"
#include "spikelv/stats.hpp"

namespace spikelv::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Runs one pipeline stage, prefixing any error with the stage name while
// keeping its category (and so its exit code).
template <typename F>
auto stage(const char* name, F&& body) -> decltype(body()) {
  const std::string prefix = std::string(name) + ": ";
  try {
    return body();
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(prefix + e.what());
  } catch (const DataError& e) {
    throw DataError(prefix + e.what());
  } catch (const Error& e) {
    throw Error(prefix + e.what());
  } catch (const std::exception& e) {
    throw std::runtime_error(prefix + e.what());
  }
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

json opt_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json class_json(const PopularityClass& c) {
  return {{"label", c.label}, {"lo", c.lo}, {"hi", c.hi == kUnbounded ? json(nullptr) : json(c.hi)}};
}

std::string hi_text(const PopularityClass& c) {
  return c.hi == kUnbounded ? std::string("inf") : std::to_string(c.hi);
}

json metadata(const RunConfig& config, std::string_view artifact) {
  return {{"artifact", artifact},      {"tool", kToolName},
          {"version", kToolVersion},   {"seed", config.seed},
          {"generator", kGeneratorId}, {"config_hash", config.hash()}};
}

fs::path prepare_out(const RunConfig& config) {
  std::error_code ec;
  fs::create_directories(config.out_dir, ec);
  if (ec) throw DataError("cannot create output directory " + config.out_dir.string());
  return config.out_dir;
}

struct Loaded {
  IngestResult ingest;
  ClassScheme scheme;
};

Loaded load(const RunConfig& config) {
  ClassScheme scheme = stage("config", [&] { return ClassScheme::parse(config.classes); });
  auto ingest = stage("ingest", [&] {
    if (config.inputs.empty()) throw InvalidArgument("no --input given");
    Ingestor ing(config.window);
    for (const auto& p : config.inputs) read_events(p, ing);
    return std::move(ing).finish();
  });
  return {std::move(ingest), std::move(scheme)};
}

json ingest_json(const IngestResult& r) {
  const auto& c = r.corpus;
  const std::size_t active = c.empty() ? 0 : merge_trains(c).size();
  return {{"accepted", r.report.accepted},
          {"rejected", r.report.rejected},
          {"out_of_window", r.report.out_of_window},
          {"skipped_lines", r.report.skipped},
          {"tags", c.size()},
          {"events", c.total_events()},
          {"distinct_active_seconds", active},
          {"window", {{"start", c.window().start}, {"end", c.window().end}}},
          {"window_seconds", c.window().length()},
          {"coverage", static_cast<double>(active) / static_cast<double>(c.window().length())}};
}

std::int64_t interval_bin(const RunConfig& config, const PopularityClass& cls) {
  return config.bin_width ? *config.bin_width : default_interval_bin_width(cls);
}

// ---- artifact writers -------------------------------------------------------

void write_zipf(const RunConfig& config, const Corpus& corpus) {
  CsvWriter w(config.out_dir / "zipf.csv", metadata(config, "zipf"), {"rank", "tag", "p"});
  for (const auto& r : zipf_table(corpus)) {
    w.row({std::to_string(r.rank), r.tag, std::to_string(r.p)});
  }
  w.close();
}

void write_popularity_pdf(const RunConfig& config, const Corpus& corpus) {
  const Histogram h = popularity_pdf(corpus, config.bins_per_decade);
  auto meta = metadata(config, "popularity_pdf");
  meta["bins_per_decade"] = config.bins_per_decade;
  CsvWriter w(config.out_dir / "popularity_pdf.csv", meta, {"p_lo", "p_hi", "count", "density"});
  for (std::size_t i = 0; i < h.bins(); ++i) {
    w.row({format_number(h.edges[i]), format_number(h.edges[i + 1]), std::to_string(h.counts[i]),
           format_number(h.mass[i])});
  }
  w.close();
}

void write_activity(const RunConfig& config, const Corpus& corpus) {
  const auto a = activity_series(corpus, config.activity_bin);
  auto meta = metadata(config, "activity");
  meta["bin_width_s"] = config.activity_bin;
  CsvWriter w(config.out_dir / "activity.csv", meta, {"bin_start", "count"});
  for (std::size_t i = 0; i < a.counts.size(); ++i) {
    w.row({std::to_string(a.start + static_cast<std::int64_t>(i) * a.bin_width),
           std::to_string(a.counts[i])});
  }
  w.close();
}

json write_class_distributions(const RunConfig& config, const Corpus& corpus,
                               const ClassScheme& scheme) {
  json out = json::array();
  for (const auto& cls : scheme.classes()) {
    const std::int64_t bw = interval_bin(config, cls);
    const Histogram pdf =
        interval_histogram(corpus, cls, bw, HistogramKind::kPdf, config.drop_unit_intervals);
    const Histogram cdf =
        interval_histogram(corpus, cls, bw, HistogramKind::kCdf, config.drop_unit_intervals);
    auto meta = metadata(config, "intervals");
    meta["class"] = class_json(cls);
    meta["bin_width_s"] = bw;
    meta["empty"] = pdf.empty();
    meta["drop_unit_intervals"] = config.drop_unit_intervals;
    CsvWriter iw(config.out_dir / ("intervals_" + cls.label + ".csv"), meta,
                 {"dt_lo", "dt_hi", "count", "pdf", "cdf"});
    for (std::size_t i = 0; i < pdf.bins(); ++i) {
      iw.row({format_number(pdf.edges[i]), format_number(pdf.edges[i + 1]),
              std::to_string(pdf.counts[i]), format_number(pdf.mass[i]),
              format_number(cdf.mass[i])});
    }
    iw.close();

    const auto mult = multiplicity_distribution(corpus, cls);
    auto mmeta = metadata(config, "multiplicity");
    mmeta["class"] = class_json(cls);
    mmeta["empty"] = mult.empty();
    CsvWriter mw(config.out_dir / ("multiplicity_" + cls.label + ".csv"), mmeta,
                 {"c_h", "probability"});
    for (std::size_t i = 0; i < mult.values.size(); ++i) {
      mw.row({std::to_string(mult.values[i]), format_number(mult.probability[i])});
    }
    mw.close();

    out.push_back({{"class", class_json(cls)},
                   {"interval_bin_width_s", bw},
                   {"interval_samples", pdf.samples},
                   {"active_seconds", mult.seconds},
                   {"max_multiplicity", mult.max_multiplicity}});
  }
  return out;
}

json summary_json(const ClassSummary& s) {
  return {{"trains", s.trains},       {"mean_p", s.mean_p},
          {"n", s.n},                 {"mu_lv", opt_json(s.mu_lv)},
          {"sigma_lv", opt_json(s.sigma_lv)}, {"z", opt_json(s.z)}};
}

void write_class_summary(const RunConfig& config, const std::string& name,
                         const std::vector<ClassSummary>& rows) {
  CsvWriter w(config.out_dir / (name + ".csv"), metadata(config, name),
              {"class", "lo", "hi", "trains", "mean_p", "n", "mu_lv", "sigma_lv", "z"});
  for (const auto& s : rows) {
    w.row({s.cls.label, std::to_string(s.cls.lo), hi_text(s.cls), std::to_string(s.trains),
           format_number(s.mean_p), std::to_string(s.n), format_number(s.mu_lv),
           format_number(s.sigma_lv), format_number(s.z)});
  }
  w.close();
}

std::string lv_text(const std::optional<LvResult>& r) {
  return r ? format_number(r->lv) : std::string("nan");
}

void write_lv_table(const RunConfig& config, const std::string& name, const Corpus& corpus,
                    const ClassScheme& scheme, std::span<const std::optional<LvResult>> real,
                    std::span<const std::optional<LvResult>> null) {
  std::vector<std::string> cols{"tag", "class", "p_raw", "n_spikes", "lv"};
  if (!null.empty()) {
    cols.back() = "lv_real";
    cols.push_back("lv_null");
  }
  CsvWriter w(config.out_dir / (name + ".csv"), metadata(config, name), cols);
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto& tr = corpus.trains()[k];
    std::vector<std::string> row{tr.tag(), classify(tr.p_raw(), scheme).label,
                                 std::to_string(tr.p_raw()), std::to_string(tr.n_spikes()),
                                 lv_text(real[k])};
    if (!null.empty()) row.push_back(lv_text(null[k]));
    w.row(row);
  }
  w.close();
}

void write_lv_pdfs(const RunConfig& config, const Corpus& corpus, const ClassScheme& scheme,
                   std::span<const std::optional<LvResult>> real,
                   std::span<const std::optional<LvResult>> null) {
  std::vector<std::vector<double>> rv(scheme.size()), nv(scheme.size());
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const std::size_t c = scheme.index_of(corpus.trains()[k].p_raw());
    if (real[k]) rv[c].push_back(real[k]->lv);
    if (null[k]) nv[c].push_back(null[k]->lv);
  }
  for (std::size_t c = 0; c < scheme.size(); ++c) {
    const Histogram hr = value_pdf(rv[c], 0.0, 3.0, config.lv_bins);
    const Histogram hn = value_pdf(nv[c], 0.0, 3.0, config.lv_bins);
    auto meta = metadata(config, "lv_pdf");
    meta["class"] = class_json(scheme[c]);
    meta["n_real"] = hr.samples;
    meta["n_null"] = hn.samples;
    CsvWriter w(config.out_dir / ("lv_pdf_" + scheme[c].label + ".csv"), meta,
                {"lv_lo", "lv_hi", "density_real", "density_null"});
    for (std::size_t i = 0; i < hr.bins(); ++i) {
      w.row({format_number(hr.edges[i]), format_number(hr.edges[i + 1]),
             format_number(hr.mass[i]), format_number(hn.mass[i])});
    }
    w.close();
  }
}

json write_splithalf(const RunConfig& config, const Corpus& corpus, const ClassScheme& scheme,
                     std::span<const std::optional<SplitHalf>> halves) {
  const auto rows = split_half_correlation(corpus, scheme, halves);
  CsvWriter w(config.out_dir / "splithalf.csv", metadata(config, "splithalf"),
              {"class", "lo", "hi", "mean_p", "n_pairs", "r", "flag"});
  json out = json::array();
  for (const auto& r : rows) {
    w.row({r.cls.label, std::to_string(r.cls.lo), hi_text(r.cls), format_number(r.mean_p),
           std::to_string(r.n_pairs), format_number(r.r), r.flag});
    out.push_back({{"class", class_json(r.cls)},
                   {"mean_p", r.mean_p},
                   {"n_pairs", r.n_pairs},
                   {"r", opt_json(r.r)},
                   {"flag", r.flag}});
  }
  w.close();

  CsvWriter pw(config.out_dir / "splithalf_pairs.csv", metadata(config, "splithalf_pairs"),
               {"tag", "class", "p_raw", "lv_first", "lv_second"});
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    if (!halves[k]) continue;
    const auto& tr = corpus.trains()[k];
    pw.row({tr.tag(), classify(tr.p_raw(), scheme).label, std::to_string(tr.p_raw()),
            format_number(halves[k]->first.lv), format_number(halves[k]->second.lv)});
  }
  pw.close();
  return out;
}

std::vector<std::uint64_t> popularity_vector(const Corpus& corpus) {
  std::vector<std::uint64_t> p;
  p.reserve(corpus.size());
  for (const auto& tr : corpus) p.push_back(tr.p_raw());
  return p;
}

json base_report(const RunConfig& config) {
  return {{"tool", kToolName},
          {"version", kToolVersion},
          {"seed", config.seed},
          {"generator", kGeneratorId},
          {"config_hash", config.hash()},
          {"config", config.canonical()}};
}

void apply_threads(const RunConfig& config) {
  if (config.threads > 0) set_worker_threads(config.threads);
}

}  // namespace

// ---- RunConfig ----------------------------------------------------------------

json RunConfig::canonical() const {
  json in = json::array();
  for (const auto& p : inputs) in.push_back(p.string());
  json kappa_list = json::array();
  for (double k : synth.kappas) kappa_list.push_back(k);
  return {
      {"inputs", in},
      {"window", window ? json::array({window->start, window->end}) : json(nullptr)},
      {"classes", ClassScheme::parse(classes).edges()},
      {"bin_width", bin_width ? json(*bin_width) : json(nullptr)},
      {"activity_bin", activity_bin},
      {"bins_per_decade", bins_per_decade},
      {"lv_bins", lv_bins},
      {"seed", seed},
      {"formats", {{"csv", emit_csv}, {"json", emit_json}}},
      {"quantize", quantize},
      {"drop_unit_intervals", drop_unit_intervals},
      {"synth",
       {{"process", to_string(synth.process)},
        {"tags", synth.tags},
        {"rate", synth.rate},
        {"kappas", kappa_list},
        {"amplitude", synth.amplitude},
        {"period", synth.period},
        {"size_exponent", synth.size_exponent},
        {"size_max", synth.size_max},
        {"tag_prefix", synth.tag_prefix}}},
  };
}

std::string RunConfig::hash() const { return hex64(fnv1a64(canonical().dump())); }

void resolve_paths(RunConfig& config) {
  for (auto& p : config.inputs) {
    if (!fs::exists(p)) throw DataError("input not found: " + p.string());
    p = fs::absolute(p).lexically_normal();
  }
  config.out_dir = fs::absolute(config.out_dir).lexically_normal();
}

// ---- subcommands ----------------------------------------------------------------

json cmd_ingest(const RunConfig& config) {
  apply_threads(config);
  auto loaded = load(config);
  prepare_out(config);
  json doc = base_report(config);
  doc["ingest"] = stage("summary", [&] { return ingest_json(loaded.ingest); });
  stage("write", [&] {
    if (config.emit_events) {
      write_corpus_events(config.out_dir / "events.tsv", loaded.ingest.corpus,
                          metadata(config, "events").dump());
    }
    if (config.emit_json) write_json(config.out_dir / "ingest.json", doc);
  });
  return doc;
}

json cmd_zipf(const RunConfig& config) {
  apply_threads(config);
  auto loaded = load(config);
  prepare_out(config);
  const auto& corpus = loaded.ingest.corpus;
  json doc = base_report(config);
  const auto shares = popularity_shares(corpus);
  doc["popularity"] = {{"tags", shares.tags},
                       {"share_p1", shares.share_p1},
                       {"share_below5", shares.share_below5}};
  stage("zipf", [&] {
    if (config.emit_csv) write_zipf(config, corpus);
    if (config.emit_json) write_json(config.out_dir / "zipf.json", doc);
  });
  return doc;
}

json cmd_dist(const RunConfig& config) {
  apply_threads(config);
  auto loaded = load(config);
  prepare_out(config);
  const auto& corpus = loaded.ingest.corpus;
  json doc = base_report(config);
  stage("dist", [&] {
    if (config.emit_csv) {
      write_popularity_pdf(config, corpus);
      write_activity(config, corpus);
      doc["classes"] = write_class_distributions(config, corpus, loaded.scheme);
    }
    if (config.emit_json) write_json(config.out_dir / "dist.json", doc);
  });
  return doc;
}

json cmd_lv(const RunConfig& config) {
  apply_threads(config);
  auto loaded = load(config);
  prepare_out(config);
  const auto& corpus = loaded.ingest.corpus;
  const auto lv = stage("lv", [&] { return corpus_lv(corpus); });
  const auto summary = stage("summary", [&] { return class_lv_summary(corpus, loaded.scheme, lv); });
  json doc = base_report(config);
  doc["classes"] = json::array();
  for (const auto& s : summary) {
    doc["classes"].push_back({{"class", class_json(s.cls)}, {"real", summary_json(s)}});
  }
  stage("write", [&] {
    if (config.emit_csv) {
      write_lv_table(config, "lv", corpus, loaded.scheme, lv, {});
      write_class_summary(config, "class_summary_real", summary);
    }
    if (config.emit_json) write_json(config.out_dir / "lv.json", doc);
  });
  return doc;
}

json cmd_null(const RunConfig& config) {
  apply_threads(config);
  auto loaded = load(config);
  prepare_out(config);
  const auto& corpus = loaded.ingest.corpus;
  auto [merged, null_corpus] = stage("null", [&] {
    if (corpus.empty()) throw DataError("no events to randomize");
    MergedTrain m = merge_trains(corpus);
    Corpus n = randomize_corpus(corpus, m, config.seed);
    return std::make_pair(std::move(m), std::move(n));
  });
  json doc = base_report(config);
  doc["merged_length"] = merged.size();
  doc["tags"] = null_corpus.size();
  doc["events"] = null_corpus.total_events();
  stage("write", [&] {
    write_corpus_events(config.out_dir / "null_events.tsv", null_corpus,
                        metadata(config, "null_events").dump());
    write_json(config.out_dir / "null_events.json", doc);
  });
  return doc;
}

json cmd_corr(const RunConfig& config) {
  apply_threads(config);
  auto loaded = load(config);
  prepare_out(config);
  const auto& corpus = loaded.ingest.corpus;
  const auto halves = stage("split", [&] { return corpus_split_half(corpus); });
  json doc = base_report(config);
  stage("corr", [&] {
    if (config.emit_csv) {
      doc["split_half"] = write_splithalf(config, corpus, loaded.scheme, halves);
    } else {
      json rows = json::array();
      for (const auto& r : split_half_correlation(corpus, loaded.scheme, halves)) {
        rows.push_back({{"class", class_json(r.cls)}, {"n_pairs", r.n_pairs}, {"r", opt_json(r.r)}});
      }
      doc["split_half"] = rows;
    }
    if (config.emit_json) write_json(config.out_dir / "corr.json", doc);
  });
  return doc;
}

json cmd_report(const RunConfig& config) {
  apply_threads(config);
  auto loaded = load(config);
  prepare_out(config);
  const auto& corpus = loaded.ingest.corpus;
  const auto& scheme = loaded.scheme;

  auto [merged, null_corpus] = stage("null", [&] {
    if (corpus.empty()) throw DataError("no events in input");
    MergedTrain m = merge_trains(corpus);
    Corpus n = randomize_corpus(corpus, m, config.seed);
    return std::make_pair(std::move(m), std::move(n));
  });
  const auto popularity = popularity_vector(corpus);

  const auto real_lv = stage("lv", [&] { return corpus_lv(corpus); });
  const auto null_lv = stage("lv-null", [&] { return corpus_lv(null_corpus); });
  const auto halves = stage("split", [&] { return corpus_split_half(corpus); });
  const auto real_summary =
      stage("summary", [&] { return class_lv_summary(corpus, scheme, real_lv); });
  const auto null_summary = stage(
      "summary-null", [&] { return class_lv_summary(null_corpus, scheme, null_lv, popularity); });

  json doc = base_report(config);
  doc["ingest"] = ingest_json(loaded.ingest);
  doc["merged_length"] = merged.size();
  const auto shares = popularity_shares(corpus);
  doc["popularity"] = {{"tags", shares.tags},
                       {"share_p1", shares.share_p1},
                       {"share_below5", shares.share_below5}};

  json dists, split;
  stage("write", [&] {
    if (config.emit_csv) {
      write_zipf(config, corpus);
      write_popularity_pdf(config, corpus);
      write_activity(config, corpus);
      dists = write_class_distributions(config, corpus, scheme);
      write_lv_table(config, "lv_scatter", corpus, scheme, real_lv, null_lv);
      write_lv_pdfs(config, corpus, scheme, real_lv, null_lv);
      write_class_summary(config, "class_summary_real", real_summary);
      write_class_summary(config, "class_summary_null", null_summary);
      split = write_splithalf(config, corpus, scheme, halves);
    } else {
      split = json::array();
      for (const auto& r : split_half_correlation(corpus, scheme, halves)) {
        split.push_back({{"class", class_json(r.cls)},
                         {"mean_p", r.mean_p},
                         {"n_pairs", r.n_pairs},
                         {"r", opt_json(r.r)},
                         {"flag", r.flag}});
      }
    }
  });

  json classes = json::array();
  for (std::size_t c = 0; c < scheme.size(); ++c) {
    json row{{"class", class_json(scheme[c])},
             {"real", summary_json(real_summary[c])},
             {"null", summary_json(null_summary[c])},
             {"split_half", split[c]}};
    if (dists.is_array()) {
      row["max_multiplicity"] = dists[c]["max_multiplicity"];
      row["interval_bin_width_s"] = dists[c]["interval_bin_width_s"];
    }
    classes.push_back(std::move(row));
  }
  doc["classes"] = std::move(classes);

  if (config.emit_json) stage("write", [&] { write_json(config.out_dir / "report.json", doc); });
  return doc;
}

json cmd_synth(const RunConfig& config) {
  apply_threads(config);
  const auto& sc = config.synth;
  if (sc.tags == 0) throw InvalidArgument("synth: --tags must be positive");
  if (sc.kappas.empty()) throw InvalidArgument("synth: --kappa needs at least one value");
  const Window window = config.window.value_or(Window{0, 7 * 86400 - 1});
  if (window.start >= window.end) throw InvalidArgument("synth: invalid window");
  const TimeSpan span{static_cast<double>(window.start), static_cast<double>(window.end + 1)};

  std::vector<TagSpec> specs = stage("synth", [&] {
    std::vector<TagSpec> out;
    out.reserve(sc.tags);
    Philox4x32 size_rng(derive_seed(config.seed, "sizes"));
    const std::size_t width = std::to_string(sc.tags - 1).size();
    for (std::size_t k = 0; k < sc.tags; ++k) {
      std::string index = std::to_string(k);
      TagSpec s;
      s.tag = sc.tag_prefix + std::string(width - index.size(), '0') + index;
      s.kind = sc.process;
      if (sc.size_exponent > 0.0) {
        if (!(sc.size_exponent > 1.0)) throw InvalidArgument("--size-exponent must exceed 1");
        const auto size = discrete_power_law(size_rng, sc.size_exponent, sc.size_max);
        s.xi = static_cast<double>(size) / span.length();
      } else {
        s.xi = sc.rate;
      }
      s.kappa = sc.kappas[k % sc.kappas.size()];
      s.amplitude = sc.amplitude;
      s.period = sc.period;
      s.seed = derive_seed(config.seed, s.tag);
      out.push_back(std::move(s));
    }
    return out;
  });
  const auto trains = stage("synth", [&] { return generate_all(specs, span); });

  prepare_out(config);
  json doc = base_report(config);
  doc["window"] = {{"start", window.start}, {"end", window.end}};
  doc["quantize"] = config.quantize;
  doc["events_file"] = sc.events_name;
  json tags = json::array();

  stage("write", [&] {
    std::vector<std::tuple<std::int64_t, std::size_t>> lines;
    for (std::size_t k = 0; k < specs.size(); ++k) {
      const auto secs = event_seconds(trains[k]);
      auto distinct = secs;
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      const std::size_t n_events = secs.size();
      const std::size_t n_spikes = distinct.size();
      for (auto t : config.quantize ? distinct : secs) lines.emplace_back(t, k);
      const auto& s = specs[k];
      tags.push_back({{"tag", s.tag},
                      {"generator", to_string(s.kind)},
                      {"xi", s.xi},
                      {"kappa", s.kind == ProcessKind::kGamma ? json(s.kappa) : json(1.0)},
                      {"amplitude", s.kind == ProcessKind::kSinusoidal ? json(s.amplitude) : json(0.0)},
                      {"period", s.kind == ProcessKind::kSinusoidal ? json(s.period) : json(nullptr)},
                      {"seed", s.seed},
                      {"n_events", n_events},
                      {"n_spikes", n_spikes}});
    }
    std::sort(lines.begin(), lines.end());
    LineWriter out(config.out_dir / sc.events_name);
    out.write_line("# " + metadata(config, "synth_events").dump());
    for (const auto& [t, k] : lines) out.write_line(format_event_line({t, specs[k].tag}));
    out.close();
    doc["tags"] = tags;
    write_json(config.out_dir / "synth_truth.json", doc);
  });
  return doc;
}

// ---- command line -------------------------------------------------------------

namespace {

Window parse_window(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InvalidArgument("--window expects t0,t1");
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
    const std::int64_t t0 = std::stoll(a, &used);
    if (used != a.size()) throw InvalidArgument("");
    const std::int64_t t1 = std::stoll(b, &used);
    if (used != b.size()) throw InvalidArgument("");
    if (t0 >= t1) throw InvalidArgument("");
    return {t0, t1};
  } catch (const std::exception&) {
    throw InvalidArgument("--window expects integer seconds t0,t1 with t0 < t1");
  }
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string field = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stod(field, &used));
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::exception&) {
      throw InvalidArgument("bad number '" + field + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

struct RawOptions {
  std::string window;
  std::string format = "csv,json";
  std::string kappa = "1";
  std::string process = "poisson";
  std::int64_t bin_width = 0;
};

void add_common(CLI::App* sub, RunConfig& cfg, RawOptions& raw) {
  auto env = [](const char* name) { return std::string(kEnvPrefix) + name; };
  sub->add_option("--input,-i", cfg.inputs, "Event files (<unix_seconds>TAB<tag>, .gz accepted)")
      ->envname(env("INPUT"));
  sub->add_option("--out,-o", cfg.out_dir, "Output directory")->envname(env("OUT"));
  sub->add_option("--seed", cfg.seed, "Seed for every randomized stage")->envname(env("SEED"));
  sub->add_option("--classes", cfg.classes, "Comma-separated popularity class edges, from 1")
      ->envname(env("CLASSES"));
  sub->add_option("--bin-width", raw.bin_width,
                  "Inter-event histogram bin width in seconds (default: per class)")
      ->envname(env("BIN_WIDTH"));
  sub->add_option("--window", raw.window, "Observation window t0,t1 (inclusive seconds)")
      ->envname(env("WINDOW"));
  sub->add_flag("--quantize", cfg.quantize, "synth: collapse events onto the 1 s grid")
      ->envname(env("QUANTIZE"));
  sub->add_option("--format", raw.format, "Outputs to emit: csv, json or csv,json")
      ->envname(env("FORMAT"));
  sub->add_option("--threads", cfg.threads, "Worker threads (0 = runtime default)")
      ->envname(env("THREADS"));
  sub->add_option("--activity-bin", cfg.activity_bin, "Activity series bin width in seconds");
  sub->add_option("--bins-per-decade", cfg.bins_per_decade, "Popularity PDF log bins per decade");
  sub->add_option("--lv-bins", cfg.lv_bins, "Bins of the L_V histograms on [0,3]");
  sub->add_flag("--drop-unit-intervals", cfg.drop_unit_intervals,
                "Leave 1 s intervals out of interval histograms");
  sub->add_flag("--emit-events", cfg.emit_events, "ingest: also write normalized events.tsv");
}

void add_synth_options(CLI::App* sub, RunConfig& cfg, RawOptions& raw) {
  auto& s = cfg.synth;
  sub->add_option("--process", raw.process, "poisson, gamma or sinusoidal");
  sub->add_option("--tags", s.tags, "Number of tags");
  sub->add_option("--rate", s.rate, "Events per second (mean rate for sinusoidal)");
  sub->add_option("--kappa", raw.kappa, "Gamma shape(s), comma-separated, assigned round-robin");
  sub->add_option("--amplitude", s.amplitude, "Relative amplitude of the sinusoidal rate");
  sub->add_option("--period", s.period, "Period of the sinusoidal rate in seconds");
  sub->add_option("--size-exponent", s.size_exponent,
                  "Draw per-tag expected sizes from a power law with this exponent (> 1)");
  sub->add_option("--size-max", s.size_max, "Largest expected size drawn");
  sub->add_option("--tag-prefix", s.tag_prefix, "Prefix of generated tag names");
  sub->add_option("--events-name", s.events_name, "Name of the emitted event file");
}

void finalize(RunConfig& cfg, const RawOptions& raw, bool is_synth) {
  if (!raw.window.empty()) cfg.window = parse_window(raw.window);
  if (raw.bin_width < 0) throw InvalidArgument("--bin-width must be >= 1");
  if (raw.bin_width > 0) cfg.bin_width = raw.bin_width;
  cfg.emit_csv = raw.format.find("csv") != std::string::npos;
  cfg.emit_json = raw.format.find("json") != std::string::npos;
  if (!cfg.emit_csv && !cfg.emit_json) throw InvalidArgument("--format must name csv and/or json");
  ClassScheme::parse(cfg.classes);
  if (is_synth) {
    cfg.synth.process = parse_process_kind(raw.process);
    cfg.synth.kappas = parse_doubles(raw.kappa);
  }
  resolve_paths(cfg);
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"spikelv: local variation analysis of tagged event streams"};
  app.require_subcommand(1);

  RunConfig cfg;
  RawOptions raw;
  struct Entry {
    const char* name;
    const char* help;
    json (*fn)(const RunConfig&);
  };
  const Entry entries[] = {
      {"ingest", "Ingest events and summarize the corpus", cmd_ingest},
      {"report", "Full pipeline: distributions, L_V real vs null, z-scores, split-half", cmd_report},
      {"lv", "Per-tag local variation and per-class summary", cmd_lv},
      {"null", "Write a randomized (null model) corpus", cmd_null},
      {"dist", "Popularity, inter-event, multiplicity and activity distributions", cmd_dist},
      {"zipf", "Popularity ranking", cmd_zipf},
      {"corr", "Split-half L_V correlation per class", cmd_corr},
      {"synth", "Generate a synthetic corpus with ground truth", cmd_synth},
  };
  std::vector<std::pair<CLI::App*, const Entry*>> subs;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_common(sub, cfg, raw);
    if (std::string_view(e.name) == "synth") add_synth_options(sub, cfg, raw);
    subs.emplace_back(sub, &e);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  try {
    for (const auto& [sub, entry] : subs) {
      if (!sub->parsed()) continue;
      finalize(cfg, raw, std::string_view(entry->name) == "synth");
      const json result = entry->fn(cfg);
      std::cout << result.dump(2) << '\n';
    }
    return kOk;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace spikelv::cli
