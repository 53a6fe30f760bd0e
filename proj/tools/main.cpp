// Command-line front end: OHLC CSV in, descriptive statistics and rolling
// Hurst-exponent series out. Subcommands: stats, hurst, roll, synth.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <hurstlab/hurstlab.hpp>

namespace {

using namespace hurstlab;

struct CommonOptions {
    std::string input;
    std::string series = "returns";
    std::string method = "dfa";
    std::vector<std::size_t> scales = {4, 8, 16, 32, 64, 128};
    int poly_order = 1;
    std::string format = "csv";
    std::string output = "stdout";
    CsvSchema schema;
};

void add_input_options(CLI::App& cmd, CommonOptions& opt) {
    cmd.add_option("--input", opt.input, "OHLC CSV file")->required();
    cmd.add_option("--date-col", opt.schema.date_column, "date column name")
        ->capture_default_str();
    cmd.add_option("--close-col", opt.schema.close_column, "close column name")
        ->capture_default_str();
    cmd.add_option("--high-col", opt.schema.high_column, "high column name")
        ->capture_default_str();
    cmd.add_option("--low-col", opt.schema.low_column, "low column name")
        ->capture_default_str();
    cmd.add_option("--series", opt.series, "series to analyze: returns|volatility")
        ->check(CLI::IsMember({"returns", "volatility"}))
        ->capture_default_str();
}

void add_output_options(CLI::App& cmd, CommonOptions& opt) {
    cmd.add_option("--format", opt.format, "output format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd.add_option("--output", opt.output, "output path, or 'stdout'")->capture_default_str();
}

void add_estimator_options(CLI::App& cmd, CommonOptions& opt) {
    cmd.add_option("--method", opt.method, "estimator: dfa|rs|rs-single")
        ->check(CLI::IsMember({"dfa", "rs", "rs-single"}))
        ->capture_default_str();
    cmd.add_option("--scales", opt.scales, "block sizes, comma separated")
        ->delimiter(',')
        ->capture_default_str();
    cmd.add_option("--poly-order", opt.poly_order, "DFA detrending order (1-3)")
        ->check(CLI::Range(1, 3))
        ->capture_default_str();
}

EstimatorConfig make_estimator(const CommonOptions& opt) {
    EstimatorConfig config;
    config.method = *parse_method(opt.method);
    config.scales = ScaleSet(opt.scales);
    config.poly_order = opt.poly_order;
    return config;
}

/// All output is assembled first and written in one shot, so a failure
/// can never leave a partial file behind.
void write_output(const std::string& payload, const std::string& destination) {
    if (destination == "stdout" || destination == "-") {
        std::cout << payload;
        std::cout.flush();
        if (!std::cout) throw IoError("write failure on stdout");
        return;
    }
    std::ofstream out(destination, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + destination + "' for writing");
    out << payload;
    out.close();
    if (!out) throw IoError("write failure on '" + destination + "'");
}

struct LoadedSeries {
    DataQuality quality;
    std::vector<Date> dates;
    std::vector<double> values;
};

LoadedSeries load_series(const CommonOptions& opt) {
    const PriceSeries prices = load_csv(opt.input, opt.schema);
    LoadedSeries out;
    out.quality = prices.quality();
    if (opt.series == "returns") {
        auto series = log_returns(prices);
        out.dates = std::move(series.dates);
        out.values = std::move(series.values);
    } else {
        auto series = hl_volatility(prices);
        out.dates = std::move(series.dates);
        out.values = std::move(series.values);
    }
    return out;
}

void print_stats_block(std::ostream& os, const std::string& title,
                       const DescriptiveStats& s) {
    os << title << ": n=" << s.n << " min=" << fmt_g6(s.min) << " max=" << fmt_g6(s.max)
       << " mean=" << fmt_g6(s.mean) << " median=" << fmt_g6(s.median)
       << " std=" << fmt_g6(s.std_dev) << " skew=" << fmt_g6(s.skewness)
       << " kurt=" << fmt_g6(s.kurtosis) << " jb=" << fmt_g6(s.jarque_bera)
       << (s.jb_significant_1pct ? " (jb significant at 1%)" : "") << "\n";
}

int cmd_stats(const CommonOptions& opt) {
    const auto loaded = load_series(opt);
    const auto stats = describe(loaded.values);

    std::string payload;
    if (opt.format == "csv") {
        payload = stats_to_csv(stats);
    } else {
        const nlohmann::json doc = {
            {"meta",
             {{"input", opt.input},
              {"series", opt.series},
              {"data_quality", quality_to_json(loaded.quality)}}},
            {"stats", stats_to_json(stats)}};
        payload = doc.dump(2) + "\n";
    }
    write_output(payload, opt.output);
    return 0;
}

int cmd_hurst(const CommonOptions& opt, std::size_t window) {
    const auto loaded = load_series(opt);
    const auto config = make_estimator(opt);
    const std::size_t length = window == 0 ? loaded.values.size() : window;
    if (length > loaded.values.size())
        throw InsufficientDataError("window " + std::to_string(length) +
                                    " exceeds series length " +
                                    std::to_string(loaded.values.size()));
    const auto est =
        estimate_hurst(std::span<const double>(loaded.values).first(length), config);
    const HurstRecord record{loaded.dates.front(), est.h, est.r_squared, est.method};

    std::string payload;
    if (opt.format == "csv") {
        payload = records_to_csv(std::span<const HurstRecord>(&record, 1));
    } else {
        nlohmann::json fit_points = nlohmann::json::array();
        for (const auto& p : est.fit_points)
            fit_points.push_back({{"log_scale", p.log_scale},
                                  {"log_fluctuation", p.log_fluctuation}});
        const nlohmann::json doc = {
            {"meta",
             {{"input", opt.input},
              {"series", opt.series},
              {"window", length},
              {"data_quality", quality_to_json(loaded.quality)}}},
            {"records", nlohmann::json::array({record_to_json(record)})},
            {"fit",
             {{"scales", est.scales},
              {"fit_points", fit_points},
              {"r_squared", est.r_squared},
              {"std_err", est.std_err},
              {"poly_order", est.poly_order}}}};
        payload = doc.dump(2) + "\n";
    }
    write_output(payload, opt.output);
    return 0;
}

int cmd_roll(const CommonOptions& opt, std::size_t window, std::size_t step) {
    RunConfig config;
    config.input = opt.input;
    config.series = *parse_series_kind(opt.series);
    config.estimator = make_estimator(opt);
    config.window = WindowSpec{window, step};
    config.format = *parse_format(opt.format);
    config.schema = opt.schema;

    const PipelineReport report = run_pipeline(config);

    std::string payload;
    if (config.format == OutputFormat::csv) {
        payload = render_report_csv(report);
        print_stats_block(std::cerr, std::string(series_kind_name(config.series)) + " stats",
                          report.series_stats);
        print_stats_block(std::cerr, "hurst stats", report.hurst_stats);
        std::cerr << "input: rows=" << report.quality.rows
                  << " anomalies=" << report.quality.anomalies << " span "
                  << report.quality.first_date.to_string() << ".."
                  << report.quality.last_date.to_string()
                  << "; windows=" << report.rolling.window_count()
                  << " failed=" << report.rolling.failure_count() << "\n";
    } else {
        payload = render_report_json(config, report);
    }
    write_output(payload, opt.output);
    return 0;
}

int cmd_synth(const std::string& kind, std::size_t n, double h, double sigma, double drift,
              double vol, std::uint64_t seed, const std::string& output) {
    std::string payload;
    if (kind == "fgn") {
        const auto values = gen_fgn({n, h, sigma, seed});
        std::string out = "date,value\n";
        Date date{2020, 1, 1};
        char buf[40];
        for (double v : values) {
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            out += date.to_string();
            out += ',';
            out += buf;
            out += '\n';
            date = date.next();
        }
        payload = std::move(out);
    } else {
        const auto prices = gen_random_walk_prices(n, drift, vol, seed);
        std::ostringstream out;
        write_prices_csv(out, prices);
        payload = out.str();
    }
    write_output(payload, output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Time-varying Hurst exponent analysis of OHLC price series"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::size_t window = 500;
    std::size_t step = 1;

    auto* stats = app.add_subcommand("stats", "descriptive statistics of a derived series");
    add_input_options(*stats, opt);
    add_output_options(*stats, opt);

    auto* hurst = app.add_subcommand("hurst", "single-window Hurst estimate");
    add_input_options(*hurst, opt);
    add_estimator_options(*hurst, opt);
    add_output_options(*hurst, opt);
    std::size_t hurst_window = 0;
    hurst->add_option("--window", hurst_window,
                      "observations to use from the start (0 = whole series)")
        ->capture_default_str();

    auto* roll = app.add_subcommand("roll", "sliding-window Hurst series");
    add_input_options(*roll, opt);
    add_estimator_options(*roll, opt);
    add_output_options(*roll, opt);
    roll->add_option("--window", window, "sliding window length")->capture_default_str();
    roll->add_option("--step", step, "window step")->capture_default_str();

    auto* synth = app.add_subcommand("synth", "generate synthetic fixtures");
    std::string kind = "fgn";
    std::size_t n = 2000;
    double h = 0.7, sigma = 1.0, drift = 0.0, vol = 0.02;
    std::uint64_t seed = 0;
    std::string synth_output = "stdout";
    synth->add_option("--kind", kind, "fgn (date,value) or prices (OHLC random walk)")
        ->check(CLI::IsMember({"fgn", "prices"}))
        ->capture_default_str();
    synth->add_option("--n", n, "series length")->capture_default_str();
    synth->add_option("--hurst", h, "target Hurst exponent (fgn)")->capture_default_str();
    synth->add_option("--sigma", sigma, "noise scale (fgn)")->capture_default_str();
    synth->add_option("--drift", drift, "per-step log drift (prices)")->capture_default_str();
    synth->add_option("--vol", vol, "per-step log volatility (prices)")->capture_default_str();
    synth->add_option("--seed", seed, "random seed")->capture_default_str();
    synth->add_option("--output", synth_output, "output path, or 'stdout'")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (stats->parsed()) return cmd_stats(opt);
        if (hurst->parsed()) return cmd_hurst(opt, hurst_window);
        if (roll->parsed()) return cmd_roll(opt, window, step);
        if (synth->parsed()) return cmd_synth(kind, n, h, sigma, drift, vol, seed, synth_output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
