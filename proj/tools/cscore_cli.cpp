// cscore: cost-aware threshold selection from scored predictions.
//
// Exit codes: 0 success, 2 input parse/validation failure, 3 degenerate
// dataset, 4 infeasible geometry request.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cscore/cscore.hpp"
#include "cscore/io.hpp"
#include "cscore/report.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitInfeasible = 4;

int exit_code(cscore::ErrorKind kind) {
    switch (kind) {
        case cscore::ErrorKind::degenerate: return kExitDegenerate;
        case cscore::ErrorKind::infeasible:
        case cscore::ErrorKind::empty_curve: return kExitInfeasible;
        default: return kExitInput;
    }
}

std::vector<cscore::CostRatio> to_ratios(const std::vector<double>& values) {
    std::vector<cscore::CostRatio> out;
    out.reserve(values.size());
    for (double v : values) out.emplace_back(v);
    return out;
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        cscore::io::write_file(out_path, text);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cost-aware evaluation and thresholding of probabilistic classifiers"};
    app.set_version_flag("--version", std::string(cscore::kVersion));
    app.require_subcommand(1);

    std::string input;
    std::string out;
    std::string points_out;
    std::vector<double> ratios;

    auto* sweep_cmd = app.add_subcommand("sweep", "Metrics at every candidate threshold");
    sweep_cmd->add_option("--input", input, "score,label CSV")->required();
    sweep_cmd->add_option("--ratios", ratios, "cost ratios C_FN/C_FP")->delimiter(',')->required();
    sweep_cmd->add_option("--out", out, "JSON output path")->required();
    sweep_cmd->add_option("--points", points_out, "per-threshold CSV output path");

    std::string objective;
    double ratio = 1.0;
    auto* choose_cmd = app.add_subcommand("choose", "Pick the best threshold for one objective");
    choose_cmd->add_option("--input", input, "score,label CSV")->required();
    choose_cmd->add_option("--objective", objective)->check(CLI::IsMember({"f1", "cscore"}))->required();
    choose_cmd->add_option("--ratio", ratio, "cost ratio for --objective cscore");

    std::string format = "json";
    auto* compare_cmd = app.add_subcommand("compare", "F1-chosen versus cost-optimal thresholds per cost ratio");
    compare_cmd->add_option("--input", input, "score,label CSV")->required();
    compare_cmd->add_option("--ratios", ratios)->delimiter(',')->required();
    compare_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
    compare_cmd->add_option("--out", out, "output path (default stdout)");

    double log10_min = -2.0;
    double log10_max = 2.0;
    std::size_t steps = 41;
    auto* ratio_sweep_cmd = app.add_subcommand("ratio-sweep", "Cost improvement across a log10 grid of cost ratios");
    ratio_sweep_cmd->add_option("--input", input)->required();
    ratio_sweep_cmd->add_option("--log10-min", log10_min)->required();
    ratio_sweep_cmd->add_option("--log10-max", log10_max)->required();
    ratio_sweep_cmd->add_option("--steps", steps)->required();
    ratio_sweep_cmd->add_option("--out", out)->required();

    std::vector<double> levels;
    std::size_t n_points = 101;
    auto* isocost_cmd = app.add_subcommand("isocost", "Sample constant-cost contours in (recall, precision)");
    isocost_cmd->add_option("--ratio", ratio)->required();
    isocost_cmd->add_option("--levels", levels)->delimiter(',')->required();
    isocost_cmd->add_option("--points", n_points)->required();
    isocost_cmd->add_option("--out", out)->required();

    auto* f1_cmd = app.add_subcommand("f1-curves", "Sample constant-F1 contours in (recall, precision)");
    f1_cmd->add_option("--levels", levels)->delimiter(',')->required();
    f1_cmd->add_option("--points", n_points)->required();
    f1_cmd->add_option("--out", out)->required();

    cscore::SynthConfig synth_cfg;
    auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic two-mode scored dataset");
    synth_cmd->add_option("--n", synth_cfg.n)->required();
    synth_cmd->add_option("--positive-fraction", synth_cfg.positive_fraction)->required();
    synth_cmd->add_option("--separation", synth_cfg.separation)->required();
    synth_cmd->add_option("--noise-overlap", synth_cfg.noise_overlap)->required();
    synth_cmd->add_option("--seed", synth_cfg.seed)->required();
    synth_cmd->add_option("--out", out)->required();

    std::vector<double> thresholds;
    std::vector<double> weights;
    std::string aggregate_name = "arithmetic";
    auto* multiclass_cmd = app.add_subcommand("multiclass", "One-vs-rest cost scores with aggregation");
    multiclass_cmd->add_option("--input", input, "JSON lines with scores and true_class")->required();
    multiclass_cmd->add_option("--ratios", ratios, "one cost ratio per class")->delimiter(',')->required();
    multiclass_cmd->add_option("--thresholds", thresholds, "one threshold per class")->delimiter(',')->required();
    multiclass_cmd->add_option("--aggregate", aggregate_name)
        ->check(CLI::IsMember({"arithmetic", "weighted", "harmonic"}));
    multiclass_cmd->add_option("--weights", weights)->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInput;
    }

    try {
        if (sweep_cmd->parsed()) {
            const std::string text = cscore::io::read_file(input);
            const auto ds = cscore::io::parse_dataset(text);
            const auto sr = cscore::sweep(ds, to_ratios(ratios));
            emit(out, cscore::sweep_to_json(sr, cscore::io::sha256_digest(text)).dump(2) + "\n");
            if (!points_out.empty()) emit(points_out, cscore::sweep_points_csv(sr));
        } else if (choose_cmd->parsed()) {
            const auto ds = cscore::io::load_dataset(input);
            const cscore::CostRatio rc(ratio);
            const auto sr = cscore::sweep(ds, {rc});
            const auto choice = objective == "f1" ? cscore::best_f1_threshold(sr) : cscore::min_cost_threshold(sr, rc);
            std::cout << cscore::choice_to_json(choice).dump(2) << "\n";
        } else if (compare_cmd->parsed()) {
            const std::string text = cscore::io::read_file(input);
            const auto ds = cscore::io::parse_dataset(text);
            const auto report = cscore::make_report(ds, to_ratios(ratios), cscore::io::sha256_digest(text));
            emit(out, cscore::render_report(report, format == "table" ? cscore::ReportFormat::table
                                                                      : cscore::ReportFormat::json));
        } else if (ratio_sweep_cmd->parsed()) {
            const auto ds = cscore::io::load_dataset(input);
            emit(out, cscore::ratio_sweep_csv(cscore::ratio_sweep(ds, log10_min, log10_max, steps)));
        } else if (isocost_cmd->parsed()) {
            const cscore::CostRatio rc(ratio);
            std::vector<std::vector<cscore::CurvePoint>> curves;
            for (double level : levels) curves.push_back(cscore::sample_isocost(level, rc, n_points).points);
            emit(out, cscore::curves_csv(levels, curves));
        } else if (f1_cmd->parsed()) {
            std::vector<std::vector<cscore::CurvePoint>> curves;
            for (double level : levels) curves.push_back(cscore::sample_f1_isocurve(level, n_points).points);
            emit(out, cscore::curves_csv(levels, curves));
        } else if (synth_cmd->parsed()) {
            emit(out, cscore::io::format_dataset(cscore::generate(synth_cfg)));
        } else if (multiclass_cmd->parsed()) {
            const auto examples = cscore::io::parse_multiclass(cscore::io::read_file(input));
            const std::span<const cscore::MulticlassScoredExample> view(examples);
            const auto per_class = cscore::per_class_cscores(view, to_ratios(ratios), thresholds);
            cscore::AggregationMethod method = cscore::Arithmetic{};
            if (aggregate_name == "weighted") {
                method = cscore::Weighted{weights};
            } else if (aggregate_name == "harmonic") {
                method = cscore::Harmonic{};
            }
            nlohmann::ordered_json j;
            j["classes"] = per_class.size();
            j["per_class_cscores"] = per_class;
            j["aggregate_method"] = aggregate_name;
            j["aggregate"] = cscore::aggregate(per_class, method);
            j["version"] = cscore::kVersion;
            std::cout << j.dump(2) << "\n";
        }
    } catch (const cscore::Error& e) {
        std::cerr << "cscore: " << cscore::to_string(e.kind()) << " error: " << e.what() << "\n";
        return exit_code(e.kind());
    }
    return 0;
}
