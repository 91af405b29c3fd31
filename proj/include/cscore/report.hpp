#ifndef CSCORE_REPORT_HPP
#define CSCORE_REPORT_HPP

// Serialization of threshold comparisons and plot series.
//
// JSON carries every number at full (round-trip) precision; the table form is
// for reading and rounds to 6 significant digits. Both are byte-deterministic.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "cscore/isocost_geometry.hpp"
#include "cscore/metrics_core.hpp"
#include "cscore/threshold_sweep.hpp"
#include "cscore/version.hpp"

namespace cscore {

struct DatasetSummary {
    std::size_t total = 0;
    std::size_t positives = 0;
    std::size_t negatives = 0;
    double base_rate = 0.0;
    std::string digest;
};

struct Report {
    DatasetSummary dataset;
    ThresholdChoice f1_choice;
    std::vector<ThresholdChoice> cost_choices;
    ImprovementReport improvements;
    std::string version = kVersion;
};

inline Report make_report(const ScoredDataset& ds, std::span<const CostRatio> ratios, std::string digest) {
    const SweepResult sr = sweep(ds, ratios);
    Report r;
    r.dataset = {sr.total, sr.positives, sr.negatives,
                 static_cast<double>(sr.positives) / static_cast<double>(sr.total), std::move(digest)};
    r.f1_choice = best_f1_threshold(sr);
    for (const auto& rc : ratios) r.cost_choices.push_back(min_cost_threshold(sr, rc));
    r.improvements = improvement_report(sr, ratios);
    return r;
}

namespace detail {

inline nlohmann::ordered_json optional_number(const std::optional<double>& v) {
    if (v) return *v;
    return nullptr;
}

inline std::string table_number(double v) { return fmt::format("{:.6g}", v); }

inline std::string table_number(const std::optional<double>& v) { return v ? table_number(*v) : std::string("-"); }

// Shortest round-trip text; empty for an undefined value.
inline std::string csv_number(double v) { return fmt::format("{}", v); }

inline std::string csv_number(const std::optional<double>& v) { return v ? csv_number(*v) : std::string(); }

}  // namespace detail

inline nlohmann::ordered_json choice_to_json(const ThresholdChoice& c) {
    nlohmann::ordered_json j;
    j["objective"] = c.objective == Objective::max_f1 ? "f1" : "cscore";
    if (c.ratio) j["ratio"] = c.ratio->value();
    j["threshold"] = c.threshold;
    j["tp"] = c.point.cm.tp();
    j["fp"] = c.point.cm.fp();
    j["fn"] = c.point.cm.fn();
    j["tn"] = c.point.cm.tn();
    j["precision"] = detail::optional_number(c.point.metrics.precision);
    j["recall"] = c.point.metrics.recall;
    j["f1"] = c.point.metrics.f1;
    if (c.ratio) j["cscore"] = c.point.cscore(*c.ratio);
    return j;
}

inline nlohmann::ordered_json report_to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["dataset"] = {{"n", r.dataset.total},
                    {"p", r.dataset.positives},
                    {"neg", r.dataset.negatives},
                    {"base_rate", r.dataset.base_rate},
                    {"digest", r.dataset.digest}};
    j["f1_choice"] = {{"threshold", r.f1_choice.threshold},
                      {"precision", detail::optional_number(r.f1_choice.point.metrics.precision)},
                      {"recall", r.f1_choice.point.metrics.recall},
                      {"f1", r.f1_choice.point.metrics.f1}};
    j["cost_choices"] = nlohmann::ordered_json::array();
    for (const auto& c : r.cost_choices) {
        j["cost_choices"].push_back({{"ratio", c.ratio->value()},
                                     {"threshold", c.threshold},
                                     {"precision", detail::optional_number(c.point.metrics.precision)},
                                     {"recall", c.point.metrics.recall},
                                     {"cscore", c.point.cscore(*c.ratio)}});
    }
    j["improvements"] = nlohmann::ordered_json::array();
    for (const auto& e : r.improvements.entries) {
        j["improvements"].push_back({{"ratio", e.ratio.value()},
                                     {"cscore_at_f1", e.cscore_at_f1},
                                     {"cscore_at_opt", e.cscore_at_opt},
                                     {"improvement_pct", e.improvement_pct}});
    }
    j["version"] = r.version;
    return j;
}

/// Table layout: one body row per cost ratio, F1-chosen operating point on
/// the left and the cost-optimal one on the right.
inline std::string render_table(const Report& r) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"Cost ratio", "F1 threshold", "Precision", "Recall", "C_score", "C_score threshold", "Precision",
                    "Recall", "C_score", "Improvement %"});
    for (const auto& e : r.improvements.entries) {
        rows.push_back({detail::table_number(e.ratio.value()), detail::table_number(e.f1_threshold),
                        detail::table_number(e.f1_precision), detail::table_number(e.f1_recall),
                        detail::table_number(e.cscore_at_f1), detail::table_number(e.cscore_threshold),
                        detail::table_number(e.cscore_precision), detail::table_number(e.cscore_recall),
                        detail::table_number(e.cscore_at_opt), detail::table_number(e.improvement_pct)});
    }
    std::vector<std::size_t> width(rows.front().size(), 0);
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    std::string out = fmt::format("dataset: n={} p={} neg={} base_rate={} digest={}\n", r.dataset.total,
                                  r.dataset.positives, r.dataset.negatives, detail::table_number(r.dataset.base_rate),
                                  r.dataset.digest);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        std::string line;
        for (std::size_t i = 0; i < rows[k].size(); ++i) {
            if (i > 0) line += "  ";
            line += fmt::format("{:>{}}", rows[k][i], width[i]);
        }
        out += line + "\n";
        if (k == 0) {
            std::size_t total = 0;
            for (auto w : width) total += w;
            out += std::string(total + 2 * (width.size() - 1), '-') + "\n";
        }
    }
    return out;
}

enum class ReportFormat { json, table };

inline std::string render_report(const Report& r, ReportFormat format) {
    if (format == ReportFormat::json) return report_to_json(r).dump(2) + "\n";
    return render_table(r);
}

inline nlohmann::ordered_json sweep_to_json(const SweepResult& sr, const std::string& digest) {
    nlohmann::ordered_json j;
    j["dataset"] = {{"n", sr.total},
                    {"p", sr.positives},
                    {"neg", sr.negatives},
                    {"base_rate", static_cast<double>(sr.positives) / static_cast<double>(sr.total)},
                    {"digest", digest}};
    j["ratios"] = nlohmann::ordered_json::array();
    for (const auto& rc : sr.ratios) j["ratios"].push_back(rc.value());
    j["points"] = nlohmann::ordered_json::array();
    for (const auto& pt : sr.points) {
        nlohmann::ordered_json p;
        p["threshold"] = pt.threshold;
        p["tp"] = pt.cm.tp();
        p["fp"] = pt.cm.fp();
        p["fn"] = pt.cm.fn();
        p["tn"] = pt.cm.tn();
        p["precision"] = detail::optional_number(pt.metrics.precision);
        p["recall"] = pt.metrics.recall;
        p["fpr"] = detail::optional_number(pt.metrics.fpr);
        p["f1"] = pt.metrics.f1;
        p["cscores"] = nlohmann::ordered_json::array();
        for (const auto& rc : sr.ratios) p["cscores"].push_back({{"ratio", rc.value()}, {"cscore", pt.cscore(rc)}});
        j["points"].push_back(std::move(p));
    }
    j["version"] = kVersion;
    return j;
}

/// Per-threshold series: threshold,tp,fp,fn,tn,precision,recall,f1 and one
/// cscore_<ratio> column per ratio.
inline std::string sweep_points_csv(const SweepResult& sr) {
    std::string out = "threshold,tp,fp,fn,tn,precision,recall,f1";
    for (const auto& rc : sr.ratios) out += ",cscore_" + detail::csv_number(rc.value());
    out += "\n";
    for (const auto& pt : sr.points) {
        out += fmt::format("{},{},{},{},{},{},{},{}", detail::csv_number(pt.threshold), detail::csv_number(pt.cm.tp()),
                           detail::csv_number(pt.cm.fp()), detail::csv_number(pt.cm.fn()),
                           detail::csv_number(pt.cm.tn()), detail::csv_number(pt.metrics.precision),
                           detail::csv_number(pt.metrics.recall), detail::csv_number(pt.metrics.f1));
        for (const auto& rc : sr.ratios) out += "," + detail::csv_number(pt.cscore(rc));
        out += "\n";
    }
    return out;
}

inline std::string ratio_sweep_csv(std::span<const RatioImprovement> series) {
    std::string out = "log10_ratio,improvement_pct\n";
    for (const auto& s : series) {
        out += fmt::format("{},{}\n", detail::csv_number(s.log10_ratio), detail::csv_number(s.improvement_pct));
    }
    return out;
}

/// level,recall,precision rows for any number of sampled contours.
inline std::string curves_csv(std::span<const double> levels, std::span<const std::vector<CurvePoint>> curves) {
    std::string out = "level,recall,precision\n";
    for (std::size_t i = 0; i < curves.size(); ++i) {
        for (const auto& p : curves[i]) {
            out += fmt::format("{},{},{}\n", detail::csv_number(levels[i]), detail::csv_number(p.recall),
                               detail::csv_number(p.precision));
        }
    }
    return out;
}

}  // namespace cscore

#endif  // CSCORE_REPORT_HPP
