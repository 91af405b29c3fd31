#ifndef CSCORE_THRESHOLD_SWEEP_HPP
#define CSCORE_THRESHOLD_SWEEP_HPP

// Empirical threshold selection over scored predictions.
//
// An example is predicted positive when score >= t. The candidate thresholds
// are the distinct observed scores plus one sentinel just above the maximum
// score, which together realize every achievable confusion matrix exactly
// once. Both objectives break ties towards the smallest threshold.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cscore/errors.hpp"
#include "cscore/metrics_core.hpp"

namespace cscore {

struct ScoredExample {
    double score = 0.0;  // predicted positive-class probability
    int label = 0;       // 1 = positive

    friend bool operator==(const ScoredExample&, const ScoredExample&) = default;
};

/// Non-empty sequence of scored examples with at least one positive label.
class ScoredDataset {
public:
    explicit ScoredDataset(std::vector<ScoredExample> examples) : examples_(std::move(examples)) {
        if (examples_.empty()) detail::fail(ErrorKind::degenerate, "dataset is empty");
        for (const auto& e : examples_) {
            if (!std::isfinite(e.score) || e.score < 0.0 || e.score > 1.0) {
                detail::fail(ErrorKind::range, "score out of [0,1]: " + std::to_string(e.score));
            }
            if (e.label != 0 && e.label != 1) {
                detail::fail(ErrorKind::range, "label must be 0 or 1, got " + std::to_string(e.label));
            }
            positives_ += static_cast<std::size_t>(e.label);
        }
        if (positives_ == 0) detail::fail(ErrorKind::degenerate, "dataset has no positive labels");
    }

    std::span<const ScoredExample> examples() const noexcept { return examples_; }
    std::size_t size() const noexcept { return examples_.size(); }
    std::size_t positives() const noexcept { return positives_; }
    std::size_t negatives() const noexcept { return examples_.size() - positives_; }

    friend bool operator==(const ScoredDataset&, const ScoredDataset&) = default;

private:
    std::vector<ScoredExample> examples_;
    std::size_t positives_ = 0;
};

struct MetricPoint {
    double threshold = 0.0;
    ConfusionMatrix cm;
    MetricSet metrics;
    std::map<CostRatio, double> cscores;

    double cscore(CostRatio rc) const {
        auto it = cscores.find(rc);
        if (it == cscores.end()) {
            detail::fail(ErrorKind::unknown_ratio, "cost ratio " + std::to_string(rc.value()) + " not in sweep");
        }
        return it->second;
    }
};

struct SweepResult {
    std::vector<MetricPoint> points;  // ascending threshold; last one is the sentinel
    std::vector<CostRatio> ratios;
    std::size_t total = 0;
    std::size_t positives = 0;
    std::size_t negatives = 0;
};

enum class Objective { max_f1, min_cscore };

struct ThresholdChoice {
    Objective objective = Objective::max_f1;
    std::optional<CostRatio> ratio;  // set for min_cscore
    double threshold = 0.0;
    MetricPoint point;
};

struct ImprovementEntry {
    CostRatio ratio{1.0};
    double f1_threshold = 0.0;
    std::optional<double> f1_precision;
    double f1_recall = 0.0;
    double cscore_at_f1 = 0.0;
    double cscore_threshold = 0.0;
    std::optional<double> cscore_precision;
    double cscore_recall = 0.0;
    double cscore_at_opt = 0.0;
    double improvement_pct = 0.0;
};

struct ImprovementReport {
    std::vector<ImprovementEntry> entries;
};

/// Smallest double strictly greater than every score of the dataset.
inline double sentinel_threshold(const ScoredDataset& ds) {
    double hi = 0.0;
    for (const auto& e : ds.examples()) hi = std::max(hi, e.score);
    return std::nextafter(hi, std::numeric_limits<double>::infinity());
}

inline std::vector<double> candidate_thresholds(const ScoredDataset& ds) {
    std::vector<double> out;
    out.reserve(ds.size() + 1);
    for (const auto& e : ds.examples()) out.push_back(e.score);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    out.push_back(sentinel_threshold(ds));
    return out;
}

inline ConfusionMatrix confusion_at(const ScoredDataset& ds, double t) {
    std::size_t tp = 0;
    std::size_t fp = 0;
    for (const auto& e : ds.examples()) {
        if (e.score >= t) (e.label == 1 ? tp : fp) += 1;
    }
    return ConfusionMatrix(static_cast<double>(tp), static_cast<double>(fp),
                           static_cast<double>(ds.positives() - tp), static_cast<double>(ds.negatives() - fp));
}

/// Percentage reduction in cost when moving from the F1-chosen threshold to
/// the cost-optimal one. Zero when the F1 threshold already costs nothing.
inline double improvement_pct(double cscore_at_f1, double cscore_at_opt) {
    if (cscore_at_f1 == 0.0) return 0.0;
    return 100.0 * (cscore_at_f1 - cscore_at_opt) / cscore_at_f1;
}

/// One pass over the examples sorted by descending score; the confusion
/// matrix at each distinct score comes from cumulative counts.
inline SweepResult sweep(const ScoredDataset& ds, std::span<const CostRatio> ratios) {
    if (ratios.empty()) detail::fail(ErrorKind::domain, "sweep needs at least one cost ratio");

    std::vector<ScoredExample> sorted(ds.examples().begin(), ds.examples().end());
    std::sort(sorted.begin(), sorted.end(),
              [](const ScoredExample& a, const ScoredExample& b) { return a.score > b.score; });

    SweepResult result;
    result.ratios.assign(ratios.begin(), ratios.end());
    result.total = ds.size();
    result.positives = ds.positives();
    result.negatives = ds.negatives();

    const auto p = static_cast<double>(ds.positives());
    const auto n = static_cast<double>(ds.negatives());

    auto make_point = [&](double threshold, double tp, double fp) {
        MetricPoint pt;
        pt.threshold = threshold;
        pt.cm = ConfusionMatrix(tp, fp, p - tp, n - fp);
        pt.metrics = basic_metrics(pt.cm);
        for (const auto& rc : ratios) pt.cscores.emplace(rc, cscore_counts(pt.cm, rc));
        return pt;
    };

    // Built from the top down, then reversed into ascending threshold order.
    std::vector<MetricPoint> points;
    points.reserve(sorted.size() + 1);
    points.push_back(make_point(sentinel_threshold(ds), 0, 0));

    double tp = 0.0;
    double fp = 0.0;
    for (std::size_t i = 0; i < sorted.size();) {
        const double s = sorted[i].score;
        for (; i < sorted.size() && sorted[i].score == s; ++i) {
            (sorted[i].label == 1 ? tp : fp) += 1.0;
        }
        points.push_back(make_point(s, tp, fp));
    }
    std::reverse(points.begin(), points.end());
    result.points = std::move(points);
    return result;
}

inline SweepResult sweep(const ScoredDataset& ds, std::initializer_list<CostRatio> ratios) {
    return sweep(ds, std::span<const CostRatio>(ratios.begin(), ratios.size()));
}

inline ThresholdChoice best_f1_threshold(const SweepResult& sr) {
    if (sr.points.empty()) detail::fail(ErrorKind::domain, "empty sweep");
    const MetricPoint* best = &sr.points.front();
    for (const auto& pt : sr.points) {
        if (pt.metrics.f1 > best->metrics.f1) best = &pt;
    }
    return ThresholdChoice{Objective::max_f1, std::nullopt, best->threshold, *best};
}

inline ThresholdChoice min_cost_threshold(const SweepResult& sr, CostRatio rc) {
    if (sr.points.empty()) detail::fail(ErrorKind::domain, "empty sweep");
    if (std::find(sr.ratios.begin(), sr.ratios.end(), rc) == sr.ratios.end()) {
        detail::fail(ErrorKind::unknown_ratio, "cost ratio " + std::to_string(rc.value()) + " not in sweep");
    }
    const MetricPoint* best = &sr.points.front();
    double best_cost = best->cscore(rc);
    for (const auto& pt : sr.points) {
        const double c = pt.cscore(rc);
        if (c < best_cost) {
            best = &pt;
            best_cost = c;
        }
    }
    return ThresholdChoice{Objective::min_cscore, rc, best->threshold, *best};
}

inline ImprovementReport improvement_report(const SweepResult& sr, std::span<const CostRatio> ratios) {
    const ThresholdChoice by_f1 = best_f1_threshold(sr);
    ImprovementReport report;
    report.entries.reserve(ratios.size());
    for (const auto& rc : ratios) {
        const ThresholdChoice by_cost = min_cost_threshold(sr, rc);
        ImprovementEntry e;
        e.ratio = rc;
        e.f1_threshold = by_f1.threshold;
        e.f1_precision = by_f1.point.metrics.precision;
        e.f1_recall = by_f1.point.metrics.recall;
        e.cscore_at_f1 = by_f1.point.cscore(rc);
        e.cscore_threshold = by_cost.threshold;
        e.cscore_precision = by_cost.point.metrics.precision;
        e.cscore_recall = by_cost.point.metrics.recall;
        e.cscore_at_opt = by_cost.point.cscore(rc);
        e.improvement_pct = improvement_pct(e.cscore_at_f1, e.cscore_at_opt);
        report.entries.push_back(e);
    }
    return report;
}

inline ImprovementReport improvement_report(const SweepResult& sr) { return improvement_report(sr, sr.ratios); }

struct RatioImprovement {
    double log10_ratio = 0.0;
    double improvement_pct = 0.0;
};

/// Improvement of cost-optimal over F1-optimal thresholding across a grid of
/// cost ratios evenly spaced in log10.
inline std::vector<RatioImprovement> ratio_sweep(const ScoredDataset& ds, double log10_min, double log10_max,
                                                 std::size_t steps) {
    if (steps < 2) detail::fail(ErrorKind::domain, "ratio sweep needs at least two steps");
    if (!(std::isfinite(log10_min) && std::isfinite(log10_max) && log10_min < log10_max)) {
        detail::fail(ErrorKind::domain, "ratio sweep needs finite log10_min < log10_max");
    }
    std::vector<double> grid(steps);
    std::vector<CostRatio> ratios;
    ratios.reserve(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        grid[i] = log10_min + (log10_max - log10_min) * static_cast<double>(i) / static_cast<double>(steps - 1);
        ratios.emplace_back(std::pow(10.0, grid[i]));
    }
    const SweepResult sr = sweep(ds, ratios);
    const ImprovementReport report = improvement_report(sr, ratios);
    std::vector<RatioImprovement> out(steps);
    for (std::size_t i = 0; i < steps; ++i) out[i] = {grid[i], report.entries[i].improvement_pct};
    return out;
}

}  // namespace cscore

#endif  // CSCORE_THRESHOLD_SWEEP_HPP
