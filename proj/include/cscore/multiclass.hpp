#ifndef CSCORE_MULTICLASS_HPP
#define CSCORE_MULTICLASS_HPP

// One-vs-rest cost scores. Every class c gets its own cost ratio and decision
// threshold; the examples are reduced to the binary problem "c versus the
// rest" and scored with the binary pipeline. Multilabel data goes through the
// same path with one independent binary problem per label column.

#include <cmath>
#include <concepts>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cscore/errors.hpp"
#include "cscore/metrics_core.hpp"
#include "cscore/threshold_sweep.hpp"

namespace cscore {

struct MulticlassScoredExample {
    std::vector<double> scores;  // one per class, need not sum to 1
    std::size_t true_class = 0;

    bool is_member(std::size_t c) const noexcept { return true_class == c; }
};

struct MultilabelScoredExample {
    std::vector<double> scores;
    std::vector<bool> labels;  // labels[c] set when the example carries label c

    bool is_member(std::size_t c) const noexcept { return c < labels.size() && labels[c]; }
};

template <typename T>
concept OneVsRestExample = requires(const T& e, std::size_t c) {
    { e.scores } -> std::convertible_to<std::vector<double>>;
    { e.is_member(c) } -> std::same_as<bool>;
};

/// Class index -> cost ratio.
using ClassCostProfile = std::vector<CostRatio>;

struct Arithmetic {};
struct Harmonic {};
struct Weighted {
    std::vector<double> weights;  // non-negative, summing to 1
};
using AggregationMethod = std::variant<Arithmetic, Weighted, Harmonic>;

template <OneVsRestExample Example>
std::size_t class_count(std::span<const Example> ds) {
    if (ds.empty()) detail::fail(ErrorKind::degenerate, "no examples");
    const std::size_t k = ds.front().scores.size();
    if (k < 2) detail::fail(ErrorKind::domain, "need at least two classes");
    for (const auto& e : ds) {
        if (e.scores.size() != k) detail::fail(ErrorKind::length_mismatch, "examples disagree on the number of classes");
    }
    return k;
}

template <OneVsRestExample Example>
ScoredDataset binarize(std::span<const Example> ds, std::size_t c) {
    const std::size_t k = class_count(ds);
    if (c >= k) detail::fail(ErrorKind::domain, "class index " + std::to_string(c) + " out of range");
    std::vector<ScoredExample> out;
    out.reserve(ds.size());
    bool any = false;
    for (const auto& e : ds) {
        const bool member = e.is_member(c);
        any = any || member;
        out.push_back({e.scores[c], member ? 1 : 0});
    }
    if (!any) detail::fail(ErrorKind::degenerate, "class " + std::to_string(c) + " has no members");
    return ScoredDataset(std::move(out));
}

template <OneVsRestExample Example>
std::vector<double> per_class_cscores(std::span<const Example> ds, const ClassCostProfile& profile,
                                      std::span<const double> thresholds) {
    const std::size_t k = class_count(ds);
    if (profile.size() != k || thresholds.size() != k) {
        detail::fail(ErrorKind::length_mismatch, "need one cost ratio and one threshold per class");
    }
    std::vector<double> out(k);
    for (std::size_t c = 0; c < k; ++c) {
        out[c] = cscore_counts(confusion_at(binarize(ds, c), thresholds[c]), profile[c]);
    }
    return out;
}

inline double aggregate(std::span<const double> values, const AggregationMethod& method) {
    if (values.empty()) detail::fail(ErrorKind::domain, "cannot aggregate an empty sequence");
    for (double v : values) {
        if (!std::isfinite(v) || v < 0.0) detail::fail(ErrorKind::domain, "aggregated values must be finite and non-negative");
    }
    const auto n = static_cast<double>(values.size());
    if (std::holds_alternative<Arithmetic>(method)) {
        return std::accumulate(values.begin(), values.end(), 0.0) / n;
    }
    if (const auto* w = std::get_if<Weighted>(&method)) {
        if (w->weights.size() != values.size()) {
            detail::fail(ErrorKind::length_mismatch, "weights and values differ in length");
        }
        double sum = 0.0;
        for (double x : w->weights) {
            if (!std::isfinite(x) || x < 0.0) detail::fail(ErrorKind::domain, "weights must be non-negative");
            sum += x;
        }
        if (std::abs(sum - 1.0) > 1e-12) detail::fail(ErrorKind::domain, "weights must sum to 1");
        return std::inner_product(values.begin(), values.end(), w->weights.begin(), 0.0);
    }
    // Harmonic mean; a zero component pulls the mean to its limit 0.
    double inv = 0.0;
    for (double v : values) {
        if (v == 0.0) return 0.0;
        inv += 1.0 / v;
    }
    return n / inv;
}

}  // namespace cscore

#endif  // CSCORE_MULTICLASS_HPP
