#ifndef CSCORE_METRICS_CORE_HPP
#define CSCORE_METRICS_CORE_HPP

// Confusion-matrix metrics and the cost score.
//
// The cost score of a classifier operating point is
//
//     C = (FP + rc * FN) / p  =  (1/precision - 1 - rc) * recall + rc
//
// where rc = C_FN / C_FP. It is proportional to the total misclassification
// cost C_FP * (FP + rc * FN) for a fixed dataset, is 0 for a perfect
// classifier and equals rc for the all-negative classifier. Three equivalent
// computations are provided; the count form is canonical and the precision/
// recall and TPR/FPR forms are views onto it.

#include <cmath>
#include <compare>
#include <optional>
#include <string>

#include "cscore/errors.hpp"

namespace cscore {

/// Ratio of the cost of one false negative to the cost of one false positive.
class CostRatio {
public:
    explicit CostRatio(double value) : value_(value) {
        if (!std::isfinite(value) || value <= 0.0) {
            detail::fail(ErrorKind::domain, "cost ratio must be positive and finite, got " + std::to_string(value));
        }
    }

    double value() const noexcept { return value_; }

    friend auto operator<=>(const CostRatio&, const CostRatio&) = default;
    friend bool operator==(const CostRatio&, const CostRatio&) = default;

private:
    double value_;
};

/// Binary confusion matrix. Counts are non-negative reals so that scaled and
/// parameterized families of matrices are representable.
class ConfusionMatrix {
public:
    ConfusionMatrix() = default;

    ConfusionMatrix(double tp, double fp, double fn, double tn) : tp_(tp), fp_(fp), fn_(fn), tn_(tn) {
        for (double c : {tp, fp, fn, tn}) {
            if (!std::isfinite(c) || c < 0.0) {
                detail::fail(ErrorKind::domain, "confusion matrix counts must be finite and non-negative");
            }
        }
    }

    double tp() const noexcept { return tp_; }
    double fp() const noexcept { return fp_; }
    double fn() const noexcept { return fn_; }
    double tn() const noexcept { return tn_; }

    /// Ground-truth positives.
    double positives() const noexcept { return tp_ + fn_; }
    /// Ground-truth negatives.
    double negatives() const noexcept { return fp_ + tn_; }
    double predicted_positives() const noexcept { return tp_ + fp_; }
    double predicted_negatives() const noexcept { return fn_ + tn_; }
    double total() const noexcept { return positives() + negatives(); }

    friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;

private:
    double tp_ = 0.0;
    double fp_ = 0.0;
    double fn_ = 0.0;
    double tn_ = 0.0;
};

/// Rates derived from a confusion matrix. A rate whose denominator is zero is
/// std::nullopt rather than 0 or NaN.
struct MetricSet {
    std::optional<double> precision;  // P(V|A), undefined when nothing is predicted positive
    double recall = 0.0;              // P(A|V) = TPR
    std::optional<double> fpr;        // P(A|not V), undefined when there are no negatives
    std::optional<double> tnr;        // P(not A|not V)
    double base_rate = 0.0;           // P(V) = p / N
    double f1 = 0.0;

    /// P(not V|A); undefined together with precision.
    std::optional<double> false_discovery_rate() const {
        if (!precision) return std::nullopt;
        return 1.0 - *precision;
    }
};

namespace detail {

inline void require_positives(const ConfusionMatrix& cm) {
    if (!(cm.positives() > 0.0)) {
        fail(ErrorKind::degenerate, "confusion matrix has no ground-truth positives");
    }
}

inline void require_unit(double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0)) {
        fail(ErrorKind::domain, std::string(name) + " must lie in [0,1], got " + std::to_string(x));
    }
}

}  // namespace detail

/// 2TP / (2TP + FP + FN); 0 when nothing is predicted positive.
inline double f1_score(const ConfusionMatrix& cm) {
    const double denom = 2.0 * cm.tp() + cm.fp() + cm.fn();
    if (cm.predicted_positives() == 0.0 || denom == 0.0) return 0.0;
    return 2.0 * cm.tp() / denom;
}

inline MetricSet basic_metrics(const ConfusionMatrix& cm) {
    detail::require_positives(cm);
    MetricSet m;
    const double p = cm.positives();
    const double n = cm.negatives();
    const double predicted = cm.predicted_positives();
    if (predicted > 0.0) m.precision = cm.tp() / predicted;
    m.recall = cm.tp() / p;
    if (n > 0.0) {
        m.fpr = cm.fp() / n;
        m.tnr = cm.tn() / n;
    }
    m.base_rate = p / cm.total();
    m.f1 = f1_score(cm);
    return m;
}

/// Cost-style transform of F1: 1/F1 - 1. F1 = 0 has no finite cost and is
/// rejected.
inline double f1_cost(double f1) {
    if (!(f1 > 0.0 && f1 <= 1.0)) {
        detail::fail(ErrorKind::domain, "f1_cost requires f1 in (0,1], got " + std::to_string(f1));
    }
    return 1.0 / f1 - 1.0;
}

/// Canonical cost score (FP + rc * FN) / p. Defined even when precision is
/// undefined, where it reduces to rc.
inline double cscore_counts(const ConfusionMatrix& cm, CostRatio rc) {
    detail::require_positives(cm);
    // Split per count so the all-positive and all-negative ends come out as
    // exactly neg/p and rc.
    const double p = cm.positives();
    return cm.fp() / p + rc.value() * (cm.fn() / p);
}

/// Cost score from precision and recall. At recall 0 the value is rc whatever
/// the precision (the all-negative limit).
inline double cscore_pr(double precision, double recall, CostRatio rc) {
    detail::require_unit(precision, "precision");
    detail::require_unit(recall, "recall");
    if (recall == 0.0) return rc.value();
    if (precision == 0.0) {
        detail::fail(ErrorKind::domain, "cost score is unbounded at precision 0 with positive recall");
    }
    // Same value as (1/prec - 1 - rc) R + rc, regrouped into two non-negative
    // terms to avoid cancellation when rc is large.
    return (1.0 - precision) / precision * recall + rc.value() * (1.0 - recall);
}

inline double cscore_pr(const MetricSet& m, CostRatio rc) {
    if (!m.precision) {
        if (m.recall == 0.0) return rc.value();
        detail::fail(ErrorKind::domain, "precision undefined with positive recall");
    }
    return cscore_pr(*m.precision, m.recall, rc);
}

/// Cost score in TPR/FPR form: FPR + P(V) (rc - rc TPR - FPR). Equals
/// base_rate * cscore_counts for the matching matrix.
inline double cscore_rates(double tpr, double fpr, double base_rate, CostRatio rc) {
    detail::require_unit(tpr, "tpr");
    detail::require_unit(fpr, "fpr");
    if (!(base_rate > 0.0 && base_rate < 1.0)) {
        detail::fail(ErrorKind::domain, "base rate must lie in (0,1), got " + std::to_string(base_rate));
    }
    const double r = rc.value();
    return fpr * (1.0 - base_rate) + base_rate * r * (1.0 - tpr);
}

/// Total misclassification cost c_fp * (FP + rc * FN), in the currency of c_fp.
inline double total_cost(const ConfusionMatrix& cm, double c_fp, CostRatio rc) {
    if (!std::isfinite(c_fp) || c_fp <= 0.0) {
        detail::fail(ErrorKind::domain, "cost of a false positive must be positive and finite");
    }
    return c_fp * (cm.fp() + rc.value() * cm.fn());
}

}  // namespace cscore

#endif  // CSCORE_METRICS_CORE_HPP
