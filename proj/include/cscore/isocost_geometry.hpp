#ifndef CSCORE_ISOCOST_GEOMETRY_HPP
#define CSCORE_ISOCOST_GEOMETRY_HPP

// Contours of constant F1 and constant cost score in (recall, precision)
// space. Only the part of a contour with precision in (0,1] is realizable by
// a confusion matrix, so points outside it are reported as infeasible.
//
// Cost contour at level C:  precision = R / (C + R (rc + 1) - rc)
//   slope dPrec/dR = (C - rc) / (C + R (rc + 1) - rc)^2
// F1 contour at level F:    precision = F R / (2R - F)
//   slope dPrec/dR = -F^2 / (2R - F)^2

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "cscore/errors.hpp"
#include "cscore/metrics_core.hpp"

namespace cscore {

enum class SlopeSign { negative, zero, positive };

inline const char* to_string(SlopeSign s) {
    switch (s) {
        case SlopeSign::negative: return "negative";
        case SlopeSign::zero: return "zero";
        case SlopeSign::positive: return "positive";
    }
    return "unknown";
}

struct CurvePoint {
    double recall = 0.0;
    double precision = 0.0;
};

struct IsocostCurve {
    CostRatio rc{1.0};
    double level = 0.0;
    std::vector<CurvePoint> points;  // ascending recall
};

struct F1Isocurve {
    double level = 0.0;
    std::vector<CurvePoint> points;  // ascending recall
};

namespace detail {

inline void check_recall(double recall) {
    if (!(recall > 0.0 && recall <= 1.0)) fail(ErrorKind::domain, "recall must lie in (0,1], got " + std::to_string(recall));
}

inline void check_level(double level) {
    if (!std::isfinite(level) || level < 0.0) fail(ErrorKind::domain, "cost level must be finite and non-negative");
}

inline void check_f1(double f1) {
    if (!(f1 > 0.0 && f1 <= 1.0)) fail(ErrorKind::domain, "f1 level must lie in (0,1], got " + std::to_string(f1));
}

// C + R (rc + 1) - rc, after checking that R / D is a precision in (0,1].
inline double isocost_denominator(double recall, double level, CostRatio rc) {
    check_recall(recall);
    check_level(level);
    const double r = rc.value();
    const double d = level + recall * (r + 1.0) - r;
    if (!(d > 0.0) || recall / d > 1.0) {
        fail(ErrorKind::infeasible, "no precision in (0,1] reaches cost " + std::to_string(level) + " at recall " +
                                        std::to_string(recall));
    }
    return d;
}

inline double f1_denominator(double recall, double f1) {
    check_recall(recall);
    check_f1(f1);
    const double d = 2.0 * recall - f1;
    if (!(d > 0.0)) fail(ErrorKind::infeasible, "f1 isocurve undefined where 2*recall <= f1");
    return d;
}

// Evenly spaced recalls over [lower, 1]. A lower bound of 0 is open, so the
// grid becomes 1/n, 2/n, ..., 1 instead.
inline std::vector<double> recall_grid(double lower, std::size_t n_points) {
    std::vector<double> grid;
    if (lower >= 1.0) {
        grid.push_back(1.0);
        return grid;
    }
    grid.reserve(n_points);
    if (lower <= 0.0) {
        for (std::size_t i = 1; i <= n_points; ++i) grid.push_back(static_cast<double>(i) / static_cast<double>(n_points));
    } else {
        for (std::size_t i = 0; i < n_points; ++i) {
            grid.push_back(lower + (1.0 - lower) * static_cast<double>(i) / static_cast<double>(n_points - 1));
        }
        grid.back() = 1.0;
    }
    return grid;
}

}  // namespace detail

inline double isocost_precision(double recall, double level, CostRatio rc) {
    return recall / detail::isocost_denominator(recall, level, rc);
}

inline double f1_isocurve_precision(double recall, double f1) {
    const double prec = f1 * recall / detail::f1_denominator(recall, f1);
    if (prec > 1.0) detail::fail(ErrorKind::infeasible, "f1 isocurve precision exceeds 1 at this recall");
    return prec;
}

inline double cscore_slope(double recall, double level, CostRatio rc) {
    const double d = detail::isocost_denominator(recall, level, rc);
    return (level - rc.value()) / (d * d);
}

inline double f1_slope(double recall, double f1) {
    const double d = detail::f1_denominator(recall, f1);
    return -(f1 * f1) / (d * d);
}

/// Exact comparison of level against rc.
inline SlopeSign slope_sign(double level, CostRatio rc) {
    if (level > rc.value()) return SlopeSign::positive;
    if (level < rc.value()) return SlopeSign::negative;
    return SlopeSign::zero;
}

/// Shifts k positives from FN to TP and rc*k negatives from TN to FP, which
/// leaves FP + rc*FN and therefore the cost score unchanged.
inline ConfusionMatrix equal_cost_shift(const ConfusionMatrix& base, CostRatio rc, double k) {
    if (!std::isfinite(k)) detail::fail(ErrorKind::domain, "k must be finite");
    const double rk = rc.value() * k;
    const double tp = base.tp() + k;
    const double fp = base.fp() + rk;
    const double fn = base.fn() - k;
    const double tn = base.tn() - rk;
    if (tp < 0.0 || fp < 0.0 || fn < 0.0 || tn < 0.0) {
        detail::fail(ErrorKind::domain, "k moves a confusion-matrix count below zero");
    }
    return ConfusionMatrix(tp, fp, fn, tn);
}

/// Samples the feasible part of a cost contour. Feasibility is
/// recall >= 1 - level/rc, so the curve always reaches recall 1. The lower
/// end is the point where precision reaches 1 and is emitted as such.
inline IsocostCurve sample_isocost(double level, CostRatio rc, std::size_t n_points) {
    detail::check_level(level);
    if (n_points < 2) detail::fail(ErrorKind::domain, "isocost sampling needs at least two points");
    IsocostCurve curve{rc, level, {}};
    const double lower = 1.0 - level / rc.value();
    for (double r : detail::recall_grid(lower, n_points)) {
        if (r == lower) {
            curve.points.push_back({r, 1.0});
            continue;
        }
        try {
            curve.points.push_back({r, isocost_precision(r, level, rc)});
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::infeasible) throw;
        }
    }
    if (curve.points.empty()) detail::fail(ErrorKind::empty_curve, "no feasible recall for this cost level");
    return curve;
}

/// Samples the feasible part of an F1 contour, recall in [f1/(2-f1), 1].
inline F1Isocurve sample_f1_isocurve(double f1, std::size_t n_points) {
    detail::check_f1(f1);
    if (n_points < 2) detail::fail(ErrorKind::domain, "isocurve sampling needs at least two points");
    F1Isocurve curve{f1, {}};
    const double lower = f1 / (2.0 - f1);
    for (double r : detail::recall_grid(lower, n_points)) {
        if (r == lower) {
            curve.points.push_back({r, 1.0});
            continue;
        }
        try {
            curve.points.push_back({r, f1_isocurve_precision(r, f1)});
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::infeasible) throw;
        }
    }
    if (curve.points.empty()) detail::fail(ErrorKind::empty_curve, "no feasible recall for this f1 level");
    return curve;
}

}  // namespace cscore

#endif  // CSCORE_ISOCOST_GEOMETRY_HPP
