#ifndef CSCORE_TESTS_FIXTURES_HPP
#define CSCORE_TESTS_FIXTURES_HPP

// Random generators and brute-force oracles shared by the property and
// acceptance suites. The oracles count directly over the raw examples and do
// not call into the sweep code.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "cscore/cscore.hpp"

namespace cscore::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : eng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
    std::size_t index(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(eng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }

    /// Log-uniform cost ratio in [1e-3, 1e3].
    CostRatio ratio() { return CostRatio(std::pow(10.0, uniform(-3.0, 3.0))); }

    /// Integer-valued matrix with at least one positive; other counts may be 0.
    ConfusionMatrix matrix(std::size_t max_count = 1000) {
        const double tp = static_cast<double>(index(0, max_count));
        const double fn = static_cast<double>(index(tp == 0 ? 1 : 0, max_count));
        return ConfusionMatrix(tp, static_cast<double>(index(0, max_count)), fn,
                               static_cast<double>(index(0, max_count)));
    }

    /// Small dataset on a coarse score grid so that ties are common.
    ScoredDataset dataset(std::size_t max_n) {
        const std::size_t n = index(1, max_n);
        const std::size_t levels = index(1, 20);
        std::vector<ScoredExample> ex(n);
        for (auto& e : ex) {
            e.label = coin(uniform(0.05, 0.9)) ? 1 : 0;
            e.score = static_cast<double>(index(0, levels)) / static_cast<double>(levels);
        }
        ex[index(0, n - 1)].label = 1;
        return ScoredDataset(std::move(ex));
    }

    SynthConfig synth_config(std::size_t n_min, std::size_t n_max) {
        SynthConfig cfg;
        cfg.n = index(n_min, n_max);
        cfg.positive_fraction = uniform(0.05, 0.6);
        while (synth_positive_count(cfg) < 1) cfg.positive_fraction = uniform(0.05, 0.6);
        cfg.separation = uniform(0.1, 1.0);
        cfg.noise_overlap = uniform(0.0, 0.3);
        cfg.seed = eng_();
        return cfg;
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

struct OracleCounts {
    double threshold;
    double tp, fp, fn, tn;
};

/// Every distinct score plus a value above the maximum, each with counts
/// obtained by scanning the full dataset.
inline std::vector<OracleCounts> brute_force_counts(const ScoredDataset& ds) {
    std::vector<double> ts;
    double hi = 0.0;
    for (const auto& e : ds.examples()) {
        if (std::find(ts.begin(), ts.end(), e.score) == ts.end()) ts.push_back(e.score);
        hi = std::max(hi, e.score);
    }
    std::sort(ts.begin(), ts.end());
    ts.push_back(std::nextafter(hi, 2.0));
    std::vector<OracleCounts> out;
    for (double t : ts) {
        OracleCounts c{t, 0, 0, 0, 0};
        for (const auto& e : ds.examples()) {
            const bool pos = e.score >= t;
            if (e.label == 1) (pos ? c.tp : c.fn) += 1;
            else (pos ? c.fp : c.tn) += 1;
        }
        out.push_back(c);
    }
    return out;
}

inline double oracle_f1(const OracleCounts& c) {
    if (c.tp + c.fp == 0) return 0.0;
    return 2 * c.tp / (2 * c.tp + c.fp + c.fn);
}

// Rounded the same way as the library so that exact ties compare equal.
inline double oracle_cost(const OracleCounts& c, double rc) {
    const double p = c.tp + c.fn;
    return c.fp / p + rc * (c.fn / p);
}

/// Index of the best entry; first (smallest threshold) wins ties.
template <typename Better>
std::size_t oracle_argbest(const std::vector<OracleCounts>& all, Better better) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < all.size(); ++i) {
        if (better(all[i], all[best])) best = i;
    }
    return best;
}

inline double relative_error(double a, double b) {
    const double scale = std::max({std::abs(a), std::abs(b), std::numeric_limits<double>::min()});
    return std::abs(a - b) / scale;
}

}  // namespace cscore::testing

#endif  // CSCORE_TESTS_FIXTURES_HPP
