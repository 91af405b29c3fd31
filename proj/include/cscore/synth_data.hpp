#ifndef CSCORE_SYNTH_DATA_HPP
#define CSCORE_SYNTH_DATA_HPP

// Deterministic two-mode synthetic scores.
//
// Generator (fixed; golden tests depend on it):
//   * engine: std::mt19937_64 seeded with cfg.seed. Its output sequence is
//     fixed by the standard, and only raw 64-bit draws are used, so no
//     library distribution enters the result.
//   * uniform u in [0,1): (draw >> 11) * 2^-53.
//   * positives = llround(n * positive_fraction). Labels start as
//     [1]*positives + [0]*negatives and are shuffled by Fisher-Yates from the
//     back, index j drawn uniformly in [0, i] by rejection sampling.
//   * then, for each example in order, five uniforms u1..u5 are drawn:
//       noise = (u1 + u2 + u3 + u4 - 2) / 4            in [-0.5, 0.5)
//       mode  = label's own mode, or the opposite one when u5 < noise_overlap
//       score = clamp(center(mode) + noise, 0, 1)
//     with centers 0.5 +/- separation/2 (high mode for positives).
// Only +, -, *, / and comparisons are applied to the draws, so the output is
// bit-identical on any IEEE-754 platform.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "cscore/errors.hpp"
#include "cscore/threshold_sweep.hpp"

namespace cscore {

struct SynthConfig {
    std::size_t n = 1000;
    double positive_fraction = 0.1;
    double separation = 0.5;
    double noise_overlap = 0.0;
    std::uint64_t seed = 0;
};

inline std::size_t synth_positive_count(const SynthConfig& cfg) {
    return static_cast<std::size_t>(std::llround(static_cast<double>(cfg.n) * cfg.positive_fraction));
}

inline void validate(const SynthConfig& cfg) {
    if (cfg.n < 2) detail::fail(ErrorKind::config, "n must be at least 2");
    if (!(cfg.positive_fraction > 0.0 && cfg.positive_fraction < 1.0)) {
        detail::fail(ErrorKind::config, "positive_fraction must lie in (0,1)");
    }
    if (!(std::isfinite(cfg.separation) && cfg.separation > 0.0)) {
        detail::fail(ErrorKind::config, "separation must be positive and finite");
    }
    if (!(cfg.noise_overlap >= 0.0 && cfg.noise_overlap <= 1.0)) {
        detail::fail(ErrorKind::config, "noise_overlap must lie in [0,1]");
    }
    if (synth_positive_count(cfg) < 1) detail::fail(ErrorKind::config, "n * positive_fraction rounds to zero positives");
}

namespace detail {

inline double unit_uniform(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound] by rejection on the largest multiple.
inline std::uint64_t uniform_index(std::mt19937_64& eng, std::uint64_t bound) {
    const std::uint64_t range = bound + 1;
    if (range == 0) return eng();
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t x = eng();
    while (x >= limit) x = eng();
    return x % range;
}

}  // namespace detail

inline ScoredDataset generate(const SynthConfig& cfg) {
    validate(cfg);
    std::mt19937_64 eng(cfg.seed);

    const std::size_t positives = synth_positive_count(cfg);
    std::vector<int> labels(cfg.n, 0);
    std::fill_n(labels.begin(), positives, 1);
    for (std::size_t i = cfg.n - 1; i > 0; --i) {
        std::swap(labels[i], labels[detail::uniform_index(eng, i)]);
    }

    const double high = 0.5 + cfg.separation / 2.0;
    const double low = 0.5 - cfg.separation / 2.0;

    std::vector<ScoredExample> out;
    out.reserve(cfg.n);
    for (int label : labels) {
        double sum = 0.0;
        for (int j = 0; j < 4; ++j) sum += detail::unit_uniform(eng);
        const double noise = (sum - 2.0) / 4.0;
        const bool swapped = detail::unit_uniform(eng) < cfg.noise_overlap;
        const bool high_mode = (label == 1) != swapped;
        const double score = std::clamp((high_mode ? high : low) + noise, 0.0, 1.0);
        out.push_back({score, label});
    }
    return ScoredDataset(std::move(out));
}

}  // namespace cscore

#endif  // CSCORE_SYNTH_DATA_HPP
