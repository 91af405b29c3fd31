// Picks decision thresholds for a synthetic detector under three cost ratios
// and prints how much cheaper the cost-optimal threshold is than the F1 one.

#include <cstdio>
#include <vector>

#include "cscore/cscore.hpp"

int main() {
    const cscore::ScoredDataset ds = cscore::generate({.n = 5000,
                                                       .positive_fraction = 0.1,
                                                       .separation = 0.5,
                                                       .noise_overlap = 0.05,
                                                       .seed = 7});

    const std::vector<cscore::CostRatio> ratios{cscore::CostRatio(0.1), cscore::CostRatio(1), cscore::CostRatio(10)};
    const cscore::SweepResult sr = cscore::sweep(ds, ratios);

    const auto by_f1 = cscore::best_f1_threshold(sr);
    std::printf("best F1 %.4f at threshold %.4f\n", by_f1.point.metrics.f1, by_f1.threshold);

    for (const auto& e : cscore::improvement_report(sr).entries) {
        std::printf("rc=%-5g  threshold %.4f  C_score %.4f vs %.4f at the F1 threshold  saving %.1f%%\n", e.ratio.value(),
                    e.cscore_threshold, e.cscore_at_opt, e.cscore_at_f1, e.improvement_pct);
    }
    return 0;
}
