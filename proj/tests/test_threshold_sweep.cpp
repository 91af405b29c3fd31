#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "cscore/threshold_sweep.hpp"
#include "support/fixtures.hpp"

using namespace cscore;

namespace {

ScoredDataset five() { return ScoredDataset({{0.9, 1}, {0.8, 1}, {0.6, 0}, {0.3, 1}, {0.2, 0}}); }

ScoredDataset separable() { return ScoredDataset({{0.9, 1}, {0.1, 0}}); }

void expect_cm(const ConfusionMatrix& cm, double tp, double fp, double fn, double tn) {
    EXPECT_EQ(cm.tp(), tp);
    EXPECT_EQ(cm.fp(), fp);
    EXPECT_EQ(cm.fn(), fn);
    EXPECT_EQ(cm.tn(), tn);
}

}  // namespace

TEST(ScoredDataset, Validation) {
    EXPECT_THROW(ScoredDataset({}), Error);
    EXPECT_THROW(ScoredDataset({{0.5, 0}, {0.2, 0}}), Error);
    EXPECT_THROW(ScoredDataset({{1.5, 1}}), Error);
    EXPECT_THROW(ScoredDataset({{0.5, 2}}), Error);
    EXPECT_THROW(ScoredDataset({{NAN, 1}}), Error);
    const auto ds = five();
    EXPECT_EQ(ds.size(), 5u);
    EXPECT_EQ(ds.positives(), 3u);
    EXPECT_EQ(ds.negatives(), 2u);
}

TEST(CandidateThresholds, DistinctScoresPlusSentinel) {
    const auto ts = candidate_thresholds(ScoredDataset({{0.2, 1}, {0.7, 0}, {0.7, 1}, {0.4, 0}}));
    ASSERT_EQ(ts.size(), 4u);
    EXPECT_EQ(ts[0], 0.2);
    EXPECT_EQ(ts[1], 0.4);
    EXPECT_EQ(ts[2], 0.7);
    EXPECT_GT(ts[3], 0.7);

    const auto single = candidate_thresholds(ScoredDataset({{0.5, 1}}));
    ASSERT_EQ(single.size(), 2u);
    EXPECT_EQ(single[0], 0.5);
    EXPECT_GT(single[1], 0.5);
}

TEST(CandidateThresholds, BoundaryScores) {
    const ScoredDataset ds({{0.0, 0}, {1.0, 1}});
    const auto ts = candidate_thresholds(ds);
    ASSERT_EQ(ts.size(), 3u);
    EXPECT_EQ(ts[0], 0.0);
    EXPECT_EQ(ts[1], 1.0);
    EXPECT_GT(ts[2], 1.0);
    expect_cm(confusion_at(ds, 0.0), 1, 1, 0, 0);
    expect_cm(confusion_at(ds, ts[2]), 0, 0, 1, 1);
}

TEST(ConfusionAt, Counting) {
    const auto ds = five();
    expect_cm(confusion_at(ds, 0.7), 2, 0, 1, 2);
    expect_cm(confusion_at(ds, 0.0), 3, 2, 0, 0);
    expect_cm(confusion_at(ds, sentinel_threshold(ds)), 0, 0, 3, 2);
    // Score equal to the threshold is predicted positive.
    expect_cm(confusion_at(ds, 0.6), 2, 1, 1, 1);
}

TEST(Sweep, OnePointPerCandidate) {
    const auto sr = sweep(five(), {CostRatio(1)});
    ASSERT_EQ(sr.points.size(), 6u);  // five distinct scores plus the sentinel
    EXPECT_EQ(sr.total, 5u);
    EXPECT_EQ(sr.positives, 3u);
    EXPECT_EQ(sr.negatives, 2u);
    const auto ts = candidate_thresholds(five());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        EXPECT_EQ(sr.points[i].threshold, ts[i]);
        EXPECT_EQ(sr.points[i].cm, confusion_at(five(), ts[i]));
    }
}

TEST(Sweep, Endpoints) {
    const std::vector<CostRatio> ratios{CostRatio(0.1), CostRatio(1), CostRatio(10)};
    const auto sr = sweep(five(), ratios);
    for (const auto& rc : ratios) {
        EXPECT_DOUBLE_EQ(sr.points.front().cscore(rc), 2.0 / 3.0);
        EXPECT_EQ(sr.points.back().cscore(rc), rc.value());
    }
}

TEST(Sweep, RequiresRatios) {
    EXPECT_THROW(sweep(five(), std::vector<CostRatio>{}), Error);
}

TEST(Sweep, UnknownRatioLookup) {
    const auto sr = sweep(five(), {CostRatio(1)});
    try {
        sr.points.front().cscore(CostRatio(2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::unknown_ratio);
    }
}

// Exhaustive oracle for the five-example dataset:
//   t=0.2 f1=0.75  t=0.3 f1=6/7  t=0.6 f1=2/3  t=0.8 f1=0.8  t=0.9 f1=0.5
TEST(BestF1Threshold, FiveExamples) {
    const auto choice = best_f1_threshold(sweep(five(), {CostRatio(1)}));
    EXPECT_EQ(choice.objective, Objective::max_f1);
    EXPECT_EQ(choice.threshold, 0.3);
    EXPECT_DOUBLE_EQ(choice.point.metrics.f1, 6.0 / 7.0);
    expect_cm(choice.point.cm, 3, 1, 0, 1);
}

TEST(BestF1Threshold, Separable) {
    const auto choice = best_f1_threshold(sweep(separable(), {CostRatio(1)}));
    EXPECT_EQ(choice.threshold, 0.9);
    EXPECT_EQ(choice.point.metrics.f1, 1.0);
}

TEST(BestF1Threshold, IdenticalScoresPicksAllPositive) {
    const auto choice = best_f1_threshold(sweep(ScoredDataset({{0.4, 1}, {0.4, 0}, {0.4, 0}}), {CostRatio(1)}));
    EXPECT_EQ(choice.threshold, 0.4);
    EXPECT_DOUBLE_EQ(choice.point.metrics.f1, 0.5);
}

TEST(MinCostThreshold, FiveExamples) {
    const auto sr = sweep(five(), {CostRatio(0.1), CostRatio(1), CostRatio(10)});
    const auto high = min_cost_threshold(sr, CostRatio(10));
    EXPECT_EQ(high.threshold, 0.3);
    EXPECT_DOUBLE_EQ(high.point.cscore(CostRatio(10)), 1.0 / 3.0);

    const auto low = min_cost_threshold(sr, CostRatio(0.1));
    EXPECT_EQ(low.threshold, 0.8);
    EXPECT_DOUBLE_EQ(low.point.cscore(CostRatio(0.1)), 0.1 / 3.0);

    // t=0.3 and t=0.8 tie at 1/3; the smaller threshold wins.
    EXPECT_EQ(min_cost_threshold(sr, CostRatio(1)).threshold, 0.3);
}

TEST(MinCostThreshold, SeparableIsFreeAtEveryRatio) {
    const std::vector<CostRatio> ratios{CostRatio(0.01), CostRatio(1), CostRatio(100)};
    const auto sr = sweep(separable(), ratios);
    for (const auto& rc : ratios) {
        const auto c = min_cost_threshold(sr, rc);
        EXPECT_EQ(c.threshold, best_f1_threshold(sr).threshold);
        EXPECT_EQ(c.point.cscore(rc), 0.0);
    }
}

TEST(MinCostThreshold, UnknownRatio) {
    const auto sr = sweep(five(), {CostRatio(1)});
    try {
        min_cost_threshold(sr, CostRatio(1.0000001));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::unknown_ratio);
    }
}

TEST(ImprovementPct, TableSixPairs) {
    EXPECT_NEAR(improvement_pct(0.056, 0.020), 64.1, 1.5);
    EXPECT_NEAR(improvement_pct(0.056, 0.020), 64.2857, 1e-3);
    EXPECT_NEAR(improvement_pct(0.441, 0.203), 53.2, 1.5);
    EXPECT_EQ(improvement_pct(0.091, 0.091), 0.0);
    EXPECT_EQ(improvement_pct(0.0, 0.0), 0.0);
}

TEST(ImprovementReport, FiveExamples) {
    const std::vector<CostRatio> ratios{CostRatio(0.1), CostRatio(1), CostRatio(10)};
    const auto rep = improvement_report(sweep(five(), ratios), ratios);
    ASSERT_EQ(rep.entries.size(), 3u);
    // F1 picks t=0.3 (fp=1, fn=0): cost 1/3 at every ratio.
    EXPECT_DOUBLE_EQ(rep.entries[0].cscore_at_f1, 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(rep.entries[0].cscore_at_opt, 0.1 / 3.0);
    EXPECT_NEAR(rep.entries[0].improvement_pct, 90.0, 1e-12);
    EXPECT_EQ(rep.entries[1].improvement_pct, 0.0);
    EXPECT_EQ(rep.entries[2].improvement_pct, 0.0);
    EXPECT_EQ(rep.entries[2].cscore_threshold, rep.entries[2].f1_threshold);
}

TEST(RatioSweep, FiveExamplesGrid) {
    const auto series = ratio_sweep(five(), -1.0, 1.0, 3);
    ASSERT_EQ(series.size(), 3u);
    EXPECT_EQ(series[0].log10_ratio, -1.0);
    EXPECT_EQ(series[1].log10_ratio, 0.0);
    EXPECT_EQ(series[2].log10_ratio, 1.0);
    for (const auto& s : series) EXPECT_GE(s.improvement_pct, 0.0);
    EXPECT_NEAR(series[0].improvement_pct, 90.0, 1e-9);
}

TEST(RatioSweep, SeparableNeverImproves) {
    for (const auto& s : ratio_sweep(separable(), -2.0, 2.0, 9)) EXPECT_EQ(s.improvement_pct, 0.0);
}

TEST(RatioSweep, Preconditions) {
    EXPECT_THROW(ratio_sweep(five(), 0.0, 1.0, 1), Error);
    EXPECT_THROW(ratio_sweep(five(), 1.0, 1.0, 5), Error);
}

TEST(Sweep, RateOneOptimumMinimizesErrorCount) {
    cscore::testing::Gen gen(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto ds = gen.dataset(40);
        const auto sr = sweep(ds, {CostRatio(1)});
        const auto best = min_cost_threshold(sr, CostRatio(1));
        const double errors = best.point.cm.fp() + best.point.cm.fn();
        for (const auto& pt : sr.points) EXPECT_LE(errors, pt.cm.fp() + pt.cm.fn());
    }
}

TEST(Sweep, F1AndCostOptimaCanDifferAtRatioOne) {
    // F1 ties t=0.6 (tp=2, fp=2) with t=0.9 (tp=1, fp=0, fn=1) and keeps the
    // smaller threshold, which makes one more error.
    const ScoredDataset ds({{0.9, 1}, {0.8, 0}, {0.7, 0}, {0.6, 1}, {0.5, 0}, {0.1, 0}});
    const auto sr = sweep(ds, {CostRatio(1)});
    const auto f1 = best_f1_threshold(sr);
    const auto cost = min_cost_threshold(sr, CostRatio(1));
    EXPECT_NE(f1.threshold, cost.threshold);
    EXPECT_LT(cost.point.cscore(CostRatio(1)), f1.point.cscore(CostRatio(1)));
}
