// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "rnastruct/align_dp.hh"
#include "rnastruct/exact_match.hh"
#include "rnastruct/oracle.hh"
#include "support.hh"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace rnastruct;

namespace {

    // budgets and bands
    constexpr double kOracleBudgetSec = 120;
    constexpr double kTracebackBudgetSec = 60;
    constexpr double kExactBudgetSec = 60;
    constexpr double kComplexityBudgetSec = 180;
    constexpr double kLinearLow = 1.5, kLinearHigh = 2.6;
    constexpr double kQuadLow = 3.0, kQuadHigh = 6.0;

    constexpr int kRandomOracleCases = 600;
    constexpr int kTracebackCases = 1200;
    constexpr double kMinCrossingShare = 0.20;
    constexpr double kMaxPairDensity = 0.3; // pairs per position
    constexpr int kExactEqualityCases = 200;
    constexpr int kExactPatternLength = 50;
    constexpr int kTimingRepeats = 7;

    constexpr AlignMode kModes[] = {AlignMode::Global, AlignMode::Fit, AlignMode::Local};

    using Clock = std::chrono::steady_clock;

    double
    seconds_since(Clock::time_point t0) {
        return std::chrono::duration<double>(Clock::now() - t0).count();
    }

    /**
     * per-call time of each job in seconds: the fastest of several samples,
     * each sample looping the job long enough to dwarf timer noise. The
     * jobs take turns so a slow spell on the machine hits every size alike.
     */
    std::vector<double>
    best_times(int repeats, const std::vector<std::function<void()>> &jobs) {
        constexpr double kMinSampleSec = 0.02;
        std::vector<int> loops(jobs.size(), 1);
        for (std::size_t j = 0; j < jobs.size(); ++j) {
            auto t0 = Clock::now();
            jobs[j]();
            double once = std::max(seconds_since(t0), 1e-6);
            loops[j] = std::max(1, static_cast<int>(kMinSampleSec / once));
        }
        std::vector<double> best(jobs.size(), 1e300);
        for (int r = 0; r < repeats; ++r) {
            for (std::size_t j = 0; j < jobs.size(); ++j) {
                auto t0 = Clock::now();
                for (int k = 0; k < loops[j]; ++k)
                    jobs[j]();
                best[j] = std::min(best[j], seconds_since(t0) / loops[j]);
            }
        }
        return best;
    }

    std::string
    fixed(double v, int digits = 2) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*f", digits, v);
        return buf;
    }

    struct Verdict {
        bool pass = true;
        std::string first_failure;
        std::ostringstream detail;

        void
        require(bool ok, const std::string &why) {
            if (!ok && pass) {
                first_failure = why;
                pass = false;
            }
        }
    };

    int g_failed = 0;

    void
    report(int n, const std::string &title, Verdict &v) {
        g_failed += !v.pass;
        std::cout << "criterion " << n << " " << (v.pass ? "PASS" : "FAIL") << "  " << title << ": "
                  << v.detail.str();
        if (!v.pass)
            std::cout << "; first failure: " << v.first_failure;
        std::cout << std::endl;
    }

    std::string
    describe(const RnaStructure &r1, const RnaStructure &r2, AlignMode mode) {
        return std::string(to_string(mode)) + " " + r1.sequence_string() + " " + to_dot_bracket(r1) +
               " vs " + r2.sequence_string() + " " + to_dot_bracket(r2);
    }

    /// every instance of criteria 1 and 2 is kept for the mode-ordering check
    struct Instance {
        RnaStructure r1, r2;
        Score score[3];
        bool has_fit = true;
    };

    std::vector<Instance> g_instances;

    std::mt19937_64 g_rng(0x5eed2024);

    int
    uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(g_rng);
    }

    // ---------------------------------------------------------------- 1

    void
    oracle_equivalence() {
        Verdict v;
        auto t0 = Clock::now();
        const ScoringScheme scheme = default_scheme();
        std::size_t comparisons = 0, mismatches = 0;

        auto compare = [&](const RnaStructure &r1, const RnaStructure &r2) {
            Instance inst{r1, r2, {}, !r1.empty()};
            StructuralAligner al(r1, r2, scheme);
            for (int k = 0; k < 3; ++k) {
                if (kModes[k] == AlignMode::Fit && r1.empty())
                    continue;
                Score dp = al.align(kModes[k]).score;
                Score ref = oracle_best(r1, r2, kModes[k], scheme);
                ++comparisons;
                if (dp != ref) {
                    ++mismatches;
                    v.require(false, describe(r1, r2, kModes[k]) + " dp " + dp.to_string() + " oracle " +
                                         ref.to_string());
                }
                inst.score[k] = dp;
            }
            g_instances.push_back(std::move(inst));
        };

        auto census = test::census(5, "GC");
        for (const auto &a : census)
            for (const auto &b : census)
                compare(a, b);
        std::size_t census_pairs = census.size() * census.size();

        int crossing = 0;
        for (int rep = 0; rep < kRandomOracleCases; ++rep) {
            auto r1 = test::random_structure(g_rng, uniform(0, 7), 2, true);
            auto r2 = test::random_structure(g_rng, uniform(0, 7), 2, true);
            if (rep % 5 == 0 && r1.size() >= 4)
                r1 = test::random_crossing_structure(g_rng, r1.size(), 2);
            crossing += test::has_crossing(r1) || test::has_crossing(r2);
            compare(r1, r2);
        }

        double sec = seconds_since(t0);
        v.require(sec < kOracleBudgetSec, "took " + fixed(sec) + " s");
        v.detail << census_pairs << " census pairs (" << census.size() << " structures, length <= 5, "
                 << "letters GC, <= 1 pair) + " << kRandomOracleCases << " random pairs (length <= 7, <= 2 pairs, "
                 << crossing << " with crossings); " << comparisons << " comparisons, " << mismatches
                 << " mismatches; " << fixed(sec, 1) << " s";
        report(1, "oracle equivalence", v);
    }

    // ---------------------------------------------------------------- 2

    RnaStructure
    dense_structure(int len, bool crossing) {
        int max_pairs = static_cast<int>(kMaxPairDensity * len);
        if (crossing && len >= 4 && max_pairs >= 2)
            return test::random_crossing_structure(g_rng, len, max_pairs);
        return test::random_structure(g_rng, len, max_pairs, true);
    }

    void
    traceback_soundness() {
        Verdict v;
        auto t0 = Clock::now();
        const ScoringScheme scheme = default_scheme();
        int with_crossing = 0, planted = 0, failures = 0;
        std::size_t columns = 0;

        for (int rep = 0; rep < kTracebackCases; ++rep) {
            auto r2 = dense_structure(uniform(1, 40), rep % 4 == 0);
            RnaStructure r1;
            if (rep % 4 == 1) {
                // a window of the text, so fit has an exact occurrence to find
                int m = uniform(1, std::min(12, r2.size()));
                int at = uniform(1, r2.size() - m + 1);
                r1 = r2.slice(at, at + m - 1);
                ++planted;
            } else {
                r1 = dense_structure(uniform(1, 40), rep % 4 == 2);
            }
            with_crossing += test::has_crossing(r1) || test::has_crossing(r2);

            Instance inst{r1, r2, {}, true};
            StructuralAligner al(r1, r2, scheme);
            for (int k = 0; k < 3; ++k) {
                auto a = al.align(kModes[k]);
                auto bad = validate_alignment(a, r1, r2);
                bool ok = bad.empty() && sim_score(a, r1, r2, scheme) == a.score &&
                          a.gap_count == count_gaps(a.row1, a.row2);
                if (!ok) {
                    ++failures;
                    v.require(false, describe(r1, r2, kModes[k]) +
                                         (bad.empty() ? " rescore differs" : " " + bad.front().message));
                }
                columns += a.row1.size();
                inst.score[k] = a.score;
            }
            g_instances.push_back(std::move(inst));
        }

        double share = static_cast<double>(with_crossing) / kTracebackCases;
        double sec = seconds_since(t0);
        v.require(share >= kMinCrossingShare, "crossing share " + fixed(share));
        v.require(sec < kTracebackBudgetSec, "took " + fixed(sec) + " s");
        v.detail << kTracebackCases << " instances x 3 modes (length <= 40, <= " << kMaxPairDensity
                 << " pairs per position, " << fixed(100 * share, 1) << "% with crossings, " << planted
                 << " patterns cut from the text); " << columns << " columns rescored, " << failures
                 << " failures; " << fixed(sec, 1) << " s";
        report(2, "traceback soundness", v);
    }

    // ---------------------------------------------------------------- 3

    /**
     * text of the given length made of self-contained blocks the size of
     * the pattern; about one block in twenty is a copy of the pattern
     */
    RnaStructure
    segmented_text(const RnaStructure &pat, int length) {
        std::string seq;
        std::vector<BasePair> pairs;
        const int m = pat.size();
        while (static_cast<int>(seq.size()) + m <= length) {
            auto block = uniform(0, 19) == 0 ? pat : test::random_structure(g_rng, m, m / 4, true, "AC");
            int offset = static_cast<int>(seq.size());
            seq += block.sequence_string();
            for (const auto &bp : block.pairs())
                pairs.push_back({bp.five + offset, bp.three + offset});
        }
        while (static_cast<int>(seq.size()) < length)
            seq += 'A';
        return test::with_pairs(seq, std::move(pairs));
    }

    void
    exact_matcher() {
        Verdict v;
        auto t0 = Clock::now();
        int disagreements = 0, with_hits = 0;
        for (int rep = 0; rep < kExactEqualityCases; ++rep) {
            int n = uniform(1, 2000);
            auto txt = test::random_structure(g_rng, n, n / 3, true, "AC");
            RnaStructure pat;
            if (rep % 2 == 0) {
                int m = uniform(1, std::min(n, 20));
                int at = uniform(1, n - m + 1);
                pat = txt.slice(at, at + m - 1);
            } else {
                int m = uniform(1, 6);
                pat = test::random_structure(g_rng, m, m / 2, true, "AC");
            }
            auto fast = exact_occurrences(pat, txt);
            with_hits += !fast.empty();
            if (fast != naive_exact_match(pat, txt)) {
                ++disagreements;
                v.require(false, "disagreement at text length " + std::to_string(n));
            }
        }

        const int sizes[] = {100000, 200000, 400000, 800000};
        auto pat = test::random_structure(g_rng, kExactPatternLength, kExactPatternLength / 4, true, "AC");
        std::vector<RnaStructure> texts;
        std::vector<std::size_t> hits(4);
        std::vector<std::function<void()>> jobs;
        for (int s = 0; s < 4; ++s) {
            texts.push_back(segmented_text(pat, sizes[s]));
            jobs.push_back([&, s] { hits[s] = exact_occurrences(pat, texts[s]).size(); });
        }
        auto times = best_times(kTimingRepeats, jobs);
        for (int s = 0; s < 4; ++s)
            v.require(hits[s] > 0, "planted pattern not found");

        // least-squares slope through the origin, as a sanity figure for the linear model
        double sxy = 0, sxx = 0;
        for (int s = 0; s < 4; ++s) {
            sxy += sizes[s] * times[s];
            sxx += static_cast<double>(sizes[s]) * sizes[s];
        }
        double ns_per_symbol = 1e9 * sxy / sxx;

        v.detail << kExactEqualityCases << " random instances vs naive matcher (" << with_hits << " with hits), "
                 << disagreements << " disagreements; times (ms)";
        for (int s = 0; s < 4; ++s)
            v.detail << " n=" << sizes[s] << ":" << fixed(1e3 * times[s], 3);
        v.detail << "; doubling ratios";
        for (int s = 1; s < 4; ++s) {
            double ratio = times[s] / times[s - 1];
            v.detail << " " << fixed(ratio);
            v.require(ratio >= kLinearLow && ratio <= kLinearHigh,
                      "doubling ratio " + fixed(ratio) + " outside [" + fixed(kLinearLow) + ", " +
                          fixed(kLinearHigh) + "]");
        }
        v.detail << " (band [" << fixed(kLinearLow) << ", " << fixed(kLinearHigh) << "]); fit "
                 << fixed(ns_per_symbol) << " ns/symbol";
        double sec = seconds_since(t0);
        v.require(sec < kExactBudgetSec, "took " + fixed(sec) + " s");
        v.detail << "; " << fixed(sec, 1) << " s";
        report(3, "exact matcher correctness and linearity", v);
    }

    // ---------------------------------------------------------------- 4

    RnaStructure
    hairpins(int k, int loop, int length) {
        std::string seq, st;
        for (int h = 0; h < k; ++h) {
            seq += 'G';
            st += '(';
            for (int x = 0; x < loop; ++x) {
                seq += "ACGU"[uniform(0, 3)];
                st += '.';
            }
            seq += 'C';
            st += ')';
        }
        while (static_cast<int>(seq.size()) < length) {
            seq += "ACGU"[uniform(0, 3)];
            st += '.';
        }
        return test::db(seq, st);
    }

    void
    complexity_envelope() {
        Verdict v;
        auto t0 = Clock::now();
        const ScoringScheme scheme = default_scheme();

        const int lengths[] = {200, 400, 800};
        std::vector<StructuralAligner> aligners;
        for (int len : lengths)
            aligners.emplace_back(test::random_structure(g_rng, len, 0, false),
                                  test::random_structure(g_rng, len, 0, false), scheme);
        std::vector<std::function<void()>> phase2_jobs;
        for (auto &al : aligners) {
            phase2_jobs.push_back([&al] {
                for (auto mode : kModes)
                    al.phase2(mode);
            });
        }
        auto phase2 = best_times(kTimingRepeats, phase2_jobs);
        v.detail << "phase 2 on unpaired inputs (ms, 3 modes)";
        for (int s = 0; s < 3; ++s)
            v.detail << " " << lengths[s] << ":" << fixed(1e3 * phase2[s], 1);
        v.detail << ", ratios";
        for (int s = 1; s < 3; ++s) {
            double ratio = phase2[s] / phase2[s - 1];
            v.detail << " " << fixed(ratio);
            v.require(ratio >= kQuadLow && ratio <= kQuadHigh, "phase 2 ratio " + fixed(ratio));
        }

        // k hairpins of equal loop size in a structure of fixed length
        const int ks[] = {2, 4, 8};
        constexpr int kLoop = 120, kLength = 8 * (kLoop + 2) + 20;
        std::vector<std::pair<RnaStructure, RnaStructure>> inputs;
        std::vector<ElementScores> element_scores;
        for (int k : ks) {
            inputs.emplace_back(hairpins(k, kLoop, kLength), hairpins(k, kLoop, kLength));
            element_scores.emplace_back(scheme, inputs.back().first, inputs.back().second);
        }
        std::uint64_t cells[3];
        std::vector<std::function<void()>> phase1_jobs;
        for (int s = 0; s < 3; ++s) {
            phase1_jobs.push_back([&, s] {
                DpStats stats;
                phase1_pair_table(inputs[s].first, inputs[s].second, element_scores[s], &stats);
                cells[s] = stats.phase1_cells;
            });
        }
        auto phase1 = best_times(kTimingRepeats, phase1_jobs);
        v.detail << "; phase 1 with k pairs per structure (cells / ms)";
        for (int s = 0; s < 3; ++s)
            v.detail << " k=" << ks[s] << ":" << cells[s] << "/" << fixed(1e3 * phase1[s], 2);
        v.detail << ", ratios (cells, time)";
        for (int s = 1; s < 3; ++s) {
            double cr = static_cast<double>(cells[s]) / static_cast<double>(cells[s - 1]);
            double tr = phase1[s] / phase1[s - 1];
            v.detail << " " << fixed(cr) << "," << fixed(tr);
            v.require(cr >= kQuadLow && cr <= kQuadHigh, "phase 1 cell ratio " + fixed(cr));
            v.require(tr >= kQuadLow && tr <= kQuadHigh, "phase 1 time ratio " + fixed(tr));
        }
        double sec = seconds_since(t0);
        v.require(sec < kComplexityBudgetSec, "took " + fixed(sec) + " s");
        v.detail << " (band [" << fixed(kQuadLow) << ", " << fixed(kQuadHigh) << "]); " << fixed(sec, 1) << " s";
        report(4, "complexity envelope", v);
    }

    // ---------------------------------------------------------------- 5

    void
    mode_ordering() {
        Verdict v;
        const ScoringScheme scheme = default_scheme();
        std::size_t ordered = 0, with_occurrence = 0, identity_bound = 0, crossing_patterns = 0,
                    below_literal = 0;
        for (const auto &inst : g_instances) {
            const Score &g = inst.score[0], &f = inst.score[1], &l = inst.score[2];
            bool ok = l >= Score{} && (inst.has_fit ? (l >= f && f >= g) : l >= g);
            ordered += ok;
            if (!ok)
                v.require(false, describe(inst.r1, inst.r2, AlignMode::Global) + " breaks the ordering");

            if (!inst.has_fit || exact_occurrences(inst.r1, inst.r2).empty())
                continue;
            ++with_occurrence;
            if (!test::has_crossing(inst.r1)) {
                // the identity alignment onto the occurrence is a fit candidate
                Score self = test::self_match_score(inst.r1, scheme);
                identity_bound += f >= self;
                if (f < self)
                    v.require(false, describe(inst.r1, inst.r2, AlignMode::Fit) + " fit below self match");
            } else {
                // crossing pairs cannot all be matched at once; the occurrence still offers the
                // best self alignment of the pattern
                ++crossing_patterns;
                below_literal += f < test::self_match_score(inst.r1, scheme);
                Score self = align(inst.r1, inst.r1, AlignMode::Global, scheme).score;
                identity_bound += f >= self;
                if (f < self)
                    v.require(false, describe(inst.r1, inst.r2, AlignMode::Fit) + " fit below self alignment");
            }
        }
        v.require(with_occurrence > 0, "no instance with an exact occurrence");
        v.detail << ordered << "/" << g_instances.size() << " instances with local >= fit >= global and local >= 0; "
                 << identity_bound << "/" << with_occurrence << " instances with an exact occurrence reach the "
                 << "pattern's self-match score (" << crossing_patterns
                 << " crossing patterns compared against their best self alignment, " << below_literal
                 << " of them below the sum of per-element self scores, which no alignment can reach)";
        report(5, "mode ordering", v);
    }

    // ---------------------------------------------------------------- 6

    void
    boundary_goldens() {
        Verdict v;
        const ScoringScheme scheme = default_scheme();
        auto r1 = test::db("GACU", "(..)");
        auto r2 = test::db("UGGACA", ".(...)");
        StructuralAligner al(r1, r2, scheme);
        const Score g = scheme.gap_open, zero;
        int checks = 0;
        auto expect = [&](bool ok, const std::string &what) {
            ++checks;
            v.require(ok, what);
        };

        auto global = al.phase2(AlignMode::Global);
        expect(global.A(0, 0) == zero, "global A(0,0)");
        expect(global.D(0, 0) == -g, "global D(0,0)");
        expect(global.I(0, 0) == -g, "global I(0,0)");

        auto fit = al.phase2(AlignMode::Fit);
        expect(fit.A(0, 0) == zero, "fit A(0,0)");
        for (int j = 1; j <= r2.size(); ++j) {
            expect(fit.A(0, j) == zero, "fit A(0," + std::to_string(j) + ")");
            expect(fit.D(0, j) == -g, "fit D(0," + std::to_string(j) + ")");
        }

        auto local = al.phase2(AlignMode::Local);
        expect(local.A(0, 0) == zero, "local A(0,0)");
        for (int i = 1; i <= r1.size(); ++i)
            expect(local.A(i, 0) == zero, "local A(" + std::to_string(i) + ",0)");
        for (int j = 1; j <= r2.size(); ++j)
            expect(local.A(0, j) == zero, "local A(0," + std::to_string(j) + ")");

        v.detail << checks << " table entries checked on " << r1.sequence_string() << " " << to_dot_bracket(r1)
                 << " vs " << r2.sequence_string() << " " << to_dot_bracket(r2) << " with g = " << g;
        report(6, "boundary goldens", v);
    }

} // namespace

int
main() {
    // mode_ordering reuses the instances collected by the first two
    const std::pair<int, void (*)()> all[] = {{1, oracle_equivalence}, {2, traceback_soundness},
                                               {3, exact_matcher},      {4, complexity_envelope},
                                               {5, mode_ordering},      {6, boundary_goldens}};
    for (auto [n, criterion] : all) {
        try {
            criterion();
        } catch (const std::exception &e) {
            std::cout << "criterion " << n << " FAIL  aborted: " << e.what() << std::endl;
            ++g_failed;
        }
    }
    std::cout << "acceptance: " << (g_failed ? "FAIL" : "PASS") << std::endl;
    return g_failed ? 1 : 0;
}
