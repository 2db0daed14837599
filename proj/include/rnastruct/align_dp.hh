#ifndef RNASTRUCT_ALIGN_DP_HH
#define RNASTRUCT_ALIGN_DP_HH

#include "rnastruct/alignment.hh"
#include "rnastruct/score.hh"
#include "rnastruct/scoring.hh"
#include "rnastruct/structure.hh"

#include <cstdint>
#include <vector>

namespace rnastruct {

    /**
     * \brief A, D and I tables of one window pair.
     *
     * Indexed by prefix lengths (x, y) of the two windows, 0 <= x <= len1,
     * 0 <= y <= len2. A is the best score of aligning the prefixes, D the
     * best score among alignments ending with R1's last prefix element
     * against '-', I the same for R2. Entries the recurrences never
     * consult hold Score::neg_inf().
     */
    class DpTables {
    public:
        DpTables() = default;

        void
        reset(Region window1, Region window2);

        int
        len1() const {
            return len1_;
        }

        int
        len2() const {
            return len2_;
        }

        const Region &
        window1() const {
            return window1_;
        }

        const Region &
        window2() const {
            return window2_;
        }

        Score A(int x, int y) const { return a_[at(x, y)]; }
        Score D(int x, int y) const { return d_[at(x, y)]; }
        Score I(int x, int y) const { return i_[at(x, y)]; }
        Score &A(int x, int y) { return a_[at(x, y)]; }
        Score &D(int x, int y) { return d_[at(x, y)]; }
        Score &I(int x, int y) { return i_[at(x, y)]; }

    private:
        std::size_t
        at(int x, int y) const {
            return static_cast<std::size_t>(x) * (len2_ + 1) + y;
        }

        int len1_ = 0;
        int len2_ = 0;
        Region window1_;
        Region window2_;
        std::vector<Score> a_, d_, i_;
    };

    /**
     * \brief Inner global scores for every (pair of R1, pair of R2).
     *
     * inner(i, j) with i, j the 3' ends is the global score of
     * R1[p(i)+1..i-1] against R2[p(j)+1..j-1].
     */
    class PairTable {
    public:
        PairTable() = default;
        PairTable(const RnaStructure &r1, const RnaStructure &r2);

        /// pairs sorted by 3' end
        const std::vector<BasePair> &
        pairs1() const {
            return list1_;
        }

        const std::vector<BasePair> &
        pairs2() const {
            return list2_;
        }

        bool
        empty() const {
            return inner_.empty();
        }

        Score
        inner(int three1, int three2) const {
            return inner_[index(three1, three2)];
        }

        bool
        populated(int three1, int three2) const {
            return !inner_[index(three1, three2)].is_neg_inf();
        }

        void
        set(int three1, int three2, Score s) {
            inner_[index(three1, three2)] = s;
        }

    private:
        std::size_t
        index(int three1, int three2) const {
            return static_cast<std::size_t>(rank1_[three1]) * list2_.size() + rank2_[three2];
        }

        std::vector<BasePair> list1_, list2_;
        std::vector<int> rank1_, rank2_; // 3' end position -> index in list, -1 elsewhere
        std::vector<Score> inner_;
    };

    /// cell counts, used to check the complexity claims
    struct DpStats {
        std::uint64_t phase1_cells = 0;
        std::uint64_t phase1_windows = 0;
        std::uint64_t phase2_cells = 0;
    };

    /**
     * \brief fill the tables of R1[window1] x R2[window2]
     *
     * Global mode serves both the inner windows of phase 1 and the whole
     * structures; fit and local are only defined on the full structures.
     * A pair (p(i), i) x (p(j), j) can be matched at cell (i, j) only if
     * both 5' ends lie inside the windows; otherwise the 3' ends can only
     * be deleted, which is what keeps matched pairs from crossing.
     */
    void
    window_dp(DpTables &tables, const RnaStructure &r1, const RnaStructure &r2, Region window1,
              Region window2, AlignMode mode, const PairTable &pairs, const ElementScores &scores);

    DpTables
    window_dp(const RnaStructure &r1, const RnaStructure &r2, Region window1, Region window2,
              AlignMode mode, const PairTable &pairs, const ElementScores &scores);

    /// phase 1: inner scores for all pairs of pairs, innermost (smallest 3' end) first
    PairTable
    phase1_pair_table(const RnaStructure &r1, const RnaStructure &r2, const ElementScores &scores,
                      DpStats *stats = nullptr);

    struct EndCell {
        Score score;
        int i = 0;
        int j = 0;

        friend bool operator==(const EndCell &, const EndCell &) = default;
    };

    /**
     * global: (m, n); fit: best A(m, j) over j = 0..n, smallest j on ties;
     * local: best A over all cells, lexicographically smallest on ties.
     */
    EndCell
    best_end(const DpTables &tables, AlignMode mode);

    /// every column j reaching the optimal fit score, ascending
    std::vector<int>
    optimal_fit_ends(const DpTables &tables);

    /**
     * \brief Two-phase structural aligner for one pair of structures.
     *
     * Phase 1 runs on construction. Only the inner scores are kept;
     * traceback recomputes the tables of an inner window when it steps
     * into a matched pair.
     */
    class StructuralAligner {
    public:
        StructuralAligner(RnaStructure r1, RnaStructure r2, const ScoringScheme &scheme);

        const PairTable &
        pair_table() const {
            return pairs_;
        }

        const DpStats &
        stats() const {
            return stats_;
        }

        /// phase 2 over the whole structures
        DpTables
        phase2(AlignMode mode) const;

        AlignmentResult
        traceback(const DpTables &tables, AlignMode mode, const EndCell &end) const;

        /// phase 2, best end and traceback; fit requires a non-empty pattern
        AlignmentResult
        align(AlignMode mode) const;

        const RnaStructure &
        first() const {
            return r1_;
        }

        const RnaStructure &
        second() const {
            return r2_;
        }

    private:
        enum class State { A, D, I };

        struct Cell {
            int x = 0;
            int y = 0;
        };

        Cell
        trace(const DpTables &t, AlignMode mode, int x, int y, State s, std::vector<Column> &rev) const;

        RnaStructure r1_;
        RnaStructure r2_;
        ElementScores scores_;
        PairTable pairs_;
        mutable DpStats stats_;
    };

    AlignmentResult
    align(const RnaStructure &r1, const RnaStructure &r2, AlignMode mode, const ScoringScheme &scheme);

} // namespace rnastruct

#endif // RNASTRUCT_ALIGN_DP_HH
