#include "rnastruct/align_dp.hh"

#include <algorithm>
#include <stdexcept>

namespace rnastruct {

    void
    DpTables::reset(Region window1, Region window2) {
        window1_ = window1;
        window2_ = window2;
        len1_ = window1.size();
        len2_ = window2.size();
        std::size_t cells = static_cast<std::size_t>(len1_ + 1) * (len2_ + 1);
        a_.assign(cells, Score::neg_inf());
        d_.assign(cells, Score::neg_inf());
        i_.assign(cells, Score::neg_inf());
    }

    PairTable::PairTable(const RnaStructure &r1, const RnaStructure &r2)
        : list1_(r1.pairs()), list2_(r2.pairs()), rank1_(r1.size() + 1, -1),
          rank2_(r2.size() + 1, -1) {
        auto by_three = [](const BasePair &a, const BasePair &b) { return a.three < b.three; };
        std::sort(list1_.begin(), list1_.end(), by_three);
        std::sort(list2_.begin(), list2_.end(), by_three);
        for (std::size_t k = 0; k < list1_.size(); ++k)
            rank1_[list1_[k].three] = static_cast<int>(k);
        for (std::size_t k = 0; k < list2_.size(); ++k)
            rank2_[list2_[k].three] = static_cast<int>(k);
        inner_.assign(list1_.size() * list2_.size(), Score::neg_inf());
    }

    namespace {
        // every value a recurrence reads must have been defined by a boundary
        // rule or an earlier cell
        inline Score
        read(Score v) {
            if (v.is_neg_inf())
                throw std::logic_error("DP recurrence read an undefined table entry");
            return v;
        }

        void
        init_boundary(DpTables &t, AlignMode mode, const ElementScores &es) {
            const Score g = es.gap();
            const int n1 = t.len1(), n2 = t.len2();
            const int i1 = t.window1().first, j1 = t.window2().first;
            const Score zero;

            t.A(0, 0) = zero;
            switch (mode) {
            case AlignMode::Global:
                t.D(0, 0) = -g;
                t.I(0, 0) = -g;
                for (int x = 1; x <= n1; ++x) {
                    t.D(x, 0) = t.D(x - 1, 0) - es.del(i1 + x - 1);
                    t.A(x, 0) = t.D(x, 0);
                    t.I(x, 0) = t.D(x, 0) - g;
                }
                for (int y = 1; y <= n2; ++y) {
                    t.I(0, y) = t.I(0, y - 1) - es.ins(j1 + y - 1);
                    t.A(0, y) = t.I(0, y);
                    t.D(0, y) = t.I(0, y) - g;
                }
                break;
            case AlignMode::Fit:
                // leading text is free; the I row stays undefined
                t.D(0, 0) = -g;
                for (int x = 1; x <= n1; ++x) {
                    t.D(x, 0) = t.D(x - 1, 0) - es.del(i1 + x - 1);
                    t.A(x, 0) = t.D(x, 0);
                    t.I(x, 0) = t.D(x, 0) - g;
                }
                for (int y = 1; y <= n2; ++y) {
                    t.A(0, y) = zero;
                    t.D(0, y) = -g;
                }
                break;
            case AlignMode::Local:
                // D column and I row stay undefined
                for (int x = 1; x <= n1; ++x) {
                    t.A(x, 0) = zero;
                    t.I(x, 0) = -g;
                }
                for (int y = 1; y <= n2; ++y) {
                    t.A(0, y) = zero;
                    t.D(0, y) = -g;
                }
                break;
            }
        }
    } // namespace

    void
    window_dp(DpTables &t, const RnaStructure &r1, const RnaStructure &r2, Region window1,
              Region window2, AlignMode mode, const PairTable &pairs, const ElementScores &es) {
        if (mode != AlignMode::Global &&
            (window1 != Region{1, r1.size()} || window2 != Region{1, r2.size()}))
            throw std::invalid_argument("fit and local tables are defined on whole structures only");

        t.reset(window1, window2);
        init_boundary(t, mode, es);

        const Score g = es.gap();
        const Score zero;
        const bool local = mode == AlignMode::Local;
        const int i1 = window1.first, j1 = window2.first;
        const int n1 = t.len1(), n2 = t.len2();

        for (int x = 1; x <= n1; ++x) {
            const int i = i1 + x - 1;
            const int pi = r1.partner(i);
            const bool unpaired_i = pi == i;
            const bool closes_i = pi < i && pi >= i1;
            const Score del = es.del(i);

            for (int y = 1; y <= n2; ++y) {
                const int j = j1 + y - 1;
                const int pj = r2.partner(j);
                const Score ins = es.ins(j);

                Score d = std::max(read(t.D(x - 1, y)) - del, read(t.A(x - 1, y)) - del - g);
                Score in = std::max(read(t.I(x, y - 1)) - ins, read(t.A(x, y - 1)) - ins - g);
                if (local) {
                    d = std::max(d, zero);
                    in = std::max(in, zero);
                }
                Score a = std::max(d, in);

                if (unpaired_i && pj == j) {
                    a = std::max(a, read(t.A(x - 1, y - 1)) + es.gamma(i, j));
                } else if (closes_i && pj < j && pj >= j1) {
                    if (!pairs.populated(i, j))
                        throw std::logic_error("pair table consulted before it was filled");
                    a = std::max(a, read(t.A(pi - i1, pj - j1)) + pairs.inner(i, j) + es.gamma(i, j));
                }
                if (local)
                    a = std::max(a, zero);

                t.D(x, y) = d;
                t.I(x, y) = in;
                t.A(x, y) = a;
            }
        }
    }

    DpTables
    window_dp(const RnaStructure &r1, const RnaStructure &r2, Region window1, Region window2,
              AlignMode mode, const PairTable &pairs, const ElementScores &scores) {
        DpTables t;
        window_dp(t, r1, r2, window1, window2, mode, pairs, scores);
        return t;
    }

    PairTable
    phase1_pair_table(const RnaStructure &r1, const RnaStructure &r2, const ElementScores &scores,
                      DpStats *stats) {
        PairTable table(r1, r2);
        DpTables t;
        // both lists ascend by 3' end, so every pair nested inside (a, b)
        // has been filled by the time (a, b) is computed
        for (const auto &a : table.pairs1()) {
            for (const auto &b : table.pairs2()) {
                Region w1{a.five + 1, a.three - 1};
                Region w2{b.five + 1, b.three - 1};
                window_dp(t, r1, r2, w1, w2, AlignMode::Global, table, scores);
                table.set(a.three, b.three, t.A(t.len1(), t.len2()));
                if (stats) {
                    stats->phase1_cells += static_cast<std::uint64_t>(t.len1() + 1) * (t.len2() + 1);
                    ++stats->phase1_windows;
                }
            }
        }
        return table;
    }

    EndCell
    best_end(const DpTables &t, AlignMode mode) {
        const int m = t.len1(), n = t.len2();
        switch (mode) {
        case AlignMode::Global:
            return {t.A(m, n), m, n};
        case AlignMode::Fit: {
            EndCell best{t.A(m, 0), m, 0};
            for (int y = 1; y <= n; ++y) {
                if (t.A(m, y) > best.score)
                    best = {t.A(m, y), m, y};
            }
            return best;
        }
        case AlignMode::Local: {
            EndCell best{t.A(0, 0), 0, 0};
            for (int x = 0; x <= m; ++x) {
                for (int y = 0; y <= n; ++y) {
                    if (t.A(x, y) > best.score)
                        best = {t.A(x, y), x, y};
                }
            }
            return best;
        }
        }
        return {};
    }

    std::vector<int>
    optimal_fit_ends(const DpTables &t) {
        const Score best = best_end(t, AlignMode::Fit).score;
        std::vector<int> ends;
        for (int y = 0; y <= t.len2(); ++y) {
            if (t.A(t.len1(), y) == best)
                ends.push_back(y);
        }
        return ends;
    }

    StructuralAligner::StructuralAligner(RnaStructure r1, RnaStructure r2, const ScoringScheme &scheme)
        : r1_(std::move(r1)), r2_(std::move(r2)), scores_(scheme, r1_, r2_) {
        pairs_ = phase1_pair_table(r1_, r2_, scores_, &stats_);
    }

    DpTables
    StructuralAligner::phase2(AlignMode mode) const {
        DpTables t;
        window_dp(t, r1_, r2_, Region{1, r1_.size()}, Region{1, r2_.size()}, mode, pairs_, scores_);
        stats_.phase2_cells += static_cast<std::uint64_t>(t.len1() + 1) * (t.len2() + 1);
        return t;
    }

    StructuralAligner::Cell
    StructuralAligner::trace(const DpTables &t, AlignMode mode, int x, int y, State s,
                             std::vector<Column> &rev) const {
        const int i1 = t.window1().first, j1 = t.window2().first;
        const Score g = scores_.gap();
        const Score zero;

        while (true) {
            if (x == 0) {
                if (mode != AlignMode::Global)
                    return {0, y};
                for (; y > 0; --y)
                    rev.push_back({0, j1 + y - 1});
                return {0, 0};
            }
            if (y == 0) {
                if (mode == AlignMode::Local)
                    return {x, 0};
                for (; x > 0; --x)
                    rev.push_back({i1 + x - 1, 0});
                return {0, 0};
            }

            const int i = i1 + x - 1, j = j1 + y - 1;
            switch (s) {
            case State::A: {
                const Score v = t.A(x, y);
                if (mode == AlignMode::Local && v == zero)
                    return {x, y};
                const int pi = r1_.partner(i), pj = r2_.partner(j);
                if (pi == i && pj == j) {
                    if (t.A(x - 1, y - 1) + scores_.gamma(i, j) == v) {
                        rev.push_back({i, j});
                        --x;
                        --y;
                        continue;
                    }
                } else if (pi < i && pi >= i1 && pj < j && pj >= j1) {
                    const Score before = t.A(pi - i1, pj - j1);
                    if (before + pairs_.inner(i, j) + scores_.gamma(i, j) == v) {
                        rev.push_back({i, j});
                        DpTables inner = window_dp(r1_, r2_, Region{pi + 1, i - 1}, Region{pj + 1, j - 1},
                                                   AlignMode::Global, pairs_, scores_);
                        trace(inner, AlignMode::Global, inner.len1(), inner.len2(), State::A, rev);
                        rev.push_back({pi, pj});
                        x = pi - i1;
                        y = pj - j1;
                        continue;
                    }
                }
                if (t.D(x, y) == v) {
                    s = State::D;
                } else if (t.I(x, y) == v) {
                    s = State::I;
                } else {
                    throw std::logic_error("traceback found no case reproducing A");
                }
                continue;
            }
            case State::D: {
                const Score v = t.D(x, y);
                const Score del = scores_.del(i);
                rev.push_back({i, 0});
                const Score extend = t.D(x - 1, y);
                if (!extend.is_neg_inf() && extend - del == v)
                    s = State::D;
                else if (t.A(x - 1, y) - del - g == v)
                    s = State::A;
                else
                    throw std::logic_error("traceback found no case reproducing D");
                --x;
                continue;
            }
            case State::I: {
                const Score v = t.I(x, y);
                const Score ins = scores_.ins(j);
                rev.push_back({0, j});
                const Score extend = t.I(x, y - 1);
                if (!extend.is_neg_inf() && extend - ins == v)
                    s = State::I;
                else if (t.A(x, y - 1) - ins - g == v)
                    s = State::A;
                else
                    throw std::logic_error("traceback found no case reproducing I");
                --y;
                continue;
            }
            }
        }
    }

    AlignmentResult
    StructuralAligner::traceback(const DpTables &t, AlignMode mode, const EndCell &end) const {
        std::vector<Column> rev;
        Cell start = trace(t, mode, end.i, end.j, State::A, rev);
        std::reverse(rev.begin(), rev.end());
        AlignmentResult a = make_alignment(rev, r1_, r2_, Region{start.x + 1, end.i},
                                           Region{start.y + 1, end.j}, mode);
        a.score = end.score;
        return a;
    }

    AlignmentResult
    StructuralAligner::align(AlignMode mode) const {
        if (mode == AlignMode::Fit && r1_.empty())
            throw std::invalid_argument("fit alignment needs a non-empty pattern");
        DpTables t = phase2(mode);
        return traceback(t, mode, best_end(t, mode));
    }

    AlignmentResult
    align(const RnaStructure &r1, const RnaStructure &r2, AlignMode mode, const ScoringScheme &scheme) {
        return StructuralAligner(r1, r2, scheme).align(mode);
    }

} // namespace rnastruct
