#include "rnastruct/oracle.hh"

#include <algorithm>

namespace rnastruct {

    namespace {

        void
        check_size(const RnaStructure &r1, const RnaStructure &r2) {
            if (r1.size() > kOracleMaxLength || r2.size() > kOracleMaxLength)
                throw OracleSizeError("oracle limited to structures of length <= " +
                                      std::to_string(kOracleMaxLength));
        }

        /*
          Depth-first over column choices. The state is the next position of
          each structure, the stack of matched pairs whose 3' ends are still
          ahead, and the kind of the previous column (for gap opening).

          A pair can only be matched by committing its 5' end against a 5'
          end of the other structure; the committed 3' ends must then meet in
          one column. New commitments must nest inside the open ones in both
          structures, which rules out crossing matched pairs. Everything
          else that is paired can only face '-'.
        */
        template <class Visitor>
        class Enumerator {
        public:
            Enumerator(const RnaStructure &r1, const RnaStructure &r2, const ScoringScheme *scheme,
                       Visitor &visit)
                : r1_(r1), r2_(r2), scheme_(scheme), visit_(visit) {
                cols_.reserve(r1.size() + r2.size());
            }

            void
            run(AlignMode mode) {
                mode_ = mode;
                const int m = r1_.size(), n = r2_.size();
                switch (mode) {
                case AlignMode::Global:
                    from(1, 1);
                    break;
                case AlignMode::Fit:
                    for (int s2 = 1; s2 <= std::max(n, 1); ++s2)
                        from(1, s2);
                    break;
                case AlignMode::Local:
                    visit_(Score{}, cols_, Region{1, 0}, Region{1, 0});
                    for (int s1 = 1; s1 <= m; ++s1)
                        for (int s2 = 1; s2 <= n; ++s2)
                            from(s1, s2);
                    break;
                }
            }

        private:
            enum class Last { None, Match, Del, Ins };

            struct Open {
                int three1;
                int three2;
            };

            void
            from(int s1, int s2) {
                start1_ = s1;
                start2_ = s2;
                last_ = Last::None;
                score_ = Score{};
                step(s1, s2);
            }

            bool
            recordable(int a, int b) const {
                const int m = r1_.size(), n = r2_.size();
                switch (mode_) {
                case AlignMode::Global:
                    return a == m + 1 && b == n + 1;
                case AlignMode::Fit:
                    return a == m + 1 && (b > start2_ || start2_ == 1);
                case AlignMode::Local:
                    return a > start1_ && b > start2_;
                }
                return false;
            }

            Score
            del_cost(int a) const {
                return r1_.is_unpaired(a) ? scheme_->base_del : scheme_->pair_del.halved();
            }

            Score
            ins_cost(int b) const {
                return r2_.is_unpaired(b) ? scheme_->base_ins : scheme_->pair_ins.halved();
            }

            void
            push(Column c, Last kind, Score delta, int a, int b) {
                const Last saved_last = last_;
                const Score saved_score = score_;
                if (scheme_) {
                    score_ += delta;
                    if (kind == Last::Del && last_ != Last::Del)
                        score_ -= scheme_->gap_open;
                    if (kind == Last::Ins && last_ != Last::Ins)
                        score_ -= scheme_->gap_open;
                }
                last_ = kind;
                cols_.push_back(c);
                step(a, b);
                cols_.pop_back();
                last_ = saved_last;
                score_ = saved_score;
            }

            void
            step(int a, int b) {
                const int m = r1_.size(), n = r2_.size();
                if (open_.empty() && recordable(a, b))
                    visit_(score_, cols_, Region{start1_, a - 1}, Region{start2_, b - 1});

                const bool has_a = a <= m, has_b = b <= n;
                const bool committed_a = has_a && !open_.empty() && open_.back().three1 == a;
                const bool committed_b = has_b && !open_.empty() && open_.back().three2 == b;

                if (has_a && !committed_a)
                    push({a, 0}, Last::Del, scheme_ ? -del_cost(a) : Score{}, a + 1, b);
                if (has_b && !committed_b)
                    push({0, b}, Last::Ins, scheme_ ? -ins_cost(b) : Score{}, a, b + 1);
                if (!has_a || !has_b)
                    return;

                if (committed_a && committed_b) {
                    const Open closing = open_.back();
                    open_.pop_back();
                    Score s = scheme_ ? scheme_->pair_score(r1_.base(r1_.partner(a)), r1_.base(a),
                                                            r2_.base(r2_.partner(b)), r2_.base(b))
                                      : Score{};
                    push({a, b}, Last::Match, s, a + 1, b + 1);
                    open_.push_back(closing);
                    return;
                }
                if (committed_a || committed_b)
                    return;

                if (r1_.is_unpaired(a) && r2_.is_unpaired(b)) {
                    Score s = scheme_ ? scheme_->base_score(r1_.base(a), r2_.base(b)) : Score{};
                    push({a, b}, Last::Match, s, a + 1, b + 1);
                } else if (r1_.is_five_end(a) && r2_.is_five_end(b)) {
                    const int pa = r1_.partner(a), pb = r2_.partner(b);
                    if (open_.empty() || (pa < open_.back().three1 && pb < open_.back().three2)) {
                        open_.push_back({pa, pb});
                        push({a, b}, Last::Match, Score{}, a + 1, b + 1);
                        open_.pop_back();
                    }
                }
            }

            const RnaStructure &r1_;
            const RnaStructure &r2_;
            const ScoringScheme *scheme_;
            Visitor &visit_;
            AlignMode mode_ = AlignMode::Global;
            int start1_ = 1;
            int start2_ = 1;
            std::vector<Column> cols_;
            std::vector<Open> open_;
            Last last_ = Last::None;
            Score score_;
        };

    } // namespace

    void
    enumerate_alignments(const RnaStructure &r1, const RnaStructure &r2, AlignMode mode,
                         const std::function<void(const AlignmentCandidate &)> &sink) {
        check_size(r1, r2);
        AlignmentCandidate cand;
        auto visit = [&](Score, const std::vector<Column> &cols, Region w1, Region w2) {
            cand.region1 = w1;
            cand.region2 = w2;
            cand.columns = cols;
            sink(cand);
        };
        Enumerator<decltype(visit)> e(r1, r2, nullptr, visit);
        e.run(mode);
    }

    std::size_t
    count_alignments(const RnaStructure &r1, const RnaStructure &r2, AlignMode mode) {
        check_size(r1, r2);
        std::size_t count = 0;
        auto visit = [&](Score, const std::vector<Column> &, Region, Region) { ++count; };
        Enumerator<decltype(visit)> e(r1, r2, nullptr, visit);
        e.run(mode);
        return count;
    }

    Score
    oracle_best(const RnaStructure &r1, const RnaStructure &r2, AlignMode mode,
                const ScoringScheme &scheme) {
        check_size(r1, r2);
        Score best = Score::neg_inf();
        auto visit = [&](Score s, const std::vector<Column> &, Region, Region) {
            if (s > best)
                best = s;
        };
        Enumerator<decltype(visit)> e(r1, r2, &scheme, visit);
        e.run(mode);
        return best;
    }

    AlignmentResult
    to_alignment(const AlignmentCandidate &c, const RnaStructure &r1, const RnaStructure &r2,
                 AlignMode mode) {
        return make_alignment(c.columns, r1, r2, c.region1, c.region2, mode);
    }

    std::vector<int>
    naive_exact_match(const RnaStructure &r1, const RnaStructure &r2) {
        const int m = r1.size(), n = r2.size();
        std::vector<int> hits;
        for (int i = 1; i + m - 1 <= n; ++i) {
            bool ok = true;
            for (int k = 1; k <= m && ok; ++k) {
                const int t = i + k - 1;
                if (r1.base(k) != r2.base(t)) {
                    ok = false;
                } else if (r1.is_unpaired(k)) {
                    ok = r2.is_unpaired(t);
                } else {
                    ok = r2.partner(t) == r1.partner(k) + i - 1;
                }
            }
            if (ok)
                hits.push_back(i);
        }
        return hits;
    }

} // namespace rnastruct
