#ifndef RNASTRUCT_SCORING_HH
#define RNASTRUCT_SCORING_HH

#include "rnastruct/score.hh"
#include "rnastruct/structure.hh"

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rnastruct {

    /**
     * \brief Similarity scores for the edit operations.
     *
     * Substitutions are similarities; deletion, insertion and gap_open are
     * stored as positive penalties and subtracted by the aligner.
     * The pair substitution score depends on how many of the two bases agree.
     */
    struct ScoringScheme {
        std::array<std::array<Score, 4>, 4> base_subst{};
        Score base_del;
        Score base_ins;
        Score pair_match;    ///< both bases agree
        Score pair_half;     ///< exactly one base agrees
        Score pair_mismatch; ///< neither agrees
        Score pair_del;
        Score pair_ins;
        Score gap_open;

        Score
        base_score(Base a, Base b) const {
            return base_subst[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        }

        /// (a5,a3) -> (b5,b3)
        Score
        pair_score(Base a5, Base a3, Base b5, Base b3) const {
            int agree = (a5 == b5) + (a3 == b3);
            return agree == 2 ? pair_match : agree == 1 ? pair_half : pair_mismatch;
        }
    };

    /// +2/-1 base substitution, 1 per base indel, pairs +5/+1/-1, 4 per pair indel, gap 3
    ScoringScheme
    default_scheme();

    /// sign-convention rules broken by the scheme; empty when it is usable
    std::vector<std::string>
    convention_violations(const ScoringScheme &scheme);

    class SchemeError : public std::runtime_error {
    public:
        SchemeError(int line, const std::string &what) : std::runtime_error(what), line_(line) {}

        int
        line() const {
            return line_;
        }

    private:
        int line_;
    };

    /**
     * \brief read a scheme from "key = value" text
     *
     * Keys: base_match, base_mismatch, base_del, base_ins, pair_match,
     * pair_half, pair_mismatch, pair_del, pair_ins, gap_open. Lines of the
     * form "subst X Y v" override single entries of the base table after
     * base_match/base_mismatch are applied. '#' starts a comment. Missing
     * keys keep their default_scheme() value.
     */
    ScoringScheme
    load_scheme(std::string_view text);

    ScoringScheme
    read_scheme_file(const std::string &path);

    /**
     * \brief Per-position scores for aligning the elements of two structures.
     *
     * gamma(i,j) is defined when both positions are unpaired or both are
     * 3' ends; a pair's score is charged at its 3' end. del/ins give the
     * penalty for aligning a position against '-': a base penalty for
     * unpaired positions and half of the pair penalty for either end of
     * a pair.
     */
    class ElementScores {
    public:
        ElementScores(const ScoringScheme &scheme, const RnaStructure &r1, const RnaStructure &r2);

        Score
        gamma(int i, int j) const;

        Score
        del(int i) const {
            return del_[i - 1];
        }

        Score
        ins(int j) const {
            return ins_[j - 1];
        }

        Score
        gap() const {
            return gap_;
        }

        const ScoringScheme &
        scheme() const {
            return scheme_;
        }

    private:
        ScoringScheme scheme_;
        std::vector<Base> seq1_, seq2_;
        std::vector<int> partner1_, partner2_;
        std::vector<Score> del_;
        std::vector<Score> ins_;
        Score gap_;
    };

} // namespace rnastruct

#endif // RNASTRUCT_SCORING_HH
