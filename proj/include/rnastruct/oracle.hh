#ifndef RNASTRUCT_ORACLE_HH
#define RNASTRUCT_ORACLE_HH

// Brute-force references for tests and the hidden `oracle` subcommand.

#include "rnastruct/alignment.hh"
#include "rnastruct/score.hh"
#include "rnastruct/scoring.hh"
#include "rnastruct/structure.hh"

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace rnastruct {

    constexpr int kOracleMaxLength = 8;

    class OracleSizeError : public std::invalid_argument {
    public:
        explicit OracleSizeError(const std::string &what) : std::invalid_argument(what) {}
    };

    /// a complete column list over R1[region1] x R2[region2]
    struct AlignmentCandidate {
        Region region1;
        Region region2;
        std::vector<Column> columns;
    };

    /**
     * \brief call sink once for every valid alignment of the mode
     *
     * global: R1 against R2. fit: all of R1 against every window of R2,
     * the empty window included once. local: every pair of non-empty
     * windows, plus the empty alignment. Pair ends whose partner falls
     * outside the window can only face '-'. Throws OracleSizeError past
     * kOracleMaxLength.
     */
    void
    enumerate_alignments(const RnaStructure &r1, const RnaStructure &r2, AlignMode mode,
                         const std::function<void(const AlignmentCandidate &)> &sink);

    std::size_t
    count_alignments(const RnaStructure &r1, const RnaStructure &r2, AlignMode mode);

    /// best similarity over enumerate_alignments, scored independently of the aligner
    Score
    oracle_best(const RnaStructure &r1, const RnaStructure &r2, AlignMode mode,
                const ScoringScheme &scheme);

    AlignmentResult
    to_alignment(const AlignmentCandidate &c, const RnaStructure &r1, const RnaStructure &r2,
                 AlignMode mode);

    /// O(nm) window-by-window check of sequence and pairing identity
    std::vector<int>
    naive_exact_match(const RnaStructure &r1, const RnaStructure &r2);

} // namespace rnastruct

#endif // RNASTRUCT_ORACLE_HH
