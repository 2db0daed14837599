#ifndef RNASTRUCT_ALIGNMENT_HH
#define RNASTRUCT_ALIGNMENT_HH

#include "rnastruct/score.hh"
#include "rnastruct/scoring.hh"
#include "rnastruct/structure.hh"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rnastruct {

    enum class AlignMode { Global, Fit, Local };

    std::string_view
    to_string(AlignMode mode);

    /// throws std::invalid_argument for anything but global, fit or local
    AlignMode
    parse_mode(std::string_view text);

    /// closed 1-based range [first..last]; empty when last < first
    struct Region {
        int first = 1;
        int last = 0;

        bool
        empty() const {
            return last < first;
        }

        int
        size() const {
            return empty() ? 0 : last - first + 1;
        }

        friend bool operator==(const Region &, const Region &) = default;
    };

    /// one alignment column; 0 stands for '-'
    struct Column {
        int pos1 = 0;
        int pos2 = 0;

        friend bool operator==(const Column &, const Column &) = default;
    };

    /**
     * \brief A finished alignment of R1[region1] against R2[region2].
     *
     * The rows are gapped copies of the two regions. Which pairs are
     * matched follows from the rows: a pair of R1 is matched when the
     * two columns holding its ends hold the two ends of a pair of R2.
     */
    struct AlignmentResult {
        std::string row1;
        std::string row2;
        Region region1;
        Region region2;
        Score score;
        int gap_count = 0;
        AlignMode mode = AlignMode::Global;
    };

    /// number of maximal runs of '-' in either row
    int
    count_gaps(std::string_view row1, std::string_view row2);

    /// rows for a column list; the regions must be the ones the columns cover
    AlignmentResult
    make_alignment(const std::vector<Column> &columns, const RnaStructure &r1, const RnaStructure &r2,
                   Region region1, Region region2, AlignMode mode);

    /// column positions recovered from rows and regions; throws std::invalid_argument on a
    /// row/region size mismatch
    std::vector<Column>
    columns_of(const AlignmentResult &a);

    /**
     * \brief check the four alignment conditions
     *
     * 1. rows have equal length, no all-gap column, and the rows spell the regions;
     * 2. an unpaired base faces an unpaired base or '-';
     * 3. a pair faces a pair, or both of its ends face '-'; a pair end whose
     *    partner lies outside the region may only face '-';
     * 4. matched pairs do not cross.
     */
    std::vector<Violation>
    validate_alignment(const AlignmentResult &a, const RnaStructure &r1, const RnaStructure &r2);

    class InvalidAlignment : public std::runtime_error {
    public:
        explicit InvalidAlignment(const std::string &what) : std::runtime_error(what) {}
    };

    /**
     * Rescore an alignment column by column: gamma for aligned columns
     * (pairs count at their 3' end column), del/ins for columns against
     * '-', and -gap_open per gap. Throws InvalidAlignment if the alignment
     * does not validate.
     */
    Score
    sim_score(const AlignmentResult &a, const RnaStructure &r1, const RnaStructure &r2,
              const ScoringScheme &scheme);

    /// '(' ')' for ends of matched pairs, '<' '>' for other paired bases, '.' unpaired, '-' gap
    std::pair<std::string, std::string>
    structure_annotation(const AlignmentResult &a, const RnaStructure &r1, const RnaStructure &r2);

} // namespace rnastruct

#endif // RNASTRUCT_ALIGNMENT_HH
