#ifndef RNASTRUCT_REPORT_HH
#define RNASTRUCT_REPORT_HH

#include "rnastruct/alignment.hh"
#include "rnastruct/score.hh"
#include "rnastruct/structure.hh"

#include <string>
#include <string_view>
#include <vector>

namespace rnastruct {

    /// everything the CLI prints about one alignment
    struct OutputRecord {
        AlignMode mode = AlignMode::Global;
        std::string name1;
        std::string name2;
        Score score;
        Region region1;
        Region region2;
        int gap_count = 0;
        std::string row1;
        std::string struct1;
        std::string struct2;
        std::string row2;
        std::vector<int> ends; ///< optional list of optimal fit end columns
    };

    OutputRecord
    make_record(const AlignmentResult &a, const RnaStructure &r1, const RnaStructure &r2);

    /// "first..last"
    std::string
    format_region(const Region &r);

    Region
    parse_region(std::string_view text);

    /// key<TAB>value lines in fixed order: mode name1 name2 score region1 region2 gap_count
    /// row1 struct1 struct2 row2 [ends]
    std::string
    format_tsv(const OutputRecord &rec);

    /// inverse of format_tsv; throws std::invalid_argument on a missing or malformed field
    OutputRecord
    parse_tsv(std::string_view text);

    /// header plus the four-line alignment view with '|' under identical aligned columns
    std::string
    format_text(const OutputRecord &rec);

} // namespace rnastruct

#endif // RNASTRUCT_REPORT_HH
