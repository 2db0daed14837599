#include "rnastruct/exact_match.hh"

#include <algorithm>
#include <iterator>

namespace rnastruct {

    LabelString
    encode_labels(const RnaStructure &r) {
        LabelString labels(r.size(), 0);
        for (const auto &bp : r.pairs()) {
            labels[bp.five - 1] = bp.three - bp.five;
            labels[bp.three - 1] = bp.five - bp.three;
        }
        return labels;
    }

    std::vector<int>
    exact_occurrences(const RnaStructure &r1, const RnaStructure &r2) {
        if (r1.empty())
            throw std::invalid_argument("exact_occurrences: pattern must be non-empty");

        auto by_sequence = kmp_find_all<Base>(r1.sequence(), r2.sequence());
        auto l1 = encode_labels(r1);
        auto l2 = encode_labels(r2);
        auto by_structure = kmp_find_all<int>(l1, l2);

        std::vector<int> both;
        std::set_intersection(by_sequence.begin(), by_sequence.end(), by_structure.begin(),
                              by_structure.end(), std::back_inserter(both));
        return both;
    }

} // namespace rnastruct
