#ifndef RNASTRUCT_EXACT_MATCH_HH
#define RNASTRUCT_EXACT_MATCH_HH

#include "rnastruct/structure.hh"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace rnastruct {

    /// per-position offset to the partner: 0 unpaired, j-i at a 5' end i, i-j at its 3' end j
    using LabelString = std::vector<int>;

    LabelString
    encode_labels(const RnaStructure &r);

    /// KMP failure table: fail[k] is the length of the longest proper border of needle[0..k]
    template <class T>
    std::vector<std::size_t>
    kmp_failure(std::span<const T> needle) {
        std::vector<std::size_t> fail(needle.size(), 0);
        std::size_t k = 0;
        for (std::size_t q = 1; q < needle.size(); ++q) {
            while (k > 0 && !(needle[q] == needle[k]))
                k = fail[k - 1];
            if (needle[q] == needle[k])
                ++k;
            fail[q] = k;
        }
        return fail;
    }

    /**
     * \brief all 1-based start positions of needle in haystack, overlaps included
     *
     * O(|needle| + |haystack|). Throws std::invalid_argument for an empty needle.
     */
    template <class T>
    std::vector<int>
    kmp_find_all(std::span<const T> needle, std::span<const T> haystack) {
        if (needle.empty())
            throw std::invalid_argument("kmp_find_all: needle must be non-empty");
        std::vector<int> hits;
        if (needle.size() > haystack.size())
            return hits;
        auto fail = kmp_failure(needle);
        std::size_t k = 0;
        for (std::size_t t = 0; t < haystack.size(); ++t) {
            while (k > 0 && !(haystack[t] == needle[k]))
                k = fail[k - 1];
            if (haystack[t] == needle[k])
                ++k;
            if (k == needle.size()) {
                hits.push_back(static_cast<int>(t + 2 - needle.size()));
                k = fail[k - 1];
            }
        }
        return hits;
    }

    /**
     * \brief positions where pattern r1 occurs in text r2 with identical
     * sequence and identical pairing
     *
     * Intersection of a KMP pass over the sequences and a KMP pass over the
     * label strings. A text pair reaching outside a candidate window
     * carries an offset no in-window pattern label can equal, so windows
     * need no separate boundary check. Throws std::invalid_argument if r1
     * is empty.
     */
    std::vector<int>
    exact_occurrences(const RnaStructure &r1, const RnaStructure &r2);

} // namespace rnastruct

#endif // RNASTRUCT_EXACT_MATCH_HH
