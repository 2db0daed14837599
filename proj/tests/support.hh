#ifndef RNASTRUCT_TESTS_SUPPORT_HH
#define RNASTRUCT_TESTS_SUPPORT_HH

#include "rnastruct/scoring.hh"
#include "rnastruct/structure.hh"

#include <algorithm>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace rnastruct::test {

    inline RnaStructure
    db(std::string_view seq, std::string_view structure, std::string name = "r") {
        return parse_dot_bracket(std::move(name), seq, structure);
    }

    inline RnaStructure
    unpaired(std::string_view seq, std::string name = "r") {
        return RnaStructure(std::move(name), parse_sequence(seq), {});
    }

    inline RnaStructure
    with_pairs(std::string_view seq, std::vector<BasePair> pairs, std::string name = "r") {
        return RnaStructure(std::move(name), parse_sequence(seq), std::move(pairs));
    }

    inline bool
    crossing(const BasePair &a, const BasePair &b) {
        return (a.five < b.five && b.five < a.three && a.three < b.three) ||
               (b.five < a.five && a.five < b.three && b.three < a.three);
    }

    inline bool
    has_crossing(const RnaStructure &r) {
        const auto &p = r.pairs();
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = a + 1; b < p.size(); ++b)
                if (crossing(p[a], p[b]))
                    return true;
        return false;
    }

    /**
     * random structure of the given length with up to max_pairs pairs
     * placed on free positions; crossing pairs are kept only if allowed
     */
    inline RnaStructure
    random_structure(std::mt19937_64 &rng, int length, int max_pairs, bool allow_crossing,
                     std::string_view alphabet = "ACGU", std::string name = "r") {
        std::string seq;
        std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
        for (int k = 0; k < length; ++k)
            seq += alphabet[pick(rng)];

        std::vector<BasePair> pairs;
        std::vector<bool> used(length + 1, false);
        if (length >= 2 && max_pairs > 0) {
            int want = std::uniform_int_distribution<int>(0, max_pairs)(rng);
            std::uniform_int_distribution<int> pos(1, length);
            for (int tries = 0; tries < 20 * (want + 1) && static_cast<int>(pairs.size()) < want; ++tries) {
                int i = pos(rng), j = pos(rng);
                if (i == j || used[i] || used[j])
                    continue;
                BasePair bp{std::min(i, j), std::max(i, j)};
                if (!allow_crossing &&
                    std::any_of(pairs.begin(), pairs.end(), [&](const BasePair &o) { return crossing(o, bp); }))
                    continue;
                used[i] = used[j] = true;
                pairs.push_back(bp);
            }
        }
        return RnaStructure(std::move(name), parse_sequence(seq), std::move(pairs));
    }

    /// random structure forced to contain at least one crossing (needs length >= 4)
    inline RnaStructure
    random_crossing_structure(std::mt19937_64 &rng, int length, int max_pairs,
                              std::string_view alphabet = "ACGU", std::string name = "r") {
        for (;;) {
            auto r = random_structure(rng, length, std::max(2, max_pairs), true, alphabet, name);
            if (has_crossing(r))
                return r;
        }
    }

    /// score of the identity alignment of r with itself (every element matched)
    inline Score
    self_match_score(const RnaStructure &r, const ScoringScheme &s) {
        Score total;
        for (int i = 1; i <= r.size(); ++i) {
            if (r.is_unpaired(i))
                total += s.base_score(r.base(i), r.base(i));
            else if (r.is_three_end(i))
                total += s.pair_score(r.base(r.partner(i)), r.base(i), r.base(r.partner(i)), r.base(i));
        }
        return total;
    }

    /// every structure of the given length over the alphabet with at most one pair
    inline std::vector<RnaStructure>
    census(int max_length, std::string_view alphabet) {
        std::vector<RnaStructure> out;
        for (int len = 0; len <= max_length; ++len) {
            std::vector<std::vector<BasePair>> pairings{{}};
            for (int i = 1; i <= len; ++i)
                for (int j = i + 1; j <= len; ++j)
                    pairings.push_back({{i, j}});
            std::size_t combos = 1;
            for (int k = 0; k < len; ++k)
                combos *= alphabet.size();
            for (std::size_t code = 0; code < combos; ++code) {
                std::string seq;
                std::size_t c = code;
                for (int k = 0; k < len; ++k) {
                    seq += alphabet[c % alphabet.size()];
                    c /= alphabet.size();
                }
                for (const auto &p : pairings)
                    out.push_back(RnaStructure("c", parse_sequence(seq), p));
            }
        }
        return out;
    }

} // namespace rnastruct::test

#endif // RNASTRUCT_TESTS_SUPPORT_HH
