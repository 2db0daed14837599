#ifndef RNASTRUCT_STRUCTURE_HH
#define RNASTRUCT_STRUCTURE_HH

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rnastruct {

    enum class Base : std::uint8_t { A = 0, C = 1, G = 2, U = 3 };

    char
    to_char(Base b);

    /// accepts ACGU in either case; T/t is read as U
    std::optional<Base>
    base_from_char(char c);

    /// a base pair (five, three) with five < three, 1-based
    struct BasePair {
        int five = 0;
        int three = 0;

        friend auto operator<=>(const BasePair &, const BasePair &) = default;
    };

    /// one broken structure invariant, with the positions involved
    struct Violation {
        std::vector<int> positions;
        std::string message;
    };

    /**
     * \brief check the pair-set invariants of a structure of the given length
     *
     * Reports pairs with five >= three, pairs outside 1..length and every
     * position used by more than one pair. Crossing pairs are legal.
     * An empty result means the pair set is valid.
     */
    std::vector<Violation>
    validate(std::size_t length, std::span<const BasePair> pairs);

    class InvalidStructure : public std::runtime_error {
    public:
        explicit InvalidStructure(const std::string &what)
            : std::runtime_error(what) {}
    };

    /// Parse failure; line() is 1-based within the parsed text, 0 if unknown.
    class ParseError : public std::runtime_error {
    public:
        ParseError(int line, const std::string &what)
            : std::runtime_error(what), line_(line) {}

        int
        line() const {
            return line_;
        }

    private:
        int line_;
    };

    /// partner function: p(i) == i for unpaired positions
    class PartnerMap {
    public:
        PartnerMap() = default;
        explicit PartnerMap(std::vector<int> partner) : partner_(std::move(partner)) {}

        int
        operator()(int pos) const {
            return partner_[pos - 1];
        }

        std::size_t
        size() const {
            return partner_.size();
        }

        const std::vector<int> &
        values() const {
            return partner_;
        }

        friend bool operator==(const PartnerMap &, const PartnerMap &) = default;

    private:
        std::vector<int> partner_;
    };

    /**
     * \brief An RNA primary sequence together with a set of base pairs.
     *
     * Positions are 1-based. Pairs never share a position but may cross.
     * Objects are immutable once constructed; the constructor throws
     * InvalidStructure when the pair set violates an invariant.
     */
    class RnaStructure {
    public:
        RnaStructure() = default;

        RnaStructure(std::string name, std::vector<Base> sequence, std::vector<BasePair> pairs);

        const std::string &
        name() const {
            return name_;
        }

        int
        size() const {
            return static_cast<int>(sequence_.size());
        }

        bool
        empty() const {
            return sequence_.empty();
        }

        Base
        base(int pos) const {
            return sequence_[pos - 1];
        }

        const std::vector<Base> &
        sequence() const {
            return sequence_;
        }

        /// sorted by 5' end
        const std::vector<BasePair> &
        pairs() const {
            return pairs_;
        }

        int
        partner(int pos) const {
            return partner_[pos - 1];
        }

        bool
        is_unpaired(int pos) const {
            return partner(pos) == pos;
        }

        bool
        is_five_end(int pos) const {
            return partner(pos) > pos;
        }

        bool
        is_three_end(int pos) const {
            return partner(pos) < pos;
        }

        std::string
        sequence_string() const;

        /// substructure on [first..last], keeping only pairs inside the range
        RnaStructure
        slice(int first, int last) const;

    private:
        std::string name_;
        std::vector<Base> sequence_;
        std::vector<BasePair> pairs_;
        std::vector<int> partner_;
    };

    PartnerMap
    partner_map(const RnaStructure &r);

    /// pairs whose bases are not one of AU, UA, GC, CG, GU, UG
    std::vector<BasePair>
    noncanonical_pairs(const RnaStructure &r);

    enum class StructureFormat { Auto, DotBracket, PairList };

    std::vector<Base>
    parse_sequence(std::string_view seq, int line = 0);

    /**
     * Dot-bracket with four independent bracket families (), [], {}, <>.
     * Pairs of different families may cross; '.' is unpaired.
     */
    RnaStructure
    parse_dot_bracket(std::string name, std::string_view seq, std::string_view structure);

    /// whitespace separated "i j" lines, 1-based; stops at the first blank line
    RnaStructure
    parse_pair_list(std::string name, std::string_view seq, std::string_view pair_lines,
                    int first_line = 1);

    /**
     * \brief parse a structure file
     *
     * Line 1 ">name", line 2 the sequence, line 3 either a dot-bracket
     * string or the sentinel "#pairs" followed by pair lines. Auto
     * detects the format from the sentinel.
     */
    RnaStructure
    parse_rna(std::string_view text, StructureFormat format = StructureFormat::Auto);

    /// render in the file format; DotBracket throws InvalidStructure if four families are not enough
    std::string
    serialize(const RnaStructure &r, StructureFormat format = StructureFormat::PairList);

    /// dot-bracket string alone, bracket families assigned greedily
    std::string
    to_dot_bracket(const RnaStructure &r);

    RnaStructure
    read_structure_file(const std::string &path);

} // namespace rnastruct

#endif // RNASTRUCT_STRUCTURE_HH
