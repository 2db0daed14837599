#include "rnastruct/structure.hh"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <sstream>

namespace rnastruct {

    char
    to_char(Base b) {
        static constexpr std::array<char, 4> chars = {'A', 'C', 'G', 'U'};
        return chars[static_cast<std::size_t>(b)];
    }

    std::optional<Base>
    base_from_char(char c) {
        switch (c) {
        case 'A': case 'a': return Base::A;
        case 'C': case 'c': return Base::C;
        case 'G': case 'g': return Base::G;
        case 'U': case 'u':
        case 'T': case 't': return Base::U;
        default: return std::nullopt;
        }
    }

    std::vector<Violation>
    validate(std::size_t length, std::span<const BasePair> pairs) {
        std::vector<Violation> out;
        const int n = static_cast<int>(length);
        std::map<int, int> uses;

        for (const auto &bp : pairs) {
            if (bp.five >= bp.three) {
                out.push_back({{bp.five, bp.three},
                               "pair (" + std::to_string(bp.five) + "," + std::to_string(bp.three) +
                                   "): i < j required"});
            }
            bool in_range = true;
            for (int p : {bp.five, bp.three}) {
                if (p < 1 || p > n) {
                    in_range = false;
                    out.push_back({{p},
                                   "position " + std::to_string(p) + " out of range 1.." +
                                       std::to_string(n)});
                }
            }
            if (!in_range)
                continue;
            ++uses[bp.five];
            if (bp.three != bp.five)
                ++uses[bp.three];
        }
        for (auto [pos, count] : uses) {
            if (count > 1)
                out.push_back({{pos}, "position " + std::to_string(pos) + " shared by " +
                                          std::to_string(count) + " pairs"});
        }
        return out;
    }

    RnaStructure::RnaStructure(std::string name, std::vector<Base> sequence,
                               std::vector<BasePair> pairs)
        : name_(std::move(name)), sequence_(std::move(sequence)), pairs_(std::move(pairs)) {
        auto violations = validate(sequence_.size(), pairs_);
        if (!violations.empty()) {
            std::string msg = "invalid structure";
            for (const auto &v : violations)
                msg += "; " + v.message;
            throw InvalidStructure(msg);
        }
        std::sort(pairs_.begin(), pairs_.end());
        partner_.resize(sequence_.size());
        for (int i = 0; i < size(); ++i)
            partner_[i] = i + 1;
        for (const auto &bp : pairs_) {
            partner_[bp.five - 1] = bp.three;
            partner_[bp.three - 1] = bp.five;
        }
    }

    std::string
    RnaStructure::sequence_string() const {
        std::string s;
        s.reserve(sequence_.size());
        for (Base b : sequence_)
            s += to_char(b);
        return s;
    }

    RnaStructure
    RnaStructure::slice(int first, int last) const {
        std::vector<Base> seq(sequence_.begin() + (first - 1), sequence_.begin() + last);
        std::vector<BasePair> inner;
        for (const auto &bp : pairs_) {
            if (bp.five >= first && bp.three <= last)
                inner.push_back({bp.five - first + 1, bp.three - first + 1});
        }
        return RnaStructure(name_, std::move(seq), std::move(inner));
    }

    PartnerMap
    partner_map(const RnaStructure &r) {
        std::vector<int> p(r.size());
        for (int i = 1; i <= r.size(); ++i)
            p[i - 1] = r.partner(i);
        return PartnerMap(std::move(p));
    }

    std::vector<BasePair>
    noncanonical_pairs(const RnaStructure &r) {
        std::vector<BasePair> out;
        for (const auto &bp : r.pairs()) {
            char a = to_char(r.base(bp.five));
            char b = to_char(r.base(bp.three));
            std::string s{a, b};
            if (s != "AU" && s != "UA" && s != "GC" && s != "CG" && s != "GU" && s != "UG")
                out.push_back(bp);
        }
        return out;
    }

    std::vector<Base>
    parse_sequence(std::string_view seq, int line) {
        std::vector<Base> out;
        out.reserve(seq.size());
        for (std::size_t k = 0; k < seq.size(); ++k) {
            char c = seq[k];
            if (c == ' ' || c == '\t' || c == '\r')
                continue;
            auto b = base_from_char(c);
            if (!b)
                throw ParseError(line, std::string("invalid base '") + c + "' at column " +
                                           std::to_string(k + 1));
            out.push_back(*b);
        }
        return out;
    }

    namespace {
        std::string_view
        trim(std::string_view s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
                s.remove_prefix(1);
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
                s.remove_suffix(1);
            return s;
        }

        std::vector<std::string_view>
        split_lines(std::string_view text) {
            std::vector<std::string_view> lines;
            std::size_t start = 0;
            while (start <= text.size()) {
                auto nl = text.find('\n', start);
                if (nl == std::string_view::npos) {
                    if (start < text.size())
                        lines.push_back(text.substr(start));
                    break;
                }
                lines.push_back(text.substr(start, nl - start));
                start = nl + 1;
            }
            return lines;
        }

        constexpr std::string_view kOpen = "([{<";
        constexpr std::string_view kClose = ")]}>";
        constexpr std::string_view kPairsSentinel = "#pairs";
    } // namespace

    RnaStructure
    parse_dot_bracket(std::string name, std::string_view seq, std::string_view structure) {
        auto bases = parse_sequence(seq, 2);
        std::string_view db = trim(structure);
        if (db.size() != bases.size())
            throw ParseError(3, "structure length " + std::to_string(db.size()) +
                                    " differs from sequence length " +
                                    std::to_string(bases.size()));

        std::array<std::vector<int>, 4> stacks;
        std::vector<BasePair> pairs;
        for (std::size_t k = 0; k < db.size(); ++k) {
            int pos = static_cast<int>(k) + 1;
            char c = db[k];
            if (c == '.')
                continue;
            if (auto f = kOpen.find(c); f != std::string_view::npos) {
                stacks[f].push_back(pos);
            } else if (auto f = kClose.find(c); f != std::string_view::npos) {
                if (stacks[f].empty())
                    throw ParseError(3, std::string("unbalanced brackets: unmatched '") + c +
                                            "' at position " + std::to_string(pos));
                pairs.push_back({stacks[f].back(), pos});
                stacks[f].pop_back();
            } else {
                throw ParseError(3, std::string("invalid structure character '") + c +
                                        "' at position " + std::to_string(pos));
            }
        }
        for (std::size_t f = 0; f < stacks.size(); ++f) {
            if (!stacks[f].empty())
                throw ParseError(3, std::string("unbalanced brackets: unmatched '") + kOpen[f] +
                                        "' at position " + std::to_string(stacks[f].back()));
        }
        return RnaStructure(std::move(name), std::move(bases), std::move(pairs));
    }

    RnaStructure
    parse_pair_list(std::string name, std::string_view seq, std::string_view pair_lines,
                    int first_line) {
        auto bases = parse_sequence(seq, 2);
        const int n = static_cast<int>(bases.size());
        std::vector<BasePair> pairs;
        std::map<int, int> seen; // position -> line

        auto lines = split_lines(pair_lines);
        for (std::size_t k = 0; k < lines.size(); ++k) {
            int line_no = first_line + static_cast<int>(k);
            std::string_view line = trim(lines[k]);
            if (line.empty())
                break;
            std::istringstream in{std::string(line)};
            long long i = 0, j = 0;
            std::string rest;
            if (!(in >> i >> j) || (in >> rest))
                throw ParseError(line_no, "expected 'i j' pair, got '" + std::string(line) + "'");
            if (i >= j)
                throw ParseError(line_no, "pair (" + std::to_string(i) + "," + std::to_string(j) +
                                              "): i < j required");
            if (i < 1 || j > n)
                throw ParseError(line_no, "pair (" + std::to_string(i) + "," + std::to_string(j) +
                                              ") out of range 1.." + std::to_string(n));
            for (long long p : {i, j}) {
                if (auto it = seen.find(static_cast<int>(p)); it != seen.end())
                    throw ParseError(line_no, "position " + std::to_string(p) +
                                                  " already paired on line " +
                                                  std::to_string(it->second));
                seen[static_cast<int>(p)] = line_no;
            }
            pairs.push_back({static_cast<int>(i), static_cast<int>(j)});
        }
        return RnaStructure(std::move(name), std::move(bases), std::move(pairs));
    }

    RnaStructure
    parse_rna(std::string_view text, StructureFormat format) {
        auto lines = split_lines(text);
        if (lines.empty())
            throw ParseError(1, "empty structure file");

        std::string_view header = trim(lines[0]);
        if (header.empty() || header.front() != '>')
            throw ParseError(1, "expected '>name' header");
        std::string name(trim(header.substr(1)));

        std::string_view seq = lines.size() > 1 ? lines[1] : std::string_view{};
        std::string_view third = lines.size() > 2 ? trim(lines[2]) : std::string_view{};
        bool pairlist = third == kPairsSentinel;

        if (format == StructureFormat::DotBracket && pairlist)
            throw ParseError(3, "expected dot-bracket structure, found '#pairs'");
        if (format == StructureFormat::PairList && !pairlist)
            throw ParseError(3, "expected '#pairs' sentinel");

        if (pairlist) {
            std::size_t offset = 0;
            for (std::size_t k = 0; k < 3; ++k)
                offset += lines[k].size() + 1;
            std::string_view rest = offset < text.size() ? text.substr(offset) : std::string_view{};
            return parse_pair_list(std::move(name), seq, rest, 4);
        }
        if (lines.size() < 3 && !parse_sequence(seq, 2).empty())
            throw ParseError(3, "missing structure line");
        return parse_dot_bracket(std::move(name), seq, third);
    }

    std::string
    to_dot_bracket(const RnaStructure &r) {
        std::string db(r.size(), '.');
        std::array<std::vector<BasePair>, 4> families;
        auto crosses = [](const BasePair &a, const BasePair &b) {
            return (a.five < b.five && b.five < a.three && a.three < b.three) ||
                   (b.five < a.five && a.five < b.three && b.three < a.three);
        };
        for (const auto &bp : r.pairs()) {
            std::size_t f = 0;
            for (; f < families.size(); ++f) {
                if (std::none_of(families[f].begin(), families[f].end(),
                                 [&](const BasePair &o) { return crosses(o, bp); }))
                    break;
            }
            if (f == families.size())
                throw InvalidStructure("pseudoknot too deep for four bracket families; use the "
                                       "pair-list format");
            families[f].push_back(bp);
            db[bp.five - 1] = kOpen[f];
            db[bp.three - 1] = kClose[f];
        }
        return db;
    }

    std::string
    serialize(const RnaStructure &r, StructureFormat format) {
        std::ostringstream out;
        out << '>' << r.name() << '\n' << r.sequence_string() << '\n';
        if (format == StructureFormat::DotBracket) {
            out << to_dot_bracket(r) << '\n';
        } else {
            out << kPairsSentinel << '\n';
            for (const auto &bp : r.pairs())
                out << bp.five << ' ' << bp.three << '\n';
        }
        return out.str();
    }

    RnaStructure
    read_structure_file(const std::string &path) {
        std::ifstream in(path);
        if (!in)
            throw ParseError(0, "cannot open file");
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_rna(buf.str());
    }

} // namespace rnastruct
