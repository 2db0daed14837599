#include "rnastruct/alignment.hh"

#include <algorithm>

namespace rnastruct {

    std::string_view
    to_string(AlignMode mode) {
        switch (mode) {
        case AlignMode::Global: return "global";
        case AlignMode::Fit: return "fit";
        case AlignMode::Local: return "local";
        }
        return "?";
    }

    AlignMode
    parse_mode(std::string_view text) {
        if (text == "global") return AlignMode::Global;
        if (text == "fit") return AlignMode::Fit;
        if (text == "local") return AlignMode::Local;
        throw std::invalid_argument("unknown alignment mode '" + std::string(text) + "'");
    }

    int
    count_gaps(std::string_view row1, std::string_view row2) {
        int gaps = 0;
        for (auto row : {row1, row2}) {
            bool in_gap = false;
            for (char c : row) {
                if (c == '-' && !in_gap)
                    ++gaps;
                in_gap = c == '-';
            }
        }
        return gaps;
    }

    AlignmentResult
    make_alignment(const std::vector<Column> &columns, const RnaStructure &r1, const RnaStructure &r2,
                   Region region1, Region region2, AlignMode mode) {
        AlignmentResult a;
        a.row1.reserve(columns.size());
        a.row2.reserve(columns.size());
        for (const auto &c : columns) {
            a.row1 += c.pos1 ? to_char(r1.base(c.pos1)) : '-';
            a.row2 += c.pos2 ? to_char(r2.base(c.pos2)) : '-';
        }
        a.region1 = region1;
        a.region2 = region2;
        a.gap_count = count_gaps(a.row1, a.row2);
        a.mode = mode;
        return a;
    }

    std::vector<Column>
    columns_of(const AlignmentResult &a) {
        if (a.row1.size() != a.row2.size())
            throw std::invalid_argument("rows differ in length");
        std::vector<Column> cols(a.row1.size());
        int p1 = a.region1.first, p2 = a.region2.first;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (a.row1[c] != '-')
                cols[c].pos1 = p1++;
            if (a.row2[c] != '-')
                cols[c].pos2 = p2++;
        }
        if (p1 - a.region1.first != a.region1.size() || p2 - a.region2.first != a.region2.size())
            throw std::invalid_argument("rows do not cover the regions");
        return cols;
    }

    namespace {
        bool
        inside(const Region &r, int pos) {
            return pos >= r.first && pos <= r.last;
        }

        std::string
        str(int v) {
            return std::to_string(v);
        }

        // column index of every position of the region, -1 outside
        std::vector<int>
        column_index(const std::vector<Column> &cols, int length, bool first_row) {
            std::vector<int> idx(length + 1, -1);
            for (std::size_t c = 0; c < cols.size(); ++c) {
                int p = first_row ? cols[c].pos1 : cols[c].pos2;
                if (p)
                    idx[p] = static_cast<int>(c);
            }
            return idx;
        }

        struct MatchedPair {
            BasePair in1;
            BasePair in2;
        };

        // matched pairs of an alignment already known to satisfy conditions 1-3
        std::vector<MatchedPair>
        matched_pairs(const std::vector<Column> &cols, const RnaStructure &r1, const RnaStructure &r2,
                      const Region &region1) {
            std::vector<MatchedPair> out;
            auto idx1 = column_index(cols, r1.size(), true);
            for (const auto &bp : r1.pairs()) {
                if (!inside(region1, bp.five) || !inside(region1, bp.three))
                    continue;
                int s5 = cols[idx1[bp.five]].pos2;
                int s3 = cols[idx1[bp.three]].pos2;
                if (s5 && s3 && r2.partner(s5) == s3)
                    out.push_back({bp, {s5, s3}});
            }
            return out;
        }

        bool
        crosses(const BasePair &a, const BasePair &b) {
            return (a.five < b.five && b.five < a.three && a.three < b.three) ||
                   (b.five < a.five && a.five < b.three && b.three < a.three);
        }
    } // namespace

    std::vector<Violation>
    validate_alignment(const AlignmentResult &a, const RnaStructure &r1, const RnaStructure &r2) {
        std::vector<Violation> out;
        auto add = [&](std::vector<int> pos, std::string msg) {
            out.push_back({std::move(pos), std::move(msg)});
        };

        // condition 1
        if (a.row1.size() != a.row2.size()) {
            add({}, "condition 1: rows differ in length (" + str(a.row1.size()) + " vs " +
                        str(a.row2.size()) + ")");
            return out;
        }
        auto region_ok = [&](const Region &r, int n, const char *which) {
            bool ok = r.first >= 1 && r.first <= n + 1 && r.last <= n && r.last >= r.first - 1;
            if (!ok)
                add({r.first, r.last}, std::string("condition 1: ") + which + " [" + str(r.first) +
                                           ".." + str(r.last) + "] outside 1.." + str(n));
            return ok;
        };
        if (!region_ok(a.region1, r1.size(), "region1") || !region_ok(a.region2, r2.size(), "region2"))
            return out;

        std::vector<Column> cols;
        try {
            cols = columns_of(a);
        } catch (const std::invalid_argument &e) {
            add({}, std::string("condition 1: ") + e.what());
            return out;
        }
        bool spelled = true;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const auto &col = cols[c];
            if (!col.pos1 && !col.pos2)
                add({}, "condition 1: column " + str(c + 1) + " has '-' in both rows");
            if (col.pos1 && a.row1[c] != to_char(r1.base(col.pos1))) {
                add({col.pos1}, "condition 1: row1 column " + str(c + 1) + " is '" + a.row1[c] +
                                    "' but R1[" + str(col.pos1) + "] is '" +
                                    to_char(r1.base(col.pos1)) + "'");
                spelled = false;
            }
            if (col.pos2 && a.row2[c] != to_char(r2.base(col.pos2))) {
                add({col.pos2}, "condition 1: row2 column " + str(c + 1) + " is '" + a.row2[c] +
                                    "' but R2[" + str(col.pos2) + "] is '" +
                                    to_char(r2.base(col.pos2)) + "'");
                spelled = false;
            }
        }
        if (!spelled)
            return out;

        // conditions 2 and 3, column by column
        for (std::size_t c = 0; c < cols.size(); ++c) {
            int x = cols[c].pos1, y = cols[c].pos2;
            if (!x || !y)
                continue;
            bool u1 = r1.is_unpaired(x), u2 = r2.is_unpaired(y);
            if (u1 && u2)
                continue;
            if (u1 != u2) {
                add({x, y}, "condition 3: " + std::string(u1 ? "unpaired" : "paired") + " base " +
                                str(x) + " of R1 aligned to " + (u2 ? "unpaired" : "paired") +
                                " base " + str(y) + " of R2");
                continue;
            }
            if (!inside(a.region1, r1.partner(x)))
                add({x, y}, "condition 3: base " + str(x) + " of R1 pairs outside region1 and may "
                                                           "only be aligned to '-'");
            if (!inside(a.region2, r2.partner(y)))
                add({x, y}, "condition 3: base " + str(y) + " of R2 pairs outside region2 and may "
                                                           "only be aligned to '-'");
        }

        auto idx1 = column_index(cols, r1.size(), true);
        auto idx2 = column_index(cols, r2.size(), false);
        for (const auto &bp : r1.pairs()) {
            if (!inside(a.region1, bp.five) || !inside(a.region1, bp.three))
                continue;
            int s5 = cols[idx1[bp.five]].pos2;
            int s3 = cols[idx1[bp.three]].pos2;
            bool ok = (!s5 && !s3) || (s5 && s3 && r2.partner(s5) == s3);
            if (!ok)
                add({bp.five, bp.three}, "condition 3: pair (" + str(bp.five) + "," + str(bp.three) +
                                             ") of R1 is neither matched to a pair nor deleted");
        }
        for (const auto &bp : r2.pairs()) {
            if (!inside(a.region2, bp.five) || !inside(a.region2, bp.three))
                continue;
            int s5 = cols[idx2[bp.five]].pos1;
            int s3 = cols[idx2[bp.three]].pos1;
            bool ok = (!s5 && !s3) || (s5 && s3 && r1.partner(s5) == s3);
            if (!ok)
                add({bp.five, bp.three}, "condition 3: pair (" + str(bp.five) + "," + str(bp.three) +
                                             ") of R2 is neither matched to a pair nor inserted");
        }
        if (!out.empty())
            return out;

        // condition 4
        auto matched = matched_pairs(cols, r1, r2, a.region1);
        for (std::size_t p = 0; p < matched.size(); ++p) {
            for (std::size_t q = p + 1; q < matched.size(); ++q) {
                if (crosses(matched[p].in1, matched[q].in1) || crosses(matched[p].in2, matched[q].in2))
                    add({matched[p].in1.five, matched[p].in1.three, matched[q].in1.five,
                         matched[q].in1.three},
                        "condition 4: aligned pairs (" + str(matched[p].in1.five) + "," +
                            str(matched[p].in1.three) + ") and (" + str(matched[q].in1.five) + "," +
                            str(matched[q].in1.three) + ") cross");
            }
        }
        return out;
    }

    Score
    sim_score(const AlignmentResult &a, const RnaStructure &r1, const RnaStructure &r2,
              const ScoringScheme &scheme) {
        if (auto v = validate_alignment(a, r1, r2); !v.empty())
            throw InvalidAlignment(v.front().message);

        ElementScores es(scheme, r1, r2);
        Score total;
        for (const auto &col : columns_of(a)) {
            if (col.pos1 && col.pos2) {
                // a pair is charged once, at the column of its 3' ends
                if (!r1.is_five_end(col.pos1))
                    total += es.gamma(col.pos1, col.pos2);
            } else if (col.pos1) {
                total -= es.del(col.pos1);
            } else {
                total -= es.ins(col.pos2);
            }
        }
        total -= count_gaps(a.row1, a.row2) * scheme.gap_open;
        return total;
    }

    std::pair<std::string, std::string>
    structure_annotation(const AlignmentResult &a, const RnaStructure &r1, const RnaStructure &r2) {
        auto cols = columns_of(a);
        std::string s1(cols.size(), '-'), s2(cols.size(), '-');
        for (std::size_t c = 0; c < cols.size(); ++c) {
            auto [x, y] = cols[c];
            if (x)
                s1[c] = r1.is_unpaired(x) ? '.' : r1.is_five_end(x) ? '<' : '>';
            if (y)
                s2[c] = r2.is_unpaired(y) ? '.' : r2.is_five_end(y) ? '<' : '>';
            if (x && y && !r1.is_unpaired(x)) {
                s1[c] = s1[c] == '<' ? '(' : ')';
                s2[c] = s2[c] == '<' ? '(' : ')';
            }
        }
        return {s1, s2};
    }

} // namespace rnastruct
