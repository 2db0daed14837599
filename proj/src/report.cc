#include "rnastruct/report.hh"

#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rnastruct {

    OutputRecord
    make_record(const AlignmentResult &a, const RnaStructure &r1, const RnaStructure &r2) {
        OutputRecord rec;
        rec.mode = a.mode;
        rec.name1 = r1.name();
        rec.name2 = r2.name();
        rec.score = a.score;
        rec.region1 = a.region1;
        rec.region2 = a.region2;
        rec.gap_count = a.gap_count;
        rec.row1 = a.row1;
        rec.row2 = a.row2;
        auto [s1, s2] = structure_annotation(a, r1, r2);
        rec.struct1 = std::move(s1);
        rec.struct2 = std::move(s2);
        return rec;
    }

    std::string
    format_region(const Region &r) {
        return std::to_string(r.first) + ".." + std::to_string(r.last);
    }

    namespace {
        int
        to_int(std::string_view s) {
            int v = 0;
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc() || p != s.data() + s.size())
                throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
            return v;
        }
    } // namespace

    Region
    parse_region(std::string_view text) {
        auto dots = text.find("..");
        if (dots == std::string_view::npos)
            throw std::invalid_argument("not a region: '" + std::string(text) + "'");
        return Region{to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
    }

    std::string
    format_tsv(const OutputRecord &rec) {
        std::ostringstream out;
        out << "mode\t" << to_string(rec.mode) << '\n'
            << "name1\t" << rec.name1 << '\n'
            << "name2\t" << rec.name2 << '\n'
            << "score\t" << rec.score << '\n'
            << "region1\t" << format_region(rec.region1) << '\n'
            << "region2\t" << format_region(rec.region2) << '\n'
            << "gap_count\t" << rec.gap_count << '\n'
            << "row1\t" << rec.row1 << '\n'
            << "struct1\t" << rec.struct1 << '\n'
            << "struct2\t" << rec.struct2 << '\n'
            << "row2\t" << rec.row2 << '\n';
        if (!rec.ends.empty()) {
            out << "ends\t";
            for (std::size_t k = 0; k < rec.ends.size(); ++k)
                out << (k ? "," : "") << rec.ends[k];
            out << '\n';
        }
        return out.str();
    }

    OutputRecord
    parse_tsv(std::string_view text) {
        std::map<std::string, std::string, std::less<>> fields;
        std::istringstream in{std::string(text)};
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty())
                continue;
            auto tab = line.find('\t');
            if (tab == std::string::npos)
                throw std::invalid_argument("line without a tab: '" + line + "'");
            fields[line.substr(0, tab)] = line.substr(tab + 1);
        }
        auto get = [&](std::string_view key) -> const std::string & {
            auto it = fields.find(key);
            if (it == fields.end())
                throw std::invalid_argument("missing field '" + std::string(key) + "'");
            return it->second;
        };

        OutputRecord rec;
        rec.mode = parse_mode(get("mode"));
        rec.name1 = get("name1");
        rec.name2 = get("name2");
        rec.score = Score::parse(get("score"));
        rec.region1 = parse_region(get("region1"));
        rec.region2 = parse_region(get("region2"));
        rec.gap_count = to_int(get("gap_count"));
        rec.row1 = get("row1");
        rec.struct1 = get("struct1");
        rec.struct2 = get("struct2");
        rec.row2 = get("row2");
        if (auto it = fields.find("ends"); it != fields.end()) {
            std::string_view rest = it->second;
            while (!rest.empty()) {
                auto comma = rest.find(',');
                rec.ends.push_back(to_int(rest.substr(0, comma)));
                rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
            }
        }
        return rec;
    }

    std::string
    format_text(const OutputRecord &rec) {
        std::ostringstream out;
        out << to_string(rec.mode) << " alignment of " << rec.name1 << " [" << format_region(rec.region1)
            << "] and " << rec.name2 << " [" << format_region(rec.region2) << "]\n"
            << "score " << rec.score << ", gaps " << rec.gap_count << "\n";
        if (!rec.ends.empty()) {
            out << "optimal end columns";
            for (int e : rec.ends)
                out << ' ' << e;
            out << '\n';
        }
        if (rec.row1.empty())
            return out.str();

        std::string marks(rec.row1.size(), ' ');
        for (std::size_t c = 0; c < marks.size(); ++c) {
            if (rec.row1[c] != '-' && rec.row2[c] != '-')
                marks[c] = rec.row1[c] == rec.row2[c] ? '|' : '.';
        }
        std::size_t w = std::max(rec.name1.size(), rec.name2.size());
        auto label = [&](const std::string &s) { return s + std::string(w - s.size() + 2, ' '); };
        std::string blank(w + 2, ' ');
        out << '\n'
            << label(rec.name1) << rec.row1 << '\n'
            << blank << rec.struct1 << '\n'
            << blank << marks << '\n'
            << blank << rec.struct2 << '\n'
            << label(rec.name2) << rec.row2 << '\n';
        return out.str();
    }

} // namespace rnastruct
