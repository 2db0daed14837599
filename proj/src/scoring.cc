#include "rnastruct/scoring.hh"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace rnastruct {

    ScoringScheme
    default_scheme() {
        ScoringScheme s;
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b)
                s.base_subst[a][b] = Score::from_int(a == b ? 2 : -1);
        s.base_del = Score::from_int(1);
        s.base_ins = Score::from_int(1);
        s.pair_match = Score::from_int(5);
        s.pair_half = Score::from_int(1);
        s.pair_mismatch = Score::from_int(-1);
        s.pair_del = Score::from_int(4);
        s.pair_ins = Score::from_int(4);
        s.gap_open = Score::from_int(3);
        return s;
    }

    std::vector<std::string>
    convention_violations(const ScoringScheme &s) {
        std::vector<std::string> out;
        const Score zero;
        for (std::size_t a = 0; a < 4; ++a) {
            if (s.base_subst[a][a] < zero)
                out.push_back(std::string("substituting identical bases must score >= 0 (subst ") +
                              to_char(static_cast<Base>(a)) + ' ' + to_char(static_cast<Base>(a)) +
                              " = " + s.base_subst[a][a].to_string() + ")");
        }
        if (s.base_del < zero)
            out.push_back("base deletion penalty must be >= 0 (base_del = " + s.base_del.to_string() + ")");
        if (s.base_ins < zero)
            out.push_back("base insertion penalty must be >= 0 (base_ins = " + s.base_ins.to_string() + ")");
        if (s.pair_match < zero)
            out.push_back("substituting identical pairs must score >= 0 (pair_match = " +
                          s.pair_match.to_string() + ")");
        if (s.pair_del < zero)
            out.push_back("pair deletion penalty must be >= 0 (pair_del = " + s.pair_del.to_string() + ")");
        if (s.pair_ins < zero)
            out.push_back("pair insertion penalty must be >= 0 (pair_ins = " + s.pair_ins.to_string() + ")");
        if (!s.pair_del.is_whole())
            out.push_back("pair_del must be a whole number so that each end costs a half-integer");
        if (!s.pair_ins.is_whole())
            out.push_back("pair_ins must be a whole number so that each end costs a half-integer");
        if (s.gap_open <= zero)
            out.push_back("g must be positive: the per-gap score G = -g is negative (gap_open = " +
                          s.gap_open.to_string() + ")");
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
    } // namespace

    ScoringScheme
    load_scheme(std::string_view text) {
        ScoringScheme s = default_scheme();
        std::optional<Score> match, mismatch;
        struct Override {
            std::size_t a, b;
            Score v;
        };
        std::vector<Override> overrides;
        int last_line = 0;

        std::istringstream in{std::string(text)};
        std::string raw;
        int line_no = 0;
        while (std::getline(in, raw)) {
            ++line_no;
            std::string_view line = raw;
            if (auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;
            last_line = line_no;

            auto value = [&](std::string_view v) {
                try {
                    return Score::parse(v);
                } catch (const std::invalid_argument &e) {
                    throw SchemeError(line_no, e.what());
                }
            };

            if (line.rfind("subst", 0) == 0 && (line.size() == 5 || line[5] == ' ' || line[5] == '\t')) {
                std::istringstream fields{std::string(line.substr(5))};
                std::string x, y, v, extra;
                if (!(fields >> x >> y >> v) || (fields >> extra) || x.size() != 1 || y.size() != 1)
                    throw SchemeError(line_no, "expected 'subst X Y value'");
                auto bx = base_from_char(x[0]);
                auto by = base_from_char(y[0]);
                if (!bx || !by)
                    throw SchemeError(line_no, "unknown base in subst line");
                overrides.push_back({static_cast<std::size_t>(*bx), static_cast<std::size_t>(*by), value(v)});
                continue;
            }

            auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw SchemeError(line_no, "expected 'key = value'");
            std::string key(trim(line.substr(0, eq)));
            Score v = value(line.substr(eq + 1));

            if (key == "base_match") match = v;
            else if (key == "base_mismatch") mismatch = v;
            else if (key == "base_del") s.base_del = v;
            else if (key == "base_ins") s.base_ins = v;
            else if (key == "pair_match") s.pair_match = v;
            else if (key == "pair_half") s.pair_half = v;
            else if (key == "pair_mismatch") s.pair_mismatch = v;
            else if (key == "pair_del") s.pair_del = v;
            else if (key == "pair_ins") s.pair_ins = v;
            else if (key == "gap_open") s.gap_open = v;
            else throw SchemeError(line_no, "unknown key '" + key + "'");
        }

        for (std::size_t a = 0; a < 4; ++a) {
            for (std::size_t b = 0; b < 4; ++b) {
                if (a == b && match)
                    s.base_subst[a][b] = *match;
                if (a != b && mismatch)
                    s.base_subst[a][b] = *mismatch;
            }
        }
        for (const auto &o : overrides)
            s.base_subst[o.a][o.b] = o.v;

        if (auto v = convention_violations(s); !v.empty())
            throw SchemeError(last_line, v.front());
        return s;
    }

    ScoringScheme
    read_scheme_file(const std::string &path) {
        std::ifstream in(path);
        if (!in)
            throw SchemeError(0, "cannot open file");
        std::stringstream buf;
        buf << in.rdbuf();
        return load_scheme(buf.str());
    }

    ElementScores::ElementScores(const ScoringScheme &scheme, const RnaStructure &r1,
                                 const RnaStructure &r2)
        : scheme_(scheme), seq1_(r1.sequence()), seq2_(r2.sequence()),
          partner1_(partner_map(r1).values()), partner2_(partner_map(r2).values()),
          gap_(scheme.gap_open) {
        del_.resize(r1.size());
        for (int i = 1; i <= r1.size(); ++i)
            del_[i - 1] = r1.is_unpaired(i) ? scheme.base_del : scheme.pair_del.halved();
        ins_.resize(r2.size());
        for (int j = 1; j <= r2.size(); ++j)
            ins_[j - 1] = r2.is_unpaired(j) ? scheme.base_ins : scheme.pair_ins.halved();
    }

    Score
    ElementScores::gamma(int i, int j) const {
        int pi = partner1_[i - 1];
        int pj = partner2_[j - 1];
        if (pi == i && pj == j)
            return scheme_.base_score(seq1_[i - 1], seq2_[j - 1]);
        if (pi < i && pj < j)
            return scheme_.pair_score(seq1_[pi - 1], seq1_[i - 1], seq2_[pj - 1], seq2_[j - 1]);
        throw std::logic_error("gamma(" + std::to_string(i) + "," + std::to_string(j) +
                               ") requested for a structurally forbidden combination");
    }

} // namespace rnastruct
