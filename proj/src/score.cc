#include "rnastruct/score.hh"

#include <charconv>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace rnastruct {

    Score
    Score::parse(std::string_view text) {
        std::string_view t = text;
        while (!t.empty() && (t.front() == ' ' || t.front() == '\t'))
            t.remove_prefix(1);
        while (!t.empty() && (t.back() == ' ' || t.back() == '\t' || t.back() == '\r'))
            t.remove_suffix(1);

        auto bad = [&] {
            return std::invalid_argument("not a number with .0/.5 precision: '" +
                                         std::string(text) + "'");
        };
        if (t.empty())
            throw bad();

        bool negative = false;
        if (t.front() == '-' || t.front() == '+') {
            negative = t.front() == '-';
            t.remove_prefix(1);
        }

        std::string_view int_part = t;
        std::string_view frac_part;
        if (auto dot = t.find('.'); dot != std::string_view::npos) {
            int_part = t.substr(0, dot);
            frac_part = t.substr(dot + 1);
        }
        if (int_part.empty() && frac_part.empty())
            throw bad();

        std::int64_t whole = 0;
        if (!int_part.empty()) {
            auto [p, ec] = std::from_chars(int_part.data(), int_part.data() + int_part.size(), whole);
            if (ec != std::errc() || p != int_part.data() + int_part.size())
                throw bad();
        }

        // fractional digits must spell .0, .5, .50, .000 ...
        std::int64_t half = 0;
        for (std::size_t k = 0; k < frac_part.size(); ++k) {
            char c = frac_part[k];
            if (c < '0' || c > '9')
                throw bad();
            if (k == 0) {
                if (c == '5')
                    half = 1;
                else if (c != '0')
                    throw bad();
            } else if (c != '0') {
                throw bad();
            }
        }

        std::int64_t h = 2 * whole + half;
        return from_half_units(negative ? -h : h);
    }

    std::string
    Score::to_string() const {
        if (is_neg_inf())
            return "-inf";
        std::int64_t h = half_;
        bool negative = h < 0;
        std::int64_t mag = negative ? -h : h;
        std::string s = negative ? "-" : "";
        s += std::to_string(mag / 2);
        s += (mag % 2) ? ".5" : ".0";
        return s;
    }

    std::ostream &
    operator<<(std::ostream &out, Score s) {
        return out << s.to_string();
    }

} // namespace rnastruct
