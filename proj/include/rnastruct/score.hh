#ifndef RNASTRUCT_SCORE_HH
#define RNASTRUCT_SCORE_HH

#include <compare>
#include <iosfwd>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

namespace rnastruct {

    /**
     * \brief Exact half-integer score.
     *
     * Scores are kept as an integer count of half units, so halving an
     * even pair penalty and comparing against brute-force results are
     * both exact. A single sentinel value stands for minus infinity.
     */
    class Score {
    public:
        constexpr Score() = default;

        static constexpr Score
        from_half_units(std::int64_t h) {
            Score s;
            s.half_ = h;
            return s;
        }

        static constexpr Score
        from_int(std::int64_t v) {
            return from_half_units(2 * v);
        }

        static constexpr Score
        neg_inf() {
            return from_half_units(kNegInfHalf);
        }

        /// parse a decimal such as "-3", "2.5" or "1.0"; throws std::invalid_argument
        /// unless the value is an exact multiple of 0.5
        static Score
        parse(std::string_view text);

        constexpr std::int64_t
        half_units() const {
            return half_;
        }

        constexpr bool
        is_neg_inf() const {
            return half_ == kNegInfHalf;
        }

        constexpr bool
        is_whole() const {
            return half_ % 2 == 0;
        }

        /// exact half of an even number of half units
        constexpr Score
        halved() const {
            return from_half_units(half_ / 2);
        }

        constexpr Score
        operator-() const {
            return from_half_units(-half_);
        }

        constexpr Score &
        operator+=(Score o) {
            half_ += o.half_;
            return *this;
        }

        constexpr Score &
        operator-=(Score o) {
            half_ -= o.half_;
            return *this;
        }

        friend constexpr Score
        operator+(Score a, Score b) {
            return from_half_units(a.half_ + b.half_);
        }

        friend constexpr Score
        operator-(Score a, Score b) {
            return from_half_units(a.half_ - b.half_);
        }

        friend constexpr Score
        operator*(std::int64_t k, Score s) {
            return from_half_units(k * s.half_);
        }

        friend constexpr auto operator<=>(Score, Score) = default;
        friend constexpr bool operator==(Score, Score) = default;

        /// decimal rendering with exactly one fractional digit ("-7.0", "2.5"); "-inf" for the sentinel
        std::string
        to_string() const;

    private:
        // far enough from the int64 limits that adding a few finite scores
        // to the sentinel can never wrap
        static constexpr std::int64_t kNegInfHalf =
            std::numeric_limits<std::int64_t>::min() / 4;

        std::int64_t half_ = 0;
    };

    std::ostream &
    operator<<(std::ostream &out, Score s);

} // namespace rnastruct

#endif // RNASTRUCT_SCORE_HH
