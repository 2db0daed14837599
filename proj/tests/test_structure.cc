#include "doctest.h"

#include "rnastruct/structure.hh"
#include "support.hh"

#include <fstream>

using namespace rnastruct;
using rnastruct::test::db;

namespace {
    std::vector<BasePair>
    P(std::initializer_list<BasePair> l) {
        return l;
    }

    bool
    mentions(const std::vector<Violation> &v, std::string_view what) {
        return std::any_of(v.begin(), v.end(),
                           [&](const Violation &x) { return x.message.find(what) != std::string::npos; });
    }
} // namespace

TEST_CASE("dot-bracket parsing") {
    CHECK(db("ACGU", "(..)").pairs() == P({{1, 4}}));
    CHECK(db("ACGU", "([)]").pairs() == P({{1, 3}, {2, 4}}));
    CHECK(db("AAAAAAAA", "([{<)]}>").pairs() == P({{1, 5}, {2, 6}, {3, 7}, {4, 8}}));
    CHECK(db("", "").empty());

    CHECK_THROWS_WITH_AS(db("ACGU", "(.(("), doctest::Contains("unbalanced"), ParseError);
    CHECK_THROWS_WITH_AS(db("ACGU", "(..]"), doctest::Contains("unbalanced"), ParseError);
    CHECK_THROWS_AS(db("ACGU", "(.)"), ParseError);
    CHECK_THROWS_AS(db("ACGU", "(xx)"), ParseError);
    CHECK_THROWS_AS(db("ACGX", "...."), ParseError);
}

TEST_CASE("alphabet normalisation") {
    auto r = db("acgt", "....");
    CHECK(r.sequence_string() == "ACGU");
    CHECK(base_from_char('T') == Base::U);
    CHECK_FALSE(base_from_char('N').has_value());
    CHECK_FALSE(base_from_char('x').has_value());
}

TEST_CASE("partner map") {
    CHECK(partner_map(test::unpaired("ACG")).values() == std::vector<int>{1, 2, 3});
    CHECK(partner_map(db("ACGU", "(..)")).values() == std::vector<int>{4, 2, 3, 1});
    CHECK(partner_map(test::with_pairs("AUAU", {{1, 3}, {2, 4}})).values() == std::vector<int>{3, 4, 1, 2});
}

TEST_CASE("validate") {
    auto ok = P({{1, 4}, {2, 3}});
    CHECK(validate(4, ok).empty());

    auto shared = P({{1, 4}, {4, 6}});
    auto v = validate(6, shared);
    REQUIRE(v.size() == 1);
    CHECK(v[0].positions == std::vector<int>{4});
    CHECK(mentions(v, "shared"));

    auto self = P({{3, 3}});
    CHECK(mentions(validate(4, self), "i < j required"));

    auto reversed = P({{4, 2}});
    CHECK(mentions(validate(4, reversed), "i < j required"));

    auto outside = P({{1, 9}});
    CHECK(mentions(validate(4, outside), "out of range"));

    CHECK_THROWS_AS(test::with_pairs("ACGUAC", {{1, 4}, {4, 6}}), InvalidStructure);
}

TEST_CASE("structure file parsing") {
    SUBCASE("dot-bracket file") {
        auto r = parse_rna(">hp\nGGAAACC\n((...))\n");
        CHECK(r.name() == "hp");
        CHECK(r.pairs() == P({{1, 7}, {2, 6}}));
    }
    SUBCASE("pair list file") {
        auto r = parse_rna(">pk\nAUAU\n#pairs\n1 3\n2 4\n");
        CHECK(r.pairs() == P({{1, 3}, {2, 4}}));
    }
    SUBCASE("errors carry line numbers") {
        auto line_of = [](std::string_view text) {
            try {
                parse_rna(text);
            } catch (const ParseError &e) {
                return e.line();
            }
            return -1;
        };
        CHECK(line_of("hp\nACGU\n....\n") == 1);
        CHECK(line_of(">hp\nACZU\n....\n") == 2);
        CHECK(line_of(">hp\nACGU\n(...\n") == 3);
        CHECK(line_of(">pk\nAUAU\n#pairs\n1 3\n3 4\n") == 5);
        CHECK(line_of(">pk\nAUAU\n#pairs\n1 3\n4 2\n") == 5);
        CHECK(line_of(">pk\nAUAU\n#pairs\n1 3\n2 x\n") == 5);
        CHECK(line_of(">pk\nAUAU\n#pairs\n1 9\n") == 4);
    }
    SUBCASE("the format can be forced") {
        CHECK_THROWS_AS(parse_rna(">pk\nAUAU\n#pairs\n1 3\n", StructureFormat::DotBracket), ParseError);
        CHECK_THROWS_AS(parse_rna(">hp\nACGU\n(..)\n", StructureFormat::PairList), ParseError);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(read_structure_file("/nonexistent/none.struct"), ParseError);
    }
}

TEST_CASE("serialize round trip and involution") {
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 300; ++rep) {
        int len = std::uniform_int_distribution<int>(0, 30)(rng);
        auto r = test::random_structure(rng, len, len / 2, true, "ACGU", "s" + std::to_string(rep));
        CHECK(validate(r.size(), r.pairs()).empty());

        auto back = parse_rna(serialize(r));
        CHECK(back.name() == r.name());
        CHECK(back.sequence() == r.sequence());
        CHECK(back.pairs() == r.pairs());

        auto p = partner_map(r);
        for (int i = 1; i <= r.size(); ++i)
            CHECK(p(p(i)) == i);

        if (!test::has_crossing(r)) {
            auto again = parse_rna(serialize(r, StructureFormat::DotBracket));
            CHECK(again.pairs() == r.pairs());
        }
    }
}

TEST_CASE("dot-bracket output needs at most four families") {
    auto r = test::with_pairs("AAAAAAAAAA", {{1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10}});
    CHECK_THROWS_AS(serialize(r, StructureFormat::DotBracket), InvalidStructure);
    auto pk = test::with_pairs("AUAU", {{1, 3}, {2, 4}});
    CHECK(to_dot_bracket(pk) == "([)]");
}

TEST_CASE("slice keeps inner pairs only") {
    auto r = db("GGACGUCC", "((.().))");
    auto s = r.slice(2, 7);
    CHECK(s.sequence_string() == "GACGUC");
    CHECK(s.pairs() == P({{1, 6}, {3, 4}}));
    CHECK(r.slice(1, 4).pairs().empty());
    CHECK(r.slice(3, 6).pairs() == P({{2, 3}}));
}

TEST_CASE("non-canonical pairs") {
    auto r = db("GAAUAA", "(.)(.)");
    CHECK(noncanonical_pairs(r) == P({{1, 3}}));
    CHECK(noncanonical_pairs(db("GUAUGC", "((..))")).empty());
}
