#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace parabolic;

namespace {

ParabolicGrading make(const std::string& label) {
    const auto g = parse_geometry(label);
    return ParabolicGrading(std::make_shared<const RootSystem>(g.family, g.rank), g.crosses);
}

template <typename T>
T round_trip(const T& x) {
    const std::string text = Json(x).dump();
    return Json::parse(text).get<T>();
}

} // namespace

TEST(Serialize, Rationals) {
    EXPECT_EQ(rational_json(Rational(-3, 4)), "-3/4");
    EXPECT_EQ(rational_json(Rational(5)), "5");
    EXPECT_EQ(rational_from_json("6/8"), Rational(3, 4));
    EXPECT_THROW(rational_from_json(Json(7)), ParseError);
    EXPECT_THROW(rational_from_json("1/0"), ParseError);
    EXPECT_THROW(rational_from_json("a/2"), ParseError);
}

TEST(Serialize, TaggedVectors) {
    EXPECT_EQ(root_json({1, 2}).dump(), R"({"basis":"root","coords":[1,2]})");
    EXPECT_EQ(weight_json({0, 1}).dump(), R"({"basis":"weight","coords":[0,1]})");
    EXPECT_THROW(root_from_json(weight_json({0, 1})), ParseError);
    EXPECT_THROW(root_from_json(Json{{"coords", {1}}}), ParseError);
    const WeightVector w{{Rational(1, 2), Rational(-3)}, Basis::Weight};
    EXPECT_EQ(Json(w).dump(), R"({"basis":"weight","coords":["1/2","-3"]})");
    EXPECT_EQ(round_trip(w), w);
}

TEST(Serialize, WordsAndHSequences) {
    EXPECT_EQ(word_json({1, 2}).dump(), "[1,2]");
    EXPECT_EQ(word_from_json(Json::array({10, 9})), (Word{10, 9}));
    const std::vector<ZCombination> hs{{{1, 1}}, {{6, 1}}, {{7, 2}}};
    EXPECT_EQ(h_sequence_json(hs).dump(), R"([{"1":1},{"6":1},{"7":2}])");
    EXPECT_EQ(h_sequence_from_json(h_sequence_json(hs)), hs);
    EXPECT_THROW(word_from_json(Json::array({1})), ParseError);
}

TEST(Serialize, StructRoundTrips) {
    for (const char* label : {"G2/P1", "D6/P1,4", "E7/P7", "C4/P3,4", "B5/P5", "A4/P1,2,3"}) {
        const auto pg = make(label);
        for (const auto& c : hasse2(pg)) {
            EXPECT_EQ(round_trip(c), c);
            if (c.nonrigid) {
                EXPECT_EQ(round_trip(tanaka_prolongation(pg, c.word)), tanaka_prolongation(pg, c.word));
            }
        }
        const auto cas = tsoc(pg);
        EXPECT_EQ(round_trip(cas), cas);
        for (const auto& step : cas.trace)
            EXPECT_EQ(round_trip(step), step);
        for (int j = 1; j <= cas.orbit_count(); ++j)
            EXPECT_EQ(round_trip(cm_check(pg, cas, j)), cm_check(pg, cas, j));
        EXPECT_EQ(round_trip(effective_top_slot(pg)), effective_top_slot(pg));
        for (const auto& m : module_g1(pg))
            EXPECT_EQ(round_trip(m), m);
    }
}

TEST(Serialize, GeometryRowsAndJets) {
    for (const auto& row : classify_torsion_free(4)) {
        const auto back = round_trip(row);
        EXPECT_EQ(back.label(), row.label());
        EXPECT_EQ(back.words, row.words);
        EXPECT_EQ(back.orbits, row.orbits);
        EXPECT_EQ(back.h_sequence, row.h_sequence);
        EXPECT_EQ(back.alias, row.alias);
    }
    const auto jf = jet_filtration(make("G2/P1"));
    EXPECT_EQ(round_trip(jf), jf);
    const FlatChart chart(make("A2/P1,2"));
    for (int x = 0; x < chart.dim(); ++x) {
        const auto f = chart.field(x, 3);
        const auto back = round_trip(f);
        EXPECT_EQ(back, f);
        EXPECT_EQ(back.variables, f.variables);
        EXPECT_EQ(back.truncation, f.truncation);
    }
}

TEST(Serialize, MissingFieldsAreParseErrors) {
    auto j = Json(tsoc(make("G2/P1")));
    j.erase("betas");
    EXPECT_THROW(j.get<Cascade>(), ParseError);
}
