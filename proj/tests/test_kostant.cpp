#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace parabolic;

namespace {

ParabolicGrading make(const std::string& label) {
    const auto g = parse_geometry(label);
    return ParabolicGrading(std::make_shared<const RootSystem>(g.family, g.rank), g.crosses);
}

} // namespace

TEST(Kostant, HasseWords) {
    EXPECT_EQ(hasse2_words(make("A2/P1")), (std::vector<Word>{{1, 2}}));
    EXPECT_EQ(hasse2_words(make("G2/P1")), (std::vector<Word>{{1, 2}}));
    EXPECT_EQ(hasse2_words(make("A3/P1,2,3")).size(), 6u);
    EXPECT_TRUE(hasse2_words(make("A1/P1")).empty());
}

TEST(Kostant, HasseWordsByDirectEnumeration) {
    for_each_geometry(6, [](const ParabolicGrading& pg) {
        const auto& rs = pg.root_system();
        std::vector<Word> expect;
        for (Node j : pg.crosses())
            for (Node k = 1; k <= rs.rank(); ++k)
                if (k != j && (pg.is_crossed(k) || rs.cartan(j, k) != 0))
                    expect.push_back({j, k});
        auto got = hasse2_words(pg);
        std::sort(got.begin(), got.end());
        ASSERT_EQ(got, expect) << pg.label();
    });
}

TEST(Kostant, LowestWeightMatchesAffineAction) {
    for_each_geometry(7, [](const ParabolicGrading& pg) {
        const auto& rs = pg.root_system();
        for (const auto& c : hasse2(pg)) {
            ASSERT_EQ(c.mu_weight, oracle::affine_mu(rs, c.word)) << pg.label() << " " << word_label(c.word);
            ASSERT_EQ(rs.weight_coords(c.mu), c.mu_weight);
        }
    });
}

TEST(Kostant, CurvatureRootAndHomogeneities) {
    for_each_geometry(6, [](const ParabolicGrading& pg) {
        const auto& rs = pg.root_system();
        for (const auto& c : hasse2(pg)) {
            const Root w = rs.apply_word({c.word.first, c.word.second}, -rs.highest_root());
            ASSERT_EQ(c.w_minus_lambda, w);
            ASSERT_EQ(c.hom_mu, oracle::z_degree(pg.crosses(), c.mu));
            ASSERT_EQ(c.hom_wml, oracle::z_degree(pg.crosses(), w));
            ASSERT_EQ(c.nonrigid, c.hom_mu > 0);
            ASSERT_EQ(c.torsion_free, c.hom_wml >= 0);
        }
    });
}

TEST(Kostant, Examples) {
    EXPECT_EQ(lowest_weight(make("G2/P1"), {1, 2}), (Root{4, 0}));
    EXPECT_EQ(lowest_weight(make("B3/P3"), {3, 2}), (Root{-1, 0, 3}));
    for (int l = 3; l <= 6; ++l) {
        Root expect(l, -2);
        expect[l - 2] = -1;
        expect[l - 1] = 1;
        EXPECT_EQ(lowest_weight(make("C" + std::to_string(l) + "/P" + std::to_string(l)), {l, l - 1}), expect);
    }
    const auto g2 = classify_component(make("G2/P1"), {1, 2});
    EXPECT_TRUE(g2.nonrigid);
    EXPECT_TRUE(g2.torsion_free);
    EXPECT_EQ(classify_component(make("A2/P1"), {1, 2}).hom_wml, 1);
    EXPECT_FALSE(classify_component(make("B5/P5"), {5, 4}).torsion_free);
}

TEST(Kostant, LowestWeightBothBases) {
    const auto pg = make("E7/P7");
    const auto r = lowest_weight_vector(pg, {7, 6}, Basis::Root);
    const auto w = lowest_weight_vector(pg, {7, 6}, Basis::Weight);
    EXPECT_EQ(pg.root_system().to_weight_basis(r), w);
    EXPECT_EQ(r, root_vector({-2, -2, -3, -4, -3, -1, 1}));
}

TEST(Kostant, InvalidWords) {
    const auto pg = make("A3/P1");
    EXPECT_THROW(lowest_weight(pg, {2, 1}), InvalidWord);
    EXPECT_THROW(lowest_weight(pg, {1, 3}), InvalidWord);
    EXPECT_THROW(lowest_weight(pg, {1, 1}), InvalidWord);
}

TEST(Kostant, NonrigidContactGeometries) {
    for (const char* label : {"A3/P1,3", "B4/P2", "C3/P1", "D5/P2", "G2/P2", "F4/P1", "E6/P2", "E7/P1", "E8/P8"}) {
        const auto pg = make(label);
        EXPECT_TRUE(crosses_all_contact_nodes(pg));
        EXPECT_TRUE(is_nonrigid(pg)) << label;
    }
}
