#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace parabolic;

namespace {

ParabolicGrading make(const std::string& label) {
    const auto g = parse_geometry(label);
    return ParabolicGrading(std::make_shared<const RootSystem>(g.family, g.rank), g.crosses);
}

std::string s(int n) { return std::to_string(n); }

} // namespace

TEST(Cascade, ContactNodes) {
    EXPECT_EQ(contact_nodes(RootSystem(Family::A, 5)), (std::vector<Node>{1, 5}));
    EXPECT_EQ(contact_nodes(RootSystem(Family::C, 4)), (std::vector<Node>{1}));
    EXPECT_EQ(contact_nodes(RootSystem(Family::E, 8)), (std::vector<Node>{8}));
    EXPECT_EQ(contact_nodes(RootSystem(Family::G, 2)), (std::vector<Node>{2}));
}

TEST(Cascade, MaxOrthogonalRoot) {
    EXPECT_EQ(root_digits(max_orthogonal_root(make("E6/P6"))), "101111");
    for (int l = 3; l <= 7; ++l) {
        std::string expect = "0" + std::string(l - 2, '2') + "1";
        EXPECT_EQ(root_digits(max_orthogonal_root(make("C" + s(l) + "/P" + s(l)))), expect);
        EXPECT_EQ(root_digits(max_orthogonal_root(make("B" + s(l) + "/P1"))), "1" + std::string(l - 1, '0'));
    }
    EXPECT_THROW(max_orthogonal_root(make("A4/P1")), NoOrthogonalRoot);
    EXPECT_THROW(max_orthogonal_root(make("C4/P1")), NoOrthogonalRoot);
}

TEST(Cascade, Examples) {
    const auto e7 = tsoc(make("E7/P7"));
    ASSERT_EQ(e7.orbit_count(), 3);
    EXPECT_EQ(e7.betas_weight_form[0], (std::vector<int>{1, 0, 0, 0, 0, 0, 0}));
    EXPECT_EQ(e7.betas_weight_form[1], (std::vector<int>{-1, 0, 0, 0, 0, 1, 0}));
    EXPECT_EQ(e7.betas_weight_form[2], (std::vector<int>{0, 0, 0, 0, 0, -1, 2}));
    EXPECT_EQ(e7.h_sequence, (std::vector<ZCombination>{{{1, 1}}, {{6, 1}}, {{7, 2}}}));

    for (int l = 3; l <= 7; ++l) {
        const auto c = tsoc(make("C" + s(l) + "/P" + s(l - 1)));
        ASSERT_EQ(c.orbit_count(), l - 1);
        for (int i = 1; i < l; ++i)
            EXPECT_EQ(root_digits(c.betas[i - 1]), std::string(i - 1, '0') + std::string(l - i, '2') + "1");
    }
    EXPECT_EQ(tsoc(make("A6/P1")).orbit_count(), 1);
}

TEST(Cascade, HSequenceExamples) {
    for (int l = 3; l <= 8; ++l) {
        const auto c = tsoc(make("B" + s(l) + "/P" + s(l)));
        ASSERT_EQ(c.orbit_count(), l / 2);
        for (int j = 1; j <= l / 2; ++j)
            EXPECT_EQ(c.h_sequence[j - 1], (ZCombination{{2 * j, 1}}));
    }
    for (int l = 4; l <= 8; ++l)
        EXPECT_EQ(tsoc(make("D" + s(l) + "/P1")).h_sequence, (std::vector<ZCombination>{{{2, 1}}, {{1, 2}}}));
}

TEST(Cascade, OrbitCounts) {
    for (int l = 1; l <= 8; ++l)
        for (int k = 1; k <= l; ++k)
            EXPECT_EQ(tsoc(make("A" + s(l) + "/P" + s(k))).orbit_count(), std::min(k, l + 1 - k));
    EXPECT_EQ(tsoc(make("E7/P7")).orbit_count(), 3);
}

TEST(Cascade, CrossedContactNodeGivesOneOrbit) {
    for_each_geometry(7, [](const ParabolicGrading& pg) {
        if (crosses_all_contact_nodes(pg)) {
            ASSERT_EQ(tsoc(pg).orbit_count(), 1) << pg.label();
        }
    });
}

TEST(Cascade, AgreesWithGreedyOrthogonalCascade) {
    for_each_geometry(7, [](const ParabolicGrading& pg) {
        const auto c = tsoc(pg);
        ASSERT_EQ(c.betas, oracle::greedy_cascade(pg.root_system(), pg.crosses())) << pg.label();
    });
}

TEST(Cascade, HSequenceIsPartialSumOfCoroots) {
    for_each_geometry(7, [](const ParabolicGrading& pg) {
        const auto& rs = pg.root_system();
        const auto c = tsoc(pg);
        ZCombination acc;
        for (int j = 0; j < c.orbit_count(); ++j) {
            for (const auto& [n, v] : oracle::coroot_on_z(rs, c.betas[j]))
                acc[n] += v;
            ZCombination nz;
            for (const auto& [n, v] : acc) {
                ASSERT_GE(v, 0);
                if (v)
                    nz[n] = v;
            }
            ASSERT_EQ(c.h_sequence[j], nz) << pg.label();
        }
    });
}

TEST(Cascade, MatchesPatternOrbitCount) {
    for_each_geometry(8, [](const ParabolicGrading& pg) {
        ASSERT_EQ(tsoc(pg).orbit_count(), pattern_orbit_count(effective_top_slot(pg))) << pg.label();
    });
}

TEST(Cascade, FirstElementIsContactSum) {
    for_each_geometry(7, [](const ParabolicGrading& pg) {
        const auto& rs = pg.root_system();
        if (rs.rank() < 2)
            return;
        ZCombination expect;
        for (Node n : contact_nodes(rs))
            expect[n] = 1;
        ASSERT_EQ(tsoc(pg).h_sequence.front(), expect) << pg.label();
    });
}
