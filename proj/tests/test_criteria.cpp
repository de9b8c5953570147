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

TEST(Criteria, CM3PrimeExamples) {
    for (int l = 3; l <= 7; ++l) {
        const auto r = cm_check(make("C" + s(l) + "/P" + s(l)), l);
        EXPECT_EQ(r.cm3prime_values.at({l, l - 1}), 2);
        EXPECT_TRUE(r.cm3prime_ok);
    }
    const auto b5 = cm_check(make("B5/P5"), 2);
    EXPECT_EQ(b5.cm3prime_values.at({5, 4}), -1);
    EXPECT_FALSE(b5.cm3prime_ok);
    const auto b3 = cm_check(make("B3/P3"), 1);
    EXPECT_EQ(b3.cm3prime_values.at({3, 2}), 0);
    EXPECT_TRUE(b3.cm3prime_ok);
}

TEST(Criteria, FilterRestrictsCM3Prime) {
    const auto pg = make("B5/P5");
    EXPECT_FALSE(cm_check(pg, 2).cm3prime_ok);
    EXPECT_TRUE(cm_check(pg, 2, std::vector<Word>{}).cm3prime_ok);
    EXPECT_THROW(cm_check(pg, 3), CascadeIndexOutOfRange);
    EXPECT_THROW(cm_check(pg, 0), CascadeIndexOutOfRange);
}

TEST(Criteria, SpectrumFromHSequence) {
    for_each_geometry(6, [](const ParabolicGrading& pg) {
        const auto c = tsoc(pg);
        for (int j = 1; j <= c.orbit_count(); ++j) {
            const auto r = cm_check(pg, c, j);
            std::size_t idx = 0;
            for (const auto& a : pg.root_system().positive_roots()) {
                if (pg.z_degree(a) <= 0)
                    continue;
                ASSERT_EQ(r.cm2_spectrum.at(idx++), -evaluate(c.h_sequence[j - 1], a)) << pg.label();
            }
            ASSERT_EQ(idx, r.cm2_spectrum.size());
            ASSERT_TRUE(r.cm2_ok) << pg.label();
        }
    });
}

TEST(Criteria, Centralizers) {
    for (int l = 3; l <= 7; ++l) {
        const auto p = make("C" + s(l) + "/P" + s(l - 1));
        EXPECT_TRUE(centralizer_neg(p, l - 1).empty());
        const auto q = make("C" + s(l) + "/P" + s(l - 1) + "," + s(l));
        EXPECT_FALSE(centralizer_neg(q, l - 1).empty());
    }
    for_each_geometry(8, [](const ParabolicGrading& pg) {
        if (is_one_graded(pg)) {
            const auto c = tsoc(pg);
            ASSERT_TRUE(centralizer_neg(pg, c, c.orbit_count()).empty()) << pg.label();
        }
    });
}

TEST(Criteria, ProlongationExamples) {
    const auto g2 = tanaka_prolongation(make("G2/P1"), {1, 2});
    EXPECT_TRUE(g2.i_w.empty());
    EXPECT_EQ(g2.height, 0);
    const auto a3 = tanaka_prolongation(make("A3/P1,2"), {2, 1});
    ASSERT_TRUE(a3.layers.count(1));
    EXPECT_NE(std::find(a3.layers.at(1).begin(), a3.layers.at(1).end(), Root{1, 0, 0}), a3.layers.at(1).end());
    EXPECT_GE(a3.height, 1);
    EXPECT_THROW(tanaka_prolongation(make("A3/P1,2"), {1, 3}), InvalidWord);
}

TEST(Criteria, ProlongationByBruteForce) {
    for_each_geometry(5, [](const ParabolicGrading& pg) {
        const auto& rs = pg.root_system();
        for (const auto& comp : hasse2(pg)) {
            if (!comp.nonrigid) {
                EXPECT_THROW(tanaka_prolongation(pg, comp.word), RigidComponent);
                continue;
            }
            const auto p = tanaka_prolongation(pg, comp.word);
            int count = 0, height = 0;
            for (const auto& a : rs.positive_roots()) {
                const int r = pg.z_degree(a);
                if (r <= 0)
                    continue;
                // Nodes carrying a nonzero mark of mu must not occur in alpha.
                bool ok = true;
                for (Node n = 1; n <= rs.rank(); ++n)
                    if (comp.mu_weight[n - 1] != 0)
                        ok = ok && a[n - 1] == 0;
                if (ok) {
                    ++count;
                    height = std::max(height, r);
                }
            }
            ASSERT_EQ(p.dim_positive, count) << pg.label();
            ASSERT_EQ(p.height, height) << pg.label();
            ASSERT_LT(p.height, pg.depth());
        }
    });
}

TEST(Criteria, SweepsSmall) {
    EXPECT_TRUE(classify_torsion_free(1).empty());
    const auto rows = classify_torsion_free(3);
    const auto it = std::find_if(rows.begin(), rows.end(), [](const GeometryRow& r) { return r.label() == "B3/P3"; });
    ASSERT_NE(it, rows.end());
    EXPECT_EQ(it->words, (std::vector<Word>{{3, 2}}));
    const auto b2 = std::find_if(rows.begin(), rows.end(), [](const GeometryRow& r) { return r.label() == "B2/P2"; });
    ASSERT_NE(b2, rows.end());
    EXPECT_EQ(b2->alias, "C2/P1");
}

TEST(Criteria, CanonicalCrossings) {
    EXPECT_TRUE(is_canonical_crossing(Family::A, 4, {1}));
    EXPECT_FALSE(is_canonical_crossing(Family::A, 4, {4}));
    EXPECT_FALSE(is_canonical_crossing(Family::D, 4, {4}));
    EXPECT_TRUE(automorphic_words(Family::A, 2, {1, 2}, {1, 2}, {2, 1}));
    EXPECT_FALSE(automorphic_words(Family::A, 3, {1, 2}, {1, 2}, {2, 1}));
}
