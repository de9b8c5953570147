#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace parabolic;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;)
        out.push_back(w);
    return out;
}

struct Golden {
    const char* file;
    const char* args;
};

const Golden kGoldens[] = {
    {"tables_hw.txt", "tables --name hw"},
    {"tables_hw.tex", "tables --name hw --format tex"},
    {"tables_sc.txt", "tables --name sc"},
    {"tables_sc.csv", "tables --name sc --format csv"},
    {"tables_orth_minuscule.txt", "tables --name orth-minuscule"},
    {"tables_1_graded.txt", "tables --name 1-graded"},
    {"tables_1_graded.json", "tables --name 1-graded --format json"},
    {"tables_tor_free.txt", "tables --name tor-free"},
    {"tables_nyr.txt", "tables --name nyr"},
    {"classify_torsion_free_3.txt", "classify --max-rank 3 --filter torsion-free"},
    {"classify_tgen_9.txt", "classify --max-rank 9 --filter tgen-exceptions"},
    {"info_E7.txt", "info E7"},
    {"grading_D6_P1_4.txt", "grading D6 --crosses 1,4"},
    {"h2_G2_P1.json", "h2 G2 --crosses 1 --json"},
    {"tsoc_E7_P7.txt", "tsoc E7 --crosses 7"},
    {"cm_C3_P3.txt", "cm C3/P3"},
    {"prolong_A3_P1_2.txt", "prolong A3/P1,2"},
    {"flatjets_A1_P1.txt", "flatjets A1 --crosses 1"},
    {"flatjets_G2_P1.txt", "flatjets G2/P1 --fields"},
};

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST(Cli, GoldenOutputs) {
    const std::filesystem::path dir = PARABOLIC_GOLDEN_DIR;
    const bool update = std::getenv("PARABOLIC_UPDATE_GOLDEN") != nullptr;
    for (const auto& g : kGoldens) {
        const auto r = run(split(g.args));
        ASSERT_EQ(r.code, 0) << g.args << "\n" << r.err;
        if (update) {
            std::ofstream(dir / g.file) << r.out;
            continue;
        }
        ASSERT_TRUE(std::filesystem::exists(dir / g.file)) << g.file;
        EXPECT_EQ(r.out, read_file(dir / g.file)) << g.args;
    }
}

TEST(Cli, TsocExample) {
    const auto r = run({"tsoc", "E7", "--crosses", "7", "--json"});
    ASSERT_EQ(r.code, 0);
    const auto j = Json::parse(r.out);
    const auto c = j.at("cascade").get<Cascade>();
    EXPECT_EQ(c.orbit_count(), 3);
    EXPECT_EQ(c.h_sequence, (std::vector<ZCombination>{{{1, 1}}, {{6, 1}}, {{7, 2}}}));
}

TEST(Cli, H2Example) {
    const auto r = run({"h2", "G2", "--crosses", "1", "--json"});
    ASSERT_EQ(r.code, 0);
    const auto j = Json::parse(r.out);
    ASSERT_EQ(j.at("components").size(), 1u);
    const auto& c = j.at("components")[0];
    EXPECT_EQ(c.at("word"), Json::array({1, 2}));
    EXPECT_EQ(c.at("mu_root").at("coords"), Json::array({4, 0}));
    EXPECT_EQ(c.at("torsion_free"), true);
}

TEST(Cli, JsonOutputsRoundTrip) {
    const auto pg = ParabolicGrading(std::make_shared<const RootSystem>(Family::C, 4), {3, 4});
    const auto h2 = Json::parse(run({"h2", "C4/P3,4", "--json"}).out);
    EXPECT_EQ(h2.at("components").get<std::vector<HasseComponent>>(), hasse2(pg));
    const auto cm = Json::parse(run({"cm", "C4/P3,4", "--json"}).out);
    EXPECT_EQ(cm.get<CriteriaReport>(), cm_check(pg, 3));
    EXPECT_EQ(Json(cm.get<CriteriaReport>()), cm);
    const auto pr = Json::parse(run({"prolong", "C4/P3,4", "--json"}).out);
    const auto profiles = pr.at("profiles").get<std::vector<ProlongationProfile>>();
    EXPECT_EQ(Json(profiles), pr.at("profiles"));
    const auto fj = Json::parse(run({"flatjets", "A2/P1", "--json"}).out);
    EXPECT_EQ(fj.at("kernel_dims"), Json::array({6, 2, 0}));
    EXPECT_EQ(fj.at("pattern_holds"), true);
}

TEST(Cli, FlatJetsExample) {
    const auto r = run({"flatjets", "A1", "--crosses", "1", "--json"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(Json::parse(r.out).at("kernel_dims"), Json::array({2, 1, 0}));
}

TEST(Cli, ClassifyExamples) {
    const auto tf = Json::parse(run({"classify", "--max-rank", "1", "--json"}).out);
    EXPECT_TRUE(tf.at("rows").empty());
    const auto three = Json::parse(run({"classify", "--max-rank", "3", "--format", "json"}).out);
    bool found = false;
    for (const auto& row : three.at("rows"))
        found = found || (row.at("geometry") == "B3/P3" && row.at("words") == Json::array({Json::array({3, 2})}));
    EXPECT_TRUE(found);
}

TEST(Cli, TablesEverywhere) {
    for (const auto& name : table_names())
        for (const char* fmt : {"text", "csv", "json", "tex"}) {
            const auto r = run({"tables", "--name", name, "--format", fmt, "--max-rank", "5"});
            EXPECT_EQ(r.code, 0) << name << " " << fmt << r.err;
            EXPECT_FALSE(r.out.empty());
        }
    const auto j = Json::parse(run({"tables", "--name", "hw", "--json"}).out);
    EXPECT_EQ(j.at("rows").size(), 9u);
    const auto sc = Json::parse(run({"tables", "--name", "sc", "--json"}).out);
    std::set<std::string> families;
    for (const auto& row : sc.at("rows"))
        families.insert(row.at("family").get<std::string>());
    EXPECT_EQ(families.size(), 7u);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({"tsoc", "--help"}).code, 0);
    EXPECT_EQ(run({"tsoc", "E9/P1"}).code, 2);
    EXPECT_EQ(run({"tsoc", "A3"}).code, 2);
    EXPECT_EQ(run({"tsoc", "A3/P4"}).code, 2);
    EXPECT_EQ(run({"tsoc", "A3/P1", "--crosses", "2"}).code, 2);
    EXPECT_EQ(run({"cm", "B5/P5", "--j", "7"}).code, 2);
    EXPECT_EQ(run({"prolong", "G2/P1", "--word", "21"}).code, 2);
    EXPECT_EQ(run({"prolong", "A3/P1,2", "--word", "13"}).code, 2);
    EXPECT_EQ(run({"flatjets", "E8/P8"}).code, 2);
    EXPECT_EQ(run({"tables", "--name", "nope"}).code, 2);
    EXPECT_EQ(run({"tables", "--name", "hw", "--format", "pdf"}).code, 2);
    EXPECT_EQ(run({"classify", "--max-rank", "10"}).code, 2);
    EXPECT_EQ(run({"classify", "--filter", "other"}).code, 2);
    const auto r = run({"tsoc", "A3/P1,x"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("position 6"), std::string::npos) << r.err;
}

TEST(GeometrySpec, Parse) {
    const auto g = parse_geometry("D6/P1,4");
    EXPECT_EQ(g.family, Family::D);
    EXPECT_EQ(g.rank, 6);
    EXPECT_EQ(g.crosses, (std::vector<Node>{1, 4}));
    EXPECT_EQ(g.str(), "D6/P1,4");
    EXPECT_EQ(parse_geometry("D6/4,1"), g);
    EXPECT_EQ(parse_geometry("D6", "4,1"), g);
    EXPECT_EQ(parse_geometry(g.str()), g);
    EXPECT_EQ(parse_geometry("G2").str(), "G2");
}

TEST(GeometrySpec, ParseErrorPositions) {
    auto position = [](auto fn) -> std::size_t {
        try {
            fn();
        } catch (const ParseError& e) {
            return e.position();
        }
        return std::string::npos;
    };
    EXPECT_EQ(position([] { parse_geometry("Q3"); }), 0u);
    EXPECT_EQ(position([] { parse_geometry("A"); }), 1u);
    EXPECT_EQ(position([] { parse_geometry("A3-P1"); }), 2u);
    EXPECT_EQ(position([] { parse_geometry("A3/P1,,2"); }), 6u);
    EXPECT_EQ(position([] { parse_geometry("A3/P1,0"); }), 6u);
    EXPECT_EQ(position([] { parse_geometry("A3/P2,2"); }), 6u);
    EXPECT_EQ(position([] { parse_geometry("A3", "1;2"); }), 1u);
    EXPECT_EQ(position([] { parse_word("(1x)"); }), 1u);
    EXPECT_EQ(position([] { parse_word("10,9x"); }), 4u);
    EXPECT_THROW(parse_geometry("A3/P4"), NodeOutOfRange);
    EXPECT_THROW(parse_geometry("D3/P1"), UnsupportedType);
}

TEST(GeometrySpec, Words) {
    EXPECT_EQ(parse_word("(21)"), (Word{2, 1}));
    EXPECT_EQ(parse_word("21"), (Word{2, 1}));
    EXPECT_EQ(parse_word("10,9"), (Word{10, 9}));
    EXPECT_EQ(parse_word("(10,9)"), (Word{10, 9}));
    EXPECT_EQ(parse_words("21,23"), (std::vector<Word>{{2, 1}, {2, 3}}));
    EXPECT_EQ(parse_words("(10,9) (9,8)"), (std::vector<Word>{{10, 9}, {9, 8}}));
}

TEST(GeometrySpec, Diagram) {
    const auto g2 = render_diagram(RootSystem(Family::G, 2), {1});
    EXPECT_EQ(g2, "x≡<≡o\n1   2\n");
    const auto b3 = render_diagram(RootSystem(Family::B, 3));
    EXPECT_EQ(b3, "o---o=>=o\n1   2   3\n");
}

TEST(Tables, Notation) {
    EXPECT_EQ(weight_notation({1, 0, 0, 1}), "λ1+λ4");
    EXPECT_EQ(weight_notation({2, 0}), "2λ1");
    EXPECT_EQ(weight_notation({0, -1, 2}), "-λ2+2λ3");
    EXPECT_EQ(h_sequence_text({{{1, 1}, {4, 1}}, {{2, 2}}}), "H1 = Z1 + Z4; H2 = 2Z2");
    EXPECT_THROW(build_table("bogus"), UnknownTable);
    EXPECT_THROW(parse_table_format("pdf"), ParseError);
}
