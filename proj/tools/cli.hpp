#ifndef PARABOLIC_TOOLS_CLI_HPP
#define PARABOLIC_TOOLS_CLI_HPP

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "parabolic/parabolic.hpp"

namespace parabolic::cli {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string type;
    std::string crosses;
    bool json = false;
    int j = 0;
    std::string filter;
    std::string word;
    int order = 2;
    bool fields = false;
    int max_rank = 8;
    int ceiling = 9;
    std::string classify_filter = "torsion-free";
    std::string format = "text";
    std::string table;
};

inline std::string module_text(const ModuleDiagram& md) {
    if (md.empty())
        return "trivial";
    std::string s;
    for (const auto& c : md.components) {
        if (!s.empty())
            s += " x ";
        s += c.type.label() + "{";
        for (std::size_t p = 0; p < c.nodes().size(); ++p)
            s += (p ? "," : "") + std::to_string(c.nodes()[p]);
        s += "}[";
        for (std::size_t p = 0; p < c.inscribed.size(); ++p)
            s += (p ? "," : "") + std::to_string(c.inscribed[p]);
        s += "]";
    }
    return s;
}

inline std::string nodes_text(const std::vector<Node>& v) {
    if (v.empty())
        return "none";
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

inline ParabolicGrading require_grading(const Options& o) {
    const auto g = parse_geometry(o.type, o.crosses);
    if (g.crosses.empty())
        throw ParseError("this command needs a crossing set (--crosses)", 0);
    return ParabolicGrading(std::make_shared<const RootSystem>(g.family, g.rank), g.crosses);
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// Commands --------------------------------------------------------------------------------------

inline void cmd_info(const Options& o, std::ostream& out) {
    const auto g = parse_geometry(o.type, o.crosses);
    const RootSystem rs(g.family, g.rank);
    const auto w = rs.weight_coords(rs.highest_root());
    std::vector<std::vector<int>> cartan(rs.rank(), std::vector<int>(rs.rank()));
    for (Node i = 1; i <= rs.rank(); ++i)
        for (Node k = 1; k <= rs.rank(); ++k)
            cartan[i - 1][k - 1] = rs.cartan(i, k);
    if (o.json) {
        emit(out, Json{{"type", rs.label()},
                       {"rank", rs.rank()},
                       {"dim", rs.dimension()},
                       {"positive_roots", rs.positive_roots().size()},
                       {"cartan", cartan},
                       {"highest_root", root_json(rs.highest_root())},
                       {"highest_weight", weight_json(w)},
                       {"contact_nodes", contact_nodes(rs)},
                       {"diagram", render_diagram(rs, g.crosses)}});
        return;
    }
    out << rs.label() << ": rank " << rs.rank() << ", dim " << rs.dimension() << ", "
        << rs.positive_roots().size() << " positive roots\n\n"
        << render_diagram(rs, g.crosses) << "\nCartan matrix <alpha_i, alpha_j^vee>:\n";
    for (const auto& row : cartan) {
        for (int c : row)
            out << (c < 0 ? " " : "  ") << c;
        out << "\n";
    }
    out << "\nhighest root: " << root_notation(rs.highest_root()) << " = " << weight_notation(w) << "\n"
        << "contact nodes: " << nodes_text(contact_nodes(rs)) << "\n";
}

inline void cmd_grading(const Options& o, std::ostream& out) {
    const auto pg = require_grading(o);
    const auto& rs = pg.root_system();
    const auto levi = levi_semisimple(pg);
    const auto top = effective_top_slot(pg);
    const auto gm1 = module_g_minus1(pg);
    const auto g1 = module_g1(pg);
    if (o.json) {
        Json layers = Json::object();
        for (const auto& [k, d] : pg.layer_dims())
            layers[std::to_string(k)] = d;
        Json m1 = Json::array(), p1 = Json::array();
        for (std::size_t i = 0; i < gm1.size(); ++i) {
            m1.push_back(Json{{"module", gm1[i]}, {"dim", weyl_dimension(rs, gm1[i]).str()}});
            p1.push_back(Json{{"module", g1[i]}, {"dim", weyl_dimension(rs, g1[i]).str()}});
        }
        emit(out, Json{{"geometry", pg.label()},
                       {"depth", pg.depth()},
                       {"layer_dims", layers},
                       {"levi", levi.label()},
                       {"center_dimension", levi.center_dimension},
                       {"g_minus1", m1},
                       {"g1", p1},
                       {"top_slot", top},
                       {"top_slot_pattern", to_string(classify_top_slot(top))}});
        return;
    }
    out << pg.label() << "\n\n" << render_diagram(rs, pg.crosses()) << "\n"
        << "depth: " << pg.depth() << "\nlayer dimensions:";
    for (const auto& [k, d] : pg.layer_dims())
        out << " g" << k << "=" << d;
    out << "\ng0 semisimple part: " << levi.label() << ", centre of dimension " << levi.center_dimension << "\n";
    for (std::size_t i = 0; i < gm1.size(); ++i)
        out << "g-1 summand at node " << *gm1[i].crossed_node << ": " << module_text(gm1[i]) << ", dim "
            << weyl_dimension(rs, gm1[i]) << "\n";
    for (std::size_t i = 0; i < g1.size(); ++i)
        out << "g1 summand at node " << *g1[i].crossed_node << ": " << module_text(g1[i]) << ", dim "
            << weyl_dimension(rs, g1[i]) << "\n";
    out << "effective top slot: " << module_text(top) << " (" << to_string(classify_top_slot(top)) << ")\n";
}

inline void cmd_h2(const Options& o, std::ostream& out) {
    const auto pg = require_grading(o);
    const auto comps = hasse2(pg);
    if (o.json) {
        emit(out, Json{{"geometry", pg.label()}, {"components", comps}});
        return;
    }
    out << pg.label() << ": " << comps.size() << " length-two Hasse word" << (comps.size() == 1 ? "" : "s") << "\n\n";
    Table t{"h2", "", {}, Json::array()};
    t.columns = {{"w", "w"},           {"mu", "mu (root)"},       {"mu_w", "mu (weight)"}, {"wl", "w(-lambda)"},
                 {"z_mu", "Z(mu)"},    {"z_wl", "Z(w(-lambda))"}, {"nr", "nonrigid"},      {"tf", "torsion-free"}};
    for (const auto& c : comps)
        t.rows.push_back(Json{{"w", word_label(c.word)},
                              {"mu", root_bracket(c.mu)},
                              {"mu_w", root_bracket(c.mu_weight)},
                              {"wl", root_bracket(c.w_minus_lambda)},
                              {"z_mu", c.hom_mu},
                              {"z_wl", c.hom_wml},
                              {"nr", c.nonrigid},
                              {"tf", c.torsion_free}});
    const auto text = render_text(t);
    out << text.substr(text.find('\n') + 2);
}

inline void cmd_tsoc(const Options& o, std::ostream& out) {
    const auto pg = require_grading(o);
    const auto c = tsoc(pg);
    if (o.json) {
        emit(out, Json{{"geometry", pg.label()}, {"depth", pg.depth()}, {"cascade", c}});
        return;
    }
    const auto& rs = pg.root_system();
    out << pg.label() << ": depth " << pg.depth() << ", " << c.orbit_count() << " orbit"
        << (c.orbit_count() == 1 ? "" : "s") << " in the projectivised top slot\n\n";
    for (int j = 0; j < c.orbit_count(); ++j) {
        out << "beta" << j + 1 << " = " << root_notation(c.betas[j]) << " = "
            << weight_notation(c.betas_weight_form[j]) << "   on nodes " << nodes_text(c.trace[j].nodes)
            << ", top slot " << module_text(c.trace[j].top_slot) << "\n";
    }
    out << "\n";
    for (int j = 0; j < c.orbit_count(); ++j)
        out << "H" << j + 1 << " = " << z_label(c.h_sequence[j]) << "\n";
    (void)rs;
}

inline void cmd_cm(const Options& o, std::ostream& out) {
    const auto pg = require_grading(o);
    const auto c = tsoc(pg);
    const int j = o.j ? o.j : c.orbit_count();
    std::optional<std::vector<Word>> filter;
    if (!o.filter.empty())
        filter = parse_words(o.filter);
    const auto r = cm_check(pg, c, j, filter);
    if (o.json) {
        emit(out, Json(r));
        return;
    }
    out << r.geometry << ", j = " << r.j << " of " << c.orbit_count() << ", H" << r.j << " = " << z_label(r.h) << "\n"
        << "CM.1: H lies in the Cartan subalgebra, holds\n"
        << "CM.2: spectrum on g_- {";
    std::map<int, int> mult;
    for (int e : r.cm2_spectrum)
        ++mult[e];
    bool first = true;
    for (const auto& [e, m] : mult) {
        out << (first ? "" : ", ") << e << "^" << m;
        first = false;
    }
    out << "}, zero eigenspace of dimension " << r.zero_eigenspace.size() << ", "
        << (r.cm2_ok ? "holds" : "fails") << "\n";
    out << "CM.3': ";
    if (r.cm3prime_values.empty())
        out << "no nonrigid components";
    first = true;
    for (const auto& [w, v] : r.cm3prime_values) {
        out << (first ? "" : ", ") << "mu" << word_label(w) << "(H) = " << v;
        first = false;
    }
    out << ", " << (r.cm3prime_ok ? "holds" : "fails") << (filter ? " on the given components" : "") << "\n";
    if (r.j == c.orbit_count())
        out << "isolated: " << (r.zero_eigenspace.empty() ? "yes" : "no") << "\n";
}

inline void cmd_prolong(const Options& o, std::ostream& out) {
    const auto pg = require_grading(o);
    std::vector<Word> words;
    if (!o.word.empty()) {
        words.push_back(parse_word(o.word));
        require_hasse_word(pg, words.back());
    } else {
        for (const auto& c : hasse2(pg))
            if (c.nonrigid)
                words.push_back(c.word);
    }
    std::vector<ProlongationProfile> profiles;
    for (const auto& w : words)
        profiles.push_back(tanaka_prolongation(pg, w));
    if (o.json) {
        emit(out, Json{{"geometry", pg.label()}, {"depth", pg.depth()}, {"profiles", profiles}});
        return;
    }
    out << pg.label() << ": depth " << pg.depth() << "\n";
    if (profiles.empty())
        out << "no nonrigid components\n";
    for (const auto& p : profiles) {
        out << "\n" << word_label(p.word) << ": I_w = {" << nodes_text(p.i_w) << "}, J_w = {" << nodes_text(p.j_w)
            << "}, height " << p.height << ", dim a_+ = " << p.dim_positive << ", dim g_<=0 = " << p.dim_nonpositive
            << "\n";
        for (const auto& [r, roots] : p.layers) {
            out << "  a_" << r << ":";
            for (const auto& a : roots)
                out << " " << root_notation(a);
            out << "\n";
        }
    }
}

inline void cmd_flatjets(const Options& o, std::ostream& out) {
    const auto pg = require_grading(o);
    if (o.order < 0)
        throw TruncationTooLow("jet order must be nonnegative");
    const FlatChart chart(pg, {ChartLimits{}.max_chart_dim, std::max(ChartLimits{}.max_order, o.order + 1)});
    const auto jf = jet_filtration(chart, o.order);
    int dim_p = 0;
    for (const auto& [k, d] : pg.layer_dims())
        if (k >= 0)
            dim_p += d;
    const int dim_top = pg.layer_dim(pg.depth());
    std::vector<int> expected{dim_p, dim_top, 0};
    expected.resize(o.order + 1, 0);
    const bool pattern = jf.kernel_dims == expected;
    std::vector<FormalField> fields;
    for (int x = 0; x < chart.dim(); ++x)
        fields.push_back(chart.field(x, o.order + 1));
    if (o.json) {
        Json orders = Json::array();
        for (int x = 0; x < chart.dim(); ++x) {
            Json e{{"basis", chart.constants().basis_label(x)}, {"grade", chart.grade_of(x)}, {"order", fields[x].order()}};
            if (o.fields)
                e["field"] = fields[x];
            orders.push_back(e);
        }
        emit(out, Json{{"geometry", pg.label()},
                       {"sym_dim", jf.sym_dim},
                       {"kernel_dims", jf.kernel_dims},
                       {"dim_p", dim_p},
                       {"dim_top", dim_top},
                       {"pattern_holds", pattern},
                       {"chart_variables", chart.variables()},
                       {"basis", orders}});
        return;
    }
    out << pg.label() << ": dim g = " << jf.sym_dim << ", chart dimension " << chart.chart_dim() << ", depth "
        << pg.depth() << "\n\nk  dim {X : j^k_o(X) = 0}\n";
    for (std::size_t k = 0; k < jf.kernel_dims.size(); ++k)
        out << k << "  " << jf.kernel_dims[k] << "\n";
    out << "\npattern (dim p, dim g_nu, 0) = (" << dim_p << ", " << dim_top << ", 0): "
        << (pattern ? "holds" : "fails") << "\n";
    if (o.fields) {
        out << "\n";
        for (int x = 0; x < chart.dim(); ++x) {
            out << chart.constants().basis_label(x) << " (grade " << chart.grade_of(x) << ", order "
                << fields[x].order() << "):";
            for (std::size_t a = 0; a < fields[x].components.size(); ++a)
                if (!fields[x].components[a].is_zero())
                    out << " (" << fields[x].components[a].str(chart.variables()) << ") d/d" << chart.variables()[a];
            out << "\n";
        }
    }
}

inline void cmd_classify(const Options& o, std::ostream& out) {
    if (o.max_rank < 1 || o.max_rank > o.ceiling)
        throw ParseError("--max-rank must lie in 1.." + std::to_string(o.ceiling), 0);
    std::vector<GeometryRow> rows;
    if (o.classify_filter == "torsion-free")
        rows = classify_torsion_free(o.max_rank);
    else if (o.classify_filter == "nyr-multiorbit")
        rows = classify_nyr_multiorbit(o.max_rank);
    else if (o.classify_filter == "tgen-exceptions")
        rows = tgen_exceptions(o.max_rank);
    else
        throw ParseError("unknown filter '" + o.classify_filter + "'", 0);
    auto t = geometry_table(o.classify_filter, rows);
    t.title = o.classify_filter + " geometries of rank <= " + std::to_string(o.max_rank) + " (" +
              std::to_string(rows.size()) + " rows)";
    out << render(t, parse_table_format(o.json ? "json" : o.format));
}

inline void cmd_tables(const Options& o, std::ostream& out) {
    if (o.max_rank < 1 || o.max_rank > o.ceiling)
        throw ParseError("--max-rank must lie in 1.." + std::to_string(o.ceiling), 0);
    out << render(build_table(o.table, o.max_rank), parse_table_format(o.json ? "json" : o.format));
}

// Entry point -----------------------------------------------------------------------------------

/// Runs the command line; returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Parabolic geometry engine: gradings, Kostant components, top-slot cascades and criteria"};
    app.require_subcommand(1);
    Options o;
    std::function<void(const Options&, std::ostream&)> action;

    auto geometry = [&](const std::string& name, const std::string& help, auto fn) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("type", o.type, "algebra label, e.g. G2 or D6/P1,4")->required();
        sub->add_option("--crosses,-c", o.crosses, "crossed nodes, e.g. 1,4");
        sub->add_flag("--json", o.json, "emit JSON");
        sub->callback([&, fn] { action = fn; });
        return sub;
    };
    geometry("info", "Cartan data, diagram numbering and highest root", cmd_info);
    geometry("grading", "Grading, Levi factor, g-1 and g1 modules, top slot", cmd_grading);
    geometry("h2", "Length-two Hasse words and their lowest weights", cmd_h2);
    geometry("tsoc", "Top-slot orthogonal cascade and its H-sequence", cmd_tsoc);
    auto* cm = geometry("cm", "Criteria for the j-th cascade element", cmd_cm);
    cm->add_option("--j", o.j, "cascade index (default: the last)");
    cm->add_option("--filter", o.filter, "words on which CM.3' is required, e.g. 21,23");
    auto* pr = geometry("prolong", "Tanaka prolongation profile of a nonrigid component", cmd_prolong);
    pr->add_option("--word,-w", o.word, "Hasse word, e.g. 21 (default: every nonrigid word)");
    auto* fj = geometry("flatjets", "Jet filtration of the flat model symmetries", cmd_flatjets);
    fj->add_option("--order,-k", o.order, "highest jet order");
    fj->add_flag("--fields", o.fields, "print the vector fields");

    auto* cl = app.add_subcommand("classify", "Classification sweeps");
    cl->add_option("--max-rank", o.max_rank, "largest rank swept");
    cl->add_option("--ceiling", o.ceiling, "largest admissible --max-rank");
    cl->add_option("--filter", o.classify_filter, "torsion-free | nyr-multiorbit | tgen-exceptions")
        ->check(CLI::IsMember({"torsion-free", "nyr-multiorbit", "tgen-exceptions"}));
    cl->add_option("--format", o.format, "text | csv | json | tex")->check(CLI::IsMember({"text", "csv", "json", "tex"}));
    cl->add_flag("--json", o.json, "same as --format json");
    cl->callback([&] { action = cmd_classify; });

    auto* tb = app.add_subcommand("tables", "Regenerate a reference table");
    tb->add_option("--name", o.table, "hw | sc | orth-minuscule | 1-graded | tor-free | nyr")->required();
    tb->add_option("--format", o.format, "text | csv | json | tex")->check(CLI::IsMember({"text", "csv", "json", "tex"}));
    tb->add_option("--max-rank", o.max_rank, "largest rank instantiated");
    tb->add_option("--ceiling", o.ceiling, "largest admissible --max-rank");
    tb->add_flag("--json", o.json, "same as --format json");
    tb->callback([&] { action = cmd_tables; });

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o_out, o_err;
        const int code = app.exit(e, o_out, o_err);
        out << o_out.str();
        err << o_err.str();
        return code == 0 ? kExitOk : kExitUsage;
    }
    try {
        action(o, out);
    } catch (const InternalMismatch& e) {
        err << "error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

} // namespace parabolic::cli

#endif // PARABOLIC_TOOLS_CLI_HPP
