#ifndef PARABOLIC_TABLES_HPP
#define PARABOLIC_TABLES_HPP

#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "parabolic/serialize.hpp"

namespace parabolic {

struct TableColumn {
    std::string key;
    std::string header;
};

/// A regenerated table: display columns over structured JSON rows.
struct Table {
    std::string name;
    std::string title;
    std::vector<TableColumn> columns;
    Json rows = Json::array();
};

enum class TableFormat { Text, Csv, Json, Tex };

inline const std::vector<std::string>& table_names() {
    static const std::vector<std::string> names{"hw", "sc", "orth-minuscule", "1-graded", "tor-free", "nyr"};
    return names;
}

// Notation helpers ------------------------------------------------------------------------------

/// "λ1+λ4", "2λ1", "0".
inline std::string weight_notation(const std::vector<int>& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0)
            continue;
        if (w[i] < 0)
            s += "-";
        else if (!s.empty())
            s += "+";
        if (std::abs(w[i]) != 1)
            s += std::to_string(std::abs(w[i]));
        s += "λ" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

/// Digit string when every coefficient is a single digit, bracket form otherwise.
inline std::string root_notation(const Root& r) {
    const auto d = root_digits(r);
    return d.empty() ? root_bracket(r) : d;
}

/// Word in juxtaposed form, e.g. "(243542)"; comma-separated once a node exceeds 9.
inline std::string long_word_label(const std::vector<Node>& w) {
    const bool wide = std::any_of(w.begin(), w.end(), [](Node n) { return n > 9; });
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i)
        s += (wide && i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

inline std::string h_sequence_text(const std::vector<ZCombination>& hs) {
    std::string s;
    for (std::size_t j = 0; j < hs.size(); ++j)
        s += (j ? "; " : "") + std::string("H") + std::to_string(j + 1) + " = " + z_label(hs[j]);
    return s;
}

inline std::string crosses_label(const std::vector<Node>& crosses) {
    std::string s = "P";
    for (std::size_t i = 0; i < crosses.size(); ++i)
        s += (i ? "," : "") + std::to_string(crosses[i]);
    return s;
}

namespace detail {

/// Symbolic form of a classical highest weight: nodes near the end are written relative to ℓ.
struct WeightPattern {
    std::vector<std::pair<int, int>> terms; // (coefficient, node); node <= 0 means ℓ + node

    std::vector<int> evaluate(int l) const {
        std::vector<int> w(l, 0);
        for (const auto& [c, n] : terms) {
            const int node = n > 0 ? n : l + n;
            if (node < 1 || node > l)
                return {};
            w[node - 1] += c;
        }
        return w;
    }

    std::string str() const {
        std::string s;
        for (const auto& [c, n] : terms) {
            if (!s.empty())
                s += "+";
            if (c != 1)
                s += std::to_string(c);
            s += "λ" + (n > 0 ? std::to_string(n) : n == 0 ? std::string("ℓ") : "ℓ" + std::to_string(n));
        }
        return s;
    }
};

inline WeightPattern weight_pattern(const std::vector<int>& w) {
    const int l = static_cast<int>(w.size());
    WeightPattern p;
    for (int i = 1; i <= l; ++i)
        if (w[i - 1] != 0)
            p.terms.emplace_back(w[i - 1], i <= 2 ? i : i - l);
    return p;
}

/// Root digit string with its longest constant run compressed, e.g. "12222211" -> "12⋯211".
struct DigitPattern {
    std::string prefix;
    char digit = 0;
    std::string suffix;

    std::string expand(int l) const {
        if (!digit)
            return prefix;
        const int run = l - static_cast<int>(prefix.size() + suffix.size());
        if (run < 1)
            return {};
        return prefix + std::string(run, digit) + suffix;
    }

    std::string str() const {
        if (!digit)
            return prefix;
        if (prefix.empty() && suffix.empty())
            return std::string(2, digit) + "⋯" + std::string(2, digit);
        return prefix + digit + "⋯" + digit + suffix;
    }
};

inline DigitPattern digit_pattern(const std::string& s) {
    std::size_t best = 0, len = 0;
    for (std::size_t i = 0; i < s.size();) {
        std::size_t j = i;
        while (j < s.size() && s[j] == s[i])
            ++j;
        if (j - i > len) {
            best = i;
            len = j - i;
        }
        i = j;
    }
    if (len < 3)
        return {s, 0, {}};
    return {s.substr(0, best), s[best], s.substr(best + len)};
}

inline Json table_header(const Table& t) {
    Json cols = Json::array();
    for (const auto& c : t.columns)
        cols.push_back(Json{{"key", c.key}, {"header", c.header}});
    return cols;
}

inline std::string cell_text(const Json& row, const std::string& key) {
    if (!row.contains(key))
        return "";
    const auto& v = row.at(key);
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_boolean())
        return v.get<bool>() ? "yes" : "no";
    return v.dump();
}

/// Display width of a UTF-8 string (code points).
inline std::size_t display_width(const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80)
            ++n;
    return n;
}

inline std::string tex_cell(const std::string& s) {
    static const std::vector<std::pair<std::string, std::string>> glyphs{
        {"λ", "\\lambda"}, {"ℓ", "\\ell"}, {"⋯", "\\cdots"}, {"≥", "\\geq"}, {"≤", "\\leq"}, {"μ", "\\mu"}};
    std::string out;
    for (std::size_t i = 0; i < s.size();) {
        bool matched = false;
        for (const auto& [g, tex] : glyphs) {
            if (s.compare(i, g.size(), g) != 0)
                continue;
            out += tex;
            i += g.size();
            // Subscript digits or ℓ-offsets following λ.
            if (g == "λ") {
                std::string sub;
                while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '-')) {
                    if (s[i] == '-' && (i + 1 >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i + 1]))))
                        break;
                    sub += s[i++];
                }
                if (s.compare(i, std::string("ℓ").size(), "ℓ") == 0) {
                    sub = "\\ell" + sub;
                    i += std::string("ℓ").size();
                    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '-'))
                        sub += s[i++];
                }
                if (!sub.empty())
                    out += "_{" + sub + "}";
            } else if (g != "⋯") {
                out += " ";
            }
            matched = true;
            break;
        }
        if (matched)
            continue;
        const char c = s[i];
        if (std::isalpha(static_cast<unsigned char>(c)) && i + 1 < s.size() &&
            std::isdigit(static_cast<unsigned char>(s[i + 1])) && (i == 0 || !std::isalpha(static_cast<unsigned char>(s[i - 1])))) {
            out += c;
            out += "_{";
            ++i;
            while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) ||
                                    (s[i] == ',' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))))
                out += s[i++];
            out += "}";
            continue;
        }
        if (s.compare(i, 3, " x ") == 0) {
            out += " \\times ";
            i += 3;
            continue;
        }
        if (c == '#' || c == '&' || c == '%' || c == '$')
            out += '\\';
        out += c;
        ++i;
    }
    return out;
}

inline Json instance_json(Family f, int l, const std::vector<Node>& crosses) {
    return Json{{"type", type_label(f, l)}, {"crosses", crosses}};
}

/// Labelling-independent key of a geometry: C2 is rewritten as B2, then reduced by automorphisms.
inline std::tuple<Family, int, std::vector<Node>> iso_key(Family f, int l, std::vector<Node> crosses) {
    if (f == Family::C && l == 2) {
        for (auto& n : crosses)
            n = 3 - n;
        f = Family::B;
    }
    return {f, l, canonical_geometry(f, l, crosses).first};
}

/// The |1|-graded families in display order; `node` is 0 for every node, -1 for the last node.
struct OneGradedFamily {
    Family family;
    int node;
    int fixed_rank; // 0 for classical series
    std::string label;
};

inline const std::vector<OneGradedFamily>& one_graded_families() {
    static const std::vector<OneGradedFamily> fams{
        {Family::A, 0, 0, "A_ℓ/P_k"},   {Family::B, 1, 0, "B_ℓ/P_1"},   {Family::D, 1, 0, "D_ℓ/P_1"},
        {Family::C, -1, 0, "C_ℓ/P_ℓ"},  {Family::D, -1, 0, "D_ℓ/P_ℓ"},  {Family::E, 6, 6, "E_6/P_6"},
        {Family::E, 7, 7, "E_7/P_7"}};
    return fams;
}

struct OneGradedInstance {
    const OneGradedFamily* family;
    std::shared_ptr<const RootSystem> rs;
    Node node;
};

/// Instances of the |1|-graded families at rank <= max_rank, skipping any geometry isomorphic to
/// one already listed under an earlier family. With `canonical`, A_ℓ/P_k is listed for k <= ℓ+1-k only.
inline std::vector<OneGradedInstance> one_graded_instances(int max_rank, bool canonical) {
    std::vector<OneGradedInstance> out;
    std::set<std::tuple<Family, int, std::vector<Node>>> seen;
    for (const auto& fam : one_graded_families()) {
        std::set<std::tuple<Family, int, std::vector<Node>>> mine;
        for (int l = 1; l <= max_rank; ++l) {
            if (fam.fixed_rank && l != fam.fixed_rank)
                continue;
            if (!is_supported_type(fam.family, l))
                continue;
            auto rs = std::make_shared<const RootSystem>(fam.family, l);
            std::vector<Node> nodes;
            if (fam.node == 0)
                for (Node k = 1; k <= l; ++k)
                    nodes.push_back(k);
            else
                nodes.push_back(fam.node > 0 ? fam.node : l);
            for (Node k : nodes) {
                if (canonical && fam.family == Family::A && k > l + 1 - k)
                    continue;
                const auto key = iso_key(fam.family, l, {k});
                if (seen.count(key))
                    continue;
                mine.insert(key);
                out.push_back({&fam, rs, k});
            }
        }
        seen.insert(mine.begin(), mine.end());
    }
    return out;
}

/// Shortest word of the Levi Weyl group taking `from` to `to`, in the composition convention of
/// RootSystem::apply_word. Breadth-first over the orbit, reflections tried in node order.
inline std::optional<std::vector<Node>> levi_word(const ParabolicGrading& pg, const Root& from, const Root& to) {
    const auto& rs = pg.root_system();
    std::map<Root, std::pair<Root, Node>> parent;
    std::deque<Root> queue{from};
    parent[from] = {from, 0};
    while (!queue.empty()) {
        const Root cur = queue.front();
        queue.pop_front();
        if (cur == to) {
            std::vector<Node> applied;
            for (Root r = cur; r != from; r = parent[r].first)
                applied.push_back(parent[r].second);
            // applied lists reflections last-first, which is the word read left to right.
            return applied;
        }
        for (Node n : pg.uncrossed()) {
            Root nxt = rs.reflect(n, cur);
            if (parent.emplace(nxt, std::make_pair(cur, n)).second)
                queue.push_back(std::move(nxt));
        }
    }
    return std::nullopt;
}

/// Geometry in the labelling shown in tables: rank-two B/C geometries are written so that
/// node 1 is crossed, preferring B.
inline std::pair<Family, std::vector<Node>> display_labelling(Family f, int l, const std::vector<Node>& crosses) {
    if (l != 2 || (f != Family::B && f != Family::C))
        return {f, crosses};
    std::vector<Node> b = crosses;
    if (f == Family::C)
        for (auto& n : b)
            n = 3 - n;
    std::sort(b.begin(), b.end());
    if (b.front() == 1)
        return {Family::B, b};
    std::vector<Node> c;
    for (Node n : b)
        c.push_back(3 - n);
    std::sort(c.begin(), c.end());
    return {Family::C, c};
}

} // namespace detail

// Table builders --------------------------------------------------------------------------------

/// Highest roots of the simple algebras, one row per family with its detected pattern and range.
inline Table table_hw(int max_rank = 8) {
    Table t{"hw", "Highest roots in fundamental-weight and root notation", {}, Json::array()};
    t.columns = {{"family", "G"}, {"range", "Range"}, {"lambda", "λ"}, {"lambda_root", "λ in root notation"},
                 {"instances", "Instances"}};
    struct Series {
        Family f;
        int l;
    };
    const std::vector<Series> series{{Family::A, 0}, {Family::B, 0}, {Family::C, 0}, {Family::D, 0}, {Family::G, 2},
                                     {Family::F, 4}, {Family::E, 6}, {Family::E, 7}, {Family::E, 8}};
    for (const auto& s : series) {
        Json row;
        Json inst = Json::array();
        if (s.l) {
            const RootSystem rs(s.f, s.l);
            const auto w = rs.weight_coords(rs.highest_root());
            row["family"] = rs.label();
            row["range"] = "-";
            row["lambda"] = weight_notation(w);
            row["lambda_root"] = root_notation(rs.highest_root());
            row["instances"] = rs.label();
            inst.push_back(Json{{"type", rs.label()},
                                {"lambda", weight_notation(w)},
                                {"lambda_root", root_notation(rs.highest_root())},
                                {"weight", weight_json(w)},
                                {"root", root_json(rs.highest_root())}});
            row["ranks"] = inst;
            t.rows.push_back(row);
            continue;
        }
        std::vector<int> ranks;
        for (int l = 1; l <= max_rank; ++l)
            if (is_supported_type(s.f, l))
                ranks.push_back(l);
        if (ranks.empty())
            continue;
        const RootSystem top(s.f, ranks.back());
        const auto wp = detail::weight_pattern(top.weight_coords(top.highest_root()));
        const auto dp = detail::digit_pattern(root_notation(top.highest_root()));
        // The range is the longest tail of ranks on which both patterns hold.
        int from = ranks.back();
        for (auto it = ranks.rbegin(); it != ranks.rend(); ++it) {
            const RootSystem rs(s.f, *it);
            if (wp.evaluate(*it) != rs.weight_coords(rs.highest_root()) ||
                dp.expand(*it) != root_notation(rs.highest_root()))
                break;
            from = *it;
        }
        const std::string letter(1, family_letter(s.f));
        row["family"] = letter + "_ℓ";
        row["range"] = "ℓ ≥ " + std::to_string(from);
        row["lambda"] = wp.str();
        row["lambda_root"] = dp.str();
        row["instances"] = letter + std::to_string(from) + (from < ranks.back() ? "-" + letter + std::to_string(ranks.back()) : "");
        for (int l : ranks) {
            if (l < from)
                continue;
            const RootSystem rs(s.f, l);
            const auto w = rs.weight_coords(rs.highest_root());
            inst.push_back(Json{{"type", rs.label()},
                                {"lambda", weight_notation(w)},
                                {"lambda_root", root_notation(rs.highest_root())},
                                {"weight", weight_json(w)},
                                {"root", root_json(rs.highest_root())}});
        }
        row["ranks"] = inst;
        t.rows.push_back(row);
    }
    return t;
}

/// Sub-cominuscule top slots of the |1|-graded geometries with their orbit counts.
inline Table table_sc(int max_rank = 8) {
    Table t{"sc", "Sub-cominuscule modules of the |1|-graded geometries", {}, Json::array()};
    t.columns = {{"family", "G/P"},   {"geometry", "Instance"}, {"levi", "G0ss"},
                 {"pattern", "Variety"}, {"dim_g1", "dim g1"},     {"orbits", "# orbits"}};
    for (const auto& in : detail::one_graded_instances(max_rank, false)) {
        const ParabolicGrading pg(in.rs, {in.node});
        const auto top = effective_top_slot(pg);
        const auto cas = tsoc(pg);
        Json row;
        row["family"] = in.family->label;
        row["geometry"] = pg.label();
        row["levi"] = levi_semisimple(pg).label();
        row["pattern"] = to_string(classify_top_slot(top));
        row["dim_g1"] = pg.layer_dim(1);
        row["orbits"] = cas.orbit_count();
        row["top_slot"] = top;
        row["h_sequence"] = h_sequence_json(cas.h_sequence);
        t.rows.push_back(row);
    }
    return t;
}

/// Maximal root of the top slot orthogonal to the highest root, |1|-graded case.
inline Table table_orth_minuscule(int max_rank = 8) {
    Table t{"orth-minuscule", "Maximal root orthogonal to the highest root, |1|-graded case", {}, Json::array()};
    t.columns = {{"family", "G/P"},          {"geometry", "Instance"}, {"lambda_root", "λ"},
                 {"beta_root", "β"},          {"sub", "L(λ)/P(λ)"},    {"word", "w with w(λ) = β"}};
    for (const auto& in : detail::one_graded_instances(max_rank, false)) {
        const ParabolicGrading pg(in.rs, {in.node});
        const auto& rs = pg.root_system();
        Root beta;
        try {
            beta = max_orthogonal_root(pg);
        } catch (const NoOrthogonalRoot&) {
            continue;
        }
        std::vector<Node> all;
        for (Node n = 1; n <= rs.rank(); ++n)
            all.push_back(n);
        const auto sub = detail::next_support(rs, all, pg.crosses(), rs.highest_root());
        const auto type = identify_diagram(rs, sub);
        std::vector<Node> local;
        for (Node n : detail::intersect_crosses(sub, pg.crosses()))
            local.push_back(type.position(n));
        std::sort(local.begin(), local.end());
        const auto word = detail::levi_word(pg, rs.highest_root(), beta);
        if (!word || rs.apply_word(*word, rs.highest_root()) != beta)
            throw InternalMismatch("no Levi Weyl word maps the highest root to beta in " + pg.label());
        Json row;
        row["family"] = in.family->label;
        row["geometry"] = pg.label();
        row["lambda_root"] = root_notation(rs.highest_root());
        row["beta_root"] = root_notation(beta);
        row["sub"] = type.label() + "/" + crosses_label(local);
        row["word"] = long_word_label(*word);
        row["beta"] = root_json(beta);
        row["sub_nodes"] = sub;
        row["word_nodes"] = *word;
        t.rows.push_back(row);
    }
    return t;
}

/// Cascade data and nonrigid components of the |1|-graded geometries.
inline Table table_one_graded(int max_rank = 8) {
    Table t{"1-graded", "Cascade, curvature word and mu for |1|-graded geometries", {}, Json::array()};
    t.columns = {{"family", "G/P"},    {"geometry", "Instance"}, {"orbits", "#orb"}, {"h_text", "H-sequence"},
                 {"word_text", "w"},   {"mu_text", "μ in root notation"},      {"mu_h_m", "μ(H_m)"}};
    for (const auto& in : detail::one_graded_instances(max_rank, true)) {
        const ParabolicGrading pg(in.rs, {in.node});
        const auto comps = hasse2(pg);
        const auto cas = tsoc(pg);
        for (const auto& c : comps) {
            if (!c.nonrigid)
                continue;
            Json row;
            row["family"] = in.family->label;
            row["geometry"] = pg.label();
            row["orbits"] = cas.orbit_count();
            row["h_text"] = h_sequence_text(cas.h_sequence);
            row["word_text"] = word_label(c.word);
            row["mu_text"] = root_bracket(c.mu);
            row["mu_h_m"] = evaluate(cas.h_sequence.back(), c.mu);
            row["h_sequence"] = h_sequence_json(cas.h_sequence);
            row["word"] = word_json(c.word);
            row["mu"] = root_json(c.mu);
            row["isolated"] = centralizer_neg(pg, cas, cas.orbit_count()).empty();
            t.rows.push_back(row);
        }
    }
    return t;
}

/// Nonrigid torsion-free geometries that are not |1|-graded, one row per qualifying word.
inline Table table_tor_free(int max_rank = 8) {
    Table t{"tor-free", "Torsion-free nonrigid geometries of depth > 1", {}, Json::array()};
    t.columns = {{"type", "G"},        {"p", "P"},         {"depth", "ν"}, {"orbits", "#orb"},
                 {"h_text", "H-sequence"}, {"word_text", "w"}, {"mu_text", "μ in root notation"},
                 {"note", "Note"}};
    for (const auto& found : classify_torsion_free(max_rank)) {
        const auto [f, crosses] = detail::display_labelling(found.family, found.rank, found.crosses);
        const ParabolicGrading pg(std::make_shared<const RootSystem>(f, found.rank), crosses);
        if (is_one_graded(pg))
            continue;
        const auto cas = tsoc(pg);
        std::vector<Word> listed;
        for (const auto& c : hasse2(pg)) {
            if (!c.nonrigid || !c.torsion_free)
                continue;
            std::string note;
            for (const auto& w : listed)
                if (automorphic_words(f, found.rank, pg.crosses(), w, c.word))
                    note = "mirror of " + word_label(w);
            if (note.empty() && found.family != f)
                note = "= " + found.label();
            listed.push_back(c.word);
            Json row;
            row["type"] = pg.root_system().label();
            row["p"] = pg.parabolic_label();
            row["depth"] = pg.depth();
            row["orbits"] = cas.orbit_count();
            row["h_text"] = h_sequence_text(cas.h_sequence);
            row["word_text"] = word_label(c.word);
            row["mu_text"] = root_bracket(c.mu);
            row["note"] = note;
            row["geometry"] = pg.label();
            row["h_sequence"] = h_sequence_json(cas.h_sequence);
            row["word"] = word_json(c.word);
            row["mu"] = root_json(c.mu);
            t.rows.push_back(row);
        }
    }
    return t;
}

/// Non-|1|-graded nonrigid geometries with at least two orbits in the projectivised top slot.
inline Table table_nyr(int max_rank = 8) {
    Table t{"nyr", "Nonrigid, non-|1|-graded geometries with several top-slot orbits", {}, Json::array()};
    t.columns = {{"geometry", "G/P"}, {"orbits", "# orbits"}, {"h_text", "H-sequence"}, {"words_text", "Nonrigid w"}};
    for (const auto& r : classify_nyr_multiorbit(max_rank)) {
        std::string words;
        Json wj = Json::array();
        for (const auto& w : r.words) {
            words += (words.empty() ? "" : " ") + word_label(w);
            wj.push_back(word_json(w));
        }
        Json row;
        row["geometry"] = r.label();
        row["orbits"] = r.orbits;
        row["h_text"] = h_sequence_text(r.h_sequence);
        row["words_text"] = words;
        row["h_sequence"] = h_sequence_json(r.h_sequence);
        row["words"] = wj;
        t.rows.push_back(row);
    }
    return t;
}

inline Table build_table(const std::string& name, int max_rank = 8) {
    if (name == "hw")
        return table_hw(max_rank);
    if (name == "sc")
        return table_sc(max_rank);
    if (name == "orth-minuscule")
        return table_orth_minuscule(max_rank);
    if (name == "1-graded")
        return table_one_graded(max_rank);
    if (name == "tor-free")
        return table_tor_free(max_rank);
    if (name == "nyr")
        return table_nyr(max_rank);
    throw UnknownTable("unknown table '" + name + "'");
}

/// Table of classification rows, as produced by the sweeps.
inline Table geometry_table(const std::string& name, const std::vector<GeometryRow>& rows) {
    Table t{name, name, {}, Json::array()};
    t.columns = {{"geometry", "G/P"}, {"words_text", "w"}, {"orbits", "# orbits"}, {"h_text", "H-sequence"},
                 {"alias", "Alias"}};
    for (const auto& r : rows) {
        Json row = r;
        std::string words;
        for (const auto& w : r.words)
            words += (words.empty() ? "" : " ") + word_label(w);
        row["words_text"] = words;
        row["h_text"] = h_sequence_text(r.h_sequence);
        t.rows.push_back(row);
    }
    return t;
}

// Rendering -------------------------------------------------------------------------------------

inline TableFormat parse_table_format(const std::string& s) {
    if (s == "text")
        return TableFormat::Text;
    if (s == "csv")
        return TableFormat::Csv;
    if (s == "json")
        return TableFormat::Json;
    if (s == "tex")
        return TableFormat::Tex;
    throw ParseError("unknown format '" + s + "'", 0);
}

inline Json table_json(const Table& t) {
    return Json{{"table", t.name}, {"title", t.title}, {"columns", detail::table_header(t)}, {"rows", t.rows}};
}

inline std::string render_text(const Table& t) {
    std::vector<std::size_t> width;
    for (const auto& c : t.columns)
        width.push_back(detail::display_width(c.header));
    for (const auto& row : t.rows)
        for (std::size_t i = 0; i < t.columns.size(); ++i)
            width[i] = std::max(width[i], detail::display_width(detail::cell_text(row, t.columns[i].key)));
    std::ostringstream out;
    out << t.title << "\n\n";
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            s += cells[i];
            if (i + 1 < cells.size())
                s += std::string(width[i] - detail::display_width(cells[i]) + 2, ' ');
        }
        out << s << "\n";
    };
    std::vector<std::string> head, rule;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        head.push_back(t.columns[i].header);
        rule.push_back(std::string(width[i], '-'));
    }
    line(head);
    line(rule);
    for (const auto& row : t.rows) {
        std::vector<std::string> cells;
        for (const auto& c : t.columns)
            cells.push_back(detail::cell_text(row, c.key));
        line(cells);
    }
    return out.str();
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

inline std::string render_csv(const Table& t) {
    std::ostringstream out;
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        out << (i ? "," : "") << csv_field(t.columns[i].header);
    out << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < t.columns.size(); ++i)
            out << (i ? "," : "") << csv_field(detail::cell_text(row, t.columns[i].key));
        out << "\n";
    }
    return out.str();
}

inline std::string render_tex(const Table& t) {
    std::ostringstream out;
    out << "\\begin{table}[h]\n\\[\n\\begin{array}{|" ;
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        out << "c|";
    out << "} \\hline\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        out << (i ? " & " : "") << detail::tex_cell(t.columns[i].header);
    out << " \\\\ \\hline\\hline\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < t.columns.size(); ++i)
            out << (i ? " & " : "") << detail::tex_cell(detail::cell_text(row, t.columns[i].key));
        out << " \\\\\n";
    }
    out << "\\hline\n\\end{array}\n\\]\n\\caption{" << t.title << "}\n\\end{table}\n";
    return out.str();
}

inline std::string render(const Table& t, TableFormat f) {
    switch (f) {
    case TableFormat::Text:
        return render_text(t);
    case TableFormat::Csv:
        return render_csv(t);
    case TableFormat::Json:
        return table_json(t).dump(2) + "\n";
    case TableFormat::Tex:
        return render_tex(t);
    }
    return {};
}

} // namespace parabolic

#endif // PARABOLIC_TABLES_HPP
