#ifndef PARABOLIC_SERIALIZE_HPP
#define PARABOLIC_SERIALIZE_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "parabolic/cascade.hpp"
#include "parabolic/criteria.hpp"
#include "parabolic/flatjets.hpp"
#include "parabolic/kostant.hpp"

namespace parabolic {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field '") + key + "'", 0);
    return j.at(key);
}

inline void expect_basis(const Json& j, const char* basis) {
    if (field(j, "basis") != basis)
        throw ParseError(std::string("expected basis '") + basis + "'", 0);
}

} // namespace detail

// Roots and weights -----------------------------------------------------------------------------

inline Json root_json(const Root& r) { return Json{{"basis", "root"}, {"coords", r}}; }

inline Root root_from_json(const Json& j) {
    detail::expect_basis(j, "root");
    return detail::field(j, "coords").get<Root>();
}

inline Json weight_json(const std::vector<int>& w) { return Json{{"basis", "weight"}, {"coords", w}}; }

inline std::vector<int> weight_from_json(const Json& j) {
    detail::expect_basis(j, "weight");
    return detail::field(j, "coords").get<std::vector<int>>();
}

inline Json roots_json(const std::vector<Root>& rs) {
    Json a = Json::array();
    for (const auto& r : rs)
        a.push_back(root_json(r));
    return a;
}

inline std::vector<Root> roots_from_json(const Json& j) {
    std::vector<Root> out;
    for (const auto& e : j)
        out.push_back(root_from_json(e));
    return out;
}

inline Json rational_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const Json& j) {
    if (!j.is_string())
        throw ParseError("rational must be a string", 0);
    return parse_rational(j.get<std::string>());
}

inline void to_json(Json& j, const WeightVector& v) {
    Json c = Json::array();
    for (const auto& q : v.coeffs)
        c.push_back(rational_json(q));
    j = Json{{"basis", v.basis == Basis::Root ? "root" : "weight"}, {"coords", c}};
}

inline void from_json(const Json& j, WeightVector& v) {
    const auto b = detail::field(j, "basis").get<std::string>();
    if (b != "root" && b != "weight")
        throw ParseError("unknown basis '" + b + "'", 0);
    v.basis = b == "root" ? Basis::Root : Basis::Weight;
    v.coeffs.clear();
    for (const auto& e : detail::field(j, "coords"))
        v.coeffs.push_back(rational_from_json(e));
}

// Words and Z-combinations ----------------------------------------------------------------------

inline Json word_json(const Word& w) { return Json::array({w.first, w.second}); }

inline Word word_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError("a word is a two-element array", 0);
    return {j[0].get<Node>(), j[1].get<Node>()};
}

inline Json z_json(const ZCombination& h) {
    Json o = Json::object();
    for (const auto& [n, c] : h)
        o[std::to_string(n)] = c;
    return o;
}

inline ZCombination z_from_json(const Json& j) {
    if (!j.is_object())
        throw ParseError("a Z-combination is an object", 0);
    ZCombination h;
    for (const auto& [k, v] : j.items())
        h[std::stoi(k)] = v.get<int>();
    return h;
}

inline Json h_sequence_json(const std::vector<ZCombination>& hs) {
    Json a = Json::array();
    for (const auto& h : hs)
        a.push_back(z_json(h));
    return a;
}

inline std::vector<ZCombination> h_sequence_from_json(const Json& j) {
    std::vector<ZCombination> out;
    for (const auto& e : j)
        out.push_back(z_from_json(e));
    return out;
}

// Diagrams --------------------------------------------------------------------------------------

inline void to_json(Json& j, const DiagramComponent& c) {
    j = Json{{"type", c.type.label()}, {"nodes", c.type.order}, {"inscribed", c.inscribed}};
}

inline void from_json(const Json& j, DiagramComponent& c) {
    const auto label = detail::field(j, "type").get<std::string>();
    const auto rs = build_root_system(label);
    c.type.family = rs.family();
    c.type.rank = rs.rank();
    c.type.order = detail::field(j, "nodes").get<std::vector<Node>>();
    c.inscribed = detail::field(j, "inscribed").get<std::vector<int>>();
}

inline void to_json(Json& j, const ModuleDiagram& m) {
    j = Json{{"components", m.components}};
    j["crossed_node"] = m.crossed_node ? Json(*m.crossed_node) : Json(nullptr);
}

inline void from_json(const Json& j, ModuleDiagram& m) {
    m.components = detail::field(j, "components").get<std::vector<DiagramComponent>>();
    const auto& c = detail::field(j, "crossed_node");
    m.crossed_node = c.is_null() ? std::nullopt : std::optional<Node>(c.get<Node>());
}

// Kostant components ----------------------------------------------------------------------------

inline void to_json(Json& j, const HasseComponent& c) {
    j = Json{{"word", word_json(c.word)},
             {"mu_root", root_json(c.mu)},
             {"mu_weight", weight_json(c.mu_weight)},
             {"w_minus_lambda", root_json(c.w_minus_lambda)},
             {"hom_mu", c.hom_mu},
             {"hom_wml", c.hom_wml},
             {"nonrigid", c.nonrigid},
             {"torsion_free", c.torsion_free}};
}

inline void from_json(const Json& j, HasseComponent& c) {
    c.word = word_from_json(detail::field(j, "word"));
    c.mu = root_from_json(detail::field(j, "mu_root"));
    c.mu_weight = weight_from_json(detail::field(j, "mu_weight"));
    c.w_minus_lambda = root_from_json(detail::field(j, "w_minus_lambda"));
    c.hom_mu = detail::field(j, "hom_mu").get<int>();
    c.hom_wml = detail::field(j, "hom_wml").get<int>();
    c.nonrigid = detail::field(j, "nonrigid").get<bool>();
    c.torsion_free = detail::field(j, "torsion_free").get<bool>();
}

// Cascade ---------------------------------------------------------------------------------------

inline void to_json(Json& j, const CascadeStep& s) {
    j = Json{{"nodes", s.nodes}, {"crosses", s.crosses}, {"beta", root_json(s.beta)}, {"top_slot", s.top_slot}};
}

inline void from_json(const Json& j, CascadeStep& s) {
    s.nodes = detail::field(j, "nodes").get<std::vector<Node>>();
    s.crosses = detail::field(j, "crosses").get<std::vector<Node>>();
    s.beta = root_from_json(detail::field(j, "beta"));
    s.top_slot = detail::field(j, "top_slot").get<ModuleDiagram>();
}

inline void to_json(Json& j, const Cascade& c) {
    Json w = Json::array();
    for (const auto& b : c.betas_weight_form)
        w.push_back(weight_json(b));
    j = Json{{"orbits", c.orbit_count()},
             {"betas", roots_json(c.betas)},
             {"betas_weight", w},
             {"h_sequence", h_sequence_json(c.h_sequence)},
             {"trace", c.trace}};
}

inline void from_json(const Json& j, Cascade& c) {
    c.betas = roots_from_json(detail::field(j, "betas"));
    c.betas_weight_form.clear();
    for (const auto& e : detail::field(j, "betas_weight"))
        c.betas_weight_form.push_back(weight_from_json(e));
    c.h_sequence = h_sequence_from_json(detail::field(j, "h_sequence"));
    c.trace = detail::field(j, "trace").get<std::vector<CascadeStep>>();
    if (detail::field(j, "orbits").get<int>() != c.orbit_count())
        throw ParseError("orbit count disagrees with the number of cascade roots", 0);
}

// Criteria --------------------------------------------------------------------------------------

inline void to_json(Json& j, const CriteriaReport& r) {
    Json values = Json::array();
    for (const auto& [w, v] : r.cm3prime_values)
        values.push_back(Json{{"word", word_json(w)}, {"value", v}});
    j = Json{{"geometry", r.geometry},
             {"j", r.j},
             {"h", z_json(r.h)},
             {"cm1", r.cm1},
             {"cm2_spectrum", r.cm2_spectrum},
             {"zero_eigenspace", roots_json(r.zero_eigenspace)},
             {"cm2_ok", r.cm2_ok},
             {"cm3prime_values", values},
             {"cm3prime_ok", r.cm3prime_ok}};
}

inline void from_json(const Json& j, CriteriaReport& r) {
    r.geometry = detail::field(j, "geometry").get<std::string>();
    r.j = detail::field(j, "j").get<int>();
    r.h = z_from_json(detail::field(j, "h"));
    r.cm1 = detail::field(j, "cm1").get<bool>();
    r.cm2_spectrum = detail::field(j, "cm2_spectrum").get<std::vector<int>>();
    r.zero_eigenspace = roots_from_json(detail::field(j, "zero_eigenspace"));
    r.cm2_ok = detail::field(j, "cm2_ok").get<bool>();
    r.cm3prime_values.clear();
    for (const auto& e : detail::field(j, "cm3prime_values"))
        r.cm3prime_values[word_from_json(detail::field(e, "word"))] = detail::field(e, "value").get<long long>();
    r.cm3prime_ok = detail::field(j, "cm3prime_ok").get<bool>();
}

inline void to_json(Json& j, const ProlongationProfile& p) {
    Json layers = Json::object();
    for (const auto& [r, roots] : p.layers)
        layers[std::to_string(r)] = roots_json(roots);
    j = Json{{"word", word_json(p.word)},
             {"i_w", p.i_w},
             {"j_w", p.j_w},
             {"layers", layers},
             {"height", p.height},
             {"dim_positive", p.dim_positive},
             {"dim_nonpositive", p.dim_nonpositive}};
}

inline void from_json(const Json& j, ProlongationProfile& p) {
    p.word = word_from_json(detail::field(j, "word"));
    p.i_w = detail::field(j, "i_w").get<std::vector<Node>>();
    p.j_w = detail::field(j, "j_w").get<std::vector<Node>>();
    p.layers.clear();
    for (const auto& [k, v] : detail::field(j, "layers").items())
        p.layers[std::stoi(k)] = roots_from_json(v);
    p.height = detail::field(j, "height").get<int>();
    p.dim_positive = detail::field(j, "dim_positive").get<int>();
    p.dim_nonpositive = detail::field(j, "dim_nonpositive").get<int>();
}

inline void to_json(Json& j, const GeometryRow& r) {
    Json words = Json::array();
    for (const auto& w : r.words)
        words.push_back(word_json(w));
    j = Json{{"geometry", r.label()},
             {"type", type_label(r.family, r.rank)},
             {"crosses", r.crosses},
             {"words", words},
             {"orbits", r.orbits},
             {"h_sequence", h_sequence_json(r.h_sequence)},
             {"alias", r.alias}};
}

inline void from_json(const Json& j, GeometryRow& r) {
    const auto rs = build_root_system(detail::field(j, "type").get<std::string>());
    r.family = rs.family();
    r.rank = rs.rank();
    r.crosses = detail::field(j, "crosses").get<std::vector<Node>>();
    r.words.clear();
    for (const auto& w : detail::field(j, "words"))
        r.words.push_back(word_from_json(w));
    r.orbits = detail::field(j, "orbits").get<int>();
    r.h_sequence = h_sequence_from_json(detail::field(j, "h_sequence"));
    r.alias = detail::field(j, "alias").get<std::string>();
}

// Flat model ------------------------------------------------------------------------------------

inline void to_json(Json& j, const JetFiltration& f) {
    j = Json{{"sym_dim", f.sym_dim}, {"kernel_dims", f.kernel_dims}};
}

inline void from_json(const Json& j, JetFiltration& f) {
    f.sym_dim = detail::field(j, "sym_dim").get<int>();
    f.kernel_dims = detail::field(j, "kernel_dims").get<std::vector<int>>();
}

inline Json polynomial_json(const Polynomial& p) {
    Json a = Json::array();
    for (const auto& [m, c] : p.terms())
        a.push_back(Json{{"monomial", m}, {"coeff", rational_json(c)}});
    return a;
}

inline void to_json(Json& j, const FormalField& f) {
    Json comps = Json::array();
    for (const auto& p : f.components)
        comps.push_back(polynomial_json(p));
    j = Json{{"variables", f.variables}, {"truncation", f.truncation}, {"components", comps}};
}

inline void from_json(const Json& j, FormalField& f) {
    f.variables = detail::field(j, "variables").get<std::vector<std::string>>();
    f.truncation = detail::field(j, "truncation").get<int>();
    const int n = static_cast<int>(f.variables.size());
    f.components.clear();
    for (const auto& terms : detail::field(j, "components")) {
        Polynomial p(n, f.truncation);
        for (const auto& t : terms)
            p.add_term(detail::field(t, "monomial").get<Monomial>(), rational_from_json(detail::field(t, "coeff")));
        f.components.push_back(std::move(p));
    }
}

} // namespace parabolic

#endif // PARABOLIC_SERIALIZE_HPP
