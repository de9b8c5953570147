#ifndef PARABOLIC_CRITERIA_HPP
#define PARABOLIC_CRITERIA_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "parabolic/cascade.hpp"
#include "parabolic/kostant.hpp"

namespace parabolic {

/// Value of a Z-combination on a vector in simple-root coordinates.
inline long long evaluate(const ZCombination& h, const Root& mu) {
    long long v = 0;
    for (const auto& [n, c] : h)
        v += static_cast<long long>(c) * mu[n - 1];
    return v;
}

struct CriteriaReport {
    std::string geometry;
    int j = 0;
    ZCombination h;
    bool cm1 = true;
    std::vector<int> cm2_spectrum;         // eigenvalue on e_{-alpha}, alpha in Delta(g_+), in root order
    std::vector<Root> zero_eigenspace;     // the -alpha with eigenvalue 0
    bool cm2_ok = false;
    std::map<Word, long long> cm3prime_values;
    bool cm3prime_ok = false;

    bool operator==(const CriteriaReport&) const = default;
};

/// Roots of g_+ (positive grade).
inline std::vector<Root> positive_part(const ParabolicGrading& pg) {
    std::vector<Root> out;
    for (const auto& a : pg.root_system().positive_roots())
        if (pg.z_degree(a) > 0)
            out.push_back(a);
    return out;
}

/// {-alpha : alpha in Delta(g_+), (alpha, beta_i) = 0 for i <= j}.
inline std::vector<Root> centralizer_neg(const ParabolicGrading& pg, const Cascade& c, int j) {
    if (j < 1 || j > c.orbit_count())
        throw CascadeIndexOutOfRange("cascade index " + std::to_string(j) + " outside 1.." +
                                     std::to_string(c.orbit_count()));
    const auto& rs = pg.root_system();
    std::vector<Root> out;
    for (const auto& a : positive_part(pg)) {
        bool perp = true;
        for (int i = 0; i < j && perp; ++i)
            perp = rs.inner(a, c.betas[i]) == 0;
        if (perp)
            out.push_back(-a);
    }
    return out;
}

inline std::vector<Root> centralizer_neg(const ParabolicGrading& pg, int j) {
    return centralizer_neg(pg, tsoc(pg), j);
}

/// Evaluates the criteria for the j-th cascade element. When `filter` is given, (CM.3') is required
/// only on those words; otherwise on every nonrigid component.
inline CriteriaReport cm_check(const ParabolicGrading& pg, const Cascade& c, int j,
                               const std::optional<std::vector<Word>>& filter = std::nullopt) {
    if (j < 1 || j > c.orbit_count())
        throw CascadeIndexOutOfRange("cascade index " + std::to_string(j) + " outside 1.." +
                                     std::to_string(c.orbit_count()));
    const auto& rs = pg.root_system();
    CriteriaReport r;
    r.geometry = pg.label();
    r.j = j;
    r.h = c.h_sequence[j - 1];
    bool nonpositive = true;
    for (const auto& a : positive_part(pg)) {
        int s = 0;
        for (int i = 0; i < j; ++i)
            s += rs.coroot_pairing(a, c.betas[i]);
        r.cm2_spectrum.push_back(-s);
        if (-s > 0)
            nonpositive = false;
        if (s == 0)
            r.zero_eigenspace.push_back(-a);
    }
    r.cm2_ok = nonpositive && r.zero_eigenspace == centralizer_neg(pg, c, j);
    r.cm3prime_ok = true;
    for (const auto& comp : hasse2(pg)) {
        if (!comp.nonrigid)
            continue;
        const long long v = evaluate(r.h, comp.mu);
        r.cm3prime_values[comp.word] = v;
        const bool counted =
            !filter || std::find(filter->begin(), filter->end(), comp.word) != filter->end();
        if (counted && v < 0)
            r.cm3prime_ok = false;
    }
    return r;
}

inline CriteriaReport cm_check(const ParabolicGrading& pg, int j,
                               const std::optional<std::vector<Word>>& filter = std::nullopt) {
    return cm_check(pg, tsoc(pg), j, filter);
}

struct ProlongationProfile {
    Word word;
    std::vector<Node> i_w;
    std::vector<Node> j_w;
    std::map<int, std::vector<Root>> layers;
    int height = 0;
    int dim_positive = 0;
    int dim_nonpositive = 0; // dim g_{<=0}

    bool operator==(const ProlongationProfile&) const = default;
};

/// Root description of the prolongation of the annihilator of a lowest weight vector.
inline ProlongationProfile tanaka_prolongation(const ParabolicGrading& pg, const Word& w) {
    const auto comp = classify_component(pg, w);
    if (!comp.nonrigid)
        throw RigidComponent("component " + word_label(w) + " of " + pg.label() + " has nonpositive homogeneity");
    const auto& rs = pg.root_system();
    ProlongationProfile p;
    p.word = w;
    for (Node n = 1; n <= rs.rank(); ++n) {
        const int m = comp.mu_weight[n - 1];
        if (pg.is_crossed(n) && m == 0)
            p.i_w.push_back(n);
        if (!pg.is_crossed(n) && m != 0)
            p.j_w.push_back(n);
    }
    for (const auto& a : positive_part(pg)) {
        const int r = pg.z_degree(a);
        int zi = 0, zj = 0;
        for (Node n : p.i_w)
            zi += a[n - 1];
        for (Node n : p.j_w)
            zj += a[n - 1];
        if (zi == r && zj == 0) {
            p.layers[r].push_back(a);
            p.height = std::max(p.height, r);
            ++p.dim_positive;
        }
    }
    for (const auto& [k, d] : pg.layer_dims())
        if (k <= 0)
            p.dim_nonpositive += d;
    return p;
}

// ---------------------------------------------------------------------------------------------
// Classification sweeps

/// A parabolic geometry G/P together with its Hasse words of interest.
struct GeometryRow {
    Family family = Family::A;
    int rank = 0;
    std::vector<Node> crosses;
    std::vector<Word> words;
    int orbits = 0;
    std::vector<ZCombination> h_sequence;
    std::string alias; // label under an exceptional isomorphism, if any

    std::string label() const {
        std::string s = type_label(family, rank) + "/P";
        for (std::size_t i = 0; i < crosses.size(); ++i)
            s += (i ? "," : "") + std::to_string(crosses[i]);
        return s;
    }

    auto key() const { return std::tie(family, rank, crosses); }
};

/// Simple types of rank <= max_rank. C2 is represented by B2 and D3 by A3.
inline std::vector<std::pair<Family, int>> sweep_types(int max_rank) {
    std::vector<std::pair<Family, int>> out;
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
        for (int l = 1; l <= max_rank; ++l)
            if (is_supported_type(f, l) && !(f == Family::C && l == 2))
                out.emplace_back(f, l);
    return out;
}

/// Image of a crossing set and word under a diagram automorphism.
inline std::pair<std::vector<Node>, Word> permute_geometry(const std::vector<int>& perm,
                                                           const std::vector<Node>& crosses, const Word& w) {
    Word img{0, 0};
    if (w.first)
        img = {perm[w.first - 1], perm[w.second - 1]};
    return {permute_nodes(perm, crosses), img};
}

/// Lexicographically least image of (crosses, word) under the diagram automorphisms.
inline std::pair<std::vector<Node>, Word> canonical_geometry(Family f, int rank, const std::vector<Node>& crosses,
                                                             const Word& w = {0, 0}) {
    std::vector<Node> sorted = crosses;
    std::sort(sorted.begin(), sorted.end());
    std::pair<std::vector<Node>, Word> best{sorted, w};
    for (const auto& g : diagram_automorphisms(f, rank))
        best = std::min(best, permute_geometry(g, sorted, w));
    return best;
}

inline bool is_canonical_crossing(Family f, int rank, const std::vector<Node>& crosses) {
    return canonical_geometry(f, rank, crosses).first == crosses;
}

/// True if the two words are exchanged by a diagram automorphism fixing the crossing set.
inline bool automorphic_words(Family f, int rank, const std::vector<Node>& crosses, const Word& a, const Word& b) {
    for (const auto& g : diagram_automorphisms(f, rank)) {
        const auto [c, w] = permute_geometry(g, crosses, a);
        if (c == crosses && w == b)
            return true;
    }
    return false;
}

inline std::string alias_label(Family f, int rank, const std::vector<Node>& crosses) {
    if (f != Family::B || rank != 2)
        return {};
    std::vector<Node> c;
    for (Node n : crosses)
        c.push_back(3 - n);
    std::sort(c.begin(), c.end());
    std::string s = "C2/P";
    for (std::size_t i = 0; i < c.size(); ++i)
        s += (i ? "," : "") + std::to_string(c[i]);
    return s;
}

/// Calls fn(pg) for every canonical crossing set of every sweep type of rank <= max_rank.
template <typename Fn>
void for_each_geometry(int max_rank, Fn&& fn) {
    for (const auto& [f, l] : sweep_types(max_rank)) {
        const auto rs = std::make_shared<const RootSystem>(f, l);
        for (unsigned mask = 1; mask < (1u << l); ++mask) {
            std::vector<Node> crosses;
            for (int b = 0; b < l; ++b)
                if (mask & (1u << b))
                    crosses.push_back(b + 1);
            if (!is_canonical_crossing(f, l, crosses))
                continue;
            fn(ParabolicGrading(rs, crosses));
        }
    }
}

namespace detail {

inline GeometryRow make_row(const ParabolicGrading& pg) {
    GeometryRow row;
    row.family = pg.root_system().family();
    row.rank = pg.root_system().rank();
    row.crosses = pg.crosses();
    row.alias = alias_label(row.family, row.rank, row.crosses);
    return row;
}

inline void sort_rows(std::vector<GeometryRow>& rows) {
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.key() < b.key(); });
}

} // namespace detail

/// Geometries with a nonrigid torsion-free component, with all qualifying words.
inline std::vector<GeometryRow> classify_torsion_free(int max_rank) {
    std::vector<GeometryRow> rows;
    for_each_geometry(max_rank, [&](const ParabolicGrading& pg) {
        auto row = detail::make_row(pg);
        for (const auto& c : hasse2(pg))
            if (c.nonrigid && c.torsion_free)
                row.words.push_back(c.word);
        if (row.words.empty())
            return;
        const auto cas = tsoc(pg);
        row.orbits = cas.orbit_count();
        row.h_sequence = cas.h_sequence;
        rows.push_back(std::move(row));
    });
    detail::sort_rows(rows);
    return rows;
}

/// Non-|1|-graded, nonrigid geometries with at least two G0-orbits in the projectivised top slot.
inline std::vector<GeometryRow> classify_nyr_multiorbit(int max_rank) {
    std::vector<GeometryRow> rows;
    for_each_geometry(max_rank, [&](const ParabolicGrading& pg) {
        if (is_one_graded(pg))
            return;
        std::vector<Word> nonrigid;
        for (const auto& c : hasse2(pg))
            if (c.nonrigid)
                nonrigid.push_back(c.word);
        if (nonrigid.empty())
            return;
        const auto cas = tsoc(pg);
        if (cas.orbit_count() < 2)
            return;
        auto row = detail::make_row(pg);
        row.words = std::move(nonrigid);
        row.orbits = cas.orbit_count();
        row.h_sequence = cas.h_sequence;
        rows.push_back(std::move(row));
    });
    detail::sort_rows(rows);
    return rows;
}

/// Nonrigid (geometry, word) pairs with mu(H_m) < 0, one row per pair.
inline std::vector<GeometryRow> tgen_exceptions(int max_rank) {
    std::vector<GeometryRow> rows;
    for_each_geometry(max_rank, [&](const ParabolicGrading& pg) {
        const auto comps = hasse2(pg);
        if (std::none_of(comps.begin(), comps.end(), [](const auto& c) { return c.nonrigid; }))
            return;
        const auto cas = tsoc(pg);
        const auto& hm = cas.h_sequence.back();
        for (const auto& c : comps) {
            if (!c.nonrigid || evaluate(hm, c.mu) >= 0)
                continue;
            auto row = detail::make_row(pg);
            row.words = {c.word};
            row.orbits = cas.orbit_count();
            row.h_sequence = cas.h_sequence;
            rows.push_back(std::move(row));
        }
    });
    detail::sort_rows(rows);
    return rows;
}

} // namespace parabolic

#endif // PARABOLIC_CRITERIA_HPP
