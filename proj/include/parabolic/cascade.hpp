#ifndef PARABOLIC_CASCADE_HPP
#define PARABOLIC_CASCADE_HPP

#include <map>
#include <string>
#include <vector>

#include "parabolic/grading.hpp"

namespace parabolic {

/// Sparse combination of the grading elements Z_i.
using ZCombination = std::map<Node, int>;

inline std::string z_label(const ZCombination& h) {
    std::string s;
    for (const auto& [node, c] : h) {
        if (c == 0)
            continue;
        if (!s.empty())
            s += " + ";
        if (c != 1)
            s += std::to_string(c);
        s += "Z" + std::to_string(node);
    }
    return s.empty() ? "0" : s;
}

/// One stage of the cascade: the index subset carrying the current sub-system and its top data.
struct CascadeStep {
    std::vector<Node> nodes;
    std::vector<Node> crosses;
    Root beta;
    ModuleDiagram top_slot;

    bool operator==(const CascadeStep&) const = default;
};

struct Cascade {
    std::vector<Root> betas;
    std::vector<std::vector<int>> betas_weight_form;
    std::vector<ZCombination> h_sequence;
    std::vector<CascadeStep> trace;

    int orbit_count() const { return static_cast<int>(betas.size()); }

    bool operator==(const Cascade&) const = default;
};

/// I_c: nodes with a nonzero coefficient of the highest root in fundamental-weight coordinates.
inline std::vector<Node> contact_nodes(const RootSystem& rs) {
    std::vector<Node> out;
    const auto w = rs.weight_coords(rs.highest_root());
    for (Node n = 1; n <= rs.rank(); ++n)
        if (w[n - 1] != 0)
            out.push_back(n);
    return out;
}

/// Highest root among roots supported on a connected node subset.
inline Root highest_root_on(const RootSystem& rs, const std::vector<Node>& nodes) {
    std::vector<bool> inside(rs.rank(), false);
    for (Node n : nodes)
        inside[n - 1] = true;
    const Root* best = nullptr;
    for (const auto& a : rs.positive_roots()) {
        bool ok = true;
        for (int i = 0; i < rs.rank() && ok; ++i)
            ok = a[i] == 0 || inside[i];
        if (ok && (!best || height(a) > height(*best)))
            best = &a;
    }
    if (!best)
        throw InternalMismatch("no roots on an empty node set");
    return *best;
}

/// The cascade stops once the top slot is empty or a projective space (A_n marked 1 at an end).
inline bool cascade_terminates(const ModuleDiagram& top) {
    if (top.empty())
        return true;
    return top.components.size() == 1 && detail::is_standard_a(top.components[0]);
}

namespace detail {

inline std::vector<Node> intersect_crosses(const std::vector<Node>& nodes, const std::vector<Node>& crosses) {
    std::vector<Node> out;
    for (Node n : nodes)
        if (std::find(crosses.begin(), crosses.end(), n) != crosses.end())
            out.push_back(n);
    return out;
}

/// Sub-system obtained by removing the contact nodes of beta and keeping the component with crosses.
inline std::vector<Node> next_support(const RootSystem& rs, const std::vector<Node>& nodes,
                                      const std::vector<Node>& crosses, const Root& beta) {
    std::vector<Node> rest;
    for (Node n : nodes)
        if (rs.coroot_pairing(beta, n) == 0)
            rest.push_back(n);
    std::vector<std::vector<Node>> kept;
    for (auto& comp : connected_components(rs, rest))
        if (!intersect_crosses(comp, crosses).empty())
            kept.push_back(std::move(comp));
    if (kept.empty())
        throw NoOrthogonalRoot("no root of the top slot is orthogonal to the current cascade");
    if (kept.size() > 1)
        throw InternalMismatch("maximal orthogonal root is not unique");
    return kept.front();
}

} // namespace detail

/// Maximal root of the top slot of (nodes, crosses) orthogonal to beta, where beta is the highest
/// root of the sub-system on `nodes`.
inline Root max_orthogonal_root(const RootSystem& rs, const std::vector<Node>& nodes,
                                const std::vector<Node>& crosses, const Root& beta) {
    const auto local = detail::intersect_crosses(nodes, crosses);
    if (cascade_terminates(top_slot_support(rs, nodes, local, beta)))
        throw NoOrthogonalRoot("the top slot of " + rs.label() + " on the given nodes is a single orbit");
    return highest_root_on(rs, detail::next_support(rs, nodes, crosses, beta));
}

inline Root max_orthogonal_root(const ParabolicGrading& pg) {
    const auto& rs = pg.root_system();
    std::vector<Node> all;
    for (Node n = 1; n <= rs.rank(); ++n)
        all.push_back(n);
    return max_orthogonal_root(rs, all, pg.crosses(), rs.highest_root());
}

/// h_beta for a root of length |lambda|: coefficients <alpha_i, beta^vee> of Z_i.
inline ZCombination coroot_z(const RootSystem& rs, const Root& beta) {
    ZCombination h;
    const int len = rs.length2(beta);
    const auto w = rs.weight_coords(beta);
    for (Node i = 1; i <= rs.rank(); ++i) {
        const int num = w[i - 1] * rs.simple_length2(i);
        if (num % len != 0)
            throw InternalMismatch("coroot coefficient is not integral");
        if (num != 0)
            h[i] = num / len;
    }
    return h;
}

inline ZCombination operator+(ZCombination a, const ZCombination& b) {
    for (const auto& [n, c] : b)
        if ((a[n] += c) == 0)
            a.erase(n);
    return a;
}

/// H_j summed from the coroots of beta_1, ..., beta_j.
inline std::vector<ZCombination> h_sequence_by_coroots(const RootSystem& rs, const std::vector<Root>& betas) {
    std::vector<ZCombination> out;
    ZCombination h;
    for (const auto& b : betas) {
        h = h + coroot_z(rs, b);
        out.push_back(h);
    }
    return out;
}

/// H_j read off from the highest weight of the j-th sub-system, inscribed only on its own nodes.
inline std::vector<ZCombination> h_sequence_by_restriction(const RootSystem& rs,
                                                           const std::vector<CascadeStep>& steps) {
    std::vector<ZCombination> out;
    const int len = rs.length2(rs.highest_root());
    for (const auto& st : steps) {
        ZCombination h;
        for (Node i : st.nodes) {
            const int num = rs.coroot_pairing(st.beta, i) * rs.simple_length2(i);
            if (num % len != 0)
                throw InternalMismatch("H-sequence coefficient is not integral");
            if (num != 0)
                h[i] = num / len;
        }
        out.push_back(std::move(h));
    }
    return out;
}

inline std::vector<ZCombination> h_sequence(const RootSystem& rs, const Cascade& c) {
    auto a = h_sequence_by_coroots(rs, c.betas);
    if (a != h_sequence_by_restriction(rs, c.trace))
        throw InternalMismatch("H-sequence computations disagree");
    return a;
}

/// Top-slot orthogonal cascade, computed on nested node subsets of the ambient diagram.
inline Cascade tsoc(const ParabolicGrading& pg) {
    const auto& rs = pg.root_system();
    Cascade c;
    std::vector<Node> nodes;
    for (Node n = 1; n <= rs.rank(); ++n)
        nodes.push_back(n);
    Root beta = rs.highest_root();
    while (true) {
        CascadeStep st;
        st.nodes = nodes;
        st.crosses = detail::intersect_crosses(nodes, pg.crosses());
        st.beta = beta;
        st.top_slot = top_slot_support(rs, nodes, st.crosses, beta);
        if (pg.z_degree(beta) != pg.depth())
            throw InternalMismatch("cascade root left the top slot");
        c.betas.push_back(beta);
        c.betas_weight_form.push_back(rs.weight_coords(beta));
        const bool done = cascade_terminates(st.top_slot);
        c.trace.push_back(std::move(st));
        if (done)
            break;
        nodes = detail::next_support(rs, nodes, pg.crosses(), beta);
        beta = highest_root_on(rs, nodes);
    }
    c.h_sequence = h_sequence(rs, c);
    return c;
}

inline int orbit_count(const ParabolicGrading& pg) { return tsoc(pg).orbit_count(); }

} // namespace parabolic

#endif // PARABOLIC_CASCADE_HPP
