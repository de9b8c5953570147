#ifndef PARABOLIC_DYNKIN_HPP
#define PARABOLIC_DYNKIN_HPP

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "parabolic/roots.hpp"

namespace parabolic {

/// Type of a connected Dynkin sub-diagram together with a Bourbaki labelling of its nodes.
/// order[p] is the ambient node sitting at Bourbaki position p+1.
/// Rank-two doubly laced diagrams are always reported as B2 (long node first).
struct DiagramType {
    Family family = Family::A;
    int rank = 0;
    std::vector<Node> order;

    std::string label() const { return type_label(family, rank); }

    bool operator==(const DiagramType&) const = default;

    /// Bourbaki position (1-based) of an ambient node, or 0 if absent.
    int position(Node n) const {
        auto it = std::find(order.begin(), order.end(), n);
        return it == order.end() ? 0 : static_cast<int>(it - order.begin()) + 1;
    }
};

/// Connected components of the sub-diagram on the given nodes; each sorted, listed by smallest node.
inline std::vector<std::vector<Node>> connected_components(const RootSystem& rs,
                                                           const std::vector<Node>& nodes) {
    std::set<Node> left(nodes.begin(), nodes.end());
    std::vector<std::vector<Node>> out;
    while (!left.empty()) {
        std::vector<Node> comp{*left.begin()};
        left.erase(left.begin());
        for (std::size_t k = 0; k < comp.size(); ++k) {
            for (auto it = left.begin(); it != left.end();) {
                if (rs.adjacent(comp[k], *it)) {
                    comp.push_back(*it);
                    it = left.erase(it);
                } else {
                    ++it;
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

namespace detail {

inline std::vector<Node> walk_path(const RootSystem& rs, const std::vector<Node>& comp, Node start,
                                   Node avoid = 0) {
    std::vector<Node> path{start};
    Node prev = avoid;
    Node cur = start;
    while (true) {
        Node next = 0;
        for (Node n : comp)
            if (n != prev && n != cur && rs.adjacent(cur, n) &&
                std::find(path.begin(), path.end(), n) == path.end()) {
                next = n;
                break;
            }
        if (next == 0)
            break;
        path.push_back(next);
        prev = cur;
        cur = next;
    }
    return path;
}

inline int degree_in(const RootSystem& rs, const std::vector<Node>& comp, Node n) {
    int d = 0;
    for (Node m : comp)
        d += rs.adjacent(n, m) ? 1 : 0;
    return d;
}

} // namespace detail

/// Identifies a connected sub-diagram and labels its nodes in Bourbaki order.
inline DiagramType identify_diagram(const RootSystem& rs, const std::vector<Node>& comp) {
    const int n = static_cast<int>(comp.size());
    if (n == 0)
        throw InternalMismatch("cannot identify an empty diagram");
    if (n == 1)
        return {Family::A, 1, comp};

    int max_mult = 1;
    for (Node a : comp)
        for (Node b : comp)
            if (rs.adjacent(a, b))
                max_mult = std::max(max_mult, rs.cartan(a, b) * rs.cartan(b, a));

    std::vector<Node> ends;
    Node branch = 0;
    for (Node a : comp) {
        const int d = detail::degree_in(rs, comp, a);
        if (d == 1)
            ends.push_back(a);
        if (d == 3)
            branch = a;
    }

    if (max_mult == 3) {
        Node s = rs.simple_length2(comp[0]) < rs.simple_length2(comp[1]) ? comp[0] : comp[1];
        Node l = s == comp[0] ? comp[1] : comp[0];
        return {Family::G, 2, {s, l}};
    }
    if (max_mult == 2) {
        if (n == 2) {
            Node l = rs.simple_length2(comp[0]) > rs.simple_length2(comp[1]) ? comp[0] : comp[1];
            Node s = l == comp[0] ? comp[1] : comp[0];
            return {Family::B, 2, {l, s}};
        }
        // Locate the double bond along the path.
        auto path = detail::walk_path(rs, comp, ends[0]);
        int dbl = -1;
        for (int p = 0; p + 1 < n; ++p)
            if (rs.cartan(path[p], path[p + 1]) * rs.cartan(path[p + 1], path[p]) == 2)
                dbl = p;
        if (dbl != 0 && dbl != n - 2) {
            // F4: first two nodes long.
            if (rs.simple_length2(path[0]) < rs.simple_length2(path[n - 1]))
                std::reverse(path.begin(), path.end());
            return {Family::F, 4, path};
        }
        if (dbl == 0)
            std::reverse(path.begin(), path.end());
        const Node last = path.back();
        const Node before = path[n - 2];
        const bool last_short = rs.simple_length2(last) < rs.simple_length2(before);
        return {last_short ? Family::B : Family::C, n, path};
    }
    if (branch == 0) {
        const Node start = std::min(ends[0], ends[1]);
        return {Family::A, n, detail::walk_path(rs, comp, start)};
    }
    // Simply laced with a trivalent node: arms listed outward from the branch node.
    std::vector<std::vector<Node>> arms;
    for (Node m : comp)
        if (rs.adjacent(branch, m))
            arms.push_back(detail::walk_path(rs, comp, m, branch));
    std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size())
            return x.size() < y.size();
        return x.back() < y.back();
    });
    const auto a0 = arms[0].size(), a1 = arms[1].size(), a2 = arms[2].size();
    if (a0 == 1 && a1 == 1) {
        // D_n: long arm reversed, branch, then the two leaves.
        std::vector<Node> order(arms[2].rbegin(), arms[2].rend());
        order.push_back(branch);
        std::vector<Node> leaves{arms[0][0], arms[1][0]};
        if (a2 == 1) {
            // D4: use the smallest leaf label as node 1.
            std::vector<Node> all{arms[0][0], arms[1][0], arms[2][0]};
            std::sort(all.begin(), all.end());
            return {Family::D, 4, {all[0], branch, all[1], all[2]}};
        }
        std::sort(leaves.begin(), leaves.end());
        order.insert(order.end(), leaves.begin(), leaves.end());
        return {Family::D, n, order};
    }
    if (a0 == 1 && a1 == 2) {
        const auto& two = arms[1];
        const auto& other = arms[2];
        std::vector<Node> order{two[1], arms[0][0], two[0], branch};
        order.insert(order.end(), other.begin(), other.end());
        return {Family::E, n, order};
    }
    throw InternalMismatch("sub-diagram is not of finite type");
}

/// Diagram automorphisms of a Bourbaki-labelled diagram, as permutations of positions 1..rank.
/// perm[p-1] is the image of position p.
inline std::vector<std::vector<int>> diagram_automorphisms(Family f, int rank) {
    std::vector<int> id(rank);
    for (int p = 0; p < rank; ++p)
        id[p] = p + 1;
    std::vector<std::vector<int>> out{id};
    if (f == Family::A && rank >= 2) {
        std::vector<int> rev(id.rbegin(), id.rend());
        out.push_back(rev);
    } else if (f == Family::D && rank == 4) {
        std::vector<int> leaves{1, 3, 4};
        std::vector<int> perm = leaves;
        while (std::next_permutation(perm.begin(), perm.end())) {
            std::vector<int> g = id;
            for (int k = 0; k < 3; ++k)
                g[leaves[k] - 1] = perm[k];
            out.push_back(g);
        }
    } else if (f == Family::D) {
        std::vector<int> g = id;
        std::swap(g[rank - 2], g[rank - 1]);
        out.push_back(g);
    } else if (f == Family::E && rank == 6) {
        out.push_back({6, 2, 5, 4, 3, 1});
    }
    return out;
}

/// The involution -w_0 on Dynkin positions: nontrivial exactly for A_l (l >= 2), D_l (l odd), E6.
inline std::vector<int> duality_involution(Family f, int rank) {
    std::vector<int> id(rank);
    for (int p = 0; p < rank; ++p)
        id[p] = p + 1;
    if (f == Family::A && rank >= 2)
        return {id.rbegin(), id.rend()};
    if (f == Family::D && rank % 2 == 1) {
        std::swap(id[rank - 2], id[rank - 1]);
        return id;
    }
    if (f == Family::E && rank == 6)
        return {6, 2, 5, 4, 3, 1};
    return id;
}

/// Applies a position permutation of the ambient diagram to a node set (result sorted).
inline std::vector<Node> permute_nodes(const std::vector<int>& perm, const std::vector<Node>& nodes) {
    std::vector<Node> out;
    for (Node n : nodes)
        out.push_back(perm[n - 1]);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace parabolic

#endif // PARABOLIC_DYNKIN_HPP
