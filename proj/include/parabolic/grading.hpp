#ifndef PARABOLIC_GRADING_HPP
#define PARABOLIC_GRADING_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "parabolic/dynkin.hpp"
#include "parabolic/roots.hpp"

namespace parabolic {

/// A connected piece of a marked diagram: its type, its nodes in Bourbaki order and the
/// integer inscribed over each node (parallel to type.order).
struct DiagramComponent {
    DiagramType type;
    std::vector<int> inscribed;

    const std::vector<Node>& nodes() const { return type.order; }

    bool operator==(const DiagramComponent&) const = default;

    bool trivial() const {
        return std::all_of(inscribed.begin(), inscribed.end(), [](int c) { return c == 0; });
    }
};

/// A g0^ss-module described by a marked Dynkin diagram (uncrossed nodes only).
struct ModuleDiagram {
    std::vector<DiagramComponent> components;
    /// The crossed node a g_{-1} or g_1 summand belongs to, when applicable.
    std::optional<Node> crossed_node;

    bool operator==(const ModuleDiagram&) const = default;

    bool empty() const { return components.empty(); }

    std::vector<Node> nodes() const {
        std::vector<Node> out;
        for (const auto& c : components)
            out.insert(out.end(), c.nodes().begin(), c.nodes().end());
        std::sort(out.begin(), out.end());
        return out;
    }

    int inscribed(Node n) const {
        for (const auto& c : components) {
            const int p = c.type.position(n);
            if (p)
                return c.inscribed[p - 1];
        }
        return 0;
    }
};

/// Levi decomposition of g0: semisimple factors and the dimension of the centre.
struct LeviDecomposition {
    std::vector<DiagramComponent> factors;
    int center_dimension = 0;

    /// e.g. "A2 x A1 x A1"; "0" when there is no semisimple part.
    std::string label() const {
        if (factors.empty())
            return "0";
        std::string s;
        for (const auto& f : factors) {
            if (!s.empty())
                s += " x ";
            s += f.type.label();
        }
        return s;
    }
};

/// The |nu|-grading of a simple Lie algebra induced by a set of crossed Dynkin nodes.
class ParabolicGrading {
public:
    ParabolicGrading(std::shared_ptr<const RootSystem> rs, std::vector<Node> crosses)
        : rs_(std::move(rs)), crosses_(std::move(crosses)) {
        if (crosses_.empty())
            throw EmptyCrossSet("the crossing set must be nonempty");
        std::sort(crosses_.begin(), crosses_.end());
        crosses_.erase(std::unique(crosses_.begin(), crosses_.end()), crosses_.end());
        crossed_.assign(rs_->rank(), false);
        for (Node n : crosses_)
            crossed_[rs_->check(n)] = true;
        for (const auto& r : rs_->all_roots()) {
            const int z = z_degree(r);
            ++layer_dims_[z];
            degrees_.push_back(z);
        }
        layer_dims_[0] += rs_->rank();
        depth_ = z_degree(rs_->highest_root());
    }

    const RootSystem& root_system() const { return *rs_; }
    std::shared_ptr<const RootSystem> root_system_ptr() const { return rs_; }
    const std::vector<Node>& crosses() const { return crosses_; }
    bool is_crossed(Node n) const { return crossed_[rs_->check(n)]; }
    int depth() const { return depth_; }

    /// Grading element Z = sum of Z_i over crossed nodes, evaluated on a lattice vector.
    int z_degree(const Root& r) const {
        int z = 0;
        for (Node n : crosses_)
            z += r[n - 1];
        return z;
    }

    /// Grade of the k-th root of RootSystem::all_roots().
    int degree_of_root(int index) const { return degrees_[index]; }

    int layer_dim(int k) const {
        auto it = layer_dims_.find(k);
        return it == layer_dims_.end() ? 0 : it->second;
    }

    const std::map<int, int>& layer_dims() const { return layer_dims_; }

    /// Roots of g_k.
    std::vector<Root> layer_roots(int k) const {
        std::vector<Root> out;
        const auto all = rs_->all_roots();
        for (std::size_t i = 0; i < all.size(); ++i)
            if (degrees_[i] == k)
                out.push_back(all[i]);
        return out;
    }

    std::vector<Node> uncrossed() const {
        std::vector<Node> out;
        for (Node n = 1; n <= rs_->rank(); ++n)
            if (!crossed_[n - 1])
                out.push_back(n);
        return out;
    }

    /// Crossing set in display form, e.g. "P1,4".
    std::string parabolic_label() const {
        std::string s = "P";
        for (std::size_t i = 0; i < crosses_.size(); ++i)
            s += (i ? "," : "") + std::to_string(crosses_[i]);
        return s;
    }

    std::string label() const { return rs_->label() + "/" + parabolic_label(); }

private:
    std::shared_ptr<const RootSystem> rs_;
    std::vector<Node> crosses_;
    std::vector<bool> crossed_;
    std::vector<int> degrees_;
    std::map<int, int> layer_dims_;
    int depth_ = 0;
};

inline ParabolicGrading grade(std::shared_ptr<const RootSystem> rs, std::vector<Node> crosses) {
    return ParabolicGrading(std::move(rs), std::move(crosses));
}

inline ParabolicGrading grade(const RootSystem& rs, std::vector<Node> crosses) {
    return ParabolicGrading(std::make_shared<const RootSystem>(rs), std::move(crosses));
}

/// Marked diagram on the given nodes with inscriptions supplied per node.
template <typename Inscribe>
std::vector<DiagramComponent> inscribe_components(const RootSystem& rs, const std::vector<Node>& nodes,
                                                  Inscribe&& coefficient) {
    std::vector<DiagramComponent> out;
    for (const auto& comp : connected_components(rs, nodes)) {
        DiagramComponent dc{identify_diagram(rs, comp), {}};
        for (Node n : dc.type.order)
            dc.inscribed.push_back(coefficient(n));
        out.push_back(std::move(dc));
    }
    return out;
}

/// Removing the crossed nodes yields the diagram of g0^ss; the centre has dimension |I_p|.
inline LeviDecomposition levi_semisimple(const ParabolicGrading& pg) {
    LeviDecomposition out;
    out.factors = inscribe_components(pg.root_system(), pg.uncrossed(), [](Node) { return 0; });
    out.center_dimension = static_cast<int>(pg.crosses().size());
    return out;
}

/// g_{-1} as a g0^ss-module, one irreducible summand per crossed node. The inscription on an
/// uncrossed neighbour j of the crossed node i is -c_ij: the bond multiplicity when the bond points
/// from i to j, and 1 otherwise.
inline std::vector<ModuleDiagram> module_g_minus1(const ParabolicGrading& pg) {
    const auto& rs = pg.root_system();
    std::vector<ModuleDiagram> out;
    for (Node i : pg.crosses()) {
        ModuleDiagram md;
        md.crossed_node = i;
        md.components = inscribe_components(rs, pg.uncrossed(), [&](Node j) { return -rs.cartan(i, j); });
        out.push_back(std::move(md));
    }
    return out;
}

/// g_1 = (g_{-1})^*: the duality involution of each g0^ss factor applied to module_g_minus1.
inline std::vector<ModuleDiagram> module_g1(const ParabolicGrading& pg) {
    auto out = module_g_minus1(pg);
    for (auto& md : out) {
        for (auto& c : md.components) {
            const auto inv = duality_involution(c.type.family, c.type.rank);
            std::vector<int> dual(c.inscribed.size());
            for (std::size_t p = 0; p < dual.size(); ++p)
                dual[inv[p] - 1] = c.inscribed[p];
            c.inscribed = std::move(dual);
        }
    }
    return out;
}

/// Removes the crosses from the diagram inscribed with the coefficients of `top` (a root supported
/// on `nodes`) and keeps only components with a nonzero inscription.
inline ModuleDiagram top_slot_support(const RootSystem& rs, const std::vector<Node>& nodes,
                                      const std::vector<Node>& crosses, const Root& top) {
    std::vector<Node> free;
    for (Node n : nodes)
        if (std::find(crosses.begin(), crosses.end(), n) == crosses.end())
            free.push_back(n);
    ModuleDiagram md;
    for (auto& c : inscribe_components(rs, free, [&](Node n) { return rs.coroot_pairing(top, n); }))
        if (!c.trivial())
            md.components.push_back(std::move(c));
    return md;
}

/// Effective part of the g0^ss-action on the top slot g_nu.
inline ModuleDiagram effective_top_slot(const ParabolicGrading& pg) {
    const auto& rs = pg.root_system();
    std::vector<Node> all;
    for (Node n = 1; n <= rs.rank(); ++n)
        all.push_back(n);
    return top_slot_support(rs, all, pg.crosses(), rs.highest_root());
}

/// Dimension of the irreducible module of a connected component with the inscribed highest
/// weight, by the Weyl dimension formula over the roots supported on the component.
inline Integer weyl_dimension(const RootSystem& rs, const DiagramComponent& comp) {
    std::vector<bool> inside(rs.rank(), false);
    for (Node n : comp.nodes())
        inside[n - 1] = true;
    Rational dim = 1;
    for (const auto& a : rs.positive_roots()) {
        bool supported = true;
        for (int i = 0; i < rs.rank(); ++i)
            if (a[i] != 0 && !inside[i])
                supported = false;
        if (!supported)
            continue;
        const int len = rs.length2(a);
        Rational rho = 0, lam = 0;
        for (Node n : comp.nodes()) {
            const Rational k(a[n - 1] * rs.simple_length2(n), len);
            rho += k;
            lam += k * comp.inscribed[comp.type.position(n) - 1];
        }
        dim *= (lam + rho) / rho;
    }
    if (!is_integral(dim))
        throw InternalMismatch("Weyl dimension is not an integer");
    return boost::multiprecision::numerator(dim);
}

inline Integer weyl_dimension(const RootSystem& rs, const ModuleDiagram& md) {
    Integer d = 1;
    for (const auto& c : md.components)
        d *= weyl_dimension(rs, c);
    return d;
}

/// The sub-cominuscule module patterns (plus the empty top slot).
enum class TopSlotPattern {
    Empty,          // g_nu one-dimensional
    Segre,          // A_a x A_b standard tensor standard (one factor may be absent)
    OddQuadric,     // B_n vector
    EvenQuadric,    // D_n vector
    SymmetricSquare,// A_n, S^2 of the standard representation
    Grassmannian,   // A_n, second exterior power
    Spinor,         // D5 half-spin
    Cayley,         // E6 minimal
    Other,
};

inline std::string to_string(TopSlotPattern p) {
    switch (p) {
    case TopSlotPattern::Empty: return "empty";
    case TopSlotPattern::Segre: return "A_l/P_k (Segre)";
    case TopSlotPattern::OddQuadric: return "B_l/P_1 (quadric)";
    case TopSlotPattern::EvenQuadric: return "D_l/P_1 (quadric)";
    case TopSlotPattern::SymmetricSquare: return "C_l/P_l (Veronese)";
    case TopSlotPattern::Grassmannian: return "D_l/P_l (Grassmannian)";
    case TopSlotPattern::Spinor: return "E6/P6 (spinor variety)";
    case TopSlotPattern::Cayley: return "E7/P7 (Cayley plane)";
    case TopSlotPattern::Other: return "other";
    }
    return "other";
}

namespace detail {

/// Position of the single nonzero inscription and its value, if exactly one exists.
inline std::optional<std::pair<int, int>> single_mark(const DiagramComponent& c) {
    std::optional<std::pair<int, int>> mark;
    for (std::size_t p = 0; p < c.inscribed.size(); ++p) {
        if (c.inscribed[p] == 0)
            continue;
        if (mark)
            return std::nullopt;
        mark = std::make_pair(static_cast<int>(p) + 1, c.inscribed[p]);
    }
    return mark;
}

inline bool is_standard_a(const DiagramComponent& c) {
    if (c.type.family != Family::A)
        return false;
    const auto m = single_mark(c);
    return m && m->second == 1 && (m->first == 1 || m->first == c.type.rank);
}

} // namespace detail

/// Classifies the effective top slot by canonical form against the sub-cominuscule patterns.
inline TopSlotPattern classify_top_slot(const ModuleDiagram& md) {
    const auto& cs = md.components;
    if (cs.empty())
        return TopSlotPattern::Empty;
    if (cs.size() == 2)
        return detail::is_standard_a(cs[0]) && detail::is_standard_a(cs[1]) ? TopSlotPattern::Segre
                                                                              : TopSlotPattern::Other;
    if (cs.size() != 1)
        return TopSlotPattern::Other;
    const auto& c = cs[0];
    const auto mark = detail::single_mark(c);
    if (!mark)
        return TopSlotPattern::Other;
    const auto [pos, value] = *mark;
    const int n = c.type.rank;
    switch (c.type.family) {
    case Family::A:
        if (value == 1 && (pos == 1 || pos == n))
            return TopSlotPattern::Segre;
        if (value == 2 && (pos == 1 || pos == n))
            return TopSlotPattern::SymmetricSquare;
        if (value == 1 && n >= 3 && (pos == 2 || pos == n - 1))
            return TopSlotPattern::Grassmannian;
        return TopSlotPattern::Other;
    case Family::B:
        return value == 1 && pos == 1 ? TopSlotPattern::OddQuadric : TopSlotPattern::Other;
    case Family::D:
        if (value != 1)
            return TopSlotPattern::Other;
        if (pos == 1 || (n == 4 && (pos == 3 || pos == 4)))
            return TopSlotPattern::EvenQuadric;
        if (n == 5 && (pos == 4 || pos == 5))
            return TopSlotPattern::Spinor;
        return TopSlotPattern::Other;
    case Family::E:
        return n == 6 && value == 1 && (pos == 1 || pos == 6) ? TopSlotPattern::Cayley
                                                                : TopSlotPattern::Other;
    default:
        return TopSlotPattern::Other;
    }
}

/// Number of G0-orbits in P(g_nu) predicted by the sub-cominuscule pattern.
inline int pattern_orbit_count(const ModuleDiagram& md) {
    const auto p = classify_top_slot(md);
    switch (p) {
    case TopSlotPattern::Empty: return 1;
    case TopSlotPattern::Segre: {
        if (md.components.size() == 1)
            return 1;
        return std::min(md.components[0].type.rank, md.components[1].type.rank) + 1;
    }
    case TopSlotPattern::OddQuadric:
    case TopSlotPattern::EvenQuadric:
    case TopSlotPattern::Spinor: return 2;
    case TopSlotPattern::SymmetricSquare: return md.components[0].type.rank + 1;
    case TopSlotPattern::Grassmannian: return (md.components[0].type.rank + 1) / 2;
    case TopSlotPattern::Cayley: return 3;
    case TopSlotPattern::Other: break;
    }
    throw InternalMismatch("top slot is not sub-cominuscule");
}

/// True for a connected highest weight contact grading: crossing exactly the contact nodes.
inline bool crosses_all_contact_nodes(const ParabolicGrading& pg) {
    const auto w = pg.root_system().weight_coords(pg.root_system().highest_root());
    for (Node n = 1; n <= pg.root_system().rank(); ++n)
        if (w[n - 1] != 0 && !pg.is_crossed(n))
            return false;
    return true;
}

} // namespace parabolic

#endif // PARABOLIC_GRADING_HPP
