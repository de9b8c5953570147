#ifndef PARABOLIC_KOSTANT_HPP
#define PARABOLIC_KOSTANT_HPP

#include <string>
#include <utility>
#include <vector>

#include "parabolic/grading.hpp"

namespace parabolic {

/// Length-two Weyl word (j,k), read as the composite sigma_j sigma_k.
using Word = std::pair<Node, Node>;

inline std::string word_label(const Word& w) {
    const bool wide = w.first > 9 || w.second > 9;
    return "(" + std::to_string(w.first) + (wide ? "," : "") + std::to_string(w.second) + ")";
}

/// One irreducible component of H^2(g_-, g), labelled by its Hasse word.
struct HasseComponent {
    Word word;
    Root mu;                 // lowest weight, simple-root coordinates
    std::vector<int> mu_weight;
    Root w_minus_lambda;     // the root w(-lambda)
    int hom_mu = 0;          // Z(mu)
    int hom_wml = 0;         // Z(w(-lambda))
    bool nonrigid = false;
    bool torsion_free = false;

    bool operator==(const HasseComponent&) const = default;

    WeightVector mu_root_vector() const { return root_vector(mu); }
    WeightVector mu_weight_vector() const { return weight_vector(mu_weight); }
};

/// Conditions on a length-two Hasse word: j crossed, k != j, and k crossed or adjacent to j.
inline bool is_hasse_word(const ParabolicGrading& pg, const Word& w) {
    const auto& rs = pg.root_system();
    const auto [j, k] = w;
    if (j < 1 || j > rs.rank() || k < 1 || k > rs.rank())
        return false;
    return pg.is_crossed(j) && j != k && (pg.is_crossed(k) || rs.adjacent(j, k));
}

inline void require_hasse_word(const ParabolicGrading& pg, const Word& w) {
    if (!is_hasse_word(pg, w))
        throw InvalidWord("word " + word_label(w) + " is not a length-two Hasse word of " + pg.label());
}

/// All length-two Hasse words, ordered by (j,k).
inline std::vector<Word> hasse2_words(const ParabolicGrading& pg) {
    std::vector<Word> out;
    for (Node j : pg.crosses())
        for (Node k = 1; k <= pg.root_system().rank(); ++k)
            if (is_hasse_word(pg, {j, k}))
                out.emplace_back(j, k);
    return out;
}

/// mu = -lambda + (r_j+1) alpha_j + (r_k+1)(alpha_k - c_kj alpha_j), with r_i = <lambda, alpha_i^vee>.
inline Root lowest_weight(const ParabolicGrading& pg, const Word& w) {
    require_hasse_word(pg, w);
    const auto& rs = pg.root_system();
    const auto [j, k] = w;
    const Root& lambda = rs.highest_root();
    const int rj = rs.coroot_pairing(lambda, j);
    const int rk = rs.coroot_pairing(lambda, k);
    Root mu = -lambda;
    mu[j - 1] += (rj + 1) - (rk + 1) * rs.cartan(k, j);
    mu[k - 1] += rk + 1;
    return mu;
}

inline WeightVector lowest_weight_vector(const ParabolicGrading& pg, const Word& w, Basis basis) {
    const WeightVector v = root_vector(lowest_weight(pg, w));
    return basis == Basis::Root ? v : pg.root_system().to_weight_basis(v);
}

/// w(-lambda) = -(lambda - (r_j - r_k c_kj) alpha_j - r_k alpha_k).
inline Root curvature_root(const ParabolicGrading& pg, const Word& w) {
    require_hasse_word(pg, w);
    const auto& rs = pg.root_system();
    const auto [j, k] = w;
    const Root& lambda = rs.highest_root();
    const int rj = rs.coroot_pairing(lambda, j);
    const int rk = rs.coroot_pairing(lambda, k);
    Root wl = lambda;
    wl[j - 1] -= rj - rk * rs.cartan(k, j);
    wl[k - 1] -= rk;
    return -wl;
}

inline HasseComponent classify_component(const ParabolicGrading& pg, const Word& w) {
    HasseComponent c;
    c.word = w;
    c.mu = lowest_weight(pg, w);
    c.mu_weight = pg.root_system().weight_coords(c.mu);
    c.w_minus_lambda = curvature_root(pg, w);
    c.hom_mu = pg.z_degree(c.mu);
    c.hom_wml = pg.z_degree(c.w_minus_lambda);
    c.nonrigid = c.hom_mu > 0;
    c.torsion_free = c.hom_wml >= 0;
    return c;
}

inline std::vector<HasseComponent> hasse2(const ParabolicGrading& pg) {
    std::vector<HasseComponent> out;
    for (const auto& w : hasse2_words(pg))
        out.push_back(classify_component(pg, w));
    return out;
}

inline bool is_nonrigid(const ParabolicGrading& pg) {
    for (const auto& c : hasse2(pg))
        if (c.nonrigid)
            return true;
    return false;
}

/// |1|-graded: depth one.
inline bool is_one_graded(const ParabolicGrading& pg) { return pg.depth() == 1; }

} // namespace parabolic

#endif // PARABOLIC_KOSTANT_HPP
