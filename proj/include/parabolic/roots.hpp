#ifndef PARABOLIC_ROOTS_HPP
#define PARABOLIC_ROOTS_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "parabolic/error.hpp"
#include "parabolic/rational.hpp"

namespace parabolic {

/// Dynkin node label, numbered 1..rank in Bourbaki order.
using Node = int;

/// A root (or any integral element of the root lattice) in simple-root coordinates.
/// Entry [i] is the coefficient of the simple root with node label i+1.
using Root = std::vector<int>;

enum class Family { A, B, C, D, E, F, G };

inline char family_letter(Family f) {
    return "ABCDEFG"[static_cast<int>(f)];
}

inline std::optional<Family> family_from_letter(char c) {
    switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
    case 'E': case 'e': return Family::E;
    case 'F': case 'f': return Family::F;
    case 'G': case 'g': return Family::G;
    default: return std::nullopt;
    }
}

inline bool is_supported_type(Family f, int rank) {
    switch (f) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
    }
    return false;
}

/// Classical dimension of the simple Lie algebra of the given type.
inline int classical_dimension(Family f, int l) {
    switch (f) {
    case Family::A: return l * (l + 2);
    case Family::B: return l * (2 * l + 1);
    case Family::C: return l * (2 * l + 1);
    case Family::D: return l * (2 * l - 1);
    case Family::E: return l == 6 ? 78 : l == 7 ? 133 : 248;
    case Family::F: return 52;
    case Family::G: return 14;
    }
    return 0;
}

inline std::string type_label(Family f, int rank) {
    return std::string(1, family_letter(f)) + std::to_string(rank);
}

enum class Basis { Root, Weight };

/// Exact rational coefficient vector, tagged with the basis it is expressed in:
/// simple roots (ROOT) or fundamental weights (WEIGHT).
struct WeightVector {
    std::vector<Rational> coeffs;
    Basis basis = Basis::Root;

    friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

inline Root operator+(Root a, const Root& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

inline Root operator-(Root a, const Root& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] -= b[i];
    return a;
}

inline Root operator-(Root a) {
    for (auto& x : a)
        x = -x;
    return a;
}

inline Root operator*(int s, Root a) {
    for (auto& x : a)
        x *= s;
    return a;
}

inline int height(const Root& r) {
    return std::accumulate(r.begin(), r.end(), 0);
}

inline bool is_zero(const Root& r) {
    return std::all_of(r.begin(), r.end(), [](int x) { return x == 0; });
}

inline bool is_nonnegative(const Root& r) {
    return std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; });
}

/// Root notation used in tables: "122321" for single digits, "[-1,0,3]" otherwise.
inline std::string root_digits(const Root& r) {
    std::string s;
    for (int x : r) {
        if (x < 0 || x > 9)
            return {};
        s += static_cast<char>('0' + x);
    }
    return s;
}

inline std::string root_bracket(const Root& r) {
    std::string s = "[";
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(r[i]);
    }
    return s + "]";
}

/// A complex simple root system in Bourbaki ordering.
///
/// The Cartan matrix entry cartan(i, j) is <alpha_i, alpha_j^vee>. The invariant
/// form is normalized so that short simple roots have squared length 2.
/// Positive roots are generated by root-string closure and stored sorted by
/// height, then lexicographically.
class RootSystem {
public:
    RootSystem(Family family, int rank) : family_(family), rank_(rank) {
        if (!is_supported_type(family, rank))
            throw UnsupportedType("unsupported simple type " + type_label(family, rank));
        build_cartan();
        build_inverse_cartan();
        generate_positive_roots();
    }

    Family family() const noexcept { return family_; }
    int rank() const noexcept { return rank_; }
    std::string label() const { return type_label(family_, rank_); }
    int dimension() const noexcept { return rank_ + 2 * static_cast<int>(positive_.size()); }

    int cartan(Node i, Node j) const { return cartan_[check(i)][check(j)]; }

    /// Squared length of the simple root alpha_i (2 for short roots).
    int simple_length2(Node i) const { return length2_[check(i)]; }

    /// Symmetrizer d_i = <alpha_i, alpha_i>/2, so (alpha_i, alpha_j) = cartan(i, j) d_j.
    Rational symmetrizer(Node i) const { return Rational(length2_[check(i)], 2); }

    const std::vector<Root>& positive_roots() const noexcept { return positive_; }
    const Root& highest_root() const noexcept { return positive_.back(); }

    /// All roots: positive roots followed by their negatives in the same order.
    std::vector<Root> all_roots() const {
        std::vector<Root> out = positive_;
        for (const auto& r : positive_)
            out.push_back(-r);
        return out;
    }

    bool is_root(const Root& v) const {
        if (static_cast<int>(v.size()) != rank_)
            return false;
        return index_.count(v) > 0;
    }

    /// Index of a root in all_roots(), if it is one.
    std::optional<int> root_index(const Root& v) const {
        auto it = index_.find(v);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    /// (a, b) for lattice vectors in simple-root coordinates.
    int inner(const Root& a, const Root& b) const {
        require_rank(a.size());
        require_rank(b.size());
        int s = 0;
        for (int i = 0; i < rank_; ++i) {
            if (a[i] == 0)
                continue;
            for (int j = 0; j < rank_; ++j)
                s += a[i] * form_[i][j] * b[j];
        }
        return s;
    }

    int length2(const Root& a) const { return inner(a, a); }

    /// <a, alpha_i^vee> for a lattice vector a.
    int coroot_pairing(const Root& a, Node i) const {
        require_rank(a.size());
        const int col = check(i);
        int s = 0;
        for (int k = 0; k < rank_; ++k)
            s += a[k] * cartan_[k][col];
        return s;
    }

    /// <a, b^vee> = 2(a,b)/(b,b) for a root b.
    int coroot_pairing(const Root& a, const Root& b) const {
        const int num = 2 * inner(a, b);
        const int den = length2(b);
        if (den == 0 || num % den != 0)
            throw InternalMismatch("non-integral coroot pairing");
        return num / den;
    }

    /// Fundamental-weight coordinates of a lattice vector.
    std::vector<int> weight_coords(const Root& a) const {
        std::vector<int> w(rank_);
        for (int i = 0; i < rank_; ++i)
            w[i] = coroot_pairing(a, i + 1);
        return w;
    }

    /// Coefficients of the coroot b^vee in the basis of simple coroots.
    std::vector<Rational> coroot_coords(const Root& b) const {
        const int len = length2(b);
        std::vector<Rational> out(rank_);
        for (int i = 0; i < rank_; ++i)
            out[i] = Rational(b[i] * length2_[i], len);
        return out;
    }

    /// sigma_i(a) = a - <a, alpha_i^vee> alpha_i.
    Root reflect(Node i, Root a) const {
        const int c = coroot_pairing(a, i);
        a[i - 1] -= c;
        return a;
    }

    /// Applies the word (w_1 w_2 ... w_n) as the composition sigma_{w_1} o ... o sigma_{w_n}:
    /// the rightmost reflection acts first.
    Root apply_word(const std::vector<Node>& word, Root a) const {
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            a = reflect(*it, std::move(a));
        return a;
    }

    WeightVector to_weight_basis(const WeightVector& v) const {
        require_rank(v.coeffs.size());
        if (v.basis == Basis::Weight)
            return v;
        WeightVector out{std::vector<Rational>(rank_), Basis::Weight};
        for (int i = 0; i < rank_; ++i)
            for (int k = 0; k < rank_; ++k)
                out.coeffs[i] += v.coeffs[k] * cartan_[k][i];
        return out;
    }

    WeightVector to_root_basis(const WeightVector& v) const {
        require_rank(v.coeffs.size());
        if (v.basis == Basis::Root)
            return v;
        WeightVector out{std::vector<Rational>(rank_), Basis::Root};
        for (int k = 0; k < rank_; ++k)
            for (int i = 0; i < rank_; ++i)
                out.coeffs[k] += inverse_cartan_[i][k] * v.coeffs[i];
        return out;
    }

    /// Invariant symmetric form on weights; short simple roots have <alpha, alpha> = 2.
    Rational pairing(const WeightVector& mu, const WeightVector& nu) const {
        const auto a = to_root_basis(mu);
        const auto b = to_root_basis(nu);
        Rational s = 0;
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                if (form_[i][j] != 0)
                    s += a.coeffs[i] * form_[i][j] * b.coeffs[j];
        return s;
    }

    /// <mu, alpha_i^vee>; mu must be integral.
    long long coroot_pairing(const WeightVector& mu, Node i) const {
        const int col = check(i);
        const auto w = to_weight_basis(mu);
        if (!is_integral(w.coeffs[col]))
            throw InternalMismatch("weight is not integral at node " + std::to_string(i));
        return to_int(w.coeffs[col]);
    }

    WeightVector reflect(Node i, const WeightVector& mu) const {
        const int col = check(i);
        auto r = to_root_basis(mu);
        const auto w = to_weight_basis(mu);
        r.coeffs[col] -= w.coeffs[col];
        return mu.basis == Basis::Root ? r : to_weight_basis(r);
    }

    WeightVector apply_word(const std::vector<Node>& word, WeightVector mu) const {
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            mu = reflect(*it, mu);
        return mu;
    }

    /// Node adjacency in the Dynkin diagram.
    bool adjacent(Node i, Node j) const { return i != j && cartan(i, j) != 0; }

    std::vector<Node> neighbours(Node i) const {
        std::vector<Node> out;
        for (Node j = 1; j <= rank_; ++j)
            if (adjacent(i, j))
                out.push_back(j);
        return out;
    }

    /// Throws NodeOutOfRange unless 1 <= i <= rank; returns the 0-based index.
    int check(Node i) const {
        if (i < 1 || i > rank_)
            throw NodeOutOfRange("node " + std::to_string(i) + " out of range for " + label());
        return i - 1;
    }

    void require_rank(std::size_t n) const {
        if (static_cast<int>(n) != rank_)
            throw DimensionMismatch("expected " + std::to_string(rank_) + " coefficients, got " +
                                    std::to_string(n));
    }

private:
    void bond(int i, int j, int cij, int cji) {
        cartan_[i][j] = cij;
        cartan_[j][i] = cji;
    }

    void build_cartan() {
        const int l = rank_;
        cartan_.assign(l, std::vector<int>(l, 0));
        length2_.assign(l, 2);
        for (int i = 0; i < l; ++i)
            cartan_[i][i] = 2;
        switch (family_) {
        case Family::A:
            for (int i = 0; i + 1 < l; ++i)
                bond(i, i + 1, -1, -1);
            break;
        case Family::B:
            for (int i = 0; i + 2 < l; ++i)
                bond(i, i + 1, -1, -1);
            bond(l - 2, l - 1, -2, -1);
            for (int i = 0; i + 1 < l; ++i)
                length2_[i] = 4;
            break;
        case Family::C:
            for (int i = 0; i + 2 < l; ++i)
                bond(i, i + 1, -1, -1);
            bond(l - 2, l - 1, -1, -2);
            length2_[l - 1] = 4;
            break;
        case Family::D:
            for (int i = 0; i + 2 < l; ++i)
                bond(i, i + 1, -1, -1);
            bond(l - 3, l - 1, -1, -1);
            break;
        case Family::E:
            bond(0, 2, -1, -1);
            bond(1, 3, -1, -1);
            for (int i = 2; i + 1 < l; ++i)
                bond(i, i + 1, -1, -1);
            break;
        case Family::F:
            bond(0, 1, -1, -1);
            bond(1, 2, -2, -1);
            bond(2, 3, -1, -1);
            length2_ = {4, 4, 2, 2};
            break;
        case Family::G:
            bond(0, 1, -1, -3);
            length2_ = {2, 6};
            break;
        }
        form_.assign(l, std::vector<int>(l, 0));
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j)
                form_[i][j] = cartan_[i][j] * length2_[j] / 2;
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j)
                if (form_[i][j] != form_[j][i])
                    throw InternalMismatch("Cartan matrix is not symmetrizable");
    }

    void build_inverse_cartan() {
        const int l = rank_;
        std::vector<std::vector<Rational>> m(l, std::vector<Rational>(2 * l));
        for (int i = 0; i < l; ++i) {
            for (int j = 0; j < l; ++j)
                m[i][j] = cartan_[i][j];
            m[i][l + i] = 1;
        }
        for (int c = 0; c < l; ++c) {
            int p = c;
            while (m[p][c] == 0)
                ++p;
            std::swap(m[p], m[c]);
            const Rational piv = m[c][c];
            for (auto& x : m[c])
                x /= piv;
            for (int r = 0; r < l; ++r) {
                if (r == c || m[r][c] == 0)
                    continue;
                const Rational f = m[r][c];
                for (int k = 0; k < 2 * l; ++k)
                    m[r][k] -= f * m[c][k];
            }
        }
        inverse_cartan_.assign(l, std::vector<Rational>(l));
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j)
                inverse_cartan_[i][j] = m[i][l + j];
    }

    // Closure by root strings: beta + alpha_i is a root iff q = p - <beta, alpha_i^vee> > 0,
    // where p is the largest integer with beta - p alpha_i a root.
    void generate_positive_roots() {
        const int l = rank_;
        std::map<Root, int> seen;
        std::vector<Root> level;
        for (int i = 0; i < l; ++i) {
            Root r(l, 0);
            r[i] = 1;
            level.push_back(r);
        }
        std::vector<Root> all;
        while (!level.empty()) {
            std::sort(level.begin(), level.end(), std::greater<>());
            for (const auto& r : level) {
                seen.emplace(r, 0);
                all.push_back(r);
            }
            std::vector<Root> next;
            for (const auto& beta : level) {
                for (int i = 0; i < l; ++i) {
                    int p = 0;
                    Root down = beta;
                    while (true) {
                        down[i] -= 1;
                        if (!seen.count(down))
                            break;
                        ++p;
                    }
                    const int q = p - coroot_pairing(beta, i + 1);
                    if (q > 0) {
                        Root up = beta;
                        up[i] += 1;
                        if (!seen.count(up) &&
                            std::find(next.begin(), next.end(), up) == next.end())
                            next.push_back(up);
                    }
                }
            }
            level = std::move(next);
        }
        positive_ = std::move(all);
        const int n = static_cast<int>(positive_.size());
        for (int k = 0; k < n; ++k) {
            index_[positive_[k]] = k;
            index_[-positive_[k]] = n + k;
        }
        if (dimension() != classical_dimension(family_, rank_))
            throw InternalMismatch("root generation produced the wrong number of roots for " + label());
        for (int k = 0; k + 1 < n; ++k)
            if (height(positive_[k]) > height(positive_.back()))
                throw InternalMismatch("highest root is not of maximal height");
    }

    Family family_;
    int rank_;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> length2_;
    std::vector<std::vector<int>> form_;
    std::vector<std::vector<Rational>> inverse_cartan_;
    std::vector<Root> positive_;
    std::map<Root, int> index_;
};

inline RootSystem build_root_system(Family family, int rank) {
    return RootSystem(family, rank);
}

/// Parses labels such as "G2", "E8", "B5".
inline RootSystem build_root_system(const std::string& label) {
    if (label.size() < 2)
        throw ParseError("expected an algebra label like 'G2', got '" + label + "'", 0);
    const auto fam = family_from_letter(label[0]);
    if (!fam)
        throw ParseError("unknown family letter '" + label.substr(0, 1) + "'", 0);
    for (std::size_t i = 1; i < label.size(); ++i)
        if (label[i] < '0' || label[i] > '9')
            throw ParseError("rank must be a positive integer in '" + label + "'", i);
    const int rank = std::stoi(label.substr(1));
    return RootSystem(*fam, rank);
}

inline WeightVector root_vector(const Root& r) {
    return {to_rationals(r), Basis::Root};
}

inline WeightVector weight_vector(const std::vector<int>& w) {
    return {to_rationals(w), Basis::Weight};
}

/// Dominance order: a >= b iff a - b is a nonnegative combination of simple roots.
inline bool dominates(const Root& a, const Root& b) {
    return is_nonnegative(a - b);
}

} // namespace parabolic

#endif // PARABOLIC_ROOTS_HPP
