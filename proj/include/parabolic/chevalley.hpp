#ifndef PARABOLIC_CHEVALLEY_HPP
#define PARABOLIC_CHEVALLEY_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "parabolic/roots.hpp"

namespace parabolic {

/// Sparse integer combination of basis elements: (basis index, coefficient).
using BasisCombination = std::vector<std::pair<int, int>>;

/// Chevalley basis {e_alpha : alpha in Delta} u {h_1, ..., h_l} with integral structure constants.
///
/// Basis indices: 0..|Delta|-1 follow RootSystem::all_roots(), then the simple coroots h_i.
/// Signs follow the extraspecial-pair convention: N(alpha, beta) = +(p+1) on every extraspecial
/// pair, N(-a,-b) = -N(a,b), and [e_a, e_-a] = h_a.
class StructureConstants {
public:
    explicit StructureConstants(std::shared_ptr<const RootSystem> rs) : rs_(std::move(rs)) {
        roots_ = rs_->all_roots();
        npos_ = static_cast<int>(rs_->positive_roots().size());
        nroots_ = 2 * npos_;
        n_.assign(nroots_ * nroots_, 0);
        known_.assign(nroots_ * nroots_, false);
        build_positive_pairs();
        build_table();
    }

    explicit StructureConstants(const RootSystem& rs)
        : StructureConstants(std::make_shared<const RootSystem>(rs)) {}

    const RootSystem& root_system() const { return *rs_; }
    int dim() const { return nroots_ + rs_->rank(); }
    int root_count() const { return nroots_; }
    bool is_root_basis(int x) const { return x < nroots_; }
    const Root& root_of(int x) const { return roots_[x]; }
    int cartan_basis(Node i) const { return nroots_ + rs_->check(i); }

    int root_basis(const Root& r) const {
        auto idx = rs_->root_index(r);
        if (!idx)
            throw InternalMismatch("not a root: " + root_bracket(r));
        return *idx;
    }

    /// N(a, b) for root indices a, b: [e_a, e_b] = N e_{a+b}, or 0 when a+b is not a root.
    int n(int a, int b) const { return n_[a * nroots_ + b]; }

    const BasisCombination& bracket(int x, int y) const { return table_[x * dim() + y]; }

    std::string basis_label(int x) const {
        if (x < nroots_)
            return "e" + root_bracket(roots_[x]);
        return "h" + std::to_string(x - nroots_ + 1);
    }

    /// Length of the alpha-string through beta below beta: largest p with beta - p alpha a root.
    int string_depth(const Root& alpha, const Root& beta) const {
        int p = 0;
        Root cur = beta - alpha;
        while (rs_->is_root(cur)) {
            ++p;
            cur = cur - alpha;
        }
        return p;
    }

private:
    int idx(const Root& r) const {
        auto i = rs_->root_index(r);
        return i ? *i : -1;
    }

    void set(int a, int b, int v) {
        n_[a * nroots_ + b] = v;
        known_[a * nroots_ + b] = true;
    }

    /// Rotation rule N(r,s)/(t,t) = N(s,t)/(r,r) = N(t,r)/(s,s) for r+s+t = 0.
    int rotate(int num_len, int den_len, int value) const {
        const int v = num_len * value;
        if (v % den_len != 0)
            throw InternalMismatch("non-integral structure constant");
        return v / den_len;
    }

    /// N for an arbitrary pair, reduced to positive pairs already computed.
    int lookup(int a, int b) {
        if (known_[a * nroots_ + b])
            return n_[a * nroots_ + b];
        const Root& r = roots_[a];
        const Root& s = roots_[b];
        const int sum = idx(r + s);
        int v = 0;
        if (sum < 0) {
            v = 0;
        } else if (a < npos_ && b < npos_) {
            if (a < b)
                throw InternalMismatch("positive pair requested before its sum was processed");
            v = -lookup(b, a);
        } else if (a >= npos_ && b >= npos_) {
            v = -lookup(a - npos_, b - npos_);
        } else {
            const Root t = -(r + s);
            const int ti = idx(t);
            const int tl = rs_->length2(t), rl = rs_->length2(r), sl = rs_->length2(s);
            const bool r_pos = a < npos_;
            const bool t_pos = ti < npos_;
            if (r_pos == t_pos)
                v = rotate(tl, sl, lookup(ti, a)); // (t, r) share a sign
            else
                v = rotate(tl, rl, lookup(b, ti)); // (s, t) share a sign
        }
        set(a, b, v);
        return v;
    }

    void build_positive_pairs() {
        const auto& pos = rs_->positive_roots();
        for (int x = 0; x < npos_; ++x) {
            const Root& xi = pos[x];
            // Special pairs (g, d), g < d in the root order, g + d = xi.
            std::vector<std::pair<int, int>> special;
            for (int g = 0; g < x; ++g) {
                const int d = idx(xi - pos[g]);
                if (d > g && d < npos_)
                    special.emplace_back(g, d);
            }
            if (special.empty())
                continue;
            const auto [a, b] = special.front();
            const int nab = string_depth(pos[a], pos[b]) + 1;
            set(a, b, nab);
            const int xl = rs_->length2(xi);
            for (std::size_t k = 1; k < special.size(); ++k) {
                const auto [g, d] = special[k];
                const int ma = a + npos_, mb = b + npos_;
                int total_num = 0; // accumulated as a rational with common denominator
                int total_den = 1;
                auto add = [&](int num, int den) {
                    total_num = total_num * den + num * total_den;
                    total_den *= den;
                };
                const Root da = pos[d] - pos[a];
                if (rs_->is_root(da))
                    add(lookup(d, ma) * lookup(g, mb), rs_->length2(da));
                const Root ga = pos[g] - pos[a];
                if (rs_->is_root(ga))
                    add(lookup(ma, g) * lookup(d, mb), rs_->length2(ga));
                const int num = xl * total_num;
                const int den = nab * total_den;
                if (num % den != 0)
                    throw InternalMismatch("non-integral structure constant");
                set(g, d, num / den);
            }
        }
        for (int a = 0; a < nroots_; ++a)
            for (int b = 0; b < nroots_; ++b)
                lookup(a, b);
    }

    void build_table() {
        const int d = dim();
        const int l = rs_->rank();
        table_.assign(d * d, {});
        for (int a = 0; a < nroots_; ++a) {
            for (int b = 0; b < nroots_; ++b) {
                auto& out = table_[a * d + b];
                const Root s = roots_[a] + roots_[b];
                if (is_zero(s)) {
                    // [e_a, e_-a] = h_a in simple coroots.
                    const auto cc = rs_->coroot_coords(roots_[a]);
                    for (int i = 0; i < l; ++i)
                        if (cc[i] != 0)
                            out.emplace_back(nroots_ + i, static_cast<int>(to_int(cc[i])));
                } else if (n(a, b) != 0) {
                    out.emplace_back(root_basis(s), n(a, b));
                }
            }
            for (int i = 0; i < l; ++i) {
                const int c = rs_->coroot_pairing(roots_[a], i + 1);
                if (c != 0) {
                    table_[(nroots_ + i) * d + a].emplace_back(a, c);
                    table_[a * d + nroots_ + i].emplace_back(a, -c);
                }
            }
        }
    }

    std::shared_ptr<const RootSystem> rs_;
    std::vector<Root> roots_;
    int npos_ = 0;
    int nroots_ = 0;
    std::vector<int> n_;
    std::vector<bool> known_;
    std::vector<BasisCombination> table_;
};

inline StructureConstants chevalley_constants(std::shared_ptr<const RootSystem> rs) {
    return StructureConstants(std::move(rs));
}

inline StructureConstants chevalley_constants(const RootSystem& rs) { return StructureConstants(rs); }

/// [u, v] for dense integer coordinate vectors.
inline std::vector<long long> lie_bracket(const StructureConstants& sc, const std::vector<long long>& u,
                                          const std::vector<long long>& v) {
    std::vector<long long> out(sc.dim(), 0);
    for (int x = 0; x < sc.dim(); ++x) {
        if (u[x] == 0)
            continue;
        for (int y = 0; y < sc.dim(); ++y) {
            if (v[y] == 0)
                continue;
            for (const auto& [z, c] : sc.bracket(x, y))
                out[z] += u[x] * v[y] * c;
        }
    }
    return out;
}

} // namespace parabolic

#endif // PARABOLIC_CHEVALLEY_HPP
