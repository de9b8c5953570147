#ifndef PARABOLIC_FLATJETS_HPP
#define PARABOLIC_FLATJETS_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "parabolic/chevalley.hpp"
#include "parabolic/grading.hpp"
#include "parabolic/polynomial.hpp"

namespace parabolic {

struct ChartLimits {
    int max_chart_dim = 20;
    int max_order = 3;
};

/// Element of g as exact coordinates in the Chevalley basis.
using LieVector = std::vector<Rational>;

/// Polynomial vector field on the g_- chart: components[a] is the coefficient of d/dx_a.
struct FormalField {
    std::vector<std::string> variables;
    std::vector<Polynomial> components;
    int truncation = 0;

    /// Lowest order of a nonvanishing Taylor coefficient at the origin, or -1 if zero.
    int order() const {
        int k = -1;
        for (const auto& p : components) {
            const int o = p.order();
            if (o >= 0 && (k < 0 || o < k))
                k = o;
        }
        return k;
    }

    int degree() const {
        int k = -1;
        for (const auto& p : components)
            k = std::max(k, p.total_degree());
        return k;
    }

    bool is_zero() const {
        for (const auto& p : components)
            if (!p.is_zero())
                return false;
        return true;
    }

    friend bool operator==(const FormalField& a, const FormalField& b) { return a.components == b.components; }
};

/// Lie bracket of truncated fields; exact up to order min(truncation) - 1.
inline FormalField field_bracket(const FormalField& u, const FormalField& v) {
    const int n = static_cast<int>(u.components.size());
    FormalField out;
    out.variables = u.variables;
    out.truncation = std::min(u.truncation, v.truncation) - 1;
    for (int b = 0; b < n; ++b) {
        Polynomial p(n, out.truncation);
        for (int a = 0; a < n; ++a) {
            p += u.components[a] * v.components[b].derivative(a);
            p -= v.components[a] * u.components[b].derivative(a);
        }
        out.components.push_back(p.truncated(out.truncation));
    }
    return out;
}

inline FormalField truncate(const FormalField& f, int k) {
    FormalField out{f.variables, {}, k};
    for (const auto& p : f.components)
        out.components.push_back(p.truncated(k));
    return out;
}

/// Flat model G/P in exponential coordinates of the first kind on g_-.
class FlatChart {
public:
    FlatChart(const ParabolicGrading& pg, ChartLimits limits = {})
        : pg_(pg), sc_(pg.root_system_ptr()), limits_(limits) {
        for (int x = 0; x < sc_.root_count(); ++x) {
            if (pg.z_degree(sc_.root_of(x)) < 0) {
                var_of_[x] = static_cast<int>(chart_.size());
                chart_.push_back(x);
            }
        }
        if (static_cast<int>(chart_.size()) > limits_.max_chart_dim)
            throw ChartTooLarge("chart dimension " + std::to_string(chart_.size()) + " exceeds " +
                                std::to_string(limits_.max_chart_dim));
        for (int x : chart_)
            names_.push_back("x" + root_digits(-sc_.root_of(x)));
    }

    const ParabolicGrading& grading() const { return pg_; }
    const StructureConstants& constants() const { return sc_; }
    int dim() const { return sc_.dim(); }
    int chart_dim() const { return static_cast<int>(chart_.size()); }
    const std::vector<int>& chart_basis() const { return chart_; }
    const std::vector<std::string>& variables() const { return names_; }

    /// Grade of a basis element of g.
    int grade_of(int x) const { return sc_.is_root_basis(x) ? pg_.z_degree(sc_.root_of(x)) : 0; }

    LieVector unit(int x) const {
        LieVector v(dim(), 0);
        v[x] = 1;
        return v;
    }

    /// Field induced by X through the left action on G/P, Taylor-expanded to order K at the origin:
    /// psi(ad x) pr_-(exp(-ad x) X) with psi(z) = z / (1 - e^{-z}).
    FormalField field(const LieVector& X, int K) const {
        if (K < 1)
            throw TruncationTooLow("truncation order must be at least 1");
        if (K > limits_.max_order)
            throw ChartTooLarge("truncation order " + std::to_string(K) + " exceeds " +
                                std::to_string(limits_.max_order));
        const int n = chart_dim();
        std::vector<Polynomial> term(dim(), Polynomial(n, K));
        for (int x = 0; x < dim(); ++x)
            if (X[x] != 0)
                term[x] = Polynomial::constant(n, K, X[x]);
        std::vector<Polynomial> pulled = term;
        for (int k = 1; k <= K; ++k) {
            term = ad_x(term);
            for (auto& p : term)
                p *= Rational(-1, k);
            for (int x = 0; x < dim(); ++x)
                pulled[x] += term[x];
        }
        std::vector<Polynomial> minus(dim(), Polynomial(n, K));
        for (int x : chart_)
            minus[x] = pulled[x];
        const auto c = todd_coefficients(K);
        std::vector<Polynomial> result = minus;
        term = minus;
        for (int k = 1; k <= K; ++k) {
            term = ad_x(term);
            for (int x : chart_) {
                Polynomial t = term[x];
                t *= c[k];
                result[x] += t;
            }
        }
        FormalField f{names_, {}, K};
        for (int x : chart_)
            f.components.push_back(result[x]);
        return f;
    }

    FormalField field(int basis, int K) const { return field(unit(basis), K); }

private:
    /// (ad x) applied to a g-valued polynomial, x = sum_a x_a f_a.
    std::vector<Polynomial> ad_x(const std::vector<Polynomial>& v) const {
        const int n = chart_dim();
        const int K = v.empty() ? 0 : v.front().max_degree();
        std::vector<Polynomial> out(dim(), Polynomial(n, K));
        for (int a = 0; a < n; ++a) {
            for (int y = 0; y < dim(); ++y) {
                if (v[y].is_zero())
                    continue;
                const auto& br = sc_.bracket(chart_[a], y);
                if (br.empty())
                    continue;
                const Polynomial xv = v[y].times_variable(a);
                for (const auto& [z, coeff] : br) {
                    Polynomial t = xv;
                    t *= coeff;
                    out[z] += t;
                }
            }
        }
        return out;
    }

    ParabolicGrading pg_;
    StructureConstants sc_;
    ChartLimits limits_;
    std::vector<int> chart_;
    std::map<int, int> var_of_;
    std::vector<std::string> names_;
};

inline FormalField flat_field_jet(const FlatChart& chart, const LieVector& X, int K) { return chart.field(X, K); }

/// Rank of a dense rational matrix by Gaussian elimination over Q.
inline int matrix_rank(std::vector<std::vector<Rational>> m) {
    int rank = 0;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(m[piv], m[rank]);
        for (int r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0)
                continue;
            const Rational f = m[r][c] / m[rank][c];
            for (int k = c; k < cols; ++k)
                m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

struct JetFiltration {
    int sym_dim = 0;
    std::vector<int> kernel_dims; // dim {X : j^k_o(X) = 0}, k = 0..K

    bool operator==(const JetFiltration&) const = default;
};

/// Kernel dimensions of the jet maps X -> j^k_o(X), k = 0..K, by exact rank computation.
inline JetFiltration jet_filtration(const FlatChart& chart, int K = 2) {
    std::vector<FormalField> fields;
    for (int x = 0; x < chart.dim(); ++x)
        fields.push_back(chart.field(x, K + 1));
    JetFiltration jf;
    jf.sym_dim = chart.dim();
    for (int k = 0; k <= K; ++k) {
        // Columns: (component, monomial) pairs of degree <= k appearing in any field.
        std::map<std::pair<int, Monomial>, int> column;
        for (const auto& f : fields)
            for (std::size_t a = 0; a < f.components.size(); ++a)
                for (const auto& [m, c] : f.components[a].terms())
                    if (degree(m) <= k)
                        column.emplace(std::make_pair(static_cast<int>(a), m), 0);
        int next = 0;
        for (auto& [key, idx] : column)
            idx = next++;
        std::vector<std::vector<Rational>> mat(fields.size(), std::vector<Rational>(next, 0));
        for (std::size_t x = 0; x < fields.size(); ++x)
            for (std::size_t a = 0; a < fields[x].components.size(); ++a)
                for (const auto& [m, c] : fields[x].components[a].terms())
                    if (degree(m) <= k)
                        mat[x][column.at({static_cast<int>(a), m})] = c;
        jf.kernel_dims.push_back(jf.sym_dim - matrix_rank(std::move(mat)));
    }
    return jf;
}

inline JetFiltration jet_filtration(const ParabolicGrading& pg, int K = 2) {
    return jet_filtration(FlatChart(pg, {20, K + 1}), K);
}

/// For X = e_alpha in g_i with 0 < i < nu: some e_{-beta} in g_{-i-1} has [X, e_{-beta}] a nonzero
/// element of g_{-1}.
inline bool ss_bracket_holds(const StructureConstants& sc, const ParabolicGrading& pg, int x) {
    const int i = pg.z_degree(sc.root_of(x));
    for (int y = 0; y < sc.root_count(); ++y) {
        if (pg.z_degree(sc.root_of(y)) != -i - 1)
            continue;
        for (const auto& [z, c] : sc.bracket(x, y))
            if (c != 0 && sc.is_root_basis(z) && pg.z_degree(sc.root_of(z)) == -1)
                return true;
    }
    return false;
}

} // namespace parabolic

#endif // PARABOLIC_FLATJETS_HPP
