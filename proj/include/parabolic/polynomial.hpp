#ifndef PARABOLIC_POLYNOMIAL_HPP
#define PARABOLIC_POLYNOMIAL_HPP

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "parabolic/rational.hpp"

namespace parabolic {

/// Exponent vector of a monomial.
using Monomial = std::vector<int>;

inline int degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

/// Sparse multivariate polynomial over the rationals, truncated above a total degree.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational>;

    Polynomial() = default;
    Polynomial(int nvars, int max_degree) : nvars_(nvars), max_degree_(max_degree) {}

    static Polynomial constant(int nvars, int max_degree, const Rational& c) {
        Polynomial p(nvars, max_degree);
        p.add_term(Monomial(nvars, 0), c);
        return p;
    }

    static Polynomial variable(int nvars, int max_degree, int v) {
        Polynomial p(nvars, max_degree);
        Monomial m(nvars, 0);
        m[v] = 1;
        p.add_term(m, 1);
        return p;
    }

    int nvars() const { return nvars_; }
    int max_degree() const { return max_degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0 || degree(m) > max_degree_)
            return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    /// Lowest total degree of a nonzero term, or -1 for the zero polynomial.
    int order() const {
        int k = -1;
        for (const auto& [m, c] : terms_)
            if (k < 0 || degree(m) < k)
                k = degree(m);
        return k;
    }

    int total_degree() const {
        int k = -1;
        for (const auto& [m, c] : terms_)
            k = std::max(k, degree(m));
        return k;
    }

    Polynomial truncated(int k) const {
        Polynomial p(nvars_, k);
        for (const auto& [m, c] : terms_)
            p.add_term(m, c);
        return p;
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }

    Polynomial& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_)
            c *= s;
        return *this;
    }

    /// Multiplication by the variable x_v.
    Polynomial times_variable(int v) const {
        Polynomial p(nvars_, max_degree_);
        for (const auto& [m, c] : terms_) {
            Monomial n = m;
            ++n[v];
            p.add_term(n, c);
        }
        return p;
    }

    Polynomial derivative(int v) const {
        Polynomial p(nvars_, max_degree_);
        for (const auto& [m, c] : terms_) {
            if (m[v] == 0)
                continue;
            Monomial n = m;
            --n[v];
            p.add_term(n, c * m[v]);
        }
        return p;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial p(a.nvars_, std::min(a.max_degree_, b.max_degree_));
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (int i = 0; i < a.nvars_; ++i)
                    m[i] += mb[i];
                p.add_term(m, ca * cb);
            }
        return p;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty())
            return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            std::string mono;
            for (int i = 0; i < nvars_; ++i) {
                if (m[i] == 0)
                    continue;
                mono += (mono.empty() ? "" : "*") + names[i];
                if (m[i] > 1)
                    mono += "^" + std::to_string(m[i]);
            }
            std::string coeff = to_string(c);
            if (!s.empty())
                s += c < 0 ? " - " : " + ";
            else if (c < 0)
                s += "-";
            if (c < 0)
                coeff = to_string(-c);
            if (mono.empty())
                s += coeff;
            else
                s += (coeff == "1" ? "" : coeff + "*") + mono;
        }
        return s;
    }

private:
    int nvars_ = 0;
    int max_degree_ = 0;
    Terms terms_;
};

/// Coefficients B_n^+ / n! of z / (1 - e^{-z}) up to z^n.
inline std::vector<Rational> todd_coefficients(int n) {
    // B_0 = 1, sum_{k<m} C(m+1,k) B_k = -(m+1) B_m, with B_1 = -1/2; the series uses B_1 = +1/2.
    std::vector<Rational> b(n + 1);
    b[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rational s = 0;
        Integer binom = 1; // C(m+1, k)
        for (int k = 0; k < m; ++k) {
            s += Rational(binom) * b[k];
            binom = binom * (m + 1 - k) / (k + 1);
        }
        b[m] = -s / (m + 1);
    }
    std::vector<Rational> out(n + 1);
    Integer fact = 1;
    for (int m = 0; m <= n; ++m) {
        if (m > 0)
            fact *= m;
        out[m] = (m == 1 ? -b[1] : b[m]) / Rational(fact);
    }
    return out;
}

} // namespace parabolic

#endif // PARABOLIC_POLYNOMIAL_HPP
