#ifndef FANO8_POLY_HPP
#define FANO8_POLY_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fano8/matrix.hpp"
#include "fano8/subspace.hpp"

namespace fano8 {

// Exponent tuples of all degree-d monomials in n variables, lexicographic
// (exponent of the first variable decreasing first).
inline std::vector<std::vector<int>> monomial_exponents(std::size_t n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, 0);
    auto rec = [&](auto&& self, std::size_t var, int rem) -> void {
        if (var + 1 == n) {
            cur[var] = rem;
            out.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[var] = e;
            self(self, var + 1, rem - e);
        }
    };
    if (n == 0) throw std::invalid_argument("monomial_exponents: n must be positive");
    rec(rec, 0, d);
    return out;
}

inline std::string monomial_key(const std::vector<int>& exps) {
    std::string s;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(exps[i]);
    }
    return s;
}

// Dense homogeneous form of fixed degree in n variables.
template <class K>
class Form {
public:
    Form() : n_(0), d_(0) {}
    Form(std::size_t n, int d)
        : n_(n), d_(d), exps_(monomial_exponents(n, d)), c_(exps_.size()) {}

    std::size_t nvars() const { return n_; }
    int degree() const { return d_; }
    std::size_t terms() const { return c_.size(); }
    const std::vector<std::vector<int>>& exponents() const { return exps_; }

    K& coeff(std::size_t i) { return c_[i]; }
    const K& coeff(std::size_t i) const { return c_[i]; }
    const std::vector<K>& coeffs() const { return c_; }
    void set_coeffs(std::vector<K> c) {
        if (c.size() != c_.size()) throw std::invalid_argument("Form: coefficient count mismatch");
        c_ = std::move(c);
    }

    std::size_t index_of(const std::vector<int>& e) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] == e) return i;
        throw std::invalid_argument("Form: bad exponent tuple");
    }

    K eval(const std::vector<K>& x) const {
        if (x.size() != n_) throw std::invalid_argument("Form: eval arity mismatch");
        K acc;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (is_zero(c_[i])) continue;
            K term = c_[i];
            for (std::size_t v = 0; v < n_; ++v)
                for (int e = 0; e < exps_[i][v]; ++e) term *= x[v];
            acc += term;
        }
        return acc;
    }

    bool is_zero_form() const {
        for (const K& x : c_)
            if (!is_zero(x)) return false;
        return true;
    }

    friend Form operator*(const Form& a, const Form& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("Form: arity mismatch");
        Form r(a.n_, a.d_ + b.d_);
        std::map<std::vector<int>, std::size_t> idx;
        for (std::size_t i = 0; i < r.exps_.size(); ++i) idx[r.exps_[i]] = i;
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (is_zero(b.c_[j])) continue;
                std::vector<int> e(a.n_);
                for (std::size_t v = 0; v < a.n_; ++v) e[v] = a.exps_[i][v] + b.exps_[j][v];
                r.c_[idx[e]] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    friend Form operator+(const Form& a, const Form& b) {
        if (a.n_ != b.n_ || a.d_ != b.d_) throw std::invalid_argument("Form: shape mismatch");
        Form r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }

    Form scaled(const K& s) const {
        Form r = *this;
        for (K& x : r.c_) x *= s;
        return r;
    }

    // partial derivative as a form of degree d-1
    Form derivative(std::size_t var) const {
        Form r(n_, d_ - 1);
        std::map<std::vector<int>, std::size_t> idx;
        for (std::size_t i = 0; i < r.exps_.size(); ++i) idx[r.exps_[i]] = i;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (exps_[i][var] == 0 || is_zero(c_[i])) continue;
            std::vector<int> e = exps_[i];
            K coeff = c_[i];
            coeff *= k_int(e[var], coeff);
            --e[var];
            r.c_[idx[e]] += coeff;
        }
        return r;
    }

    std::vector<K> gradient_at(const std::vector<K>& x) const {
        std::vector<K> g(n_);
        for (std::size_t v = 0; v < n_; ++v) g[v] = derivative(v).eval(x);
        return g;
    }

    // substitute x_i = sum_j B(i,j) y_j; result is a form in B.cols() variables
    Form pullback(const Matrix<K>& b) const {
        if (b.rows() != n_) throw std::invalid_argument("Form: pullback shape mismatch");
        const std::size_t m = b.cols();
        // linear forms for each variable
        std::vector<Form> lin(n_, Form(m, 1));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < m; ++j) lin[i].c_[j] = b.at(i, j);
        Form r(m, d_);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (is_zero(c_[i])) continue;
            Form term(m, 0);
            term.c_[0] = c_[i];
            for (std::size_t v = 0; v < n_; ++v)
                for (int e = 0; e < exps_[i][v]; ++e) term = term * lin[v];
            r = r + term;
        }
        return r;
    }

    // exact proportionality test; zero forms are proportional only to zero
    friend bool proportional(const Form& a, const Form& b) {
        if (a.n_ != b.n_ || a.d_ != b.d_) return false;
        if (b.is_zero_form()) return a.is_zero_form();
        std::size_t lead = 0;
        while (is_zero(b.c_[lead])) ++lead;
        if (is_zero(a.c_[lead])) return false;
        const K lambda = a.c_[lead] / b.c_[lead];
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == lambda * b.c_[i])) return false;
        return true;
    }

private:
    std::size_t n_;
    int d_;
    std::vector<std::vector<int>> exps_;
    std::vector<K> c_;
};

// Canonical basis of the space of degree-d forms vanishing on all given
// projective points: the kernel of the evaluation matrix, echelonized.
template <class K>
std::vector<Form<K>> interpolate_forms(const std::vector<std::vector<K>>& points,
                                       std::size_t n, int d) {
    Form<K> probe(n, d);
    Matrix<K> ev(points.size(), probe.terms());
    for (std::size_t r = 0; r < points.size(); ++r) {
        if (points[r].size() != n) throw std::invalid_argument("interpolate_forms: arity mismatch");
        K one{};
        for (const K& x : points[r])
            if (has_field_info(x)) { one = k_int(1, x); break; }
        if (!has_field_info(one)) throw std::invalid_argument("interpolate_forms: zero point");
        for (std::size_t i = 0; i < probe.terms(); ++i) {
            K term = one;
            for (std::size_t v = 0; v < n; ++v)
                for (int e = 0; e < probe.exponents()[i][v]; ++e) term *= points[r][v];
            ev.at(r, i) = term;
        }
    }
    Matrix<K> ker = kernel(ev);
    std::vector<Form<K>> out;
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        Form<K> f(n, d);
        f.set_coeffs(ker.row(r));
        out.push_back(std::move(f));
    }
    return out;
}

// ---- univariate / binary-form helpers --------------------------------

// univariate polynomial, dense ascending coefficients; trailing zeros trimmed
template <class K>
std::vector<K> poly_trim(std::vector<K> a) {
    while (!a.empty() && is_zero(a.back())) a.pop_back();
    return a;
}

template <class K>
std::vector<K> poly_rem(std::vector<K> a, const std::vector<K>& b) {
    a = poly_trim(std::move(a));
    if (b.empty()) throw std::domain_error("poly_rem: division by zero polynomial");
    while (a.size() >= b.size()) {
        const K f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a = poly_trim(std::move(a));
    }
    return a;
}

// monic gcd; empty vector means both inputs were zero
template <class K>
std::vector<K> poly_gcd(std::vector<K> a, std::vector<K> b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        std::vector<K> r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const K iv = inv(a.back());
        for (K& x : a) x *= iv;
    }
    return a;
}

// Whether a family of binary forms (coefficients ascending in the
// dehomogenizing variable) has a common projective root over the algebraic
// closure: gcd of the dehomogenizations is nonconstant, or all forms
// vanish at the point at infinity.
template <class K>
bool binary_forms_have_common_root(const std::vector<std::vector<K>>& forms) {
    bool all_zero = true;
    bool all_vanish_at_infinity = true;
    std::vector<K> g;  // gcd of F(s,1)
    bool have_g = false;
    for (const auto& f : forms) {
        std::vector<K> u = poly_trim(f);
        if (!u.empty()) all_zero = false;
        if (!f.empty() && !is_zero(f.back())) all_vanish_at_infinity = false;
        if (u.empty()) continue;
        g = have_g ? poly_gcd(g, u) : u;
        have_g = true;
    }
    if (all_zero) return true;
    if (all_vanish_at_infinity) return true;
    return g.size() > 1;
}

}  // namespace fano8

#endif
