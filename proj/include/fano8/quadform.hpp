#ifndef FANO8_QUADFORM_HPP
#define FANO8_QUADFORM_HPP

#include <stdexcept>

#include "fano8/matrix.hpp"
#include "fano8/poly.hpp"
#include "fano8/subspace.hpp"

namespace fano8 {

// Quadratic form via its symmetric Gram matrix (char != 2 guaranteed by
// the scalar layer).
template <class K>
class QuadForm {
public:
    QuadForm() = default;
    explicit QuadForm(Matrix<K> gram) : g_(std::move(gram)) {
        if (g_.rows() != g_.cols()) throw std::invalid_argument("QuadForm: Gram not square");
        if (g_ != g_.transpose()) throw std::invalid_argument("QuadForm: Gram not symmetric");
    }

    // from a degree-2 form: G_ii = c(x_i^2), G_ij = c(x_i x_j)/2
    static QuadForm from_form(const Form<K>& f) {
        if (f.degree() != 2) throw std::invalid_argument("QuadForm: degree must be 2");
        const std::size_t n = f.nvars();
        Matrix<K> g(n, n);
        for (std::size_t idx = 0; idx < f.terms(); ++idx) {
            const auto& e = f.exponents()[idx];
            const K& c = f.coeff(idx);
            if (is_zero(c)) continue;
            std::size_t i = n, j = n;
            for (std::size_t v = 0; v < n; ++v) {
                if (e[v] == 2) { i = j = v; break; }
                if (e[v] == 1) { (i == n ? i : j) = v; }
            }
            if (i == j) {
                g.at(i, i) = c;
            } else {
                const K half = c / k_int(2, c);
                g.at(i, j) = half;
                g.at(j, i) = half;
            }
        }
        return QuadForm(std::move(g));
    }

    std::size_t dim() const { return g_.rows(); }
    const Matrix<K>& gram() const { return g_; }

    std::size_t rank() const { return fano8::rank(g_); }

    K eval(const std::vector<K>& x) const {
        if (x.size() != dim()) throw std::invalid_argument("QuadForm: eval arity mismatch");
        K acc;
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j) acc += x[i] * g_.at(i, j) * x[j];
        return acc;
    }

    Form<K> as_form() const {
        Form<K> f(dim(), 2);
        for (std::size_t i = 0; i < dim(); ++i) {
            for (std::size_t j = i; j < dim(); ++j) {
                std::vector<int> e(dim(), 0);
                e[i] += 1; e[j] += 1;
                K c = g_.at(i, j);
                if (i != j) c += g_.at(j, i);
                f.coeff(f.index_of(e)) = c;
            }
        }
        return f;
    }

    // restriction to a subspace: Gram = B G B^T for the subspace's
    // echelon basis rows B
    QuadForm restrict_to(const Subspace<K>& s) const {
        if (s.ambient() != dim()) throw std::invalid_argument("QuadForm: restriction ambient mismatch");
        const Matrix<K> b = s.basis();
        return QuadForm(b * g_ * b.transpose());
    }

private:
    Matrix<K> g_;
};

}  // namespace fano8

#endif
