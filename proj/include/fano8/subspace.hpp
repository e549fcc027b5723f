#ifndef FANO8_SUBSPACE_HPP
#define FANO8_SUBSPACE_HPP

#include <stdexcept>
#include <vector>

#include "fano8/matrix.hpp"

namespace fano8 {

// Linear subspace of a coordinate n-space, stored as a canonical reduced
// row-echelon basis. Two values are equal as subspaces iff their stored
// bases are identical entry-wise. Each subspace carries a unit of its
// field so that derived constructions (annihilators of the zero subspace,
// identity bases) stay inside the right field.
template <class K>
class Subspace {
public:
    Subspace() : ambient_(0) { one_ = safe_one(K{}); }

    static Subspace from_span(const Matrix<K>& spanning_rows) {
        Subspace s;
        s.ambient_ = spanning_rows.cols();
        s.basis_ = echelon(spanning_rows).rref;
        s.one_ = scan_one(spanning_rows);
        return s;
    }
    static Subspace from_span(const std::vector<std::vector<K>>& rows, std::size_t ambient) {
        return from_span(Matrix<K>::from_rows(rows, ambient));
    }
    static Subspace zero(std::size_t ambient, const K& one) {
        Subspace s;
        s.ambient_ = ambient;
        s.basis_ = Matrix<K>(0, ambient);
        s.one_ = one;
        return s;
    }
    static Subspace full(std::size_t ambient, const K& one) {
        Subspace s;
        s.ambient_ = ambient;
        s.basis_ = Matrix<K>::identity(ambient, one);
        s.one_ = one;
        return s;
    }
    // basis already in canonical echelon form (e.g. a kernel)
    static Subspace from_echelon(Matrix<K> b) {
        Subspace s;
        s.ambient_ = b.cols();
        s.one_ = scan_one(b);
        s.basis_ = std::move(b);
        return s;
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix<K>& basis() const { return basis_; }
    std::vector<K> basis_vector(std::size_t i) const { return basis_.row(i); }
    const K& one() const { return one_; }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    // reduce v by the echelon basis; zero remainder means membership
    bool contains(const std::vector<K>& v) const {
        if (v.size() != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
        std::vector<K> r = v;
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            std::size_t pc = pivot_col(i);
            if (is_zero(r[pc])) continue;
            const K f = r[pc];
            for (std::size_t j = 0; j < ambient_; ++j) r[j] -= f * basis_.at(i, j);
        }
        for (const K& x : r)
            if (!is_zero(x)) return false;
        return true;
    }

    bool contains(const Subspace& other) const {
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_vector(i))) return false;
        return true;
    }

    friend Subspace sum(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
        Subspace s = from_span(Matrix<K>::vstack(a.basis_, b.basis_));
        s.one_ = safe_one(a.one_, b.one_);
        return s;
    }

    // Under the dual pairing (standard dot product of coordinates):
    // inclusion-reversing involution.
    Subspace annihilator() const {
        Subspace s;
        s.ambient_ = ambient_;
        s.one_ = one_;
        if (dim() == 0) {
            s.basis_ = Matrix<K>::identity(ambient_, one_);
        } else {
            s.basis_ = kernel(basis_);
        }
        return s;
    }

    friend Subspace intersect(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
        // a cap b = ann(ann(a) + ann(b))
        return sum(a.annihilator(), b.annihilator()).annihilator();
    }

    // image under the linear map with matrix m (vectors as columns)
    Subspace map(const Matrix<K>& m) const {
        if (m.cols() != ambient_) throw std::invalid_argument("Subspace: map shape mismatch");
        Subspace s = from_span(basis_ * m.transpose());
        s.one_ = one_;
        return s;
    }

private:
    std::size_t pivot_col(std::size_t i) const {
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!is_zero(basis_.at(i, j))) return j;
        throw std::logic_error("Subspace: zero row in basis");
    }
    static K scan_one(const Matrix<K>& m) {
        for (const K& x : m.data())
            if (has_field_info(x)) return k_int(1, x);
        return safe_one(K{});
    }
    static K safe_one(const K& like) {
        if (has_field_info(like)) return k_int(1, like);
        return K{};  // field unknown; only valid for spaces never queried
    }
    static K safe_one(const K& a, const K& b) {
        if (has_field_info(a)) return a;
        return safe_one(b);
    }

    std::size_t ambient_;
    Matrix<K> basis_;
    K one_;
};

}  // namespace fano8

#endif
