#ifndef FANO8_PENCIL_HPP
#define FANO8_PENCIL_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "fano8/exterior.hpp"
#include "fano8/poly.hpp"
#include "fano8/quadform.hpp"

namespace fano8 {

// A pencil (projective line) of two-tensors: a 2-dim subspace of
// Lambda^2(6-space) with two stored generators.
template <class K>
struct Pencil {
    TwoTensor<K> w0, w1;
    Subspace<K> span;

    static Pencil from_generators(const TwoTensor<K>& a, const TwoTensor<K>& b) {
        if (a.side != b.side) throw std::invalid_argument("Pencil: side mismatch");
        Pencil p;
        p.w0 = a;
        p.w1 = b;
        p.span = Subspace<K>::from_span({a.coords(), b.coords()}, 15);
        if (p.span.dim() != 2) throw std::invalid_argument("Pencil: generators dependent");
        return p;
    }

    Side side() const { return w0.side; }

    // member at parameter [s:t]
    TwoTensor<K> at(const K& s, const K& t) const {
        return w0.scaled(s) + w1.scaled(t);
    }
};

namespace detail {
template <class K>
void check_six_independent(const std::vector<std::vector<K>>& basis) {
    if (basis.size() != 6) throw std::invalid_argument("pencil: 6 basis vectors required");
    Matrix<K> m = Matrix<K>::from_rows(basis, 6);
    if (rank(m) != 6) throw std::invalid_argument("pencil: basis vectors dependent");
}

// f_i of the dual basis to the given basis of V: rows of B^-1
template <class K>
std::vector<std::vector<K>> dual_basis(const std::vector<std::vector<K>>& basis) {
    Matrix<K> b(6, 6);
    for (int col = 0; col < 6; ++col)
        for (int row = 0; row < 6; ++row) b.at(row, col) = basis[col][row];
    const Matrix<K> bi = inverse(b);
    std::vector<std::vector<K>> out(6);
    for (int i = 0; i < 6; ++i) out[i] = bi.row(i);
    return out;
}
}  // namespace detail

// A-line normal form <f0^f2 + f1^f3, f0^f4 + f1^f5> in the dual of the
// given basis of V.
template <class K>
Pencil<K> make_a_line(const std::vector<std::vector<K>>& basis, Side side = Side::VDual) {
    detail::check_six_independent(basis);
    const auto f = detail::dual_basis(basis);
    return Pencil<K>::from_generators(wedge2(f[0], f[2], side) + wedge2(f[1], f[3], side),
                                      wedge2(f[0], f[4], side) + wedge2(f[1], f[5], side));
}

// B-line normal form <f0^f2 + f1^f3, f0^f3 + f1^f4>; only five independent
// vectors matter. A sixth completes the basis (chosen automatically when
// five are given).
template <class K>
Pencil<K> make_b_line(std::vector<std::vector<K>> basis, Side side = Side::VDual) {
    if (basis.size() == 5) {
        Subspace<K> span5 = Subspace<K>::from_span(basis, 6);
        if (span5.dim() != 5) throw std::invalid_argument("make_b_line: vectors dependent");
        const K one = k_int(1, span5.one());
        for (int j = 0; j < 6; ++j) {
            std::vector<K> ej(6);
            ej[j] = one;
            if (!span5.contains(ej)) { basis.push_back(ej); break; }
        }
    }
    detail::check_six_independent(basis);
    const auto f = detail::dual_basis(basis);
    return Pencil<K>::from_generators(wedge2(f[0], f[2], side) + wedge2(f[1], f[3], side),
                                      wedge2(f[0], f[3], side) + wedge2(f[1], f[4], side));
}

// the standard basis of the 6-space over the given field
template <class K>
std::vector<std::vector<K>> standard_basis(const K& one) {
    std::vector<std::vector<K>> b(6, std::vector<K>(6));
    for (int i = 0; i < 6; ++i) b[i][i] = one;
    return b;
}

// The 15 coordinates of (s w0 + t w1)^2 as binary quadrics in (s,t):
// c0 s^2 + c1 s t + c2 t^2 per coordinate.
template <class K>
std::vector<std::vector<K>> square_quadrics(const Pencil<K>& l) {
    const FourTensor<K> q00 = wedge22(l.w0, l.w0);
    const FourTensor<K> q01 = wedge22(l.w0, l.w1);
    const FourTensor<K> q11 = wedge22(l.w1, l.w1);
    const K two = k_int(2, l.span.one());
    std::vector<std::vector<K>> out(15);
    for (std::size_t i = 0; i < 15; ++i)
        out[i] = {q00.c[i], two * q01.c[i], q11.c[i]};
    return out;
}

// Constant rank four: the Pfaffian cubic of the pencil vanishes
// identically (all four coefficients, including at infinity) and the 15
// member-square quadrics have no common projective root.
template <class K>
bool constant_rank4(const Pencil<K>& l) {
    // coefficients of (s,t) -> triple_wedge(s w0 + t w1), a binary cubic,
    // via the symmetric trilinear form on generator triples
    const K one = l.span.one();
    const K c0 = triple_wedge(l.w0);
    const K c3 = triple_wedge(l.w1);
    const K c1 = pair_42(wedge22(l.w0, l.w0), l.w1) * k_int(3, one);
    const K c2 = pair_42(wedge22(l.w1, l.w1), l.w0) * k_int(3, one);
    if (!(is_zero(c0) && is_zero(c1) && is_zero(c2) && is_zero(c3))) return false;
    return !binary_forms_have_common_root(square_quadrics(l));
}

enum class PencilTag { A, B, meets_grassmannian, other };

inline const char* to_string(PencilTag t) {
    switch (t) {
        case PencilTag::A: return "A";
        case PencilTag::B: return "B";
        case PencilTag::meets_grassmannian: return "meets_grassmannian";
        case PencilTag::other: return "other";
    }
    return "?";
}

template <class K>
struct PencilClass {
    PencilTag tag;
    std::size_t quadric_rank = 0;              // for A/B
    std::optional<std::vector<K>> witness;     // common kernel point, for B
};

// coordinates of v in the echelon basis of s (v must lie in s)
template <class K>
std::vector<K> coordinates_in(const Subspace<K>& s, const std::vector<K>& v) {
    if (!s.contains(v)) throw std::invalid_argument("coordinates_in: vector outside subspace");
    std::vector<K> r = v;
    std::vector<K> coords(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
        std::size_t pc = 0;
        while (is_zero(s.basis().at(i, pc))) ++pc;
        coords[i] = r[pc];
        if (!is_zero(r[pc])) {
            const K f = r[pc];
            for (std::size_t j = 0; j < s.ambient(); ++j) r[j] -= f * s.basis().at(i, j);
        }
    }
    return coords;
}

template <class K>
struct KernelQuadric {
    Subspace<K> span;   // 4-dim subspace of the kernel side (the P^3 of the line)
    QuadForm<K> q;      // quadric in the span's internal coordinates
    std::size_t rank;
};

// Union of the member kernels: sample kernels at six parameter values,
// span them (must be 4-dim), and interpolate the unique quadric through
// the sampled kernel points inside the span.
template <class K>
KernelQuadric<K> kernel_quadric(const Pencil<K>& l) {
    if (!constant_rank4(l)) throw std::invalid_argument("kernel_quadric: pencil not of constant rank 4");
    const K one = k_int(1, l.span.one());
    std::vector<std::vector<K>> points;  // kernel points in V (or V*) coords
    auto add_kernel = [&](const TwoTensor<K>& w) {
        Subspace<K> ker = form_kernel(w);
        if (ker.dim() != 2) throw std::logic_error("kernel_quadric: member kernel dim != 2");
        points.push_back(ker.basis_vector(0));
        points.push_back(ker.basis_vector(1));
        // a quadric vanishes on the whole kernel line iff it vanishes at
        // three of its points, so add the basis sum as well
        std::vector<K> mix = ker.basis_vector(0);
        const std::vector<K> b1 = ker.basis_vector(1);
        for (std::size_t t = 0; t < mix.size(); ++t) mix[t] += b1[t];
        points.push_back(mix);
    };
    // t in {0,1,2,3,4} plus infinity; for p >= 5 these are six distinct
    // parameters (mod p they stay distinct since p >= 5 gives 0..4 distinct)
    for (int t = 0; t <= 4; ++t) add_kernel(l.at(one, k_int(t, one)));
    add_kernel(l.w1);
    Subspace<K> span = Subspace<K>::from_span(points, 6);
    if (span.dim() != 4) throw std::logic_error("kernel_quadric: kernel span dimension != 4");
    // internal coordinates of the sampled points inside the span
    std::vector<std::vector<K>> internal;
    for (const auto& p : points) internal.push_back(coordinates_in(span, p));
    auto forms = interpolate_forms(internal, 4, 2);
    if (forms.size() != 1) throw std::logic_error("kernel_quadric: quadric interpolation not 1-dim");
    KernelQuadric<K> out;
    out.span = span;
    out.q = QuadForm<K>::from_form(forms[0]);
    out.rank = out.q.rank();
    return out;
}

// The A/B dichotomy. B is cross-checked against the common-kernel
// criterion; disagreement is an internal error.
template <class K>
PencilClass<K> classify_pencil(const Pencil<K>& l) {
    PencilClass<K> out;
    const K c0 = triple_wedge(l.w0);
    const K c3 = triple_wedge(l.w1);
    const K one = k_int(1, l.span.one());
    const K c1 = pair_42(wedge22(l.w0, l.w0), l.w1) * k_int(3, one);
    const K c2 = pair_42(wedge22(l.w1, l.w1), l.w0) * k_int(3, one);
    const bool cubic_vanishes = is_zero(c0) && is_zero(c1) && is_zero(c2) && is_zero(c3);
    if (!cubic_vanishes) {
        out.tag = PencilTag::other;
        return out;
    }
    if (binary_forms_have_common_root(square_quadrics(l))) {
        out.tag = PencilTag::meets_grassmannian;
        return out;
    }
    const KernelQuadric<K> kq = kernel_quadric(l);
    out.quadric_rank = kq.rank;
    const Subspace<K> common = intersect(form_kernel(l.w0), form_kernel(l.w1));
    if (kq.rank == 4) {
        if (common.dim() != 0) throw std::logic_error("classify_pencil: rank-4 quadric with common kernel");
        out.tag = PencilTag::A;
    } else if (kq.rank == 3) {
        if (common.dim() != 1) throw std::logic_error("classify_pencil: rank-3 quadric without common kernel point");
        out.tag = PencilTag::B;
        out.witness = common.basis_vector(0);
    } else {
        throw std::logic_error("classify_pencil: kernel quadric rank outside {3,4}");
    }
    return out;
}

// The unique 2-dim M with the pencil inside M ^ (6-space): solutions of
// w0 ^ sigma = w1 ^ sigma = 0, restricted to the decomposable class.
// Reports multiplicity instead of guessing when the class is not unique.
template <class K>
Subspace<K> tangent_plane_M(const Pencil<K>& l) {
    const K one = k_int(1, l.span.one());
    Matrix<K> sys(30, 15);
    for (std::size_t col = 0; col < 15; ++col) {
        TwoTensor<K> basis_tensor(l.side());
        basis_tensor.c[col] = one;
        const FourTensor<K> a = wedge22(l.w0, basis_tensor);
        const FourTensor<K> b = wedge22(l.w1, basis_tensor);
        for (std::size_t r = 0; r < 15; ++r) {
            sys.at(r, col) = a.c[r];
            sys.at(15 + r, col) = b.c[r];
        }
    }
    Subspace<K> sol = Subspace<K>::from_echelon(kernel(sys));
    auto tensor_of = [&](const std::vector<K>& v) { return TwoTensor<K>::from_coords(v, l.side()); };
    if (sol.dim() == 0) throw std::logic_error("tangent_plane_M: no solutions");
    if (sol.dim() == 1) {
        const TwoTensor<K> s = tensor_of(sol.basis_vector(0));
        if (!wedge22(s, s).is_zero_tensor())
            throw std::logic_error("tangent_plane_M: unique solution not decomposable");
        return decompose(s).plane;
    }
    if (sol.dim() == 2) {
        // decomposables along the solution pencil: common roots of the
        // 15 binary quadrics of the square
        const Pencil<K> sp = Pencil<K>::from_generators(tensor_of(sol.basis_vector(0)),
                                                        tensor_of(sol.basis_vector(1)));
        std::vector<std::pair<K, K>> roots;  // (s,t)
        // roots in the ground field found by gcd of the quadrics
        std::vector<K> g;
        bool have_g = false, all_zero = true, vanish_inf = true;
        for (const auto& q : square_quadrics(sp)) {
            std::vector<K> u = poly_trim(q);
            if (!u.empty()) all_zero = false;
            if (!is_zero(q.back())) vanish_inf = false;
            if (u.empty()) continue;
            g = have_g ? poly_gcd(g, u) : u;
            have_g = true;
        }
        if (all_zero) throw std::logic_error("tangent_plane_M: whole solution pencil decomposable");
        // forms stored as c0 s^2 + c1 st + c2 t^2; dehomogenized variable
        // is x = t/s, root x = r means member at [s:t] = [1:r]
        if (vanish_inf) roots.push_back({k_int(0, one), one});
        if (g.size() == 2) {
            roots.push_back({one, -g[0] / g[1]});
        } else if (g.size() == 3) {
            // a double root is a single decomposable class
            const K disc = g[1] * g[1] - k_int(4, one) * g[0] * g[2];
            if (!is_zero(disc)) throw std::logic_error("tangent_plane_M: multiple decomposable classes");
            roots.push_back({one, -g[1] / (k_int(2, one) * g[2])});
        }
        if (roots.size() != 1) throw std::logic_error(roots.empty()
            ? "tangent_plane_M: no decomposable class"
            : "tangent_plane_M: multiple decomposable classes");
        const TwoTensor<K> s = sp.at(roots[0].first, roots[0].second);
        return decompose(s).plane;
    }
    throw std::logic_error("tangent_plane_M: solution space dimension > 2");
}

namespace detail {
template <class K>
Matrix<K> a_line_basis_change(const TwoTensor<K>& w0, const TwoTensor<K>& w1,
                              const Pencil<K>& l, const K& one);
}

// Explicit basis change g with g . pencil = standard A-pencil, where g
// acts on forms contragradiently. Construction: split V by the two member
// kernels and contract to build the normal-form basis.
template <class K>
Matrix<K> a_line_normal_form(const Pencil<K>& l) {
    const K one = k_int(1, l.span.one());
    // work with two independent members; retry over a deterministic list
    // of generator pairs if a degenerate choice slips through
    std::vector<std::pair<K, K>> params = {{one, k_int(0, one)}, {k_int(0, one), one},
                                           {one, one}, {one, k_int(2, one)}, {one, k_int(3, one)},
                                           {one, k_int(4, one)}, {k_int(2, one), one}};
    for (std::size_t a = 0; a < params.size(); ++a) {
        for (std::size_t b = a + 1; b < params.size(); ++b) {
            const TwoTensor<K> w0 = l.at(params[a].first, params[a].second);
            const TwoTensor<K> w1 = l.at(params[b].first, params[b].second);
            try {
                return detail::a_line_basis_change(w0, w1, l, one);
            } catch (const std::logic_error&) {
                continue;
            }
        }
    }
    throw std::invalid_argument("a_line_normal_form: pencil is not an A-line");
}

namespace detail {

template <class K>
Matrix<K> a_line_basis_change(const TwoTensor<K>& w0, const TwoTensor<K>& w1,
                              const Pencil<K>& l, const K& one) {
    const Subspace<K> k0 = form_kernel(w0);
    const Subspace<K> k1 = form_kernel(w1);
    if (k0.dim() != 2 || k1.dim() != 2) throw std::logic_error("a_line: member rank != 4");
    if (intersect(k0, k1).dim() != 0) throw std::logic_error("a_line: kernels meet (B-line?)");
    const Subspace<K> ksum = sum(k0, k1);
    // w_i must vanish on K_{1-i} x K_{1-i}
    auto vanishes_on = [&](const TwoTensor<K>& w, const Subspace<K>& s) {
        for (std::size_t i = 0; i < s.dim(); ++i)
            for (std::size_t j = i + 1; j < s.dim(); ++j) {
                const auto c = contract(s.basis_vector(i), w);
                K acc;
                const auto v = s.basis_vector(j);
                for (int t = 0; t < 6; ++t) acc += c[t] * v[t];
                if (!is_zero(acc)) return false;
            }
        return true;
    };
    if (!vanishes_on(w0, k1) || !vanishes_on(w1, k0))
        throw std::logic_error("a_line: member does not vanish on opposite kernel");
    // e0 outside K0 + K1
    std::vector<K> e0;
    for (int j = 0; j < 6; ++j) {
        std::vector<K> ej(6);
        ej[j] = one;
        if (!ksum.contains(ej)) { e0 = ej; break; }
    }
    if (e0.empty()) throw std::logic_error("a_line: no vector outside kernel sum");
    // e1 in {y : w0(e0,y) = w1(e0,y) = 0}, independent of e0, outside K0+K1
    Matrix<K> cond(2, 6);
    {
        const auto c0 = contract(e0, w0);
        const auto c1 = contract(e0, w1);
        for (int j = 0; j < 6; ++j) { cond.at(0, j) = c0[j]; cond.at(1, j) = c1[j]; }
    }
    const Subspace<K> orth = Subspace<K>::from_echelon(kernel(cond));
    // e1 must complete <e0> + K0 + K1 to all of V, so that <e0,e1> is a
    // symplectic complement of the kernel sum for both members. The bad
    // candidates form a subspace of orth, so some echelon basis vector of
    // orth works whenever any candidate does.
    const Subspace<K> span5 = sum(ksum, Subspace<K>::from_span({e0}, 6));
    std::vector<K> e1;
    for (std::size_t i = 0; i < orth.dim(); ++i) {
        std::vector<K> cand = orth.basis_vector(i);
        if (span5.contains(cand)) continue;
        e1 = cand;
        break;
    }
    if (e1.empty()) throw std::logic_error("a_line: no valid e1");
    const auto f2 = contract(e0, w0);
    const auto f3 = contract(e1, w0);
    const auto f4 = contract(e0, w1);
    const auto f5 = contract(e1, w1);
    // e2,e3 in K1 dual to (f2,f3)|K1 ; e4,e5 in K0 dual to (f4,f5)|K0
    auto dual_pair = [&](const Subspace<K>& kspace, const std::vector<K>& fa,
                         const std::vector<K>& fb) {
        Matrix<K> pairing(2, 2);  // rows: f, cols: basis of kspace
        for (int r = 0; r < 2; ++r) {
            const auto& f = r == 0 ? fa : fb;
            for (int cix = 0; cix < 2; ++cix) {
                const auto v = kspace.basis_vector(cix);
                K acc;
                for (int t = 0; t < 6; ++t) acc += f[t] * v[t];
                pairing.at(r, cix) = acc;
            }
        }
        Matrix<K> pinv = inverse(pairing);  // throws if degenerate
        // columns of pinv give coefficients of the dual vectors
        std::array<std::vector<K>, 2> out;
        for (int d = 0; d < 2; ++d) {
            std::vector<K> v(6);
            for (int cix = 0; cix < 2; ++cix) {
                const auto bv = kspace.basis_vector(cix);
                for (int t = 0; t < 6; ++t) v[t] += pinv.at(cix, d) * bv[t];
            }
            out[d] = v;
        }
        return out;
    };
    std::array<std::vector<K>, 2> e23, e45;
    try {
        e23 = dual_pair(k1, f2, f3);
        e45 = dual_pair(k0, f4, f5);
    } catch (const std::domain_error&) {
        throw std::logic_error("a_line: degenerate restriction pairing");
    }
    std::vector<std::vector<K>> basis = {e0, e1, e23[0], e23[1], e45[0], e45[1]};
    Matrix<K> bmat(6, 6);
    for (int col = 0; col < 6; ++col)
        for (int row = 0; row < 6; ++row) bmat.at(row, col) = basis[col][row];
    // B has the adapted basis as columns, so the pairing Gram in the
    // adapted coordinates is B^T N B. gl_apply realizes that as
    // g^-T N g^-1 on the forms side and g N g^T on the vectors side.
    Matrix<K> g;
    try {
        g = (l.side() == Side::VDual) ? inverse(bmat) : bmat.transpose();
    } catch (const std::domain_error&) {
        throw std::logic_error("a_line: constructed basis degenerate");
    }
    // verify the round trip before returning
    const Pencil<K> std_pencil = make_a_line(standard_basis(one), l.side());
    const Subspace<K> image = Subspace<K>::from_span(
        {gl_apply(g, w0).coords(), gl_apply(g, w1).coords()}, 15);
    if (image != std_pencil.span) throw std::logic_error("a_line: normal form round trip failed");
    return g;
}

}  // namespace detail

}  // namespace fano8

#endif
