#ifndef FANO8_EXTERIOR_HPP
#define FANO8_EXTERIOR_HPP

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fano8/matrix.hpp"
#include "fano8/quadform.hpp"
#include "fano8/subspace.hpp"

namespace fano8 {

// Canonical ordered basis of Lambda^2(6-space): the single wire/storage
// convention for the whole artifact.
inline constexpr std::array<std::pair<int, int>, 15> kPairBasis = {{
    {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
    {1, 2}, {1, 3}, {1, 4}, {1, 5},
    {2, 3}, {2, 4}, {2, 5},
    {3, 4}, {3, 5},
    {4, 5},
}};

inline std::size_t pair_index(int i, int j) {
    for (std::size_t k = 0; k < kPairBasis.size(); ++k)
        if (kPairBasis[k].first == i && kPairBasis[k].second == j) return k;
    throw std::invalid_argument("pair_index: bad pair");
}

// sign of the permutation sending the given distinct indices to sorted order
inline int perm_sign(std::vector<int> v) {
    int sign = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (v[i] == v[j]) return 0;
            if (v[i] > v[j]) sign = -sign;
        }
    return sign;
}

enum class Side { V, VDual };

inline Side opposite(Side s) { return s == Side::V ? Side::VDual : Side::V; }

// Element of Lambda^2 V or Lambda^2 V*, 15 coordinates in kPairBasis order.
template <class K>
struct TwoTensor {
    Side side = Side::V;
    std::array<K, 15> c{};

    TwoTensor() = default;
    explicit TwoTensor(Side s) : side(s) {}

    const K& coord(int i, int j) const { return c[pair_index(i, j)]; }
    K& coord(int i, int j) { return c[pair_index(i, j)]; }

    bool is_zero_tensor() const {
        for (const K& x : c)
            if (!is_zero(x)) return false;
        return true;
    }

    std::vector<K> coords() const { return std::vector<K>(c.begin(), c.end()); }

    static TwoTensor from_coords(const std::vector<K>& v, Side s) {
        if (v.size() != 15) throw std::invalid_argument("TwoTensor: 15 coordinates required");
        TwoTensor t(s);
        for (std::size_t i = 0; i < 15; ++i) t.c[i] = v[i];
        return t;
    }

    // skew 6x6 Gram matrix: entry (i,j) = coefficient on e_i^e_j for i<j
    Matrix<K> gram() const {
        Matrix<K> g(6, 6);
        for (std::size_t k = 0; k < 15; ++k) {
            auto [i, j] = kPairBasis[k];
            g.at(i, j) = c[k];
            g.at(j, i) = -c[k];
        }
        return g;
    }

    static TwoTensor from_gram(const Matrix<K>& g, Side s) {
        TwoTensor t(s);
        for (std::size_t k = 0; k < 15; ++k) {
            auto [i, j] = kPairBasis[k];
            t.c[k] = g.at(i, j);
        }
        return t;
    }

    friend TwoTensor operator+(const TwoTensor& a, const TwoTensor& b) {
        if (a.side != b.side) throw std::invalid_argument("TwoTensor: side mismatch");
        TwoTensor r(a.side);
        for (std::size_t i = 0; i < 15; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend TwoTensor operator-(const TwoTensor& a, const TwoTensor& b) {
        if (a.side != b.side) throw std::invalid_argument("TwoTensor: side mismatch");
        TwoTensor r(a.side);
        for (std::size_t i = 0; i < 15; ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    TwoTensor scaled(const K& s) const {
        TwoTensor r = *this;
        for (K& x : r.c) x *= s;
        return r;
    }
    friend bool operator==(const TwoTensor& a, const TwoTensor& b) {
        return a.side == b.side && a.c == b.c;
    }
};

template <class K>
TwoTensor<K> wedge2(const std::vector<K>& x, const std::vector<K>& y, Side side = Side::V) {
    if (x.size() != 6 || y.size() != 6) throw std::invalid_argument("wedge2: 6-vectors required");
    TwoTensor<K> t(side);
    for (std::size_t k = 0; k < 15; ++k) {
        auto [i, j] = kPairBasis[k];
        t.c[k] = x[i] * y[j] - x[j] * y[i];
    }
    return t;
}

// Element of Lambda^4, stored as the raw coefficients on e_{k<l<m<n},
// indexed by the complementary pair in kPairBasis order.
template <class K>
struct FourTensor {
    Side side = Side::V;
    std::array<K, 15> c{};

    bool is_zero_tensor() const {
        for (const K& x : c)
            if (!is_zero(x)) return false;
        return true;
    }
};

// complement of {i,j} in {0..5}, ascending
inline std::array<int, 4> pair_complement(int i, int j) {
    std::array<int, 4> out{};
    std::size_t k = 0;
    for (int v = 0; v < 6; ++v)
        if (v != i && v != j) out[k++] = v;
    return out;
}

template <class K>
FourTensor<K> wedge22(const TwoTensor<K>& a, const TwoTensor<K>& b) {
    if (a.side != b.side) throw std::invalid_argument("wedge22: side mismatch");
    FourTensor<K> r;
    r.side = a.side;
    // coefficient on e_S accumulates sign(perm) * a_ij * b_kl over ordered
    // splittings of S into two pairs
    for (std::size_t s = 0; s < 15; ++s) {
        auto [ci, cj] = kPairBasis[s];
        const auto quad = pair_complement(ci, cj);
        K acc;
        // choose the pair for a among the 4 indices
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) {
                int i = quad[p], j = quad[q];
                std::array<int, 2> rest{};
                int rk = 0;
                for (int t = 0; t < 4; ++t)
                    if (t != p && t != q) rest[rk++] = quad[t];
                int sg = perm_sign({i, j, rest[0], rest[1]});
                K term = a.c[pair_index(i, j)] * b.c[pair_index(rest[0], rest[1])];
                if (sg < 0) acc -= term; else acc += term;
            }
        r.c[s] = acc;
    }
    return r;
}

// <e_{S}, omega> with the permutation-to-(0..5) sign convention: pairing of
// a FourTensor with a TwoTensor of the same side gives the coefficient of
// their wedge on e_0^...^e_5.
template <class K>
K pair_42(const FourTensor<K>& t, const TwoTensor<K>& w) {
    if (t.side != w.side) throw std::invalid_argument("pair_42: side mismatch");
    K acc;
    for (std::size_t k = 0; k < 15; ++k) {
        auto [i, j] = kPairBasis[k];
        const auto quad = pair_complement(i, j);
        int sg = perm_sign({quad[0], quad[1], quad[2], quad[3], i, j});
        K term = t.c[k] * w.c[k];
        if (sg < 0) acc -= term; else acc += term;
    }
    return acc;
}

// coefficient of w^w^w on e_0^...^e_5; equals 6 Pf(w). Zero iff rank <= 4.
template <class K>
K triple_wedge(const TwoTensor<K>& w) {
    return pair_42(wedge22(w, w), w);
}

// duality pairing <Lambda^2 V, Lambda^2 V*> = dot product of coordinates
template <class K>
K pair_dual(const TwoTensor<K>& a, const TwoTensor<K>& b) {
    if (a.side == b.side) throw std::invalid_argument("pair_dual: same side");
    K acc;
    for (std::size_t i = 0; i < 15; ++i) acc += a.c[i] * b.c[i];
    return acc;
}

// contraction iota_v(w): the covector x -> w(v, x), i.e. v^T Gram
template <class K>
std::vector<K> contract(const std::vector<K>& v, const TwoTensor<K>& w) {
    if (v.size() != 6) throw std::invalid_argument("contract: 6-vector required");
    const Matrix<K> g = w.gram();
    std::vector<K> out(6);
    for (std::size_t j = 0; j < 6; ++j)
        for (std::size_t i = 0; i < 6; ++i) out[j] += v[i] * g.at(i, j);
    return out;
}

template <class K>
std::size_t form_rank(const TwoTensor<K>& w) {
    return rank(w.gram());
}

template <class K>
Subspace<K> form_kernel(const TwoTensor<K>& w) {
    return Subspace<K>::from_echelon(kernel(w.gram()));
}

// A point of G(2,6): a decomposable tensor together with its 2-plane.
template <class K>
struct GrassPoint {
    TwoTensor<K> tensor;
    Subspace<K> plane;
};

// inverse Pluecker: the plane is the column space of the Gram matrix
template <class K>
GrassPoint<K> decompose(const TwoTensor<K>& w) {
    if (w.is_zero_tensor()) throw std::invalid_argument("decompose: zero tensor");
    if (!wedge22(w, w).is_zero_tensor())
        throw std::invalid_argument("decompose: tensor is not decomposable");
    const Matrix<K> g = w.gram();
    Subspace<K> plane = Subspace<K>::from_span(g.transpose());  // rows of g^T = columns of g
    if (plane.dim() != 2) throw std::logic_error("decompose: plane dimension != 2");
    return GrassPoint<K>{w, plane};
}

// affine tangent space x^V + y^V at a point of G(2,6); dimension 9
template <class K>
Subspace<K> tangent_space(const GrassPoint<K>& p) {
    std::vector<std::vector<K>> gens;
    const K one = k_int(1, p.plane.one());
    for (std::size_t r = 0; r < 2; ++r) {
        const std::vector<K> v = p.plane.basis_vector(r);
        for (int j = 0; j < 6; ++j) {
            std::vector<K> ej(6);
            ej[j] = one;
            gens.push_back(wedge2(v, ej, p.tensor.side).coords());
        }
    }
    return Subspace<K>::from_span(gens, 15);
}

// A line of G(2,6): the pencil of planes through a vertex inside a 3-dim
// envelope, P(vertex ^ envelope).
template <class K>
struct GrassLine {
    Subspace<K> vertex;    // 1-dim subspace of the 6-space
    Subspace<K> envelope;  // 3-dim, contains the vertex
    Subspace<K> pencil;    // 2-dim subspace of Lambda^2, all members decomposable
};

template <class K>
GrassLine<K> make_grass_line(const std::vector<K>& v, const Subspace<K>& envelope,
                             Side side = Side::V) {
    if (envelope.dim() != 3 || envelope.ambient() != 6)
        throw std::invalid_argument("make_grass_line: envelope must be 3-dim in the 6-space");
    if (!envelope.contains(v)) throw std::invalid_argument("make_grass_line: vertex outside envelope");
    GrassLine<K> out;
    out.vertex = Subspace<K>::from_span({v}, 6);
    if (out.vertex.dim() != 1) throw std::invalid_argument("make_grass_line: zero vertex");
    out.envelope = envelope;
    std::vector<std::vector<K>> gens;
    for (std::size_t i = 0; i < 3; ++i)
        gens.push_back(wedge2(v, envelope.basis_vector(i), side).coords());
    out.pencil = Subspace<K>::from_span(gens, 15);
    if (out.pencil.dim() != 2) throw std::logic_error("make_grass_line: pencil dimension != 2");
    return out;
}

enum class PlaneSectionTag { contained_in_G, smooth_conic, line_pair, double_line, finite_scheme };

inline const char* to_string(PlaneSectionTag t) {
    switch (t) {
        case PlaneSectionTag::contained_in_G: return "contained_in_G";
        case PlaneSectionTag::smooth_conic: return "smooth_conic";
        case PlaneSectionTag::line_pair: return "line_pair";
        case PlaneSectionTag::double_line: return "double_line";
        case PlaneSectionTag::finite_scheme: return "finite_scheme";
    }
    return "?";
}

template <class K>
struct PlaneSectionClass {
    PlaneSectionTag tag;
    // for the conic-like cases: the ternary quadratic form in the plane's
    // internal coordinates (echelon basis order)
    QuadForm<K> conic;
};

// Restrict the 15 quadrics w^w = 0 to a projective plane in P^14 and
// classify the induced linear system of ternary conics.
template <class K>
PlaneSectionClass<K> classify_plane_section(const Subspace<K>& plane, Side side = Side::V) {
    if (plane.ambient() != 15 || plane.dim() != 3)
        throw std::invalid_argument("classify_plane_section: need a 3-dim subspace of Lambda^2");
    std::array<TwoTensor<K>, 3> basis;
    for (int i = 0; i < 3; ++i) basis[i] = TwoTensor<K>::from_coords(plane.basis_vector(i), side);
    std::array<std::array<FourTensor<K>, 3>, 3> prod;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) prod[i][j] = wedge22(basis[i], basis[j]);
    // one ternary conic per Lambda^4 coordinate, as (xx,xy,xz,yy,yz,zz)
    Matrix<K> conics(15, 6);
    for (std::size_t s = 0; s < 15; ++s) {
        const K two = k_int(2, plane.one());
        conics.at(s, 0) = prod[0][0].c[s];
        conics.at(s, 1) = two * prod[0][1].c[s];
        conics.at(s, 2) = two * prod[0][2].c[s];
        conics.at(s, 3) = prod[1][1].c[s];
        conics.at(s, 4) = two * prod[1][2].c[s];
        conics.at(s, 5) = prod[2][2].c[s];
    }
    const Echelon<K> e = echelon(conics);
    PlaneSectionClass<K> out;
    if (e.rank == 0) {
        out.tag = PlaneSectionTag::contained_in_G;
        return out;
    }
    if (e.rank >= 2) {
        out.tag = PlaneSectionTag::finite_scheme;
        return out;
    }
    // single conic up to scale
    Form<K> f(3, 2);
    const std::vector<K> row = e.rref.row(0);
    // coefficient order used above: xx, xy, xz, yy, yz, zz = lex order of
    // degree-2 monomials in 3 variables
    f.set_coeffs(row);
    out.conic = QuadForm<K>::from_form(f);
    switch (out.conic.rank()) {
        case 3: out.tag = PlaneSectionTag::smooth_conic; break;
        case 2: out.tag = PlaneSectionTag::line_pair; break;
        case 1: out.tag = PlaneSectionTag::double_line; break;
        default: throw std::logic_error("classify_plane_section: zero conic with rank 1 system");
    }
    return out;
}

template <class K>
struct DoubleLineBasis {
    // plane = span{e0^e1, e0^e2, e0^e3 + e1^e2} in this basis
    std::array<std::vector<K>, 4> e;
    std::vector<K> u;  // component of the proof's u outside <e0,e1,e2>; equals e[3]
};

// Normal form of a plane meeting G(2,6) along a double line.
template <class K>
DoubleLineBasis<K> double_line_normal_form(const Subspace<K>& plane, Side side = Side::V) {
    PlaneSectionClass<K> cls = classify_plane_section(plane, side);
    if (cls.tag != PlaneSectionTag::double_line)
        throw std::invalid_argument("double_line_normal_form: plane section is not a double line");
    const K one = k_int(1, plane.one());
    // The conic vanishes (doubly) on a pencil of decomposable tensors: the
    // kernel of its rank-1 Gram, pulled into the plane.
    Subspace<K> conic_kernel = Subspace<K>::from_echelon(kernel(cls.conic.gram()));
    if (conic_kernel.dim() != 2) throw std::logic_error("double_line_normal_form: conic kernel dim != 2");
    // lift internal coordinates to Lambda^2
    auto lift = [&](const std::vector<K>& internal) {
        std::vector<K> out(15);
        for (std::size_t r = 0; r < internal.size(); ++r)
            for (std::size_t j = 0; j < 15; ++j)
                out[j] += internal[r] * plane.basis().at(r, j);
        return TwoTensor<K>::from_coords(out, side);
    };
    GrassPoint<K> p0 = decompose(lift(conic_kernel.basis_vector(0)));
    GrassPoint<K> p1 = decompose(lift(conic_kernel.basis_vector(1)));
    // vertex = common factor of the pencil of decomposables; envelope L3
    Subspace<K> vertex = intersect(p0.plane, p1.plane);
    Subspace<K> envelope = sum(p0.plane, p1.plane);
    if (vertex.dim() != 1 || envelope.dim() != 3)
        throw std::logic_error("double_line_normal_form: degenerate double line");
    DoubleLineBasis<K> out;
    out.e[0] = vertex.basis_vector(0);
    // complete the vertex to a basis of the envelope
    std::vector<std::vector<K>> picked = {out.e[0]};
    for (std::size_t i = 0; i < 3 && picked.size() < 3; ++i) {
        std::vector<K> cand = envelope.basis_vector(i);
        if (!Subspace<K>::from_span(picked, 6).contains(cand)) picked.push_back(cand);
    }
    if (picked.size() != 3) throw std::logic_error("double_line_normal_form: envelope completion failed");
    out.e[1] = picked[1];
    out.e[2] = picked[2];
    // third generator of the plane, outside the double line
    const TwoTensor<K> g0 = wedge2(out.e[0], out.e[1], side);
    const TwoTensor<K> g1 = wedge2(out.e[0], out.e[2], side);
    Subspace<K> line_span = Subspace<K>::from_span({g0.coords(), g1.coords()}, 15);
    TwoTensor<K> omega;
    bool found = false;
    for (std::size_t i = 0; i < 3; ++i) {
        if (!line_span.contains(plane.basis_vector(i))) {
            omega = TwoTensor<K>::from_coords(plane.basis_vector(i), side);
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("double_line_normal_form: plane equals its double line span");
    // omega = e0 ^ u + c * e1 ^ e2 in the lemma's shape. Recover c from the
    // e1^e2 coefficient in the basis (e0,e1,e2, complement); work via a
    // basis-change to coordinates adapted to (e0,e1,e2).
    // Build full basis (e0,e1,e2,b3,b4,b5).
    Subspace<K> span3 = Subspace<K>::from_span({out.e[0], out.e[1], out.e[2]}, 6);
    std::vector<std::vector<K>> full = {out.e[0], out.e[1], out.e[2]};
    for (int j = 0; j < 6 && full.size() < 6; ++j) {
        std::vector<K> ej(6);
        ej[j] = one;
        Subspace<K> test = Subspace<K>::from_span(full, 6);
        if (!test.contains(ej)) full.push_back(ej);
    }
    Matrix<K> b(6, 6);  // columns are the basis vectors
    for (int col = 0; col < 6; ++col)
        for (int row = 0; row < 6; ++row) b.at(row, col) = full[col][row];
    const Matrix<K> binv = inverse(b);
    // Gram in adapted coordinates: B^-1 M B^-T
    Matrix<K> gm = binv * omega.gram() * binv.transpose();
    const K c = gm.at(1, 2);
    if (is_zero(c)) throw std::logic_error("double_line_normal_form: third generator degenerate");
    const K cinv = inv(c);
    // u (adapted coords) = row 0 of gm / c, entries 1..5; kill the e1,e2
    // components by subtracting multiples of the line generators
    std::vector<K> u_adapted(6);
    for (int j = 3; j < 6; ++j) u_adapted[j] = gm.at(0, j) * cinv;
    // back to standard coordinates
    std::vector<K> u(6);
    for (int row = 0; row < 6; ++row)
        for (int col = 0; col < 6; ++col) u[row] += b.at(row, col) * u_adapted[col];
    bool uzero = true;
    for (const K& x : u)
        if (!is_zero(x)) { uzero = false; break; }
    if (uzero) throw std::logic_error("double_line_normal_form: u lies in <e0,e1,e2>");
    out.e[3] = u;
    out.u = u;
    return out;
}

// reconstruct the lemma's plane from a normal-form basis
template <class K>
Subspace<K> double_line_plane(const DoubleLineBasis<K>& nf, Side side = Side::V) {
    const TwoTensor<K> a = wedge2(nf.e[0], nf.e[1], side);
    const TwoTensor<K> b = wedge2(nf.e[0], nf.e[2], side);
    const TwoTensor<K> c = wedge2(nf.e[0], nf.e[3], side) + wedge2(nf.e[1], nf.e[2], side);
    return Subspace<K>::from_span({a.coords(), b.coords(), c.coords()}, 15);
}

// GL6 action. g acts on V as v -> g v; on Lambda^2 V by functoriality
// (Gram -> g Gram g^T) and on Lambda^2 V* contragradiently, so that the
// duality pairing is preserved.
template <class K>
TwoTensor<K> gl_apply(const Matrix<K>& g, const TwoTensor<K>& t) {
    if (t.side == Side::V)
        return TwoTensor<K>::from_gram(g * t.gram() * g.transpose(), t.side);
    const Matrix<K> gi = inverse(g);
    return TwoTensor<K>::from_gram(gi.transpose() * t.gram() * gi, t.side);
}

}  // namespace fano8

#endif
