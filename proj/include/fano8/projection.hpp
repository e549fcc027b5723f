#ifndef FANO8_PROJECTION_HPP
#define FANO8_PROJECTION_HPP

#include <array>
#include <stdexcept>
#include <vector>

#include "fano8/correspond.hpp"
#include "fano8/fano.hpp"
#include "fano8/pencil.hpp"

namespace fano8 {

// Image point of the projection to P^9, coordinates ordered
// (X, Y, Z, T, U01, U03, U05, U13, U15, U35).
template <class K>
struct G25Point {
    std::array<K, 10> c{};

    bool is_zero_point() const {
        for (const K& x : c)
            if (!is_zero(x)) return false;
        return true;
    }

    // Pluecker coordinates of G(2,5) in pair order
    // (12,13,14,15,23,24,25,34,35,45)
    std::array<K, 10> delta() const {
        const K& X = c[0];
        const K& Y = c[1];
        const K& Z = c[2];
        const K& T = c[3];
        return {c[4], c[5], c[7], Z, c[6], c[8], -Y, c[9], -T, X};
    }
};

// Residuals of the five quadratic equations cutting out the image.
// Equations (3) and (5) are used in the sign-corrected form consistent
// with the substitution to Pluecker coordinates; the printed variants are
// exposed separately as typo regressions.
template <class K>
std::array<K, 5> five_equations_residual(const G25Point<K>& pt) {
    const K& X = pt.c[0];
    const K& Y = pt.c[1];
    const K& Z = pt.c[2];
    const K& T = pt.c[3];
    const K& u01 = pt.c[4];
    const K& u03 = pt.c[5];
    const K& u05 = pt.c[6];
    const K& u13 = pt.c[7];
    const K& u15 = pt.c[8];
    const K& u35 = pt.c[9];
    return {
        X * u01 + Y * u13 + Z * u15,
        X * u03 + Z * u35 + T * u13,
        X * u05 - Y * u35 + T * u15,
        Y * u03 + Z * u05 - T * u01,
        u01 * u35 - u03 * u15 + u05 * u13,
    };
}

// the printed variants of equations (3) and (5), nonzero on generic image
// points (kept as evidence of the sign correction)
template <class K>
std::array<K, 2> printed_equation_residuals(const G25Point<K>& pt) {
    const K& X = pt.c[0];
    const K& Y = pt.c[1];
    const K& T = pt.c[3];
    const K& u01 = pt.c[4];
    const K& u05 = pt.c[6];
    const K& u13 = pt.c[7];
    const K& u15 = pt.c[8];
    const K& u35 = pt.c[9];
    return {
        X * u05 + Y * u35 - T * u15,
        u01 * u35 - u01 * u15 + u05 * u13,
    };
}

// the five Pluecker relations of G(2,5) on the delta coordinates
template <class K>
std::array<K, 5> plucker_residuals(const G25Point<K>& pt) {
    const auto d = pt.delta();
    auto at = [&](int i, int j) -> const K& {
        static constexpr int pairs[10][2] = {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3},
                                             {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};
        for (int k = 0; k < 10; ++k)
            if (pairs[k][0] == i && pairs[k][1] == j) return d[k];
        throw std::logic_error("plucker_residuals: bad pair");
    };
    return {
        at(1, 2) * at(3, 4) - at(1, 3) * at(2, 4) + at(1, 4) * at(2, 3),
        at(1, 2) * at(3, 5) - at(1, 3) * at(2, 5) + at(1, 5) * at(2, 3),
        at(1, 2) * at(4, 5) - at(1, 4) * at(2, 5) + at(1, 5) * at(2, 4),
        at(1, 3) * at(4, 5) - at(1, 4) * at(3, 5) + at(1, 5) * at(3, 4),
        at(2, 3) * at(4, 5) - at(2, 4) * at(3, 5) + at(2, 5) * at(3, 4),
    };
}

template <class K>
bool g25_member(const G25Point<K>& pt) {
    for (const K& r : plucker_residuals(pt))
        if (!is_zero(r)) return false;
    return true;
}

// The projection of G(2,6) cap l^perp from the plane of the singular conic
// q^l attached to an A-line l of forms.
template <class K>
struct ProjectionContext {
    Pencil<K> line;      // the A-line, forms side
    Matrix<K> g;         // normalizing change: gl_apply(g, line) = standard A-line
    Matrix<K> ginv;
    Subspace<K> center;  // pi^l, 3-dim in Lambda^2 V, original coordinates
};

// the conic point q^l(s,t) in normalized coordinates:
// t^2 e2^e3 - st (e2^e5 - e3^e4) + s^2 e4^e5
template <class K>
TwoTensor<K> normalized_conic_tensor(const K& s, const K& t) {
    TwoTensor<K> w(Side::V);
    w.coord(2, 3) = t * t;
    w.coord(2, 5) = -(s * t);
    w.coord(3, 4) = s * t;
    w.coord(4, 5) = s * s;
    return w;
}

template <class K>
ProjectionContext<K> make_context(const Pencil<K>& l) {
    if (l.side() != Side::VDual)
        throw std::invalid_argument("make_context: A-line of forms required");
    ProjectionContext<K> ctx;
    ctx.line = l;
    ctx.g = a_line_normal_form(l);  // throws unless class A
    ctx.ginv = inverse(ctx.g);
    const K one = k_int(1, l.span.one());
    const K zero = k_int(0, one);
    std::vector<std::vector<K>> gens;
    for (auto [s, t] : {std::pair<K, K>{one, zero}, {zero, one}, {one, one}}) {
        gens.push_back(gl_apply(ctx.ginv, normalized_conic_tensor(s, t)).coords());
    }
    ctx.center = Subspace<K>::from_span(gens, 15);
    if (ctx.center.dim() != 3) throw std::logic_error("make_context: center not a plane");
    if (classify_plane_section(ctx.center).tag == PlaneSectionTag::contained_in_G)
        throw std::logic_error("make_context: center plane contained in G(2,6)");
    return ctx;
}

// the conic point at parameter [s:t], in original coordinates
template <class K>
GrassPoint<K> conic_point(const ProjectionContext<K>& ctx, const K& s, const K& t) {
    return decompose(gl_apply(ctx.ginv, normalized_conic_tensor(s, t)));
}

template <class K>
bool in_l_perp(const ProjectionContext<K>& ctx, const TwoTensor<K>& w) {
    return is_zero(pair_dual(w, ctx.line.w0)) && is_zero(pair_dual(w, ctx.line.w1));
}

// projection by coordinate selection in the normalized basis
template <class K>
G25Point<K> project(const ProjectionContext<K>& ctx, const TwoTensor<K>& w) {
    if (w.side != Side::V) throw std::invalid_argument("project: Lambda^2 V tensor required");
    if (!in_l_perp(ctx, w)) throw std::invalid_argument("project: tensor outside l^perp");
    const TwoTensor<K> n = gl_apply(ctx.g, w);
    G25Point<K> pt;
    pt.c[0] = n.coord(2, 4);
    pt.c[1] = n.coord(1, 4);
    pt.c[2] = -n.coord(1, 2);
    pt.c[3] = n.coord(2, 5) + n.coord(3, 4);
    pt.c[4] = n.coord(0, 1);
    pt.c[5] = n.coord(0, 3);
    pt.c[6] = n.coord(0, 5);
    pt.c[7] = n.coord(1, 3);
    pt.c[8] = n.coord(1, 5);
    pt.c[9] = n.coord(3, 5);
    if (pt.is_zero_point()) throw std::invalid_argument("project: tensor lies on the center plane");
    return pt;
}

// the restriction of the projection to X (regular there)
template <class K>
G25Point<K> restrict_to_x(const ProjectionContext<K>& ctx, const ThreefoldPair<K>& pair,
                          const GrassPoint<K>& x) {
    if (!x_member(pair, x.tensor)) throw std::invalid_argument("restrict_to_x: point not on X");
    if (!pair.u5.contains(ctx.line.span))
        throw std::invalid_argument("restrict_to_x: context line not inside U5");
    const G25Point<K> pt = project(ctx, x.tensor);
    if (!g25_member(pt)) throw std::logic_error("restrict_to_x: image violates Pluecker relations");
    return pt;
}

// the fiber of the induced rank-2 bundle at x: the inverse-Pluecker plane
// of the delta coordinates in the abstract 5-space
template <class K>
Subspace<K> bundle_fiber(const ProjectionContext<K>& ctx, const ThreefoldPair<K>& pair,
                         const GrassPoint<K>& x) {
    const G25Point<K> pt = restrict_to_x(ctx, pair, x);
    const auto d = pt.delta();
    static constexpr int pairs[10][2] = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                                         {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    Matrix<K> gram(5, 5);
    for (int k = 0; k < 10; ++k) {
        gram.at(pairs[k][0], pairs[k][1]) = d[k];
        gram.at(pairs[k][1], pairs[k][0]) = -d[k];
    }
    Subspace<K> plane = Subspace<K>::from_span(gram.transpose());  // column space
    if (plane.dim() != 2) throw std::logic_error("bundle_fiber: fiber dimension != 2");
    return plane;
}

// the two unisecant planes PA x PB of the Segre variety adapted to the
// normalized A-line: A = <e0,e2,e4>, B = <e1,e3,e5> transported back
template <class K>
std::pair<Subspace<K>, Subspace<K>> segre_context(const ProjectionContext<K>& ctx) {
    const K one = k_int(1, ctx.line.span.one());
    auto transported = [&](std::initializer_list<int> idx) {
        std::vector<std::vector<K>> gens;
        for (int i : idx) {
            std::vector<K> ei(6);
            ei[i] = one;
            std::vector<K> v(6);
            for (int r = 0; r < 6; ++r)
                for (int c = 0; c < 6; ++c) v[r] += ctx.ginv.at(r, c) * ei[c];
            gens.push_back(v);
        }
        return Subspace<K>::from_span(gens, 6);
    };
    Subspace<K> a = transported({0, 2, 4});
    Subspace<K> b = transported({1, 3, 5});
    // the line must lie in Lambda^2 A^perp + Lambda^2 B^perp
    Subspace<K> adapted = sum(detail::lambda2_subspace(a.annihilator(), Side::VDual),
                              detail::lambda2_subspace(b.annihilator(), Side::VDual));
    if (!adapted.contains(ctx.line.span))
        throw std::logic_error("segre_context: line not adapted to the splitting");
    return {a, b};
}

// points of Sigma cap X over the working field: ([a],[b]) in PA x PB with
// a^b in W10 (finite fields only)
template <class K>
std::vector<std::pair<std::vector<K>, std::vector<K>>> sextic_points(
    const ThreefoldPair<K>& pair, const Subspace<K>& a, const Subspace<K>& b) {
    if (a.dim() != 3 || b.dim() != 3 || sum(a, b).dim() != 6)
        throw std::invalid_argument("sextic_points: complementary 3-spaces required");
    const auto elems = detail::field_elements<K>(pair.field, K{});
    const K one = k_int(1, pair.w10.one());
    auto reps = [&]() {
        std::vector<std::vector<K>> out;
        for (const K& y : elems)
            for (const K& z : elems) out.push_back({one, y, z});
        for (const K& z : elems) out.push_back({K{}, one, z});
        out.push_back({K{}, K{}, one});
        return out;
    }();
    auto lift = [&](const Subspace<K>& s, const std::vector<K>& internal) {
        std::vector<K> v(6);
        for (std::size_t r = 0; r < 3; ++r)
            for (int j = 0; j < 6; ++j) v[j] += internal[r] * s.basis().at(r, j);
        return v;
    };
    std::vector<std::pair<std::vector<K>, std::vector<K>>> out;
    for (const auto& ra : reps) {
        const auto va = lift(a, ra);
        for (const auto& rb : reps) {
            const auto vb = lift(b, rb);
            if (pair.w10.contains(wedge2(va, vb).coords())) out.push_back({va, vb});
        }
    }
    return out;
}

}  // namespace fano8

#endif
