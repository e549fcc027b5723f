#ifndef FANO8_CORRESPOND_HPP
#define FANO8_CORRESPOND_HPP

#include <stdexcept>
#include <vector>

#include "fano8/fano.hpp"
#include "fano8/pencil.hpp"

namespace fano8 {

// A conic in X: the unique 4-dim envelope L with q a linear section of
// G(2,L), the 3-dim plane Lambda^2 L cap W10, and the conic form cut by
// the single Pfaffian quadric of Lambda^2 L.
template <class K>
struct ConicData {
    Subspace<K> envelope;  // L, 4-dim in V
    Subspace<K> plane;     // 3-dim in Lambda^2 V
    QuadForm<K> form;      // ternary form in the plane's internal coordinates
    PlaneSectionTag tag = PlaneSectionTag::smooth_conic;
};

namespace detail {

// span of Lambda^2 of a subspace of the 6-space, inside the 15-space
template <class K>
Subspace<K> lambda2_subspace(const Subspace<K>& s, Side side) {
    std::vector<std::vector<K>> gens;
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = i + 1; j < s.dim(); ++j)
            gens.push_back(wedge2(s.basis_vector(i), s.basis_vector(j), side).coords());
    if (gens.empty()) return Subspace<K>::zero(15, k_int(1, s.one()));
    return Subspace<K>::from_span(gens, 15);
}

// the binary cubic t -> cubic(u0 + t u1) vanishes identically: checked at
// five distinct projective parameters (a nonzero binary cubic has <= 3 roots)
template <class K>
bool cubic_vanishes_on(const ThreefoldPair<K>& pair, const Pencil<K>& l) {
    const std::vector<K> u0 = coordinates_in(pair.u5, l.w0.coords());
    const std::vector<K> u1 = coordinates_in(pair.u5, l.w1.coords());
    const K one = k_int(1, pair.u5.one());
    for (int t = 0; t <= 3; ++t) {
        std::vector<K> u(5);
        const K tk = k_int(t, one);
        for (std::size_t a = 0; a < 5; ++a) u[a] = u0[a] + tk * u1[a];
        if (!is_zero(pair.cubic.eval(u))) return false;
    }
    return is_zero(pair.cubic.eval(u1));
}

template <class K>
std::vector<K> field_elements(const FieldDesc& f, const K& one);

template <>
inline std::vector<Fp> field_elements<Fp>(const FieldDesc& f, const Fp&) {
    std::vector<Fp> out;
    for (std::uint64_t v = 0; v < f.p; ++v) out.push_back(Fp(static_cast<std::int64_t>(v), f.p));
    return out;
}

template <>
inline std::vector<Rat> field_elements<Rat>(const FieldDesc&, const Rat&) {
    throw std::invalid_argument("field_elements: finite field required");
}

}  // namespace detail

// A line of X (vertex v) maps to the line P(Lambda^2 H) cap P^4_Y, H = v^perp.
template <class K>
Pencil<K> x_line_to_b_line(const ThreefoldPair<K>& pair, const GrassLine<K>& l) {
    if (!pair.w10.contains(l.pencil))
        throw std::invalid_argument("x_line_to_b_line: pencil not inside W10");
    const Subspace<K> h = l.vertex.annihilator();  // 5-dim in V*
    if (h.dim() != 5) throw std::logic_error("x_line_to_b_line: bad vertex");
    const Subspace<K> inter = intersect(detail::lambda2_subspace(h, Side::VDual), pair.u5);
    if (inter.dim() != 2)
        throw std::invalid_argument("x_line_to_b_line: intersection dimension != 2");
    Pencil<K> out = Pencil<K>::from_generators(
        TwoTensor<K>::from_coords(inter.basis_vector(0), Side::VDual),
        TwoTensor<K>::from_coords(inter.basis_vector(1), Side::VDual));
    if (!detail::cubic_vanishes_on(pair, out))
        throw std::logic_error("x_line_to_b_line: cubic does not vanish on the image pencil");
    if (classify_pencil(out).tag != PencilTag::B)
        throw std::logic_error("x_line_to_b_line: image pencil is not a B-line");
    return out;
}

// A B-line of Y maps back to the line of X with vertex the common kernel
// witness: intersect(v ^ V, W10).
template <class K>
GrassLine<K> b_line_to_x_line(const ThreefoldPair<K>& pair, const Pencil<K>& l) {
    if (!pair.u5.contains(l.span))
        throw std::invalid_argument("b_line_to_x_line: pencil not inside U5");
    const PencilClass<K> cls = classify_pencil(l);
    if (cls.tag != PencilTag::B)
        throw std::invalid_argument("b_line_to_x_line: pencil is not a B-line");
    const std::vector<K> v = *cls.witness;
    const K one = k_int(1, pair.w10.one());
    std::vector<std::vector<K>> gens;
    for (int b = 0; b < 6; ++b) {
        std::vector<K> eb(6);
        eb[b] = one;
        gens.push_back(wedge2(v, eb).coords());
    }
    const Subspace<K> pv = Subspace<K>::from_span(gens, 15);  // v ^ V, 5-dim
    if (pv.dim() != 5) throw std::logic_error("b_line_to_x_line: v ^ V not 5-dim");
    const Subspace<K> inter = intersect(pv, pair.w10);
    if (inter.dim() != 2)
        throw std::invalid_argument("b_line_to_x_line: intersection dimension != 2");
    const GrassPoint<K> p0 = decompose(TwoTensor<K>::from_coords(inter.basis_vector(0), Side::V));
    const GrassPoint<K> p1 = decompose(TwoTensor<K>::from_coords(inter.basis_vector(1), Side::V));
    const Subspace<K> envelope = sum(p0.plane, p1.plane);
    if (envelope.dim() != 3) throw std::logic_error("b_line_to_x_line: envelope not 3-dim");
    GrassLine<K> out = make_grass_line(v, envelope);
    if (out.pencil != inter) throw std::logic_error("b_line_to_x_line: pencil reconstruction mismatch");
    return out;
}

// A conic of X maps to intersect(annihilator(Lambda^2 L), U5) = the line
// P(L^perp ^ V*) cap P^4_Y.
template <class K>
Pencil<K> x_conic_to_y_line(const ThreefoldPair<K>& pair, const ConicData<K>& q) {
    if (!pair.w10.contains(q.plane))
        throw std::invalid_argument("x_conic_to_y_line: plane not inside W10");
    const Subspace<K> lam2l = detail::lambda2_subspace(q.envelope, Side::V);
    if (!lam2l.contains(q.plane))
        throw std::invalid_argument("x_conic_to_y_line: plane not inside Lambda^2 L");
    const Subspace<K> inter = intersect(lam2l.annihilator(), pair.u5);
    if (inter.dim() != 2)
        throw std::invalid_argument("x_conic_to_y_line: intersection dimension != 2");
    Pencil<K> out = Pencil<K>::from_generators(
        TwoTensor<K>::from_coords(inter.basis_vector(0), Side::VDual),
        TwoTensor<K>::from_coords(inter.basis_vector(1), Side::VDual));
    if (!detail::cubic_vanishes_on(pair, out))
        throw std::logic_error("x_conic_to_y_line: cubic does not vanish on the image pencil");
    const PencilTag tag = classify_pencil(out).tag;
    if (tag != PencilTag::A && tag != PencilTag::B)
        throw std::logic_error("x_conic_to_y_line: image pencil not of constant rank 4");
    return out;
}

// A line of Y maps to the conic G(2, M^perp) cap P^9_X, M the tangent plane.
template <class K>
ConicData<K> y_line_to_x_conic(const ThreefoldPair<K>& pair, const Pencil<K>& l) {
    if (!pair.u5.contains(l.span))
        throw std::invalid_argument("y_line_to_x_conic: pencil not inside U5");
    const PencilTag tag = classify_pencil(l).tag;
    if (tag != PencilTag::A && tag != PencilTag::B)
        throw std::invalid_argument("y_line_to_x_conic: pencil not of constant rank 4");
    const Subspace<K> m = tangent_plane_M(l);             // 2-dim in V*
    const Subspace<K> envelope = m.annihilator();         // L, 4-dim in V
    if (envelope.dim() != 4) throw std::logic_error("y_line_to_x_conic: envelope not 4-dim");
    const Subspace<K> plane = intersect(detail::lambda2_subspace(envelope, Side::V), pair.w10);
    if (plane.dim() != 3)
        throw std::invalid_argument("y_line_to_x_conic: conic plane dimension != 3");
    const PlaneSectionClass<K> section = classify_plane_section(plane);
    if (section.tag == PlaneSectionTag::contained_in_G ||
        section.tag == PlaneSectionTag::finite_scheme)
        throw std::logic_error("y_line_to_x_conic: plane section is not a conic");
    return ConicData<K>{envelope, plane, section.conic, section.tag};
}

// points of the conic over the working field (finite fields only):
// members of the plane that are decomposable
template <class K>
std::vector<GrassPoint<K>> conic_points(const ThreefoldPair<K>& pair, const ConicData<K>& q) {
    const auto elems = detail::field_elements<K>(pair.field, K{});
    const K one = k_int(1, pair.w10.one());
    std::vector<GrassPoint<K>> out;
    auto try_point = [&](const std::vector<K>& internal) {
        std::vector<K> coords(15);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t j = 0; j < 15; ++j)
                coords[j] += internal[r] * q.plane.basis().at(r, j);
        const TwoTensor<K> w = TwoTensor<K>::from_coords(coords, Side::V);
        if (w.is_zero_tensor() || !wedge22(w, w).is_zero_tensor()) return;
        out.push_back(decompose(w));
    };
    // canonical representatives of P^2 over the field: leading coordinate 1
    for (const K& b : elems)
        for (const K& c : elems) try_point({one, b, c});
    for (const K& c : elems) try_point({K{}, one, c});
    try_point({K{}, K{}, one});
    return out;
}

template <class K>
struct QuarticSplitReport {
    std::size_t conic_point_count = 0;
    std::size_t sweep_point_count = 0;
    bool sweep_in_span = false;
    bool q_line_unique = false;
    bool split_proportional = false;
    bool factors_distinct = false;
    QuadForm<K> q_upper;  // q^l, from the kernel quadric
    QuadForm<K> q_lower;  // Q_l, interpolated from the conic sweep

    bool ok() const {
        return sweep_in_span && q_line_unique && split_proportional && factors_distinct;
    }
};

// W cap P^3_l = Q_l + Q^l: restrict the interpolated Palatini quartic to
// the kernel span and compare with the product of the two quadrics.
template <class K>
QuarticSplitReport<K> quartic_splitting_check(const ThreefoldPair<K>& pair, const Pencil<K>& l,
                                              const Form<K>& quartic) {
    if (quartic.nvars() != 6 || quartic.degree() != 4)
        throw std::invalid_argument("quartic_splitting_check: quartic in 6 variables required");
    const KernelQuadric<K> kq = kernel_quadric(l);
    const ConicData<K> conic = y_line_to_x_conic(pair, l);
    const auto pts = conic_points(pair, conic);
    QuarticSplitReport<K> rep;
    rep.conic_point_count = pts.size();
    rep.q_upper = kq.q;
    // sweep: all rational points of the line P(l_x) for each conic point x
    const auto elems = detail::field_elements<K>(pair.field, K{});
    const K one = k_int(1, pair.w10.one());
    std::vector<std::vector<K>> sweep;
    rep.sweep_in_span = true;
    for (const auto& x : pts) {
        const auto b0 = x.plane.basis_vector(0);
        const auto b1 = x.plane.basis_vector(1);
        auto add = [&](const K& s, const K& t) {
            std::vector<K> v(6);
            for (int j = 0; j < 6; ++j) v[j] = s * b0[j] + t * b1[j];
            if (!kq.span.contains(v)) { rep.sweep_in_span = false; return; }
            sweep.push_back(coordinates_in(kq.span, v));
        };
        for (const K& t : elems) add(one, t);
        add(K{}, one);
    }
    rep.sweep_point_count = sweep.size();
    if (!rep.sweep_in_span || sweep.empty()) return rep;
    const auto forms = interpolate_forms(sweep, 4, 2);
    rep.q_line_unique = forms.size() == 1;
    if (!rep.q_line_unique) return rep;
    rep.q_lower = QuadForm<K>::from_form(forms[0]);
    // restrict the quartic to the span's internal coordinates
    const Form<K> restricted = quartic.pullback(kq.span.basis().transpose());
    const Form<K> product = rep.q_upper.as_form() * rep.q_lower.as_form();
    rep.split_proportional = proportional(restricted, product);
    rep.factors_distinct = !proportional(rep.q_upper.as_form(), rep.q_lower.as_form());
    return rep;
}

}  // namespace fano8

#endif
