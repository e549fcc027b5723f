#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fano8/projection.hpp"

using namespace fano8;

namespace {

const FieldDesc kF11 = FieldDesc::parse("fp:11");
const FieldDesc kQ = FieldDesc::parse("q");

template <class K>
std::vector<K> unit6(std::size_t i, const K& one) {
    std::vector<K> v(6);
    v[i] = one;
    return v;
}

// Chart of G(2,6) cap l^perp for the standard A-line: u, w span a plane
// orthogonal to both generators, with the two dependent coefficients
// solved for in closed form.
template <class K>
TwoTensor<K> chart_tensor(const std::array<K, 6>& par, const K& one) {
    const K &a1 = par[0], &a3 = par[1], &a5 = par[2];
    const K &b1 = par[3], &b3 = par[4], &b5 = par[5];
    const K a0 = -(a1 * b5 - a5 * b1);
    const K b0 = a1 * b3 - a3 * b1;
    std::vector<K> u(6), w(6);
    u[0] = a0; u[1] = a1; u[2] = one; u[3] = a3; u[5] = a5;
    w[0] = b0; w[1] = b1; w[3] = b3; w[4] = one; w[5] = b5;
    return wedge2(u, w);
}

// the image point read off directly from the normalized tensor
template <class K>
G25Point<K> chart_image(const TwoTensor<K>& n) {
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
    return pt;
}

template <class K>
bool all_zero(const std::array<K, 5>& r) {
    for (const K& x : r)
        if (!is_zero(x)) return false;
    return true;
}

template <class K>
Matrix<K> random_gl6(SplitMix64& rng, const FieldDesc& f) {
    for (;;) {
        Matrix<K> g(6, 6);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) g.at(i, j) = random_scalar(rng, f, K{});
        if (rank(g) == 6) return g;
    }
}

}  // namespace

TEST_CASE("chart points satisfy the five equations and the Pluecker relations") {
    SplitMix64 rng(2026);
    const auto a_std_q = make_a_line(standard_basis(Rat(1)));
    const auto a_std_p = make_a_line(standard_basis(Fp(1, 11)));
    std::size_t printed_fail = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::array<Rat, 6> pq;
        for (auto& x : pq) x = random_scalar(rng, kQ, Rat{});
        const auto wq = chart_tensor(pq, Rat(1));
        CHECK(is_zero(pair_dual(wq, a_std_q.w0)));
        CHECK(is_zero(pair_dual(wq, a_std_q.w1)));
        const auto img = chart_image(wq);
        CHECK(all_zero(five_equations_residual(img)));
        CHECK(all_zero(plucker_residuals(img)));
        CHECK(g25_member(img));
        const auto printed = printed_equation_residuals(img);
        if (!is_zero(printed[0]) || !is_zero(printed[1])) ++printed_fail;

        std::array<Fp, 6> pp;
        for (auto& x : pp) x = random_scalar(rng, kF11, Fp{});
        const auto wp = chart_tensor(pp, Fp(1, 11));
        CHECK(is_zero(pair_dual(wp, a_std_p.w0)));
        CHECK(is_zero(pair_dual(wp, a_std_p.w1)));
        const auto imgp = chart_image(wp);
        CHECK(all_zero(five_equations_residual(imgp)));
        CHECK(all_zero(plucker_residuals(imgp)));
    }
    // the printed variants of (3) and (5) are genuinely wrong
    CHECK(printed_fail > 50);
}

TEST_CASE("projection context of the standard A-line") {
    const Rat one(1);
    auto ctx = make_context(make_a_line(standard_basis(one)));
    CHECK(ctx.center.dim() == 3);
    // conic points are decomposable and orthogonal to the line
    for (int t = 0; t <= 3; ++t) {
        const auto cp = conic_point(ctx, one, Rat(t));
        CHECK(in_l_perp(ctx, cp.tensor));
        // center points project to zero: the projection must refuse them
        CHECK_THROWS_AS(project(ctx, cp.tensor), std::invalid_argument);
    }
    SplitMix64 rng(55);
    for (int trial = 0; trial < 30; ++trial) {
        std::array<Rat, 6> par;
        for (auto& x : par) x = random_scalar(rng, kQ, Rat{});
        const auto w = chart_tensor(par, one);
        CHECK(in_l_perp(ctx, w));
        const auto img = project(ctx, w);
        CHECK(all_zero(five_equations_residual(img)));
        CHECK(g25_member(img));
    }
    // tensors outside l^perp are refused
    TwoTensor<Rat> off(Side::V);
    off.coord(0, 2) = one;
    CHECK_THROWS_AS(project(ctx, off), std::invalid_argument);
}

TEST_CASE("projection context of a conjugated A-line") {
    SplitMix64 rng(66);
    const Fp one(1, 11);
    const auto std_line = make_a_line(standard_basis(one));
    for (int trial = 0; trial < 5; ++trial) {
        const auto h = random_gl6<Fp>(rng, kF11);
        const auto conj = Pencil<Fp>::from_generators(gl_apply(h, std_line.w0),
                                                      gl_apply(h, std_line.w1));
        auto ctx = make_context(conj);
        CHECK(ctx.center.dim() == 3);
        for (int t = 0; t < 8; ++t) {
            std::array<Fp, 6> par;
            for (auto& x : par) x = random_scalar(rng, kF11, Fp{});
            // forms moved by h, so tensors of l^perp move by h as well
            const auto w = gl_apply(h, chart_tensor(par, one));
            CHECK(in_l_perp(ctx, w));
            const auto img = project(ctx, w);
            CHECK(all_zero(five_equations_residual(img)));
            CHECK(g25_member(img));
        }
    }
}

TEST_CASE("delta substitution matches the coordinate order") {
    // spot check on a hand value: only X nonzero puts delta mass on (4,5)
    G25Point<Rat> pt;
    pt.c[0] = Rat(1);
    const auto d = pt.delta();
    for (int k = 0; k < 10; ++k) CHECK(d[k] == (k == 9 ? Rat(1) : Rat(0)));
    G25Point<Rat> pt2;
    pt2.c[1] = Rat(1);  // Y sits at (2,5) with a sign
    const auto d2 = pt2.delta();
    CHECK(d2[6] == Rat(-1));
}

TEST_CASE("B-lines have no projection context") {
    const Rat one(1);
    CHECK_THROWS_AS(make_context(make_b_line(standard_basis(one))), std::invalid_argument);
}
