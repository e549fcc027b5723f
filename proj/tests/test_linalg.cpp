#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fano8/matrix.hpp"
#include "fano8/poly.hpp"
#include "fano8/quadform.hpp"
#include "fano8/scalar.hpp"
#include "fano8/subspace.hpp"

using namespace fano8;

namespace {

const FieldDesc kF11 = FieldDesc::parse("fp:11");
const FieldDesc kQ = FieldDesc::parse("q");

Fp fp(std::int64_t v) { return Fp(v, 11); }

// skew Gram of f0^f2 + f1^f3, written out by hand
template <class K>
Matrix<K> a_generator_gram(const K& one) {
    Matrix<K> g(6, 6);
    g.at(0, 2) = one;
    g.at(2, 0) = -one;
    g.at(1, 3) = one;
    g.at(3, 1) = -one;
    return g;
}

// skew Gram of f0^f3 + f1^f4
template <class K>
Matrix<K> b_generator_gram(const K& one) {
    Matrix<K> g(6, 6);
    g.at(0, 3) = one;
    g.at(3, 0) = -one;
    g.at(1, 4) = one;
    g.at(4, 1) = -one;
    return g;
}

template <class K>
std::vector<K> unit(std::size_t n, std::size_t i, const K& one) {
    std::vector<K> v(n);
    v[i] = one;
    return v;
}

}  // namespace

TEST_CASE("rank basics") {
    CHECK(rank(Matrix<Rat>(6, 6)) == 0);
    CHECK(rank(Matrix<Fp>(6, 6)) == 0);
    CHECK(rank(Matrix<Rat>::identity(6, Rat(1))) == 6);
    CHECK(rank(a_generator_gram(Rat(1))) == 4);
    CHECK(rank(a_generator_gram(fp(1))) == 4);
}

TEST_CASE("kernel examples") {
    CHECK(kernel(Matrix<Rat>::identity(6, Rat(1))).rows() == 0);
    // f0 = f1 = f2 = f3 = 0 forces the kernel span{e4, e5}
    auto k = kernel(a_generator_gram(Rat(1)));
    REQUIRE(k.rows() == 2);
    CHECK(k.row(0) == unit(6, 4, Rat(1)));
    CHECK(k.row(1) == unit(6, 5, Rat(1)));
    auto kb = kernel(b_generator_gram(Rat(1)));
    REQUIRE(kb.rows() == 2);
    CHECK(kb.row(0) == unit(6, 2, Rat(1)));
    CHECK(kb.row(1) == unit(6, 5, Rat(1)));
}

TEST_CASE("rank plus kernel dimension is the column count") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        Matrix<Rat> mq(4, 7);
        Matrix<Fp> mp(4, 7);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 7; ++j) {
                mq.at(i, j) = random_scalar(rng, kQ, Rat{});
                mp.at(i, j) = random_scalar(rng, kF11, Fp{});
            }
        CHECK(rank(mq) + kernel(mq).rows() == 7);
        CHECK(rank(mp) + kernel(mp).rows() == 7);
    }
}

TEST_CASE("fraction-free elimination matches F_p elimination on integer input") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix<Rat> mq(5, 8);
        Matrix<Fp> mp(5, 8);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 8; ++j) {
                const std::int64_t v = static_cast<std::int64_t>(rng.below(41)) - 20;
                mq.at(i, j) = Rat(static_cast<long>(v));
                mp.at(i, j) = Fp(v, 11);
            }
        const auto eq = echelon(mq);
        const auto ep = echelon(mp);
        // comparable only when no rational pivot degenerates mod 11
        bool reducible = true;
        for (const Rat& x : eq.rref.data())
            if (x.get_den() % 11 == 0) { reducible = false; break; }
        if (!reducible || eq.rank != ep.rank || eq.pivots != ep.pivots) continue;
        for (std::size_t i = 0; i < eq.rref.rows(); ++i)
            for (std::size_t j = 0; j < 8; ++j) {
                const Rat& x = eq.rref.at(i, j);
                const Fp num(mpz_class(x.get_num() % 11).get_si(), 11);
                const Fp den(mpz_class(x.get_den() % 11).get_si(), 11);
                CHECK(num == ep.rref.at(i, j) * den);
            }
    }
}

TEST_CASE("subspace algebra") {
    const Rat one(1);
    auto s01 = Subspace<Rat>::from_span({unit(6, 0, one), unit(6, 1, one)}, 6);
    auto s12 = Subspace<Rat>::from_span({unit(6, 1, one), unit(6, 2, one)}, 6);
    auto inter = intersect(s01, s12);
    REQUIRE(inter.dim() == 1);
    CHECK(inter.basis_vector(0) == unit(6, 1, one));

    auto s04 = Subspace<Rat>::from_span(
        {unit(6, 0, one), unit(6, 1, one), unit(6, 2, one), unit(6, 3, one), unit(6, 4, one)}, 6);
    auto ann = s04.annihilator();
    REQUIRE(ann.dim() == 1);
    CHECK(ann.basis_vector(0) == unit(6, 5, one));

    auto s45 = Subspace<Rat>::from_span({unit(6, 4, one), unit(6, 5, one)}, 6);
    auto s23 = Subspace<Rat>::from_span({unit(6, 2, one), unit(6, 3, one)}, 6);
    CHECK(sum(s45, s23).dim() == 4);

    // dim(a cap b) + dim(a + b) = dim a + dim b, annihilator involutive
    SplitMix64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::vector<Fp>> ra, rb;
        for (int i = 0; i < 3; ++i) {
            std::vector<Fp> v(7), w(7);
            for (auto& x : v) x = random_scalar(rng, kF11, Fp{});
            for (auto& x : w) x = random_scalar(rng, kF11, Fp{});
            ra.push_back(v);
            rb.push_back(w);
        }
        auto a = Subspace<Fp>::from_span(ra, 7);
        auto b = Subspace<Fp>::from_span(rb, 7);
        CHECK(intersect(a, b).dim() + sum(a, b).dim() == a.dim() + b.dim());
        CHECK(a.annihilator().annihilator() == a);
    }
}

TEST_CASE("echelon canonicity: same subspace, same stored basis") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::vector<Fp>> rows;
        for (int i = 0; i < 3; ++i) {
            std::vector<Fp> v(6);
            for (auto& x : v) x = random_scalar(rng, kF11, Fp{});
            rows.push_back(v);
        }
        auto s = Subspace<Fp>::from_span(rows, 6);
        // respan by random combinations of the rows
        std::vector<std::vector<Fp>> mixed;
        for (int i = 0; i < 4; ++i) {
            std::vector<Fp> v(6);
            for (int r = 0; r < 3; ++r) {
                const Fp c = random_scalar(rng, kF11, Fp{});
                for (int j = 0; j < 6; ++j) v[j] += c * rows[r][j];
            }
            mixed.push_back(v);
        }
        auto s2 = Subspace<Fp>::from_span(mixed, 6);
        if (s2.dim() == s.dim()) CHECK(s == s2);
    }
}

TEST_CASE("quadratic form rank and restriction") {
    const Rat one(1);
    // q = x2 x5 - x3 x4 on the 4-space with coordinates (x2,x3,x4,x5)
    Form<Rat> f4(4, 2);
    f4.coeff(f4.index_of({1, 0, 0, 1})) = one;
    f4.coeff(f4.index_of({0, 1, 1, 0})) = -one;
    auto q4 = QuadForm<Rat>::from_form(f4);
    CHECK(q4.rank() == 4);
    // q = x2 x4 - x3^2
    Form<Rat> f3(4, 2);
    f3.coeff(f3.index_of({1, 0, 1, 0})) = one;
    f3.coeff(f3.index_of({0, 2, 0, 0})) = -one;
    CHECK(QuadForm<Rat>::from_form(f3).rank() == 3);
    // restriction to a ruling line of the rank-4 quadric is the zero form
    auto line = Subspace<Rat>::from_span({unit(4, 0, one), unit(4, 1, one)}, 4);
    CHECK(q4.restrict_to(line).rank() == 0);
}

TEST_CASE("interpolation of vanishing forms") {
    const Rat one(1);
    // two points of P^2 span a pencil-free line
    auto lines = interpolate_forms<Rat>({{one, Rat(0), Rat(0)}, {Rat(0), one, Rat(0)}}, 3, 1);
    REQUIRE(lines.size() == 1);
    CHECK(is_zero(lines[0].eval({one, Rat(5), Rat(0)})));
    // all F_7 points of the smooth conic xz = y^2 pin the conic uniquely
    std::vector<std::vector<Fp>> conic_pts;
    for (int t = 0; t < 7; ++t)
        conic_pts.push_back({Fp(1, 7), Fp(t, 7), Fp(t * t, 7)});
    conic_pts.push_back({Fp(0, 7), Fp(0, 7), Fp(1, 7)});
    auto conics = interpolate_forms<Fp>(conic_pts, 3, 2);
    REQUIRE(conics.size() == 1);
    Form<Fp> expect(3, 2);
    expect.coeff(expect.index_of({1, 0, 1})) = Fp(1, 7);
    expect.coeff(expect.index_of({0, 2, 0})) = Fp(-1, 7);
    CHECK(proportional(conics[0], expect));
}

TEST_CASE("binary form common roots") {
    const Rat one(1);
    // (x - 1) and (x^2 - 1) share the root 1
    CHECK(binary_forms_have_common_root<Rat>({{-one, one}, {-one, Rat(0), one}}));
    // x and x + 1 share nothing, also not at infinity
    CHECK_FALSE(binary_forms_have_common_root<Rat>({{Rat(0), one}, {one, one}}));
    // both vanish at infinity (degree drop in the top coefficient slot)
    CHECK(binary_forms_have_common_root<Rat>({{one, one, Rat(0)}, {Rat(2), one, Rat(0)}}));
}

TEST_CASE("inverse") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix<Fp> m(5, 5);
        for (auto i = 0; i < 5; ++i)
            for (auto j = 0; j < 5; ++j) m.at(i, j) = random_scalar(rng, kF11, Fp{});
        if (rank(m) != 5) continue;
        CHECK(m * inverse(m) == Matrix<Fp>::identity(5, Fp(1, 11)));
    }
    CHECK_THROWS_AS(inverse(Matrix<Rat>(3, 3, std::vector<Rat>(9, Rat(0)))), std::domain_error);
}
