#ifndef FANO8_FANO_HPP
#define FANO8_FANO_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fano8/exterior.hpp"
#include "fano8/pencil.hpp"
#include "fano8/poly.hpp"

namespace fano8 {

// The pair (X, Y): X = G(2,6) cut by the 10-dim W10 in Lambda^2 V, and the
// orthogonal cubic Y in P(U5), U5 = annihilator of W10 in Lambda^2 V*.
template <class K>
struct ThreefoldPair {
    std::uint64_t seed = 0;      // effective seed (requested + reseeds)
    std::uint64_t reseeds = 0;
    FieldDesc field;
    Subspace<K> w10;             // 10-dim in Lambda^2 V
    Subspace<K> u5;              // 5-dim in Lambda^2 V*
    Form<K> cubic;               // degree 3 in the 5 coordinates on U5

    TwoTensor<K> u5_form(std::size_t a) const {
        return TwoTensor<K>::from_coords(u5.basis_vector(a), Side::VDual);
    }
    // the form with the given coordinates in the stored basis of U5
    TwoTensor<K> y_form(const std::vector<K>& u) const {
        if (u.size() != 5) throw std::invalid_argument("y_form: 5 coordinates required");
        TwoTensor<K> acc(Side::VDual);
        for (std::size_t a = 0; a < 5; ++a) acc = acc + u5_form(a).scaled(u[a]);
        return acc;
    }
};

namespace detail {

// cubic(u) = triple_wedge(sum u_a sigma_a) / 6 via the symmetric trilinear
// form T(a,b,c) = <sigma_a ^ sigma_b, sigma_c>
template <class K>
Form<K> cubic_from_u5(const Subspace<K>& u5) {
    std::array<TwoTensor<K>, 5> sig;
    for (std::size_t a = 0; a < 5; ++a)
        sig[a] = TwoTensor<K>::from_coords(u5.basis_vector(a), Side::VDual);
    Form<K> f(5, 3);
    const K one = k_int(1, u5.one());
    for (std::size_t m = 0; m < f.terms(); ++m) {
        const auto& e = f.exponents()[m];
        std::vector<int> idx;
        int fact = 1;
        for (int v = 0; v < 5; ++v) {
            for (int r = 0; r < e[v]; ++r) idx.push_back(v);
            for (int r = 2; r <= e[v]; ++r) fact *= r;
        }
        const K t = pair_42(wedge22(sig[idx[0]], sig[idx[1]]), sig[idx[2]]);
        f.coeff(m) = t / k_int(fact, one);
    }
    return f;
}

// canonical representatives of P^{n-1}(F_p): first nonzero coordinate 1,
// lexicographic in the remaining ones
inline bool next_projective_rep(std::vector<std::uint64_t>& u, std::size_t& lead,
                                std::uint64_t p) {
    for (std::size_t j = u.size(); j-- > lead + 1;) {
        if (++u[j] < p) return true;
        u[j] = 0;
    }
    // advance the leading-one position
    if (lead + 1 >= u.size()) return false;
    u[lead] = 0;
    ++lead;
    u[lead] = 1;
    return true;
}

template <class K>
bool generic_u5(const Subspace<K>& u5, const FieldDesc& field, std::uint64_t seed,
                std::size_t rational_samples = 10000);

template <>
inline bool generic_u5<Fp>(const Subspace<Fp>& u5, const FieldDesc& field, std::uint64_t,
                           std::size_t) {
    const std::uint64_t p = field.p;
    std::vector<std::uint64_t> rep(5, 0);
    std::size_t lead = 0;
    rep[0] = 1;
    std::array<TwoTensor<Fp>, 5> sig;
    for (std::size_t a = 0; a < 5; ++a)
        sig[a] = TwoTensor<Fp>::from_coords(u5.basis_vector(a), Side::VDual);
    do {
        TwoTensor<Fp> w(Side::VDual);
        for (std::size_t a = 0; a < 5; ++a) {
            if (rep[a] == 0) continue;
            w = w + sig[a].scaled(Fp(static_cast<std::int64_t>(rep[a]), p));
        }
        if (wedge22(w, w).is_zero_tensor()) return false;
    } while (next_projective_rep(rep, lead, p));
    return true;
}

template <>
inline bool generic_u5<Rat>(const Subspace<Rat>& u5, const FieldDesc& field,
                            std::uint64_t seed, std::size_t rational_samples) {
    SplitMix64 rng(seed ^ 0xa5a5a5a5a5a5a5a5ULL);
    std::array<TwoTensor<Rat>, 5> sig;
    for (std::size_t a = 0; a < 5; ++a)
        sig[a] = TwoTensor<Rat>::from_coords(u5.basis_vector(a), Side::VDual);
    for (std::size_t s = 0; s < rational_samples; ++s) {
        TwoTensor<Rat> w(Side::VDual);
        bool nonzero = false;
        for (std::size_t a = 0; a < 5; ++a) {
            const Rat c = random_scalar(rng, field, Rat{});
            if (!is_zero(c)) nonzero = true;
            w = w + sig[a].scaled(c);
        }
        if (!nonzero) continue;
        if (wedge22(w, w).is_zero_tensor()) return false;
    }
    return true;
}

}  // namespace detail

// Seeded construction. A seed whose W10 fails the genericity certificate
// (some member of U5 decomposable, or a degenerate cubic) is incremented
// and retried, up to the bound.
template <class K>
ThreefoldPair<K> build_threefold(std::uint64_t seed, const FieldDesc& field,
                                 std::uint64_t max_reseeds = 64) {
    for (std::uint64_t attempt = 0; attempt <= max_reseeds; ++attempt) {
        const std::uint64_t s = seed + attempt;
        SplitMix64 rng(s);
        Matrix<K> m(10, 15);
        for (std::size_t i = 0; i < 10; ++i)
            for (std::size_t j = 0; j < 15; ++j)
                m.at(i, j) = random_scalar(rng, field, K{});
        if (rank(m) != 10) continue;
        ThreefoldPair<K> pair;
        pair.seed = s;
        pair.reseeds = attempt;
        pair.field = field;
        pair.w10 = Subspace<K>::from_span(m);
        pair.u5 = pair.w10.annihilator();
        if (pair.u5.dim() != 5) continue;
        pair.cubic = detail::cubic_from_u5(pair.u5);
        if (pair.cubic.is_zero_form()) continue;
        if (!detail::generic_u5<K>(pair.u5, field, s)) continue;
        return pair;
    }
    throw std::runtime_error("build_threefold: no generic seed found within the reseed bound");
}

template <class K>
bool x_member(const ThreefoldPair<K>& pair, const TwoTensor<K>& w) {
    if (w.side != Side::V) throw std::invalid_argument("x_member: tensor must live in Lambda^2 V");
    if (w.is_zero_tensor()) throw std::invalid_argument("x_member: zero tensor (projective convention)");
    return pair.w10.contains(w.coords()) && wedge22(w, w).is_zero_tensor();
}

template <class K>
bool y_member(const ThreefoldPair<K>& pair, const std::vector<K>& u) {
    if (u.size() != 5) throw std::invalid_argument("y_member: 5 coordinates required");
    bool nonzero = false;
    for (const K& x : u)
        if (!is_zero(x)) { nonzero = true; break; }
    if (!nonzero) throw std::invalid_argument("y_member: zero point (projective convention)");
    return is_zero(pair.cubic.eval(u));
}

// matrix of sigma -> iota_v sigma on the stored basis of U5: row a is the
// covector sigma_a(v, .)
template <class K>
Matrix<K> palatini_map_y(const ThreefoldPair<K>& pair, const std::vector<K>& v) {
    Matrix<K> m(5, 6);
    for (std::size_t a = 0; a < 5; ++a) {
        const auto row = contract(v, pair.u5_form(a));
        for (std::size_t b = 0; b < 6; ++b) m.at(a, b) = row[b];
    }
    return m;
}

template <class K>
std::size_t palatini_rank(const ThreefoldPair<K>& pair, const std::vector<K>& v) {
    return rank(palatini_map_y(pair, v));
}

// v lies on the Palatini quartic iff some form in U5 kills it
template <class K>
bool w_member(const ThreefoldPair<K>& pair, const std::vector<K>& v) {
    bool nonzero = false;
    for (const K& x : v)
        if (!is_zero(x)) { nonzero = true; break; }
    if (!nonzero) throw std::invalid_argument("w_member: zero point");
    return palatini_rank(pair, v) <= 4;
}

// matrix of y -> v ^ y mod W10, in the quotient coordinates given by the
// non-pivot columns of the echelon basis of W10. Computed by reduction
// against W10 (independent of the U5 pairing route).
template <class K>
Matrix<K> palatini_map_x(const ThreefoldPair<K>& pair, const std::vector<K>& v) {
    const Matrix<K>& w = pair.w10.basis();
    std::vector<std::size_t> pivot_of(15, 15);
    std::vector<std::size_t> free_cols;
    {
        std::size_t i = 0;
        for (std::size_t c = 0; c < 15; ++c) {
            if (i < w.rows() && !is_zero(w.at(i, c)) &&
                [&] {  // c is the pivot of row i
                    for (std::size_t cc = 0; cc < c; ++cc)
                        if (!is_zero(w.at(i, cc))) return false;
                    return true;
                }()) {
                pivot_of[c] = i;
                ++i;
            } else {
                free_cols.push_back(c);
            }
        }
    }
    if (free_cols.size() != 5) throw std::logic_error("palatini_map_x: quotient dimension != 5");
    Matrix<K> m(5, 6);
    const K one = k_int(1, pair.w10.one());
    for (std::size_t b = 0; b < 6; ++b) {
        std::vector<K> eb(6);
        eb[b] = one;
        std::vector<K> r = wedge2(v, eb).coords();
        for (std::size_t c = 0; c < 15; ++c) {
            if (pivot_of[c] == 15 || is_zero(r[c])) continue;
            const K f = r[c];
            const std::size_t i = pivot_of[c];
            for (std::size_t j = 0; j < 15; ++j) r[j] -= f * w.at(i, j);
        }
        for (std::size_t q = 0; q < 5; ++q) m.at(q, b) = r[free_cols[q]];
    }
    return m;
}

template <class K>
struct XLinesResult {
    std::size_t kernel_dim = 0;
    std::optional<GrassPoint<K>> point;  // kernel_dim == 2: the unique line of X through v
    std::optional<GrassLine<K>> line;    // kernel_dim == 3: v is a vertex of a line of X
};

// Lines of X through [v]: kernel K of palatini_map_x always contains v;
// dim 2 gives the unique point [Lambda^2 K] of X, dim 3 a pencil of them.
template <class K>
XLinesResult<K> x_lines_through(const ThreefoldPair<K>& pair, const std::vector<K>& v) {
    const Subspace<K> ker = Subspace<K>::from_echelon(kernel(palatini_map_x(pair, v)));
    if (!ker.contains(v)) throw std::logic_error("x_lines_through: kernel does not contain v");
    XLinesResult<K> out;
    out.kernel_dim = ker.dim();
    if (ker.dim() == 2) {
        const TwoTensor<K> t = wedge2(ker.basis_vector(0), ker.basis_vector(1));
        out.point = decompose(t);
        if (!x_member(pair, t)) throw std::logic_error("x_lines_through: harvested point not on X");
    } else if (ker.dim() == 3) {
        out.line = make_grass_line(v, ker);
        if (!pair.w10.contains(out.line->pencil))
            throw std::logic_error("x_lines_through: vertex pencil not inside W10");
    }
    return out;
}

// the kernel line n_y of the rank-4 form at a point of Y
template <class K>
Subspace<K> kernel_line(const ThreefoldPair<K>& pair, const std::vector<K>& u) {
    if (!y_member(pair, u)) throw std::invalid_argument("kernel_line: point not on Y");
    Subspace<K> ker = form_kernel(pair.y_form(u));
    if (ker.dim() != 2) throw std::logic_error("kernel_line: kernel dimension != 2 (certificate breach)");
    return ker;
}

// X smooth at p iff the affine tangent space meets W10 in dimension 4
// (projective tangent dimension 3)
template <class K>
bool x_smooth_at(const ThreefoldPair<K>& pair, const GrassPoint<K>& p) {
    if (!x_member(pair, p.tensor)) throw std::invalid_argument("x_smooth_at: point not on X");
    return intersect(tangent_space(p), pair.w10).dim() == 4;
}

template <class K>
bool y_smooth_at(const ThreefoldPair<K>& pair, const std::vector<K>& u) {
    if (!y_member(pair, u)) throw std::invalid_argument("y_smooth_at: point not on Y");
    for (const K& g : pair.cubic.gradient_at(u))
        if (!is_zero(g)) return true;
    return false;
}

}  // namespace fano8

#endif
