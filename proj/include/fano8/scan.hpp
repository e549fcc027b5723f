#ifndef FANO8_SCAN_HPP
#define FANO8_SCAN_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "fano8/correspond.hpp"
#include "fano8/fano.hpp"
#include "fano8/projection.hpp"

namespace fano8 {

struct ScanReport {
    std::string target;
    std::uint64_t p = 0;
    std::uint64_t count = 0;
    std::size_t workers = 1;
    // canonical projective representatives (first nonzero coordinate 1) in
    // a deterministic order; empty when inventory not requested
    std::vector<std::vector<std::uint64_t>> inventory;
};

namespace detail {

// all canonical representatives of P^{n-1}(F_p), lexicographic within each
// leading-one stratum
inline std::vector<std::vector<std::uint64_t>> projective_reps(std::size_t n, std::uint64_t p) {
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> rep(n, 0);
    std::size_t lead = 0;
    rep[0] = 1;
    do {
        out.push_back(rep);
    } while (next_projective_rep(rep, lead, p));
    return out;
}

inline std::vector<Fp> to_fp(const std::vector<std::uint64_t>& rep, std::uint64_t p) {
    std::vector<Fp> v(rep.size());
    for (std::size_t i = 0; i < rep.size(); ++i) v[i] = Fp(static_cast<std::int64_t>(rep[i]), p);
    return v;
}

// run fn(i) for i in [0, n) across the given number of threads, chunked
template <class F>
void parallel_for(std::size_t n, std::size_t workers, F fn) {
    if (workers <= 1 || n < 2 * workers) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

// canonical representative of a projective point: scale so the first
// nonzero coordinate is 1
inline std::vector<std::uint64_t> canonical_rep(const std::vector<Fp>& v) {
    std::size_t lead = 0;
    while (lead < v.size() && v[lead].v == 0) ++lead;
    if (lead == v.size()) throw std::invalid_argument("canonical_rep: zero vector");
    const Fp s = inv(v[lead]);
    std::vector<std::uint64_t> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = (v[i] * s).v;
    return out;
}

}  // namespace detail

// point count (and optional inventory) of the cubic Y in P^4
inline ScanReport scan_y(const ThreefoldPair<Fp>& pair, std::size_t workers = 1,
                         bool inventory = false) {
    if (pair.field.rational) throw std::invalid_argument("scan_y: finite field required");
    const std::uint64_t p = pair.field.p;
    const auto reps = detail::projective_reps(5, p);
    std::vector<std::uint8_t> hit(reps.size(), 0);
    detail::parallel_for(reps.size(), workers, [&](std::size_t i) {
        hit[i] = is_zero(pair.cubic.eval(detail::to_fp(reps[i], p))) ? 1 : 0;
    });
    ScanReport rep{"y", p, 0, workers, {}};
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (!hit[i]) continue;
        ++rep.count;
        if (inventory) rep.inventory.push_back(reps[i]);
    }
    return rep;
}

struct WXScanResult {
    ScanReport w, x, gammaw;
    std::vector<GrassPoint<Fp>> x_points;  // deduped, canonical order
    std::vector<GrassLine<Fp>> x_lines;    // from dim-3 kernels (vertices of Gamma(W))
};

// Single pass over P^5(F_p): Palatini rank through both routes with the
// W = V cross-check at every point, harvesting X-points, Gamma(W), and
// the lines of X.
inline WXScanResult scan_w_and_x(const ThreefoldPair<Fp>& pair, std::size_t workers = 1,
                                 bool inventory = false) {
    if (pair.field.rational) throw std::invalid_argument("scan_w_and_x: finite field required");
    const std::uint64_t p = pair.field.p;
    const auto reps = detail::projective_reps(6, p);
    std::vector<std::uint8_t> kdim(reps.size(), 0);
    std::vector<std::int8_t> bad(reps.size(), 0);
    detail::parallel_for(reps.size(), workers, [&](std::size_t i) {
        const auto v = detail::to_fp(reps[i], p);
        const std::size_t r = rank(palatini_map_y(pair, v));
        const std::size_t k = 6 - rank(palatini_map_x(pair, v));
        kdim[i] = static_cast<std::uint8_t>(k);
        if ((r <= 4) != (k >= 2)) bad[i] = 1;
    });
    for (std::size_t i = 0; i < reps.size(); ++i)
        if (bad[i]) {
            std::string msg = "scan_w_and_x: W = V cross-check failed at point";
            for (auto c : reps[i]) msg += " " + std::to_string(c);
            throw std::logic_error(msg);
        }
    WXScanResult out;
    out.w = ScanReport{"w", p, 0, workers, {}};
    out.x = ScanReport{"x", p, 0, workers, {}};
    out.gammaw = ScanReport{"gammaw", p, 0, workers, {}};
    std::vector<std::vector<std::uint64_t>> x_seen;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const std::size_t k = kdim[i];
        if (k < 2) continue;
        ++out.w.count;
        if (inventory) out.w.inventory.push_back(reps[i]);
        const auto v = detail::to_fp(reps[i], p);
        if (k == 2) {
            const auto res = x_lines_through(pair, v);
            const auto trep = detail::canonical_rep(res.point->tensor.coords());
            auto it = std::lower_bound(x_seen.begin(), x_seen.end(), trep);
            if (it == x_seen.end() || *it != trep) {
                x_seen.insert(it, trep);
                out.x_points.push_back(*res.point);
            }
        } else {
            ++out.gammaw.count;
            if (inventory) out.gammaw.inventory.push_back(reps[i]);
            if (k == 3) out.x_lines.push_back(x_lines_through(pair, v).line.value());
        }
    }
    out.x.count = x_seen.size();
    if (inventory) out.x.inventory = std::move(x_seen);
    // re-sort x_points to match the canonical tensor order
    std::sort(out.x_points.begin(), out.x_points.end(),
              [](const GrassPoint<Fp>& a, const GrassPoint<Fp>& b) {
                  return detail::canonical_rep(a.tensor.coords()) <
                         detail::canonical_rep(b.tensor.coords());
              });
    return out;
}

struct WInterpolation {
    Form<Fp> quartic;
    bool unique = false;
    bool vanishes_on_w = false;
    bool gradient_zero_on_gammaw = false;
    bool gradient_nonzero_somewhere = false;

    bool ok() const {
        return unique && vanishes_on_w && gradient_zero_on_gammaw && gradient_nonzero_somewhere;
    }
};

// recover the Palatini quartic from the W inventory and verify the
// singular-locus claims pointwise
inline WInterpolation interpolate_w(const ThreefoldPair<Fp>& pair, const WXScanResult& scan) {
    if (scan.w.inventory.empty())
        throw std::invalid_argument("interpolate_w: W inventory required");
    const std::uint64_t p = scan.w.p;
    // a spanning sample: 126 monomials of degree 4 in 6 variables
    const std::size_t sample = std::min<std::size_t>(scan.w.inventory.size(), 300);
    std::vector<std::vector<Fp>> pts;
    const std::size_t stride = std::max<std::size_t>(1, scan.w.inventory.size() / sample);
    for (std::size_t i = 0; i < scan.w.inventory.size(); i += stride)
        pts.push_back(detail::to_fp(scan.w.inventory[i], p));
    const auto forms = interpolate_forms(pts, 6, 4);
    WInterpolation out;
    out.unique = forms.size() == 1;
    if (!out.unique) return out;
    out.quartic = forms[0];
    out.vanishes_on_w = true;
    for (const auto& rep : scan.w.inventory)
        if (!is_zero(out.quartic.eval(detail::to_fp(rep, p)))) { out.vanishes_on_w = false; break; }
    std::array<Form<Fp>, 6> grad;
    for (int v = 0; v < 6; ++v) grad[v] = out.quartic.derivative(v);
    auto grad_zero = [&](const std::vector<Fp>& x) {
        for (int v = 0; v < 6; ++v)
            if (!is_zero(grad[v].eval(x))) return false;
        return true;
    };
    out.gradient_zero_on_gammaw = true;
    for (const auto& rep : scan.gammaw.inventory)
        if (!grad_zero(detail::to_fp(rep, p))) { out.gradient_zero_on_gammaw = false; break; }
    for (const auto& rep : scan.w.inventory)
        if (!grad_zero(detail::to_fp(rep, p))) { out.gradient_nonzero_somewhere = true; break; }
    return out;
}

inline ScanReport scan_sextic(const ThreefoldPair<Fp>& pair, const Subspace<Fp>& a,
                              const Subspace<Fp>& b) {
    const auto pts = sextic_points(pair, a, b);
    ScanReport rep{"sextic", pair.field.p, pts.size(), 1, {}};
    for (const auto& [va, vb] : pts) {
        auto row = detail::canonical_rep(va);
        const auto rb = detail::canonical_rep(vb);
        row.insert(row.end(), rb.begin(), rb.end());
        rep.inventory.push_back(std::move(row));
    }
    std::sort(rep.inventory.begin(), rep.inventory.end());
    return rep;
}

// |count - (p^3+p^2+p+1)| <= 10 p^{3/2}, compared exactly as
// (count - expected)^2 <= 100 p^3
inline bool weil_window_ok(std::uint64_t count, std::uint64_t p) {
    const std::int64_t expected = static_cast<std::int64_t>(p * p * p + p * p + p + 1);
    const std::int64_t d = static_cast<std::int64_t>(count) - expected;
    return d * d <= static_cast<std::int64_t>(100 * p * p * p);
}

// |count - (p+1)| <= ceil(2 sqrt(p)): genus-1 Hasse bound
inline bool hasse_window_ok(std::uint64_t count, std::uint64_t p) {
    const std::int64_t d =
        static_cast<std::int64_t>(count) - static_cast<std::int64_t>(p + 1);
    // smallest m with m^2 >= 4p
    std::int64_t m = 0;
    while (m * m < static_cast<std::int64_t>(4 * p)) ++m;
    return d >= -m && d <= m;
}

// Lines on Y: all pairs of scanned Y-points whose spanning pencil of forms
// lies identically in the cubic; canonical dedupe by the pencil subspace.
inline std::vector<Pencil<Fp>> y_lines_from_scan(const ThreefoldPair<Fp>& pair,
                                                 const ScanReport& yscan,
                                                 std::size_t max_lines = 0) {
    const std::uint64_t p = yscan.p;
    std::vector<Pencil<Fp>> lines;
    std::vector<std::vector<std::uint64_t>> seen;  // sorted canonical pencil keys
    const auto& inv = yscan.inventory;
    for (std::size_t i = 0; i < inv.size(); ++i) {
        const auto u0 = detail::to_fp(inv[i], p);
        for (std::size_t j = i + 1; j < inv.size(); ++j) {
            const auto u1 = detail::to_fp(inv[j], p);
            // the binary cubic on the pencil must vanish identically; both
            // endpoints are on Y already, so 3 interior parameters kill a
            // nonzero cubic (> 3 projective roots)
            bool on_y = true;
            for (int t = 1; t <= 3 && on_y; ++t) {
                std::vector<Fp> u(5);
                const Fp tk(t, p);
                for (int a = 0; a < 5; ++a) u[a] = u0[a] + tk * u1[a];
                on_y = is_zero(pair.cubic.eval(u));
            }
            if (!on_y) continue;
            Subspace<Fp> span = Subspace<Fp>::from_span({u0, u1}, 5);
            if (span.dim() != 2) continue;
            std::vector<std::uint64_t> key;
            for (const Fp& x : span.basis().data()) key.push_back(x.v);
            auto it = std::lower_bound(seen.begin(), seen.end(), key);
            if (it != seen.end() && *it == key) continue;
            seen.insert(it, std::move(key));
            lines.push_back(Pencil<Fp>::from_generators(pair.y_form(u0), pair.y_form(u1)));
            if (max_lines && lines.size() >= max_lines) return lines;
        }
    }
    return lines;
}

}  // namespace fano8

#endif
