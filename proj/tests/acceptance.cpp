// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. argv[1] (optional) is the path of the CLI binary, used by the
// determinism criterion.
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fano8/correspond.hpp"
#include "fano8/fano.hpp"
#include "fano8/json_io.hpp"
#include "fano8/pencil.hpp"
#include "fano8/projection.hpp"
#include "fano8/scan.hpp"

using namespace fano8;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class K>
std::vector<K> unit6(std::size_t i, const K& one) {
    std::vector<K> v(6);
    v[i] = one;
    return v;
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

// chart of G(2,6) cap l^perp for the standard A-line
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
bool residuals_zero(const std::array<K, 5>& r) {
    for (const K& x : r)
        if (!is_zero(x)) return false;
    return true;
}

const FieldDesc kF7 = FieldDesc::parse("fp:7");
const FieldDesc kF11 = FieldDesc::parse("fp:11");
const FieldDesc kQ = FieldDesc::parse("q");

// shared per-seed scan state over F11
struct SeedState {
    ThreefoldPair<Fp> pair;
    WXScanResult wx;
    ScanReport y;
    std::vector<Pencil<Fp>> y_lines;
};

SeedState make_state(std::uint64_t seed, const FieldDesc& f, std::size_t workers,
                     std::size_t max_y_lines) {
    SeedState st{build_threefold<Fp>(seed, f), {}, {}, {}};
    st.wx = scan_w_and_x(st.pair, workers, true);
    st.y = scan_y(st.pair, workers, true);
    if (max_y_lines) st.y_lines = y_lines_from_scan(st.pair, st.y, max_y_lines);
    return st;
}

// criteria 1 and 2 share the chart sample
struct ChartResult {
    bool residuals_ok = true;
    bool printed5_fails = false;
    bool plucker_ok = true;
    double elapsed = 0;
};

ChartResult run_chart() {
    const auto t0 = std::chrono::steady_clock::now();
    ChartResult out;
    SplitMix64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        std::array<Rat, 6> pq;
        for (auto& x : pq) x = random_scalar(rng, kQ, Rat{});
        const auto imgq = chart_image(chart_tensor(pq, Rat(1)));
        if (!residuals_zero(five_equations_residual(imgq))) out.residuals_ok = false;
        if (!residuals_zero(plucker_residuals(imgq))) out.plucker_ok = false;
        if (!is_zero(printed_equation_residuals(imgq)[1])) out.printed5_fails = true;

        std::array<Fp, 6> pp;
        for (auto& x : pp) x = random_scalar(rng, kF11, Fp{});
        const auto imgp = chart_image(chart_tensor(pp, Fp(1, 11)));
        if (!residuals_zero(five_equations_residual(imgp))) out.residuals_ok = false;
        if (!residuals_zero(plucker_residuals(imgp))) out.plucker_ok = false;
        if (!is_zero(printed_equation_residuals(imgp)[1])) out.printed5_fails = true;
    }
    out.elapsed = seconds_since(t0);
    return out;
}

void criterion_3() {
    const auto t0 = std::chrono::steady_clock::now();
    SplitMix64 rng(3);
    const Fp one(1, 11);
    const auto a_std = make_a_line(standard_basis(one));
    const auto b_std = make_b_line(standard_basis(one));
    std::size_t a_ok = 0, b_ok = 0, b_agree = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = random_gl6<Fp>(rng, kF11);
        const auto ca = classify_pencil(
            Pencil<Fp>::from_generators(gl_apply(g, a_std.w0), gl_apply(g, a_std.w1)));
        if (ca.tag == PencilTag::A && ca.quadric_rank == 4) ++a_ok;
        const auto conj_b =
            Pencil<Fp>::from_generators(gl_apply(g, b_std.w0), gl_apply(g, b_std.w1));
        const auto cb = classify_pencil(conj_b);
        if (cb.tag == PencilTag::B && cb.quadric_rank == 3 && cb.witness.has_value()) ++b_ok;
        // independent second criterion: the member kernels share a point
        const auto common = intersect(form_kernel(conj_b.w0), form_kernel(conj_b.w1));
        const bool rank_says_b = cb.tag == PencilTag::B;
        const bool kernel_says_b = common.dim() == 1;
        if (rank_says_b == kernel_says_b) ++b_agree;
    }
    const double el = seconds_since(t0);
    const bool pass = a_ok == 50 && b_ok == 50 && b_agree == 50 && el < 10.0;
    std::ostringstream d;
    d << "A rank-4 " << a_ok << "/50, B rank-3 " << b_ok << "/50, B criteria agree " << b_agree
      << "/50, " << el << " s";
    report(3, pass, d.str());
}

}  // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);

    // --- criteria 1 and 2: chart identities ---------------------------
    {
        const ChartResult c = run_chart();
        std::ostringstream d1;
        d1 << "400 chart points, " << c.elapsed << " s";
        report(1, c.residuals_ok && c.printed5_fails && c.elapsed < 5.0,
               d1.str() + (c.printed5_fails ? ", printed (5) fails as expected" : ", printed (5) unexpectedly holds"));
        report(2, c.plucker_ok, "delta substitution satisfies all five Pluecker relations");
    }

    // --- criterion 3: kernel-quadric ranks of conjugates --------------
    criterion_3();

    // --- shared scans -------------------------------------------------
    const std::size_t workers = 4;
    std::map<std::uint64_t, SeedState> s11;  // seed -> state over F11
    double t4_11 = 0;
    bool cross_check_ok = true;
    std::string cross_detail;
    try {
        const auto t0 = std::chrono::steady_clock::now();
        s11.emplace(1, make_state(1, kF11, workers, 40));
        t4_11 = seconds_since(t0);
        s11.emplace(2, make_state(2, kF11, workers, 0));
        s11.emplace(3, make_state(3, kF11, workers, 0));
    } catch (const std::logic_error& e) {
        cross_check_ok = false;
        cross_detail = e.what();
    }
    std::map<std::uint64_t, SeedState> s7;
    try {
        if (cross_check_ok)
            for (std::uint64_t seed : {1, 2, 3}) s7.emplace(seed, make_state(seed, kF7, workers, 0));
    } catch (const std::logic_error& e) {
        cross_check_ok = false;
        cross_detail = e.what();
    }

    // --- criterion 4: W = V cross-check -------------------------------
    {
        std::ostringstream d;
        if (cross_check_ok)
            d << "all points of P^5(F_7) and P^5(F_11), seed-1 scan at p=11 took " << t4_11
              << " s with " << workers << " workers";
        else
            d << cross_detail;
        report(4, cross_check_ok && t4_11 < 60.0, d.str());
    }
    if (!cross_check_ok) {
        for (int c = 5; c <= 13; ++c) report(c, false, "skipped: scans unavailable");
        return g_failures == 0 ? 0 : 1;
    }

    // --- criterion 5: quartic interpolation ---------------------------
    {
        const auto wi = interpolate_w(s11.at(1).pair, s11.at(1).wx);
        std::ostringstream d;
        d << "unique=" << wi.unique << " vanishes=" << wi.vanishes_on_w
          << " singular-on-Gamma=" << wi.gradient_zero_on_gammaw
          << " generic-smooth=" << wi.gradient_nonzero_somewhere;
        report(5, wi.ok(), d.str());
    }

    // --- criterion 6: Weil windows ------------------------------------
    {
        bool ok = true;
        std::ostringstream d;
        for (std::uint64_t seed : {1, 2, 3}) {
            for (const auto* m : {&s7, &s11}) {
                const SeedState& st = m->at(seed);
                const std::uint64_t p = st.pair.field.p;
                if (!weil_window_ok(st.wx.x.count, p) || !weil_window_ok(st.y.count, p)) ok = false;
                d << "seed " << seed << " p " << p << ": #X=" << st.wx.x.count
                  << " #Y=" << st.y.count << "; ";
            }
        }
        report(6, ok, d.str());
    }

    const SeedState& main_st = s11.at(1);

    // --- criterion 7: line correspondence round trip ------------------
    {
        bool ok = !main_st.wx.x_lines.empty();
        std::size_t n = 0;
        std::string err;
        try {
            for (const auto& l : main_st.wx.x_lines) {
                const auto bl = x_line_to_b_line(main_st.pair, l);
                if (classify_pencil(bl).tag != PencilTag::B) { ok = false; break; }
                const auto back = b_line_to_x_line(main_st.pair, bl);
                if (back.pencil != l.pencil || back.vertex != l.vertex) { ok = false; break; }
                ++n;
            }
        } catch (const std::exception& e) {
            ok = false;
            err = e.what();
        }
        std::ostringstream d;
        d << n << "/" << main_st.wx.x_lines.size() << " lines round-trip exactly, reseeds="
          << main_st.pair.reseeds;
        if (!err.empty()) d << ", error: " << err;
        report(7, ok, d.str());
    }

    // --- criterion 8: conic correspondence round trip -----------------
    std::vector<const Pencil<Fp>*> a_lines;
    {
        std::size_t tested = 0, ok_count = 0;
        std::string err;
        try {
            for (const auto& l : main_st.y_lines) {
                const auto tag = classify_pencil(l).tag;
                if (tag != PencilTag::A && tag != PencilTag::B) continue;
                if (tag == PencilTag::A) a_lines.push_back(&l);
                ++tested;
                const auto conic = y_line_to_x_conic(main_st.pair, l);
                if (conic.plane.dim() == 3 && main_st.pair.w10.contains(conic.plane) &&
                    x_conic_to_y_line(main_st.pair, conic).span == l.span)
                    ++ok_count;
            }
        } catch (const std::exception& e) {
            err = e.what();
        }
        std::ostringstream d;
        d << ok_count << "/" << tested << " Y-lines round-trip";
        if (!err.empty()) d << ", error: " << err;
        report(8, tested >= 5 && ok_count == tested && err.empty(), d.str());
    }

    // --- criterion 9: quartic splitting -------------------------------
    {
        std::size_t tested = 0, ok_count = 0;
        std::string err;
        try {
            const auto wi = interpolate_w(main_st.pair, main_st.wx);
            for (const auto* l : a_lines) {
                if (tested >= 3) break;
                // the sweep interpolation needs enough rational conic points
                if (conic_points(main_st.pair, y_line_to_x_conic(main_st.pair, *l)).size() < 6)
                    continue;
                ++tested;
                if (quartic_splitting_check(main_st.pair, *l, wi.quartic).ok()) ++ok_count;
            }
        } catch (const std::exception& e) {
            err = e.what();
        }
        std::ostringstream d;
        d << ok_count << "/" << tested << " A-lines split (need >= 3)";
        if (!err.empty()) d << ", error: " << err;
        report(9, tested >= 3 && ok_count == tested && err.empty(), d.str());
    }

    // --- criteria 10, 11 need a normalized A-line context -------------
    std::string ctx_err;
    const ProjectionContext<Fp>* ctx = nullptr;
    ProjectionContext<Fp> ctx_store;
    try {
        if (a_lines.empty()) throw std::runtime_error("no A-line available");
        ctx_store = make_context(*a_lines.front());
        ctx = &ctx_store;
    } catch (const std::exception& e) {
        ctx_err = e.what();
    }

    // --- criterion 10: projection regularity on X ---------------------
    {
        bool ok = ctx != nullptr;
        std::size_t projected = 0;
        std::set<std::vector<std::uint64_t>> images;
        std::string err = ctx_err;
        if (ctx) {
            try {
                for (const auto& x : main_st.wx.x_points) {
                    const auto img = restrict_to_x(*ctx, main_st.pair, x);
                    std::vector<Fp> v(img.c.begin(), img.c.end());
                    images.insert(detail::canonical_rep(v));
                    ++projected;
                }
            } catch (const std::exception& e) {
                ok = false;
                err = e.what();
            }
            if (images.size() != main_st.wx.x_points.size()) ok = false;
        }
        std::ostringstream d;
        d << projected << "/" << main_st.wx.x_points.size() << " X-points project, "
          << images.size() << " distinct images";
        if (!err.empty()) d << ", error: " << err;
        report(10, ok, d.str());
    }

    // --- criterion 11: sextic Hasse window ----------------------------
    {
        bool ok = ctx != nullptr;
        std::uint64_t count = 0;
        std::string err = ctx_err;
        if (ctx) {
            try {
                const auto [a, b] = segre_context(*ctx);
                count = scan_sextic(main_st.pair, a, b).count;
                ok = hasse_window_ok(count, 11);
            } catch (const std::exception& e) {
                ok = false;
                err = e.what();
            }
        }
        std::ostringstream d;
        d << "#(Sigma cap X)(F_11) = " << count << ", window |count - 12| <= 7";
        if (!err.empty()) d << ", error: " << err;
        report(11, ok, d.str());
    }

    // --- criterion 12: double-line normal form ------------------------
    {
        const Fp one(1, 11);
        TwoTensor<Fp> pa(Side::V), pb(Side::V), pc(Side::V);
        pa.coord(0, 1) = one;
        pb.coord(0, 2) = one;
        pc.coord(0, 3) = one;
        pc.coord(1, 2) = one;
        const auto lemma =
            Subspace<Fp>::from_span({pa.coords(), pb.coords(), pc.coords()}, 15);
        SplitMix64 rng(12);
        std::size_t ok_count = 0;
        std::string err;
        for (int trial = 0; trial < 25; ++trial) {
            const auto g = random_gl6<Fp>(rng, kF11);
            std::vector<std::vector<Fp>> rows;
            for (std::size_t i = 0; i < 3; ++i)
                rows.push_back(
                    gl_apply(g, TwoTensor<Fp>::from_coords(lemma.basis_vector(i), Side::V))
                        .coords());
            const auto plane = Subspace<Fp>::from_span(rows, 15);
            try {
                if (classify_plane_section(plane).tag == PlaneSectionTag::double_line &&
                    double_line_plane(double_line_normal_form(plane)) == plane)
                    ++ok_count;
            } catch (const std::exception& e) {
                err = e.what();
            }
        }
        std::ostringstream d;
        d << ok_count << "/25 conjugates reconstructed";
        if (!err.empty()) d << ", error: " << err;
        report(12, ok_count == 25, d.str());
    }

    // --- criterion 13: pipeline determinism ---------------------------
    {
        bool ok = false;
        std::string detail;
        if (argc < 2) {
            detail = "CLI path not supplied";
        } else {
            const std::string cli = argv[1];
            auto run = [&](const std::string& out) {
                const std::string cmd =
                    cli + " pipeline --seed 1 --field fp:11 --workers 4 --out " + out;
                return std::system(cmd.c_str()) == 0;
            };
            const std::string o1 = "acceptance_pipeline_1.json";
            const std::string o2 = "acceptance_pipeline_2.json";
            if (run(o1) && run(o2)) {
                std::ifstream f1(o1, std::ios::binary), f2(o2, std::ios::binary);
                std::stringstream b1, b2;
                b1 << f1.rdbuf();
                b2 << f2.rdbuf();
                ok = !b1.str().empty() && b1.str() == b2.str();
                detail = ok ? "two pipeline runs byte-identical ("
                                  + std::to_string(b1.str().size()) + " bytes)"
                            : "pipeline outputs differ";
            } else {
                detail = "pipeline invocation failed";
            }
            std::remove(o1.c_str());
            std::remove(o2.c_str());
        }
        report(13, ok, detail);
    }

    return g_failures == 0 ? 0 : 1;
}
