// fano8: exact-arithmetic engine for genus-8 Fano threefolds and their
// orthogonal Pfaffian cubics. All commands read/write single JSON
// documents; see README for the wire formats.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fano8/json_io.hpp"

namespace {

using namespace fano8;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open " + out_path);
        out << j.dump(2) << "\n";
    }
}

struct Options {
    std::uint64_t seed = 1;
    std::string field = "fp:11";
    std::uint64_t p = 11;
    std::size_t workers = 1;
    std::string in_path, pair_path, line_path, point_path, out_path, inventory_path;
    std::string from, what, suite = "all";
    bool scan_x = false;
};

template <class K>
json build_pair_json(const Options& opt) {
    const FieldDesc f = FieldDesc::parse(opt.field);
    return pair_json(build_threefold<K>(opt.seed, f));
}

template <class K>
json classify_pencil_json(const Options& opt) {
    const FieldDesc f = FieldDesc::parse(opt.field);
    const json j = read_json_file(opt.in_path);
    const Pencil<K> l = pencil_from_json<K>(j, f);
    return pencil_class_json(classify_pencil(l));
}

template <class K>
json conic_json(const ConicData<K>& c) {
    return json{{"envelope", subspace_json(c.envelope)},
                {"plane", subspace_json(c.plane)},
                {"form", matrix_json(c.form.gram())},
                {"tag", to_string(c.tag)}};
}

template <class K>
json correspond_json(const Options& opt) {
    const ThreefoldPair<K> pair = pair_from_json<K>(read_json_file(opt.pair_path));
    const FieldDesc f = pair.field;
    const json in = read_json_file(opt.in_path);
    json checks = json::array();
    if (opt.from == "x-line") {
        const auto vertex = vector_from_json<K>(in.at("vertex"), f);
        const auto envelope = subspace_from_json<K>(in.at("envelope"), f);
        const GrassLine<K> l = make_grass_line(vertex, envelope);
        checks.push_back({{"check", "pencil_in_w10"}, {"pass", pair.w10.contains(l.pencil)}});
        const Pencil<K> out = x_line_to_b_line(pair, l);
        checks.push_back({{"check", "image_class_B"}, {"pass", true}});
        return json{{"result", pencil_json(out)}, {"checks", checks}};
    }
    if (opt.from == "b-line") {
        const Pencil<K> l = pencil_from_json<K>(in, f);
        const GrassLine<K> out = b_line_to_x_line(pair, l);
        checks.push_back({{"check", "intersection_dim_2"}, {"pass", true}});
        return json{{"result",
                     {{"vertex", vector_json(out.vertex.basis_vector(0))},
                      {"envelope", subspace_json(out.envelope)},
                      {"pencil", subspace_json(out.pencil)}}},
                    {"checks", checks}};
    }
    if (opt.from == "x-conic") {
        ConicData<K> c;
        c.envelope = subspace_from_json<K>(in.at("envelope"), f);
        c.plane = subspace_from_json<K>(in.at("plane"), f);
        const auto section = classify_plane_section(c.plane);
        c.form = section.conic;
        c.tag = section.tag;
        const Pencil<K> out = x_conic_to_y_line(pair, c);
        checks.push_back({{"check", "cubic_vanishes"}, {"pass", true}});
        return json{{"result", pencil_json(out)}, {"checks", checks}};
    }
    if (opt.from == "y-line") {
        const Pencil<K> l = pencil_from_json<K>(in, f);
        const ConicData<K> out = y_line_to_x_conic(pair, l);
        checks.push_back({{"check", "plane_dim_3"}, {"pass", true}});
        const Pencil<K> back = x_conic_to_y_line(pair, out);
        checks.push_back({{"check", "round_trip"}, {"pass", back.span == l.span}});
        return json{{"result", conic_json(out)}, {"checks", checks}};
    }
    throw std::invalid_argument("correspond: --from must be x-line|b-line|x-conic|y-line");
}

template <class K>
json project_json(const Options& opt) {
    const ThreefoldPair<K> pair = pair_from_json<K>(read_json_file(opt.pair_path));
    const FieldDesc f = pair.field;
    const Pencil<K> l = pencil_from_json<K>(read_json_file(opt.line_path), f);
    const ProjectionContext<K> ctx = make_context(l);
    auto point_doc = [&](const G25Point<K>& pt) {
        json j = g25_point_json(pt);
        json printed = json::array();
        for (const K& r : printed_equation_residuals(pt)) printed.push_back(scalar_json(r));
        j["printed_eq_residuals"] = printed;
        j["g25_member"] = g25_member(pt);
        return j;
    };
    if (!opt.point_path.empty()) {
        const TwoTensor<K> w = tensor_from_json<K>(read_json_file(opt.point_path), f);
        return point_doc(project(ctx, w));
    }
    if constexpr (std::is_same_v<K, Fp>) {
        if (opt.scan_x) {
            const auto scan = scan_w_and_x(pair, opt.workers);
            json pts = json::array();
            for (const auto& x : scan.x_points)
                pts.push_back(point_doc(restrict_to_x(ctx, pair, x)));
            return json{{"points", pts}};
        }
    }
    throw std::invalid_argument("project: need --point or --scan-x (finite field)");
}

json scan_json(const Options& opt) {
    const ThreefoldPair<Fp> pair = pair_from_json<Fp>(read_json_file(opt.pair_path));
    if (pair.field.rational) throw std::invalid_argument("scan: finite-field pair required");
    if (opt.p && opt.p != pair.field.p)
        throw std::invalid_argument("scan: --p disagrees with the pair's field");
    const bool want_inventory = !opt.inventory_path.empty();
    auto finish = [&](const ScanReport& r) {
        if (want_inventory) emit(scan_report_json(r, true), opt.inventory_path);
        return scan_report_json(r, false);
    };
    if (opt.what == "y") return finish(scan_y(pair, opt.workers, want_inventory));
    if (opt.what == "x" || opt.what == "w" || opt.what == "gammaw") {
        const auto res = scan_w_and_x(pair, opt.workers, want_inventory);
        if (opt.what == "x") return finish(res.x);
        if (opt.what == "w") return finish(res.w);
        return finish(res.gammaw);
    }
    if (opt.what == "sextic") {
        const Pencil<Fp> l = pencil_from_json<Fp>(read_json_file(opt.line_path), pair.field);
        const ProjectionContext<Fp> ctx = make_context(l);
        const auto [a, b] = segre_context(ctx);
        return finish(scan_sextic(pair, a, b));
    }
    throw std::invalid_argument("scan: --what must be x|y|w|gammaw|sextic");
}

// ---- verification suites ---------------------------------------------

json verify_pencil_suite(std::uint64_t seed, const FieldDesc& f) {
    json checks = json::array();
    auto run = [&](const std::string& name, bool pass) {
        checks.push_back({{"check", name}, {"pass", pass}});
        return pass;
    };
    SplitMix64 rng(seed);
    bool all_a = true, all_b = true, agree = true;
    for (int trial = 0; trial < 20; ++trial) {
        Matrix<Fp> g(6, 6);
        do {
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j) g.at(i, j) = random_scalar(rng, f, Fp{});
        } while (rank(g) != 6);
        const Fp one(1, f.p);
        const auto std_basis = standard_basis(one);
        auto conj = [&](Pencil<Fp> l) {
            return Pencil<Fp>::from_generators(gl_apply(g, l.w0), gl_apply(g, l.w1));
        };
        const auto ca = classify_pencil(conj(make_a_line(std_basis)));
        const auto cb = classify_pencil(conj(make_b_line(std_basis)));
        all_a = all_a && ca.tag == PencilTag::A && ca.quadric_rank == 4;
        all_b = all_b && cb.tag == PencilTag::B && cb.quadric_rank == 3;
        agree = agree && cb.witness.has_value();
    }
    bool ok = run("a_conjugates_rank_4", all_a);
    ok = run("b_conjugates_rank_3", all_b) && ok;
    ok = run("b_criteria_agree", agree) && ok;
    return json{{"suite", "pencil"}, {"pass", ok}, {"checks", checks}};
}

json verify_projection_suite(std::uint64_t seed, const FieldDesc& f) {
    // chart points of G(2,6) cap l^perp for the standard A-line: residuals
    // of the five equations vanish, Pluecker substitution passes
    json checks = json::array();
    const Fp one(1, f.p);
    const auto l = make_a_line(standard_basis(one));
    const auto ctx = make_context(l);
    SplitMix64 rng(seed);
    bool residuals_ok = true, plucker_ok = true, printed_fails = false;
    for (int trial = 0; trial < 200; ++trial) {
        Fp a1 = random_scalar(rng, f, Fp{}), a3 = random_scalar(rng, f, Fp{}),
           a5 = random_scalar(rng, f, Fp{}), b1 = random_scalar(rng, f, Fp{}),
           b3 = random_scalar(rng, f, Fp{}), b5 = random_scalar(rng, f, Fp{});
        const Fp d13 = a1 * b3 - a3 * b1, d15 = a1 * b5 - a5 * b1;
        std::vector<Fp> u = {-d15, a1, one, a3, Fp(0, f.p), a5};
        std::vector<Fp> w = {d13, b1, Fp(0, f.p), b3, one, b5};
        const TwoTensor<Fp> om = wedge2(u, w);
        if (om.is_zero_tensor()) continue;
        G25Point<Fp> pt;
        try {
            pt = project(ctx, om);
        } catch (const std::invalid_argument&) {
            continue;  // center point
        }
        for (const Fp& r : five_equations_residual(pt)) residuals_ok &= is_zero(r);
        plucker_ok &= g25_member(pt);
        for (const Fp& r : printed_equation_residuals(pt)) printed_fails |= !is_zero(r);
    }
    checks.push_back({{"check", "five_equations_zero"}, {"pass", residuals_ok}});
    checks.push_back({{"check", "plucker_member"}, {"pass", plucker_ok}});
    checks.push_back({{"check", "printed_forms_fail_somewhere"}, {"pass", printed_fails}});
    const bool ok = residuals_ok && plucker_ok && printed_fails;
    return json{{"suite", "projection"}, {"pass", ok}, {"checks", checks}};
}

json verify_correspond_suite(std::uint64_t seed, const FieldDesc& f, std::size_t workers) {
    json checks = json::array();
    const auto pair = build_threefold<Fp>(seed, f);
    const auto wx = scan_w_and_x(pair, workers);
    bool lines_found = !wx.x_lines.empty();
    bool round_trips = lines_found;
    for (const auto& l : wx.x_lines) {
        const Pencil<Fp> b = x_line_to_b_line(pair, l);
        const GrassLine<Fp> back = b_line_to_x_line(pair, b);
        round_trips &= back.pencil == l.pencil;
    }
    checks.push_back({{"check", "x_lines_found"}, {"pass", lines_found}});
    checks.push_back({{"check", "line_round_trips"}, {"pass", round_trips}});
    const bool ok = lines_found && round_trips;
    return json{{"suite", "correspond"}, {"pass", ok}, {"checks", checks}};
}

json verify_scan_suite(std::uint64_t seed, const FieldDesc& f, std::size_t workers) {
    json checks = json::array();
    const auto pair = build_threefold<Fp>(seed, f);
    bool cross_check = true;
    WXScanResult wx;
    try {
        wx = scan_w_and_x(pair, workers);
    } catch (const std::logic_error&) {
        cross_check = false;
    }
    checks.push_back({{"check", "w_eq_v_cross_check"}, {"pass", cross_check}});
    bool weil = cross_check && weil_window_ok(wx.x.count, f.p);
    const auto y = scan_y(pair, workers);
    weil = weil && weil_window_ok(y.count, f.p);
    checks.push_back({{"check", "weil_windows"}, {"pass", weil}});
    const bool ok = cross_check && weil;
    return json{{"suite", "scan"}, {"pass", ok}, {"checks", checks}};
}

json verify_json(const Options& opt) {
    const FieldDesc f = FieldDesc::parse(opt.field);
    if (f.rational) throw std::invalid_argument("verify: finite-field suites only");
    json suites = json::array();
    bool ok = true;
    auto add = [&](const json& s) {
        ok = ok && s.at("pass").get<bool>();
        suites.push_back(s);
    };
    if (opt.suite == "pencil" || opt.suite == "all") add(verify_pencil_suite(opt.seed, f));
    if (opt.suite == "projection" || opt.suite == "all")
        add(verify_projection_suite(opt.seed, f));
    if (opt.suite == "correspond" || opt.suite == "all")
        add(verify_correspond_suite(opt.seed, f, opt.workers));
    if (opt.suite == "scan" || opt.suite == "all")
        add(verify_scan_suite(opt.seed, f, opt.workers));
    if (suites.empty()) throw std::invalid_argument("verify: unknown suite " + opt.suite);
    return json{{"pass", ok}, {"suites", suites}};
}

json pipeline_json(const Options& opt) {
    const FieldDesc f = FieldDesc::parse(opt.field);
    if (f.rational) throw std::invalid_argument("pipeline: finite field required");
    const auto pair = build_threefold<Fp>(opt.seed, f);
    json report;
    report["pair"] = pair_json(pair);
    const auto wx = scan_w_and_x(pair, opt.workers, true);
    const auto y = scan_y(pair, opt.workers, true);
    report["counts"] = {{"x", wx.x.count}, {"w", wx.w.count},
                        {"gammaw", wx.gammaw.count}, {"y", y.count}};
    // lines of X -> B-lines of Y
    json xlines = json::array();
    for (const auto& l : wx.x_lines) {
        const Pencil<Fp> b = x_line_to_b_line(pair, l);
        const GrassLine<Fp> back = b_line_to_x_line(pair, b);
        xlines.push_back({{"vertex", vector_json(l.vertex.basis_vector(0))},
                          {"b_line", pencil_json(b)},
                          {"round_trip", back.pencil == l.pencil}});
    }
    report["x_lines"] = xlines;
    // A-lines of Y from the scanned inventory, processed end to end
    const auto quartic = interpolate_w(pair, wx);
    report["quartic_unique"] = quartic.unique;
    const auto ylines = y_lines_from_scan(pair, y, 40);
    json alines = json::array();
    std::size_t a_count = 0;
    for (const auto& l : ylines) {
        const auto cls = classify_pencil(l);
        if (cls.tag != PencilTag::A) continue;
        ++a_count;
        json entry;
        entry["class"] = "A";
        const auto conic = y_line_to_x_conic(pair, l);
        entry["conic_tag"] = to_string(conic.tag);
        entry["conic_round_trip"] = x_conic_to_y_line(pair, conic).span == l.span;
        const auto split = quartic_splitting_check(pair, l, quartic.quartic);
        entry["quartic_splitting"] = split.ok();
        const auto ctx = make_context(l);
        bool regular = true, members = true;
        for (const auto& x : wx.x_points) {
            try {
                members &= g25_member(restrict_to_x(ctx, pair, x));
            } catch (const std::exception&) {
                regular = false;
            }
        }
        entry["projection_regular"] = regular;
        entry["images_on_g25"] = members;
        const auto [sa, sb] = segre_context(ctx);
        entry["sextic_count"] = scan_sextic(pair, sa, sb).count;
        alines.push_back(entry);
        if (a_count >= 3) break;
    }
    report["a_lines"] = alines;
    return report;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic engine for genus-8 Fano threefolds and orthogonal cubics"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", opt.out_path, "write the JSON result to this file");
    };

    auto* build = app.add_subcommand("build", "construct a seeded (X, Y) pair");
    build->add_option("--seed", opt.seed, "construction seed");
    build->add_option("--field", opt.field, "q or fp:P");
    add_common(build);

    auto* classify = app.add_subcommand("classify-pencil", "classify a pencil of skew forms");
    classify->add_option("--in", opt.in_path, "pencil JSON {\"w0\":…, \"w1\":…}")->required();
    classify->add_option("--field", opt.field, "q or fp:P");
    add_common(classify);

    auto* correspond = app.add_subcommand("correspond", "run an X <-> Y correspondence");
    correspond->add_option("--from", opt.from, "x-line|b-line|x-conic|y-line")->required();
    correspond->add_option("--pair", opt.pair_path, "ThreefoldPair JSON")->required();
    correspond->add_option("--in", opt.in_path, "input payload JSON")->required();
    add_common(correspond);

    auto* project = app.add_subcommand("project", "project through an A-line's conic plane");
    project->add_option("--line", opt.line_path, "A-line pencil JSON")->required();
    project->add_option("--pair", opt.pair_path, "ThreefoldPair JSON")->required();
    project->add_option("--point", opt.point_path, "TwoTensor JSON to project");
    project->add_flag("--scan-x", opt.scan_x, "project every scanned X-point");
    project->add_option("--workers", opt.workers, "scan worker threads");
    add_common(project);

    auto* scan = app.add_subcommand("scan", "exhaustive finite-field enumeration");
    scan->add_option("--what", opt.what, "x|y|w|gammaw|sextic")->required();
    scan->add_option("--p", opt.p, "expected field characteristic");
    scan->add_option("--pair", opt.pair_path, "ThreefoldPair JSON")->required();
    scan->add_option("--line", opt.line_path, "A-line pencil JSON (sextic scan)");
    scan->add_option("--inventory", opt.inventory_path, "write the inventory to this file");
    scan->add_option("--workers", opt.workers, "worker threads");
    add_common(scan);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", opt.suite, "pencil|projection|correspond|scan|all");
    verify->add_option("--seed", opt.seed, "seed");
    verify->add_option("--field", opt.field, "fp:P");
    verify->add_option("--p", opt.p, "alias for the field characteristic");
    verify->add_option("--workers", opt.workers, "worker threads");
    add_common(verify);

    auto* pipeline = app.add_subcommand("pipeline", "build + scan + correspondences end to end");
    pipeline->add_option("--seed", opt.seed, "seed");
    pipeline->add_option("--field", opt.field, "fp:P");
    pipeline->add_option("--workers", opt.workers, "worker threads");
    add_common(pipeline);

    CLI11_PARSE(app, argc, argv);

    try {
        const bool rational = FieldDesc::parse(opt.field).rational;
        json out;
        if (build->parsed()) {
            out = rational ? build_pair_json<Rat>(opt) : build_pair_json<Fp>(opt);
        } else if (classify->parsed()) {
            out = rational ? classify_pencil_json<Rat>(opt) : classify_pencil_json<Fp>(opt);
        } else if (correspond->parsed()) {
            const auto f = FieldDesc::parse(
                read_json_file(opt.pair_path).at("field").get<std::string>());
            out = f.rational ? correspond_json<Rat>(opt) : correspond_json<Fp>(opt);
        } else if (project->parsed()) {
            const auto f = FieldDesc::parse(
                read_json_file(opt.pair_path).at("field").get<std::string>());
            out = f.rational ? project_json<Rat>(opt) : project_json<Fp>(opt);
        } else if (scan->parsed()) {
            out = scan_json(opt);
        } else if (verify->parsed()) {
            if (opt.p && opt.field == "fp:11" ) opt.field = "fp:" + std::to_string(opt.p);
            out = verify_json(opt);
            emit(out, opt.out_path);
            return out.at("pass").get<bool>() ? 0 : 1;
        } else if (pipeline->parsed()) {
            out = pipeline_json(opt);
        }
        emit(out, opt.out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
