// Python bindings: a thin JSON-string facade over the core operations, so
// the wire format is identical to the CLI's.
#include <pybind11/pybind11.h>

#include <string>

#include "fano8/correspond.hpp"
#include "fano8/fano.hpp"
#include "fano8/json_io.hpp"
#include "fano8/pencil.hpp"
#include "fano8/projection.hpp"
#include "fano8/scan.hpp"

namespace py = pybind11;
using namespace fano8;

namespace {

template <class K>
std::string build_impl(std::uint64_t seed, const FieldDesc& f) {
    return pair_json(build_threefold<K>(seed, f)).dump(2);
}

std::string build(std::uint64_t seed, const std::string& field) {
    const FieldDesc f = FieldDesc::parse(field);
    return f.rational ? build_impl<Rat>(seed, f) : build_impl<Fp>(seed, f);
}

template <class K>
std::string classify_impl(const FieldDesc& f, const json& j) {
    const Pencil<K> l = pencil_from_json<K>(j, f);
    return pencil_class_json(classify_pencil(l)).dump(2);
}

std::string classify(const std::string& field, const std::string& pencil) {
    const FieldDesc f = FieldDesc::parse(field);
    const json j = json::parse(pencil);
    return f.rational ? classify_impl<Rat>(f, j) : classify_impl<Fp>(f, j);
}

std::string scan(const std::string& pair_str, const std::string& what, std::size_t workers,
                 bool inventory) {
    const ThreefoldPair<Fp> pair = pair_from_json<Fp>(json::parse(pair_str));
    if (what == "y") return scan_report_json(scan_y(pair, workers, inventory), inventory).dump(2);
    const WXScanResult wx = scan_w_and_x(pair, workers, inventory);
    if (what == "w") return scan_report_json(wx.w, inventory).dump(2);
    if (what == "x") return scan_report_json(wx.x, inventory).dump(2);
    if (what == "gammaw") return scan_report_json(wx.gammaw, inventory).dump(2);
    throw std::invalid_argument("scan: target must be one of y, w, x, gammaw");
}

std::string y_lines(const std::string& pair_str, std::size_t max_lines, std::size_t workers) {
    const ThreefoldPair<Fp> pair = pair_from_json<Fp>(json::parse(pair_str));
    const ScanReport y = scan_y(pair, workers, true);
    json out = json::array();
    for (const auto& l : y_lines_from_scan(pair, y, max_lines)) {
        json e = pencil_json(l);
        e["class"] = to_string(classify_pencil(l).tag);
        out.push_back(e);
    }
    return out.dump(2);
}

std::string line_to_conic(const std::string& pair_str, const std::string& pencil) {
    const ThreefoldPair<Fp> pair = pair_from_json<Fp>(json::parse(pair_str));
    const Pencil<Fp> l = pencil_from_json<Fp>(json::parse(pencil), pair.field);
    const ConicData<Fp> c = y_line_to_x_conic(pair, l);
    return json{{"envelope", subspace_json(c.envelope)},
                {"plane", subspace_json(c.plane)},
                {"section", to_string(c.tag)}}
        .dump(2);
}

std::string conic_to_line(const std::string& pair_str, const std::string& conic) {
    const ThreefoldPair<Fp> pair = pair_from_json<Fp>(json::parse(pair_str));
    const json j = json::parse(conic);
    ConicData<Fp> c;
    c.envelope = subspace_from_json<Fp>(j.at("envelope"), pair.field);
    c.plane = subspace_from_json<Fp>(j.at("plane"), pair.field);
    return pencil_json(x_conic_to_y_line(pair, c)).dump(2);
}

std::string project_point(const std::string& pair_str, const std::string& pencil,
                          const std::string& tensor) {
    const ThreefoldPair<Fp> pair = pair_from_json<Fp>(json::parse(pair_str));
    const Pencil<Fp> l = pencil_from_json<Fp>(json::parse(pencil), pair.field);
    const ProjectionContext<Fp> ctx = make_context(l);
    const TwoTensor<Fp> w = tensor_from_json<Fp>(json::parse(tensor), pair.field);
    return g25_point_json(project(ctx, w)).dump(2);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact-arithmetic geometry of genus-8 Fano threefolds and their orthogonal cubics";
    m.def("build", &build, py::arg("seed"), py::arg("field"),
          "construct the pair (X, Y) from a seed; returns the pair as JSON");
    m.def("classify", &classify, py::arg("field"), py::arg("pencil"),
          "classify a pencil of two-forms (A / B / meets_grassmannian / other)");
    m.def("scan", &scan, py::arg("pair"), py::arg("what"), py::arg("workers") = 1,
          py::arg("inventory") = false,
          "exhaustive finite-field point scan: what in {y, w, x, gammaw}");
    m.def("y_lines", &y_lines, py::arg("pair"), py::arg("max_lines") = 0,
          py::arg("workers") = 1, "lines on the cubic Y found from the scan inventory");
    m.def("y_line_to_x_conic", &line_to_conic, py::arg("pair"), py::arg("pencil"),
          "the conic of X corresponding to a line of Y");
    m.def("x_conic_to_y_line", &conic_to_line, py::arg("pair"), py::arg("conic"),
          "the line of Y corresponding to a conic of X");
    m.def("project", &project_point, py::arg("pair"), py::arg("line"), py::arg("tensor"),
          "projection to G(2,5) coordinates from the conic plane of an A-line");
}
