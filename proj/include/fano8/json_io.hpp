#ifndef FANO8_JSON_IO_HPP
#define FANO8_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "fano8/exterior.hpp"
#include "fano8/fano.hpp"
#include "fano8/pencil.hpp"
#include "fano8/projection.hpp"
#include "fano8/scan.hpp"

namespace fano8 {

using nlohmann::json;

// scalars: rationals as "a/b" strings ("a" when b = 1), residues as integers
inline json scalar_json(const Rat& x) { return x.get_str(); }
inline json scalar_json(const Fp& x) { return x.v; }

inline Rat scalar_from_json_rat(const json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
    Rat r(j.get<std::string>());
    r.canonicalize();
    return r;
}
inline Fp scalar_from_json_fp(const json& j, std::uint64_t p) {
    return Fp(j.get<std::int64_t>(), p);
}

template <class K>
K scalar_from_json(const json& j, const FieldDesc& f);
template <>
inline Rat scalar_from_json<Rat>(const json& j, const FieldDesc&) {
    return scalar_from_json_rat(j);
}
template <>
inline Fp scalar_from_json<Fp>(const json& j, const FieldDesc& f) {
    return scalar_from_json_fp(j, f.p);
}

template <class K>
json vector_json(const std::vector<K>& v) {
    json a = json::array();
    for (const K& x : v) a.push_back(scalar_json(x));
    return a;
}

template <class K>
std::vector<K> vector_from_json(const json& j, const FieldDesc& f) {
    std::vector<K> out;
    for (const auto& e : j) out.push_back(scalar_from_json<K>(e, f));
    return out;
}

template <class K>
json matrix_json(const Matrix<K>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vector_json(m.row(i)));
    return rows;
}

template <class K>
Matrix<K> matrix_from_json(const json& j, const FieldDesc& f, std::size_t cols) {
    std::vector<std::vector<K>> rows;
    for (const auto& r : j) rows.push_back(vector_from_json<K>(r, f));
    return Matrix<K>::from_rows(rows, rows.empty() ? cols : rows[0].size());
}

template <class K>
json subspace_json(const Subspace<K>& s) {
    return json{{"ambient", s.ambient()}, {"basis", matrix_json(s.basis())}};
}

template <class K>
Subspace<K> subspace_from_json(const json& j, const FieldDesc& f) {
    const std::size_t ambient = j.at("ambient").get<std::size_t>();
    const json& basis = j.at("basis");
    if (basis.empty())
        return Subspace<K>::zero(ambient, scalar_from_json<K>(json(1), f));
    Matrix<K> m = matrix_from_json<K>(basis, f, ambient);
    return Subspace<K>::from_span(m);
}

inline const char* side_str(Side s) { return s == Side::V ? "V" : "V*"; }
inline Side side_from_str(const std::string& s) {
    if (s == "V") return Side::V;
    if (s == "V*") return Side::VDual;
    throw std::invalid_argument("side: expected \"V\" or \"V*\"");
}

template <class K>
json tensor_json(const TwoTensor<K>& t) {
    return json{{"side", side_str(t.side)}, {"coords", vector_json(t.coords())}};
}

template <class K>
TwoTensor<K> tensor_from_json(const json& j, const FieldDesc& f) {
    return TwoTensor<K>::from_coords(vector_from_json<K>(j.at("coords"), f),
                                     side_from_str(j.at("side").get<std::string>()));
}

// cubic as a coefficient map keyed by exponent tuples, lexicographic order
template <class K>
json form_json(const Form<K>& fm) {
    json m = json::object();
    for (std::size_t i = 0; i < fm.terms(); ++i)
        m[monomial_key(fm.exponents()[i])] = scalar_json(fm.coeff(i));
    return m;
}

template <class K>
Form<K> form_from_json(const json& j, const FieldDesc& f, std::size_t nvars, int degree) {
    Form<K> fm(nvars, degree);
    for (std::size_t i = 0; i < fm.terms(); ++i) {
        const std::string key = monomial_key(fm.exponents()[i]);
        if (j.contains(key)) fm.coeff(i) = scalar_from_json<K>(j.at(key), f);
    }
    return fm;
}

template <class K>
json pair_json(const ThreefoldPair<K>& p) {
    return json{{"seed", p.seed},
                {"reseeds", p.reseeds},
                {"field", p.field.str()},
                {"w10", subspace_json(p.w10)},
                {"u5", subspace_json(p.u5)},
                {"cubic", form_json(p.cubic)}};
}

template <class K>
ThreefoldPair<K> pair_from_json(const json& j) {
    ThreefoldPair<K> p;
    p.seed = j.at("seed").get<std::uint64_t>();
    p.reseeds = j.value("reseeds", std::uint64_t{0});
    p.field = FieldDesc::parse(j.at("field").get<std::string>());
    p.w10 = subspace_from_json<K>(j.at("w10"), p.field);
    p.u5 = subspace_from_json<K>(j.at("u5"), p.field);
    p.cubic = form_from_json<K>(j.at("cubic"), p.field, 5, 3);
    return p;
}

template <class K>
json pencil_json(const Pencil<K>& l) {
    return json{{"w0", tensor_json(l.w0)}, {"w1", tensor_json(l.w1)}};
}

template <class K>
Pencil<K> pencil_from_json(const json& j, const FieldDesc& f) {
    return Pencil<K>::from_generators(tensor_from_json<K>(j.at("w0"), f),
                                      tensor_from_json<K>(j.at("w1"), f));
}

template <class K>
json pencil_class_json(const PencilClass<K>& c) {
    json out{{"class", to_string(c.tag)}};
    if (c.tag == PencilTag::A || c.tag == PencilTag::B) out["quadric_rank"] = c.quadric_rank;
    if (c.witness) out["witness"] = vector_json(*c.witness);
    return out;
}

template <class K>
json g25_point_json(const G25Point<K>& pt) {
    json coords = json::array(), delta = json::array(), residuals = json::array();
    for (const K& x : pt.c) coords.push_back(scalar_json(x));
    for (const K& x : pt.delta()) delta.push_back(scalar_json(x));
    for (const K& x : five_equations_residual(pt)) residuals.push_back(scalar_json(x));
    return json{{"coords", coords}, {"delta", delta}, {"residuals", residuals}};
}

inline json scan_report_json(const ScanReport& r, bool with_inventory) {
    json out{{"target", r.target}, {"p", r.p}, {"count", r.count}, {"workers", r.workers}};
    if (with_inventory) out["inventory"] = r.inventory;
    return out;
}

}  // namespace fano8

#endif
