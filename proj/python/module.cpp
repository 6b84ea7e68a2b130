#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zinbiel/io.hpp"
#include "zinbiel/verify.hpp"

namespace py = pybind11;
using namespace zinbiel;

namespace {

io::AlgebraDoc load(const std::string& text) { return io::load_algebra(text); }

std::map<std::string, Rational> to_assignment(const std::map<std::string, std::string>& m) {
    std::map<std::string, Rational> out;
    for (const auto& [k, v] : m) out.emplace(k, Rational::from_string(v));
    return out;
}

} // namespace

PYBIND11_MODULE(_zinbiel, m) {
    m.doc() = "Exact-arithmetic analysis of nilpotent Zinbiel algebra tables";

    py::register_exception<Error>(m, "ZinbielError");

    m.def("check", [](const std::string& text) {
        auto v = is_zinbiel(load(text).table);
        py::dict d;
        d["holds"] = v.holds;
        if (!v.holds) d["witness"] = py::make_tuple(v.i, v.j, v.k);
        return d;
    }, py::arg("algebra_json"), "Zinbiel identity verdict for a serialized table");

    m.def("series_dims", [](const std::string& text) {
        return series_dims(lower_central_series(load(text).table));
    }, py::arg("algebra_json"), "Lower central series dimensions down to zero");

    m.def("classify", [](const std::string& text) {
        return std::string(filiform_class_name(classify_filiformity(load(text).table)));
    }, py::arg("algebra_json"));

    m.def("annihilator_dims", [](const std::string& text) {
        auto doc = load(text);
        return py::make_tuple(left_annihilator(doc.table).rank(),
                              right_annihilator(doc.table).rank());
    }, py::arg("algebra_json"), "(dim L, dim R)");

    m.def("fingerprint", [](const std::string& text) {
        return fingerprint(load(text).table).str();
    }, py::arg("algebra_json"));

    m.def("check_grading", [](const std::string& text) {
        auto doc = load(text);
        if (!doc.grading)
            throw Error(ErrorCode::IncompleteWitness, "file carries no grading field");
        auto v = check_grading_witness(doc.table, *doc.grading);
        py::dict d;
        d["valid"] = v.valid;
        if (!v.valid) d["violation"] = v.violation;
        return d;
    }, py::arg("algebra_json"));

    m.def("catalog_keys", [](const std::optional<std::string>& section, bool companions) {
        std::optional<catalog::Section> sec;
        if (section) {
            sec = catalog::section_from_name(*section);
            if (!sec) throw Error(ErrorCode::UnknownKey, "unknown section: " + *section);
        }
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& f : catalog::list_keys(sec, companions))
            out.emplace_back(catalog::section_name(f.section), f.name);
        return out;
    }, py::arg("section") = std::nullopt, py::arg("companions") = false,
       "(section, name) pairs in source order");

    m.def("catalog_emit", [](const std::string& section, const std::string& name,
                             const std::optional<std::size_t>& n,
                             const std::map<std::string, std::string>& params) {
        auto sec = catalog::section_from_name(section);
        if (!sec) throw Error(ErrorCode::UnknownKey, "unknown section: " + section);
        auto entry = catalog::make({*sec, name, n}, to_assignment(params));
        return io::emit_algebra(io::doc_from_entry(entry));
    }, py::arg("section"), py::arg("name"), py::arg("n") = std::nullopt,
       py::arg("params") = std::map<std::string, std::string>{},
       "Serialize one catalog entry");

    m.def("transport", [](const std::string& algebra_json, const std::string& matrix_json) {
        auto doc = load(algebra_json);
        auto moved = transport(doc.table, io::load_matrix(matrix_json));
        return io::emit_algebra({std::move(moved), std::nullopt, {}});
    }, py::arg("algebra_json"), py::arg("matrix_json"),
       "Push the product forward along an invertible matrix");

    m.def("compare", [](const std::string& a, const std::string& b) {
        auto cert = noniso_certificate(load(a).table, load(b).table);
        return cert ? std::optional<std::string>(cert->invariant) : std::nullopt;
    }, py::arg("algebra_json_a"), py::arg("algebra_json_b"),
       "First differing fingerprint component, or None when inconclusive");

    m.def("verify_catalog", [](const std::optional<std::string>& section, std::size_t max_n) {
        std::optional<catalog::Section> sec;
        if (section) {
            sec = catalog::section_from_name(*section);
            if (!sec) throw Error(ErrorCode::UnknownKey, "unknown section: " + *section);
        }
        return verify::render_json(verify::verify_catalog(sec, max_n));
    }, py::arg("section") = std::nullopt, py::arg("max_n") = 10,
       "Full verification report as canonical JSON text");
}
