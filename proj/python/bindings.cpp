#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "superym/dixmier.hpp"
#include "superym/io.hpp"
#include "superym/lie_model.hpp"
#include "superym/presentation.hpp"
#include "superym/surjection.hpp"
#include "superym/verify.hpp"

namespace py = pybind11;
using namespace sym;

namespace {

SymPresentation from_text(const std::string& text) { return presentation_from_json(json::parse(text)); }

std::vector<std::string> strings(const std::vector<Scalar>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

}  // namespace

PYBIND11_MODULE(_superym, m) {
    m.doc() = "Super Yang-Mills algebra computations over the rationals";

    m.def("preset_json", [](int n, int s) { return presentation_to_json(SymPresentation::preset(n, s)).dump(); },
          py::arg("n"), py::arg("s"));
    m.def("presentation_hash", [](const std::string& text) { return presentation_hash(from_text(text)); },
          py::arg("presentation_json"));
    m.def("dims_ym", [](int n, int s, int max_j) { return dims_ym(SymPresentation::preset(n, s), max_j); },
          py::arg("n"), py::arg("s"), py::arg("max_j"));
    m.def(
        "hilbert_series",
        [](int n, int s, int order) { return strings(hilbert_series_YM(SymPresentation::preset(n, s), order).coeffs()); },
        py::arg("n"), py::arg("s"), py::arg("order"));
    m.def(
        "lie_dims",
        [](const std::string& text, int l) {
            const auto model = LieQuotientModel::for_presentation(from_text(text), l);
            std::vector<std::size_t> d;
            for (int w = 1; w <= l + 1; ++w) d.push_back(model.dim(w));
            return d;
        },
        py::arg("presentation_json"), py::arg("l"));
    m.def(
        "basis",
        [](const std::string& text, int l) {
            const auto model = LieQuotientModel::for_presentation(from_text(text), l);
            json out = json::array();
            for (int w = 1; w <= l + 1; ++w)
                if (model.dim(w) > 0) out.push_back(basis_report(model, w));
            return out.dump();
        },
        py::arg("presentation_json"), py::arg("l"));
    m.def(
        "superpotential_ok", [](const std::string& text) { return superpotential_check(from_text(text)).ok(); },
        py::arg("presentation_json"));
    m.def(
        "weight_of",
        [](const std::string& algebra_json, const std::string& functional_json) {
            const auto g = algebra_from_json(json::parse(algebra_json));
            const auto f = make_functional(g, functional_from_json(json::parse(functional_json)));
            const auto w = weight_of(g, f);
            return py::make_tuple(w.weyl, w.clifford);
        },
        py::arg("algebra_json"), py::arg("functional_json"));
    m.def(
        "heis_json", [](int r, int t) { return algebra_to_json(heis(r, t)).dump(); }, py::arg("r"), py::arg("t"));
    m.def(
        "cw_surjection",
        [](int n, int s, int r, int t) {
            const auto S = build_cw_surjection(SymPresentation::preset(n, s), r, t);
            py::dict d;
            d["l"] = S.l;
            d["weyl"] = S.weight.weyl;
            d["clifford"] = S.weight.clifford;
            d["ok"] = S.ok();
            return d;
        },
        py::arg("n"), py::arg("s"), py::arg("r"), py::arg("t"));

    py::register_exception<std::invalid_argument>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<std::domain_error>(m, "DomainError", PyExc_ArithmeticError);
}
