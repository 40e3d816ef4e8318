#include "splinedim/report.hpp"
#include "splinedim/structmat.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace splinedim;

namespace {

exactla::QMatrix qm(const std::string& text) { return exactla::QMatrix::parse(text); }

long long int_to_ll(const exactla::Int& value) {
    return value.convert_to<long long>();
}

splinecore::Triangulation tri(const std::string& document) {
    return splinecore::Triangulation::load(document);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact spline space dimensions and the structured-matrix layer behind them";

    m.def("k_dim", [](int r) { return deltastar::k_space(r).basis.dim(); },
          py::arg("r"), "dimension of the kernel space K(r)");
    m.def("epsilon", [](int r) { return deltastar::epsilon(r); }, py::arg("r"),
          "colon intersection dimension in original coordinates");
    m.def("delta_s_document", []() { return deltastar::delta_s_document(); },
          "text document of the built-in triangulation");

    m.def(
        "spline_dim",
        [](const std::string& document, int r, int d) {
            auto res = splinecore::spline_dim(tri(document), r, d);
            return py::make_tuple(res.dim, res.hf_n);
        },
        py::arg("triangulation"), py::arg("r"), py::arg("d"),
        "(dimension, cokernel Hilbert function) for one smoothness order and degree");
    m.def(
        "alfeld_schumaker",
        [](const std::string& document, int r, int d) {
            auto res = splinecore::alfeld_schumaker(tri(document), r, d);
            return py::make_tuple(res.l_value, res.sigma);
        },
        py::arg("triangulation"), py::arg("r"), py::arg("d"),
        "(combinatorial dimension formula, sigma term)");
    m.def(
        "conjecture_report",
        [](const std::string& document, int r_max) {
            py::list rows;
            for (const auto& row : splinecore::conjecture_report(tri(document), r_max)) {
                py::dict entry;
                entry["r"] = row.r;
                entry["d"] = row.d;
                entry["dim"] = row.dim_spline;
                entry["formula"] = row.l_value;
                entry["sigma"] = row.sigma;
                entry["hf_n"] = row.hf_n;
                entry["equal"] = row.equal;
                rows.append(entry);
            }
            return rows;
        },
        py::arg("triangulation"), py::arg("r_max"),
        "rows comparing exact dimensions against the formula at d = 2r, 2r+1, 3r+1");

    m.def("kernel_dim_total", [](int r) { return structmat::kernel_dim_total(r); },
          py::arg("r"));
    m.def(
        "schur_dim_det",
        [](const std::vector<int>& lambda, int t) {
            return int_to_ll(structmat::schur_dim_det(lambda, t));
        },
        py::arg("lambda"), py::arg("t"), "Schur module dimension, binomial determinant");
    m.def(
        "schur_dim_weyl",
        [](const std::vector<int>& lambda, int t) {
            return int_to_ll(structmat::schur_dim_weyl(lambda, t));
        },
        py::arg("lambda"), py::arg("t"), "Schur module dimension, Weyl product oracle");
    m.def("u_matrix", [](int r) { return structmat::u_matrix(r).to_text(); }, py::arg("r"),
          "the symmetric U matrix in exact matrix text");
    m.def("toeplitz_positivity", &structmat::toeplitz_positivity, py::arg("r"),
          py::arg("max_order"));
    m.def(
        "roth_triangular_solve",
        [](const std::string& w, const std::string& c) {
            auto sol = structmat::roth_triangular_solve(qm(w), qm(c));
            return py::make_tuple(sol.x.to_text(), sol.y.to_text());
        },
        py::arg("w"), py::arg("c"), "upper triangular X, Y with W X - Y^T W^T = C");
    m.def(
        "roth_lower_solve",
        [](const std::string& u, const std::string& c) {
            auto sol = structmat::roth_lower_solve(qm(u), qm(c));
            return py::make_tuple(sol.x.to_text(), sol.y.to_text());
        },
        py::arg("u"), py::arg("c"), "lower triangular X, Y with U X - Y^T U = C");

    m.def("rank", [](const std::string& text) { return exactla::rank(qm(text)); },
          py::arg("matrix"));
    m.def("det", [](const std::string& text) {
              return exactla::rational_to_string(exactla::det_ff(qm(text)));
          },
          py::arg("matrix"), "exact determinant as a rational string");
    m.def("nullspace",
          [](const std::string& text) {
              auto res = exactla::rref_rank_nullspace(qm(text));
              return py::make_tuple(res.rank, res.nullspace.to_text());
          },
          py::arg("matrix"), "(rank, canonical kernel basis in matrix text)");

    m.def(
        "verify",
        [](int r_max) { return cli::deltastar_verify(r_max, false).all_pass(); },
        py::arg("r_max"), "run the full verifier sweep; True when every claim holds");
    m.def(
        "verify_report_json",
        [](int r_max, long long seed) {
            return cli::deltastar_verify(r_max, false).to_json(seed);
        },
        py::arg("r_max"), py::arg("seed") = 0);
}
