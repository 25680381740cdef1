#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fibpad/braid.hpp"
#include "fibpad/dqotp.hpp"
#include "fibpad/gp_simplex.hpp"
#include "fibpad/holevo.hpp"

namespace py = pybind11;
using namespace fibpad;

namespace {

Charge charge_arg(const std::string& name) { return charge_from_name(name); }

Side side_arg(const std::string& name) {
  if (name == "A" || name == "a") return Side::A;
  if (name == "B" || name == "b") return Side::B;
  throw std::invalid_argument("side must be 'A' or 'B'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Fibonacci-anyon one-time-pad core: fusion spaces, anyonic entropy, "
      "capacity analysis, braid synthesis";

  m.def("d_tau", [] { return kDTau; }, "Quantum dimension of the tau anyon");
  m.def("f_matrix", [] { return model_constants().f_matrix; });
  m.def("r_matrix", [] { return model_constants().r_matrix; });
  m.def("fibonacci", &fibonacci, py::arg("n"));
  m.def("binet", &binet, py::arg("n"));
  m.def(
      "fusion_dim",
      [](int n, const std::string& charge) {
        return fusion_dim(n, charge_arg(charge));
      },
      py::arg("n"), py::arg("charge"));
  m.def(
      "enumerate_basis",
      [](int n, const std::string& charge) {
        std::vector<std::vector<std::string>> out;
        for (const auto& path : enumerate_basis(n, charge_arg(charge))) {
          std::vector<std::string> names;
          for (Charge c : path.intermediates) {
            names.emplace_back(charge_name(c));
          }
          out.push_back(std::move(names));
        }
        return out;
      },
      py::arg("n"), py::arg("charge"),
      "Fusion paths as lists of intermediate charge names");

  py::class_<BipartiteDecomposition>(m, "BipartiteState")
      .def_readonly("n_per_side", &BipartiteDecomposition::n_per_side)
      .def_property_readonly(
          "vacuum",
          [](const BipartiteDecomposition& s) {
            return s.block(Charge::vacuum);
          })
      .def_property_readonly(
          "tau",
          [](const BipartiteDecomposition& s) { return s.block(Charge::tau); })
      .def("norm_squared", &BipartiteDecomposition::norm_squared);

  m.def("bell_power_state", &bell_power_state, py::arg("n"));
  m.def("gp_state", &gp_state, py::arg("p"));

  m.def(
      "reduced_entropy",
      [](const BipartiteDecomposition& s, const std::string& side) {
        return anyonic_entropy(reduced_density(s, side_arg(side)));
      },
      py::arg("state"), py::arg("side") = "A",
      "Anyonic entropy in bits of one side's reduced state");
  m.def("mutual_information", &mutual_information, py::arg("state"));

  m.def("required_inner_product", &required_inner_product, py::arg("p"));
  m.def("max_messages", py::overload_cast<double>(&max_messages),
        py::arg("p"));
  m.def("max_messages",
        py::overload_cast<std::int64_t, std::int64_t>(&max_messages),
        py::arg("num"), py::arg("den"));
  m.def(
      "build_simplex_vectors",
      [](double p) {
        auto vs = build_simplex_vectors(p);
        Eigen::MatrixXd out(vs.size(), 4);
        for (std::size_t i = 0; i < vs.size(); ++i) {
          for (int j = 0; j < 4; ++j) out(i, j) = vs[i].v[j];
        }
        return out;
      },
      py::arg("p"), "Rows are the simplex vectors (a, b, c, d)");
  m.def("gram_feasibility", &gram_feasibility, py::arg("n"), py::arg("c"),
        py::arg("dim"), py::arg("eps") = 1e-9);

  m.def(
      "bell_capacity_bounds",
      [](int n) {
        CapacityBounds b = bell_capacity_bounds(n);
        return py::make_tuple(b.lower, b.upper);
      },
      py::arg("n"));
  m.def("sector_superdense_set", &sector_superdense_set, py::arg("d"));
  m.def(
      "simplex_gram",
      [](double p) {
        auto ms = vectors_to_unitaries(build_simplex_vectors(p), p);
        return gram_matrix(ms);
      },
      py::arg("p"),
      "Gram matrix of the simplex-encoded joint states at parameter p");

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("p", &SweepRow::p)
      .def_readonly("n_messages", &SweepRow::n_messages)
      .def_readonly("mutual_info_initial", &SweepRow::mutual_info_initial)
      .def_readonly("mutual_info_final", &SweepRow::mutual_info_final)
      .def_readonly("holevo_chi", &SweepRow::holevo_chi);
  m.def("holevo_chi", &holevo_chi, py::arg("p"));
  m.def("sweep", &sweep, py::arg("grid"), py::arg("threads") = 0);
  m.def("default_sweep_grid", &default_sweep_grid, py::arg("points"));

  m.def(
      "evaluate_braid",
      [](const std::string& word) {
        SectorOperator op = evaluate_word(parse_braid_word(word));
        return py::make_tuple(op.block(Charge::vacuum), op.block(Charge::tau));
      },
      py::arg("word"),
      "Evaluates a braid word; returns (vacuum block, tau block)");
  m.def(
      "compile_braid",
      [](const Eigen::Matrix2cd& target, int max_len) {
        CompileResult res = compile_unitary(target, max_len);
        return py::make_tuple(to_string(res.word), res.distance);
      },
      py::arg("target"), py::arg("max_len") = 10,
      "Best word of length <= max_len approximating the tau-sector target");
}
