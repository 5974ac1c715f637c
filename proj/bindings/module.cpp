#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <vector>

#include "c2framed/errors.hpp"
#include "c2framed/expr.hpp"
#include "c2framed/manifold.hpp"
#include "c2framed/numeric_verify.hpp"
#include "c2framed/pt_map.hpp"
#include "c2framed/stem_groups.hpp"

namespace py = pybind11;
using namespace c2framed;

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Pontryagin-Thom evaluation for C2-equivariant framed "
              "1-manifolds, plus the numeric verification kernel.";

    py::register_exception<GradeMismatchError>(m, "GradeMismatchError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ExprParseError", PyExc_ValueError);
    py::register_exception<StepTooLargeError>(m, "StepTooLargeError", PyExc_ValueError);
    py::register_exception<LiftAmbiguousError>(m, "LiftAmbiguousError", PyExc_ValueError);
    py::register_exception<SymmetryViolatedError>(m, "SymmetryViolatedError", PyExc_ValueError);

    py::enum_<FramingGrade>(m, "FramingGrade")
        .value("R", FramingGrade::TrivialR)
        .value("SIGMA", FramingGrade::SignSigma);

    py::enum_<ComponentKind>(m, "ComponentKind")
        .value("TRIVIAL_CIRCLE", ComponentKind::TrivialCircle)
        .value("FREE_DOUBLE_CIRCLE", ComponentKind::FreeDoubleCircle)
        .value("ANTIPODAL_CIRCLE", ComponentKind::AntipodalCircle)
        .value("REFLECTION_CIRCLE", ComponentKind::ReflectionCircle);

    py::class_<ReprDims>(m, "ReprDims")
        .def_readonly("trivial_copies", &ReprDims::trivial_copies)
        .def_readonly("sign_copies", &ReprDims::sign_copies)
        .def("total", &ReprDims::total)
        .def("fixed_dim", &ReprDims::fixed_dim)
        .def("__repr__", [](const ReprDims& d) {
            return "ReprDims(trivial=" + std::to_string(d.trivial_copies) +
                   ", sign=" + std::to_string(d.sign_copies) + ")";
        });
    m.def("dims_of", &dims_of, py::arg("grade"));
    m.def("grade_name", &grade_name, py::arg("grade"));
    m.def("kind_name", &kind_name, py::arg("kind"));

    py::class_<FramedComponent>(m, "FramedComponent")
        .def_readonly("kind", &FramedComponent::kind)
        .def_readonly("twist", &FramedComponent::twist)
        .def(py::self == py::self)
        .def("__repr__", [](const FramedComponent& c) {
            return std::string(kind_name(c.kind)) + "[" + std::to_string(c.twist) + "]";
        });
    m.def("make_component", &make_component, py::arg("kind"), py::arg("twist"),
          py::arg("grade"));

    py::class_<FramedManifold>(m, "FramedManifold")
        .def(py::init<FramingGrade>(), py::arg("grade"))
        .def(py::init<FramingGrade, std::vector<FramedComponent>>(), py::arg("grade"),
             py::arg("components"))
        .def_property_readonly("grade", &FramedManifold::grade)
        .def_property_readonly("components",
                               [](const FramedManifold& m) {
                                   const auto view = m.components();
                                   return std::vector<FramedComponent>(view.begin(), view.end());
                               })
        .def("__len__", &FramedManifold::size)
        .def(py::self == py::self)
        .def("__add__", &disjoint_union)
        .def("__str__", &format_manifold)
        .def("__repr__", [](const FramedManifold& m) {
            return "FramedManifold(" + std::string(grade_name(m.grade())) + ", \"" +
                   format_manifold(m) + "\")";
        });
    m.def("disjoint_union", &disjoint_union, py::arg("lhs"), py::arg("rhs"));
    m.def("normalize", &normalize, py::arg("manifold"));

    py::class_<Pi1Element>(m, "Pi1Element")
        .def(py::init([](int pi1, int h0, int h1) {
                 return Pi1Element{static_cast<std::uint8_t>(pi1 & 1),
                                   static_cast<std::uint8_t>(h0 & 1),
                                   static_cast<std::uint8_t>(h1 & 1)};
             }),
             py::arg("pi1_sphere") = 0, py::arg("h0_bc2") = 0, py::arg("h1_bc2") = 0)
        .def_readonly("pi1_sphere", &Pi1Element::pi1_sphere)
        .def_readonly("h0_bc2", &Pi1Element::h0_bc2)
        .def_readonly("h1_bc2", &Pi1Element::h1_bc2)
        .def(py::self + py::self)
        .def(py::self == py::self)
        .def("__repr__", [](const Pi1Element& e) {
            return "(" + std::to_string(e.pi1_sphere) + "," + std::to_string(e.h0_bc2) + "," +
                   std::to_string(e.h1_bc2) + ")";
        });

    py::enum_<TomDieckSummand>(m, "TomDieckSummand")
        .value("PI1_SPHERE", TomDieckSummand::Pi1Sphere)
        .value("H0", TomDieckSummand::H0)
        .value("H1", TomDieckSummand::H1);
    m.def("tom_dieck_project", &tom_dieck_project, py::arg("element"), py::arg("summand"));

    // Integer-valued groups pass through as plain ints.
    m.def("pt_image_r", &pt_image_r, py::arg("manifold"));
    m.def("pt_image_sigma",
          [](const FramedManifold& m) { return pt_image_sigma(m).value; },
          py::arg("manifold"));
    m.def("is_cobordant", &is_cobordant, py::arg("lhs"), py::arg("rhs"));
    m.def("rewrite_antipodal", &rewrite_antipodal, py::arg("manifold"));
    m.def("tom_dieck_split_r",
          [](const FramedManifold& m) {
              auto split = tom_dieck_split_r(m);
              return py::make_tuple(split.fixed_part, split.free_part);
          },
          py::arg("manifold"));
    m.def("fixed_points_sigma",
          [](const FramedManifold& m) { return fixed_points_sigma(m).value; },
          py::arg("manifold"));
    m.def("forget_r", &forget_r, py::arg("manifold"));

    m.def("parse_manifold", &parse_manifold, py::arg("text"), py::arg("grade"));
    m.def("format_manifold", &format_manifold, py::arg("manifold"));

    py::class_<LoopSamples>(m, "LoopSamples")
        .def(py::init<std::vector<Eigen::MatrixXd>, double>(), py::arg("samples"),
             py::arg("tol") = 1e-9)
        .def("__len__", &LoopSamples::size)
        .def_property_readonly("matrix_size", &LoopSamples::matrix_size)
        .def("__getitem__", [](const LoopSamples& loop, std::size_t k) {
            if (k >= loop.size()) throw py::index_error();
            return loop[k];
        });

    py::class_<CheckReport>(m, "CheckReport")
        .def_readonly("name", &CheckReport::name)
        .def_readonly("max_error", &CheckReport::max_error)
        .def_readonly("samples_used", &CheckReport::samples_used)
        .def_readonly("passed", &CheckReport::passed)
        .def_readonly("details", &CheckReport::details)
        .def("__repr__", [](const CheckReport& r) {
            return "CheckReport(" + r.name + (r.passed ? ", passed" : ", FAILED") +
                   ", max_error=" + std::to_string(r.max_error) + ")";
        });

    m.def("frame_matrix_f", &frame_matrix_f, py::arg("theta"));
    m.def("check_f_so3_grid", &check_f_so3_grid, py::arg("num_samples") = 1024,
          py::arg("tol") = 1e-9);
    m.def("check_f_equivariance", &check_f_equivariance, py::arg("num_samples") = 1024,
          py::arg("tol") = 1e-9);
    m.def("check_so4_identity", &check_so4_identity, py::arg("num_samples") = 1024,
          py::arg("tol") = 1e-12);
    m.def("winding_number", &winding_number, py::arg("loop"));
    m.def("so3_loop_class", &so3_loop_class, py::arg("loop"));
    m.def("check_equivariant_degree_even", &check_equivariant_degree_even, py::arg("loop"),
          py::arg("tol") = 1e-9);
    m.def("hopf_map", &hopf_map, py::arg("z0"), py::arg("z1"));
    m.def("check_hopf_properties", &check_hopf_properties, py::arg("num_samples") = 10000,
          py::arg("tol") = 1e-9, py::arg("seed") = 0x9e3779b97f4a7c15ULL);
    m.def("so2_rotation_loop", &so2_rotation_loop, py::arg("degree"), py::arg("num_samples"));
    m.def("so3_rotation_loop", &so3_rotation_loop, py::arg("degree"), py::arg("num_samples"));
    m.def("so4_rotation_loop", &so4_rotation_loop, py::arg("degree"), py::arg("num_samples"));
    m.def("read_loop_samples_text",
          [](const std::string& text, double tol) {
              std::istringstream in(text);
              return read_loop_samples(in, tol);
          },
          py::arg("text"), py::arg("tol") = 1e-9,
          "Parse loop samples from the plain text format: one matrix per line, "
          "row-major entries, whitespace separated.");
    m.def("write_loop_samples_text",
          [](const LoopSamples& loop) {
              std::ostringstream out;
              write_loop_samples(out, loop);
              return out.str();
          },
          py::arg("loop"));
    m.def("run_all_checks",
          [](int grid_samples, int hopf_samples, double tol, double so4_tol) {
              return run_all_checks({grid_samples, hopf_samples, tol, so4_tol});
          },
          py::arg("grid_samples") = 1024, py::arg("hopf_samples") = 10000,
          py::arg("tol") = 1e-9, py::arg("so4_tol") = 1e-12);

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
