#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "tricontain/analysis.hpp"
#include "tricontain/closed_forms.hpp"
#include "tricontain/errors.hpp"
#include "tricontain/kernel.hpp"
#include "tricontain/montecarlo.hpp"
#include "tricontain/region.hpp"
#include "tricontain/region_io.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

using Pair = std::pair<double, double>;

tricontain::Vec2 to_vec(Pair p) { return {p.first, p.second}; }
Pair to_pair(tricontain::Vec2 v) { return {v.x, v.y}; }

} // namespace

PYBIND11_MODULE(tricontain, m) {
    using namespace tricontain;

    m.doc() = "Probability that a random triangle from a planar region contains a fixed point";

    py::register_exception<Error>(m, "Error");
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "RegionParseError", PyExc_ValueError);

    py::class_<Region>(m, "Region")
        .def("describe", &Region::describe)
        .def("__repr__", [](const Region& r) { return "<Region " + r.describe() + ">"; });

    py::class_<ProbabilityResult>(m, "ProbabilityResult")
        .def_readonly("value", &ProbabilityResult::value)
        .def_readonly("error_estimate", &ProbabilityResult::error_estimate)
        .def_readonly("raw_value", &ProbabilityResult::raw_value)
        .def_property_readonly(
            "method", [](const ProbabilityResult& r) { return method_name(r.method); });

    py::class_<mc::McEstimate>(m, "McEstimate")
        .def_readonly("p_hat", &mc::McEstimate::p_hat)
        .def_readonly("std_err", &mc::McEstimate::std_err)
        .def_readonly("n", &mc::McEstimate::n)
        .def_readonly("seed", &mc::McEstimate::seed);

    py::class_<analysis::BoundsReport>(m, "BoundsReport")
        .def_readonly("h", &analysis::BoundsReport::h)
        .def_readonly("lower", &analysis::BoundsReport::lower)
        .def_readonly("upper", &analysis::BoundsReport::upper)
        .def_readonly("p", &analysis::BoundsReport::p);

    // region factories
    m.def("square", &Region::unit_square, "unit square [0,1]^2");
    m.def("disk", &Region::disk, "unit-area disk about the origin");
    m.def("circle", &Region::circle, "R"_a, "disk of radius R about the origin");
    m.def("crescent", &Region::crescent, "unit disk minus the disk r = cos(theta)");
    m.def("limacon", &Region::limacon, "a"_a, "unit-area limacon, a >= 1");
    m.def("equilateral_triangle", &Region::equilateral_triangle);
    m.def("regular_polygon", &Region::regular_polygon, "m"_a, "2m+1 vertices, unit area");
    m.def("disk_slice", &Region::disk_slice, "a"_a);
    m.def("offset_disk", &Region::offset_disk, "r"_a);
    m.def("polygon", [](const std::vector<Pair>& vs) {
        std::vector<Vec2> pts;
        pts.reserve(vs.size());
        for (Pair p : vs) pts.push_back(to_vec(p));
        return Region::polygon(std::move(pts));
    }, "vertices"_a, "simple counterclockwise polygon from (x, y) pairs");
    m.def("triangle", [](Pair a, Pair b, Pair c) {
        return Region::triangle(to_vec(a), to_vec(b), to_vec(c));
    }, "a"_a, "b"_a, "c"_a);

    m.def("resolve_region", [](const std::string& text) {
        const io::RegionSpec spec = io::resolve_region(text);
        return py::make_tuple(spec.region, to_pair(spec.anchor));
    }, "text"_a, "(region, anchor) from an inline shorthand or a region-file path");

    m.def("area", [](const Region& r) { return area(r); }, "region"_a);
    m.def("contains", [](const Region& r, Pair p) { return contains(r, to_vec(p)); },
          "region"_a, "point"_a);

    m.def("probability",
          [](const Region& r, Pair anchor, double tol) {
              return probability(r, to_vec(anchor), tol);
          },
          "region"_a, "anchor"_a = Pair{0.0, 0.0}, "tol"_a = 1e-10,
          "P that a random triangle contains the anchor, via boundary-density quadrature");

    m.def("estimate_probability",
          [](const Region& r, Pair anchor, long long n, std::uint64_t seed) {
              return mc::estimate_probability(r, to_vec(anchor), n, seed);
          },
          "region"_a, "anchor"_a = Pair{0.0, 0.0}, "n"_a = 1000000, "seed"_a = 42);

    m.def("sylvester_nonconvex",
          [](const Region& r, long long n, std::uint64_t seed) {
              return mc::sylvester_nonconvex(r, n, seed);
          },
          "region"_a, "n"_a = 1000000, "seed"_a = 42);

    m.def("bounds",
          [](const Region& r, Pair anchor) { return analysis::bounds(r, to_vec(anchor)); },
          "region"_a, "anchor"_a = Pair{0.0, 0.0});

    m.def("symmetry_defect",
          [](const Region& r, Pair anchor) {
              return analysis::symmetry_defect(r, to_vec(anchor));
          },
          "region"_a, "anchor"_a = Pair{0.0, 0.0});

    m.def("maximize",
          [](const Region& r, int grid, int refine_iters) {
              const analysis::MaximizerReport rep = analysis::maximize(r, grid, refine_iters);
              return py::make_tuple(to_pair(rep.argmax), rep.p_max);
          },
          "region"_a, "grid"_a = 24, "refine_iters"_a = 80,
          "(argmax, p_max) of P over interior anchors");

    // closed forms
    py::module_ cf = m.def_submodule("closed_forms", "exact family formulas");
    cf.def("limacon_probability", &closed_forms::limacon_probability, "a"_a);
    cf.def("regular_polygon_probability", &closed_forms::regular_polygon_probability, "m"_a);
    cf.def("triangle_probability",
           [](double alpha, double beta, double gamma) {
               return closed_forms::triangle_probability({alpha, beta, gamma});
           },
           "alpha"_a, "beta"_a, "gamma"_a);
    cf.def("square_probability", &closed_forms::square_probability, "u"_a, "v"_a);
    cf.def("square_diagonal_probability", &closed_forms::square_diagonal_probability, "u"_a);
    cf.def("slice_disk_probability", &closed_forms::slice_disk_probability, "a"_a);
    cf.def("offset_disk_probability", &closed_forms::offset_disk_probability, "r"_a);
    cf.def("offset_disk_average", []() {
        const auto avg = closed_forms::offset_disk_average();
        return py::make_tuple(avg.value, avg.reference);
    });
}
