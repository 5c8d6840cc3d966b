#include "ribbonforge/bounds.hpp"
#include "ribbonforge/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pybind11::literals;
using namespace ribbonforge;

namespace {

py::object to_fraction(const Rational& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::str(boost::multiprecision::numerator(q).str() + "/" +
                            boost::multiprecision::denominator(q).str()));
}

// int, Fraction, "p/q" strings and floats (taken at their exact binary value).
Rational to_rational(const py::handle& h) {
    if (py::isinstance<py::bool_>(h)) throw py::type_error("expected a number, got bool");
    if (py::isinstance<py::float_>(h)) return rational_from_double(h.cast<double>());
    if (py::isinstance<py::int_>(h) || py::isinstance<py::str>(h) || py::hasattr(h, "denominator")) {
        std::string text = py::str(h).cast<std::string>();
        try {
            return Rational(text);
        } catch (const std::exception&) {
            throw py::value_error("not a rational number: " + text);
        }
    }
    throw py::type_error("expected int, float, Fraction or str");
}

KnotDiagram polygon(const std::vector<std::pair<py::object, py::object>>& pts, std::vector<int> layers) {
    std::vector<Point> v;
    for (const auto& [x, y] : pts) v.push_back({to_rational(x), to_rational(y)});
    KnotDiagram d = KnotDiagram::polygon(v, std::move(layers));
    validate(d);
    return d;
}

py::dict allowed_dict(const AllowedReport& r) {
    py::list witnesses;
    for (const auto& w : r.witnesses) witnesses.append(py::dict("condition"_a = w.condition, "detail"_a = w.detail));
    return py::dict("verdict"_a = r.verdict, "regular"_a = r.regular, "fold_lines_disjoint"_a = r.fold_lines_disjoint,
                    "fold_line_touches"_a = r.fold_line_touches, "max_overlap_degree"_a = r.max_overlap_degree,
                    "overlap_ok"_a = r.overlap_ok, "layer_consistent"_a = r.layer_consistent,
                    "folding_matches"_a = r.folding_matches, "witnesses"_a = witnesses);
}

std::map<int, long long> coefficients(const LaurentPoly& p) { return p.terms(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Folded ribbon knot constructions with exact lengths";

    py::register_exception<std::domain_error>(m, "DomainError", PyExc_ValueError);

    py::class_<ExactLength>(m, "ExactLength", "r + s*sqrt(2) with rational r, s")
        .def(py::init([](py::object r, py::object s) { return ExactLength(to_rational(r), to_rational(s)); }),
             "r"_a, "s"_a = 0)
        .def_property_readonly("r", [](const ExactLength& x) { return to_fraction(x.r()); })
        .def_property_readonly("s", [](const ExactLength& x) { return to_fraction(x.s()); })
        .def("__float__", [](const ExactLength& x) { return to_float(x); })
        .def("__str__", &ExactLength::str)
        .def("__repr__", [](const ExactLength& x) { return "ExactLength(" + x.str() + ")"; })
        .def("__eq__", [](const ExactLength& a, const ExactLength& b) { return a == b; })
        .def("__lt__", [](const ExactLength& a, const ExactLength& b) { return a < b; })
        .def("__le__", [](const ExactLength& a, const ExactLength& b) { return a <= b; })
        .def("__hash__", [](const ExactLength& x) { return py::hash(py::str(x.str())); });

    py::enum_<Topology>(m, "Topology").value("annulus", Topology::annulus).value("moebius", Topology::moebius);

    py::class_<KnotDiagram>(m, "KnotDiagram")
        .def_static("polygon", &polygon, "points"_a, "layers"_a = std::vector<int>{},
                    "Closed polygon; coordinates may be int, Fraction, str or float")
        .def_static("from_json", &diagram_from_json)
        .def("to_json", &diagram_to_json)
        .def_property_readonly("strand_count", [](const KnotDiagram& d) { return d.strands.size(); })
        .def("vertices",
             [](const KnotDiagram& d, std::size_t i) {
                 if (i >= d.strands.size()) throw py::index_error("no such strand");
                 py::list out;
                 for (const Point& p : d.strands[i].vertices)
                     out.append(py::make_tuple(to_fraction(p.x), to_fraction(p.y)));
                 return out;
             },
             "strand"_a = 0);

    m.def("ribbonlength", [](const KnotDiagram& d, py::object w) { return ribbonlength(d, to_rational(w)); },
          "diagram"_a, "width"_a = 1, "Exact length/width; throws ValueError for non-exact edge lengths");
    m.def("diagram_length", &diagram_length_approx);
    m.def("stick_count", &stick_count);
    m.def("is_regular", &is_regular);
    m.def("topology", [](const KnotDiagram& d) { return ribbon_topology(d, derive_folding(d)); });
    m.def("check_allowed",
          [](const KnotDiagram& d, double w) { return allowed_dict(check_allowed(build_ribbon(d, w, derive_folding(d)))); },
          "diagram"_a, "width"_a);
    m.def(
        "max_allowed_width",
        [](const KnotDiagram& d) {
            WidthSearch s = max_allowed_width(d, derive_folding(d));
            std::vector<std::pair<double, bool>> trace;
            for (auto [w, ok] : s.trace) trace.emplace_back(w, ok);
            return py::make_tuple(s.w_star, trace);
        },
        "diagram"_a, "Returns (w_star, [(width, feasible), ...])");

    m.def("pd_code", [](const KnotDiagram& d) { return extract_pd(d, {true}).crossings; });
    m.def("jones", [](const KnotDiagram& d) { return coefficients(jones(extract_pd(d, {true}))); },
          "Jones polynomial in A as {exponent: coefficient}; t = A^-4");
    m.def("jones_string", [](const KnotDiagram& d) { return jones_t_string(jones(extract_pd(d, {true}))); });
    m.def("components", [](const KnotDiagram& d) { return component_count(extract_pd(d, {true})); });

    m.def("fold_local", [](double theta, double w) {
        FoldLocalGeometry g = fold_local(theta, w);
        return py::dict("fold_line_length"_a = g.fold_line_length, "fold_diagram_length"_a = g.fold_diagram_length,
                        "extended_fold_length"_a = g.extended_fold_length, "rhombus_side"_a = g.rhombus_side,
                        "rhombus_half_diagonal"_a = g.rhombus_half_diagonal);
    });

    py::class_<ConstructionResult>(m, "Construction")
        .def_property_readonly("spec", [](const ConstructionResult& c) { return c.spec.str(); })
        .def_property_readonly("diagram", &ConstructionResult::diagram)
        .def_readonly("expected_ribbonlength", &ConstructionResult::expected_ribbonlength)
        .def_readonly("expected_sticks", &ConstructionResult::expected_sticks)
        .def_readonly("expected_crossing_number", &ConstructionResult::expected_crossing_number)
        .def_readonly("crossing_number_is_bound", &ConstructionResult::crossing_number_is_bound)
        .def_readonly("expected_topology", &ConstructionResult::expected_topology)
        .def_readonly("components", &ConstructionResult::components)
        .def_readonly("pretzel_case", &ConstructionResult::pretzel_case)
        .def_readonly("note", &ConstructionResult::note)
        .def("svg", [](const ConstructionResult& c, double explode) { return render_svg(c.ribbon, {explode}); },
             "explode"_a = 0.0);

    m.def("generate", [](const std::string& spec) { return generate(parse_family(spec)); }, "spec"_a,
          "Build a family instance at width 1, e.g. generate('torus:3,2')");
    m.def("step2_planar_length", [](const std::vector<int>& a) { return gen_two_bridge(a).step2_planar_length; });
    m.def("half_twists_svg", [](int p, double explode) { return render_svg(gen_half_twists(p), {explode}); }, "p"_a,
          "explode"_a = 0.0);
    m.def("certify", [](const std::string& spec) {
        Certification c = certify(generate(parse_family(spec)));
        return py::dict("match"_a = c.match, "method"_a = c.method, "reference"_a = c.reference,
                        "generated"_a = c.generated.str(), "expected"_a = c.expected.str(),
                        "generated_components"_a = c.generated_components,
                        "expected_components"_a = c.expected_components);
    });
    m.def("report_json", [](const std::string& spec, py::object w) {
        return report_json(run_family(parse_family(spec), to_rational(w)));
    }, "spec"_a, "width"_a = 1);

    m.def("crossing_number", [](const std::string& spec) {
        CrossingNumber c = crossing_number_info(parse_family(spec));
        return py::make_tuple(c.value, c.is_bound);
    }, "Returns (value, is_upper_bound)");
    m.def("construction_bound", [](const std::string& spec) { return construction_bound(parse_family(spec)); },
          "Closed-form ribbonlength upper bound of the construction");
    m.def("sublinear_coeff", [](int p, int q) {
        SublinearCoeff s = sublinear_coeff(p, q);
        return py::make_tuple(s.a, s.b, s.c);
    });
    m.def("twist_crossover", [] {
        TwistCrossover t = twist_crossover();
        return py::make_tuple(t.crossover, t.last_smaller);
    });
    m.def("comparison_table", [](int q_max) {
        py::list rows;
        for (const BoundRecord& r : comparison_table(q_max))
            rows.append(py::dict("family"_a = r.family, "params"_a = r.params, "crossing_number"_a = r.crossing_number,
                                 "our_bound"_a = r.this_bound, "prior_source"_a = r.prior.source,
                                 "prior_value"_a = r.prior.value, "holds"_a = r.holds, "claimed"_a = r.claimed));
        return rows;
    });
    m.def("table_csv", [](int q_max) { return table_csv(comparison_table(q_max)); });
}
