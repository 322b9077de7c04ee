#include "effalg/classify.hpp"
#include "effalg/cli.hpp"
#include "effalg/concrete.hpp"
#include "effalg/enumerate.hpp"
#include "effalg/io.hpp"
#include "effalg/symbolic.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace effalg;

namespace {

EffectAlgebra from_ea(const std::string& text)
{
    std::istringstream in(text);
    auto v = validate(io::parse_ea(in));
    if (!v.ok())
        throw py::value_error(to_string(v.violations.front()));
    return std::move(*v.algebra);
}

EffectAlgebra from_omp(const std::string& text)
{
    std::istringstream in(text);
    auto file = io::parse_omp(in);
    auto v = validate_system(file.ground_size, file.blocks, file.labels);
    if (!v.ok())
        throw py::value_error(v.violations.front().detail);
    return to_algebra(*v.system);
}

// Rationals cross the boundary as "p/q" strings.
std::vector<std::string> values(const State& s)
{
    std::vector<std::string> out;
    for (const auto& v : s.values)
        out.push_back(to_string(v));
    return out;
}

py::dict verdict(const Verdict& v)
{
    py::dict d;
    d["holds"] = v.holds;
    d["witness"] = v.witness;
    d["detail"] = v.detail;
    return d;
}

}  // namespace

PYBIND11_MODULE(_effalg, m)
{
    m.doc() = "Finite effect algebras, their states and the infinite counterexamples";

    py::class_<EffectAlgebra>(m, "EffectAlgebra")
        .def_property_readonly("size", &EffectAlgebra::size)
        .def_property_readonly("zero", &EffectAlgebra::zero)
        .def_property_readonly("one", &EffectAlgebra::one)
        .def_property_readonly("names", &EffectAlgebra::names)
        .def("sum", &EffectAlgebra::sum)
        .def("leq", &EffectAlgebra::leq)
        .def("supplement", &EffectAlgebra::supplement)
        .def("find", &EffectAlgebra::find)
        .def("hasse_covers", &EffectAlgebra::hasse_covers)
        .def("to_ea", [](const EffectAlgebra& e) { return io::write_ea(e); })
        .def("to_dot", [](const EffectAlgebra& e) { return io::to_dot(e); })
        .def("__repr__", [](const EffectAlgebra& e) { return "<EffectAlgebra with " + std::to_string(e.size()) + " elements>"; });

    m.def("parse_ea", &from_ea, py::arg("text"));
    m.def("parse_omp", &from_omp, py::arg("text"));
    m.def("even_subsets", [](unsigned n) { return to_algebra(even_subsets(n)); });
    m.def("powerset", [](unsigned n) { return to_algebra(powerset(n)); });

    m.def("classify", [](const EffectAlgebra& e, bool with_states) { return classify(e, with_states).flags; },
          py::arg("algebra"), py::arg("with_states") = false);
    m.def("two_valued_states", [](const EffectAlgebra& e) {
        std::vector<std::vector<std::string>> out;
        for (const auto& s : two_valued_states(e))
            out.push_back(values(s));
        return out;
    });
    m.def("extremize", [](const EffectAlgebra& e, const std::vector<std::pair<ElementId, std::string>>& pins,
                          ElementId target, bool maximize) -> py::object {
        StatePolytopeQuery q;
        for (const auto& [a, v] : pins)
            q.pins.emplace_back(a, parse_rational(v));
        q.target = target;
        q.sense = maximize ? Sense::Maximize : Sense::Minimize;
        auto best = lp_extremize(e, q);
        if (!best)
            return py::none();
        return py::make_tuple(to_string(best->first), values(best->second));
    }, py::arg("algebra"), py::arg("pins"), py::arg("target"), py::arg("maximize") = false);
    m.def("unital", [](const EffectAlgebra& e) { return verdict(unital_full_check(e)); });
    m.def("sod", [](const EffectAlgebra& e) { return verdict(sod_full_check(e)); });
    m.def("jauch_piron", [](const EffectAlgebra& e) { return verdict(jp_algebra_check(e)); });

    m.def("enumerate", [](std::size_t n) {
        std::vector<std::string> out;
        for (const auto& e : enumerate_all(n))
            out.push_back(canonical_form(e).encode());
        return out;
    });
    m.def("theorem_violations", [](std::size_t n_max) { return theorem_harness(n_max).total_violations(); });

    m.def("witness", [](const std::string& construction, const std::string& op, const std::string& candidate) {
        std::vector<std::string> args{"witness", construction, op};
        if (!candidate.empty()) {
            args.push_back("--candidate");
            args.push_back(candidate);
        }
        std::ostringstream out;
        std::ostringstream err;
        int code = cli::run(args, out, err);
        if (code == cli::kMalformed)
            throw py::value_error(err.str());
        return py::make_tuple(code == cli::kOk, out.str());
    }, py::arg("construction"), py::arg("op"), py::arg("candidate") = "");

    py::register_exception<io::InputError>(m, "InputError", PyExc_ValueError);
}
