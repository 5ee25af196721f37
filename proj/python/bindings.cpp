#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fuzztop/cli.hpp"
#include "fuzztop/fuzztop.hpp"

namespace py = pybind11;
using namespace fuzztop;

namespace {

FuzzySet to_set(const std::vector<std::string>& grades) {
    std::vector<Grade> g;
    for (const auto& s : grades) g.push_back(Grade::parse(s));
    return FuzzySet(std::move(g));
}

std::vector<std::string> from_set(const FuzzySet& a) {
    std::vector<std::string> out;
    for (const auto& g : a.grades()) out.push_back(g.str());
    return out;
}

Space make_space(const std::vector<std::size_t>& map, const std::string& space, std::optional<std::size_t> window,
                 std::optional<std::size_t> x0, std::optional<unsigned> k) {
    EndoFunction f(map);
    const auto w = window.value_or(default_window(f.size()));
    if (space == "tau1") return WindowedChain(tau1_basis(f), w);
    if (space == "tau1c") return WindowedChain(tau1_complement_basis(f), w);
    if (space == "tau2") return WindowedChain(tau2_basis(f), w);
    if (space == "tau3") {
        if (!x0 || !k) throw InputError("tau3 needs x0 and k");
        return tau3_topology(orbit_data(f, *x0, *k));
    }
    throw InputError("unknown space \"" + space + "\"");
}

}  // namespace

PYBIND11_MODULE(_fuzztop, m) {
    m.doc() = "Exact fuzzy topologies of finite self-maps";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

    m.def("default_window", &default_window, py::arg("size"));

    m.def("zadeh_image", [](const std::vector<std::size_t>& f, const std::vector<std::string>& a) {
        return from_set(zadeh_image(EndoFunction(f), to_set(a)));
    }, py::arg("f"), py::arg("grades"));
    m.def("zadeh_preimage", [](const std::vector<std::size_t>& f, const std::vector<std::string>& a) {
        return from_set(zadeh_preimage(EndoFunction(f), to_set(a)));
    }, py::arg("f"), py::arg("grades"));

    m.def("opens", [](const std::vector<std::size_t>& f, const std::string& space, std::optional<std::size_t> window,
                      std::optional<std::size_t> x0, std::optional<unsigned> k) {
        std::vector<std::vector<std::string>> out;
        const auto t = materialize(make_space(f, space, window, x0, k));
        for (const auto& u : t.opens()) out.push_back(from_set(u));
        return out;
    }, py::arg("f"), py::arg("space"), py::arg("window") = py::none(), py::arg("x0") = py::none(),
       py::arg("k") = py::none());

    // Reports travel as JSON text; the Python package decodes them.
    m.def("check_json", [](const std::vector<std::size_t>& f, const std::string& space,
                           std::optional<std::size_t> window, std::optional<std::size_t> x0,
                           std::optional<unsigned> k) {
        return to_json(property_report(make_space(f, space, window, x0, k))).dump();
    }, py::arg("f"), py::arg("space"), py::arg("window") = py::none(), py::arg("x0") = py::none(),
       py::arg("k") = py::none());
    m.def("map_json", [](const std::vector<std::size_t>& f, const std::string& space,
                         std::optional<std::size_t> window, std::optional<std::size_t> x0,
                         std::optional<unsigned> k) {
        return to_json(map_report(EndoFunction(f), make_space(f, space, window, x0, k))).dump();
    }, py::arg("f"), py::arg("space"), py::arg("window") = py::none(), py::arg("x0") = py::none(),
       py::arg("k") = py::none());
    m.def("verify_json", [](std::size_t max_size, std::vector<unsigned> k_values, std::optional<std::size_t> window) {
        SweepParams p{max_size, std::move(k_values), window.value_or(max_size + 2)};
        py::gil_scoped_release release;
        return to_json(sweep(p)).dump();
    }, py::arg("max_size"), py::arg("k_values"), py::arg("window") = py::none());

    m.def("run", [](const std::vector<std::string>& args, const std::string& input) {
        std::istringstream in(input);
        std::ostringstream out, err;
        const int code = cli::run(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), py::arg("input") = "");
}
