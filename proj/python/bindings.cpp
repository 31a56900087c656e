#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "superquiver/cli.hpp"
#include "superquiver/gabriel.hpp"
#include "superquiver/pathalg.hpp"
#include "superquiver/serialize.hpp"

namespace py = pybind11;
using namespace superquiver;

namespace {

py::object to_python(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

Orientation orientation_for(const SuperRootSystem& rs, const std::string& orient) {
    if (orient.empty()) return Orientation(rs.rank());
    const Orientation o = Orientation::parse(orient);
    if (o.vertex_count() != rs.rank()) throw std::invalid_argument("orientation length does not match n + m - 2");
    return o;
}

py::object roots(std::size_t n, std::size_t m) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : all_roots(SuperRootSystem(n, m))) out.push_back(to_json(r));
    return to_python(out);
}

py::object construct(std::size_t n, std::size_t m, const std::string& root, const std::string& orient,
                     const std::string& simple, bool ascii) {
    const SuperRootSystem rs(n, m);
    const SimpleSystem pi = parse_simple_system(rs, simple);
    const RootObject obj = build_X_alpha(pi, orientation_for(rs, orient), SuperRoot::parse(rs, root));
    nlohmann::json j;
    j["root"] = to_json(obj.root);
    j["object"] = to_json(obj.object);
    j["text"] = render(obj.object, ascii);
    j["parity"] = to_int(parity_value(obj.object));
    j["word_prefix"] = obj.prefix.to_string();
    return to_python(j);
}

py::object verify(std::size_t n, std::size_t m, const std::string& orient, const std::string& simple) {
    const SuperRootSystem rs(n, m);
    return to_python(to_json(verify_main_theorem(parse_simple_system(rs, simple), orientation_for(rs, orient))));
}

std::string ar_dot(std::size_t n, std::size_t m, const std::string& orient, const std::string& simple, bool ascii) {
    const SuperRootSystem rs(n, m);
    return emit_dot(build_ar_quiver(parse_simple_system(rs, simple), orientation_for(rs, orient)), ascii);
}

py::object preprojective(const std::string& colours, const std::string& orient, std::optional<std::vector<int>> signs) {
    const std::string o = orient.empty() && !colours.empty() ? std::string(colours.size() - 1, '<') : orient;
    const ColouredQuiver q = ColouredQuiver::parse(colours, o);
    const DoubleQuiver dq = signs ? DoubleQuiver(q, *signs) : DoubleQuiver(q);
    return to_python(to_json(preprojective_dims(dq)));
}

py::tuple run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Super-representations of coloured type A quivers";
    m.def("roots", &roots, py::arg("n"), py::arg("m"), "All roots of A(n,m) with parities.");
    m.def("construct", &construct, py::arg("n"), py::arg("m"), py::arg("root"), py::arg("orient") = "",
          py::arg("simple") = "", py::arg("ascii") = false, "The object X_alpha for a positive root.");
    m.def("verify", &verify, py::arg("n"), py::arg("m"), py::arg("orient") = "", py::arg("simple") = "",
          "Per-root checks of the indecomposables X_alpha.");
    m.def("ar_dot", &ar_dot, py::arg("n"), py::arg("m"), py::arg("orient") = "", py::arg("simple") = "",
          py::arg("ascii") = false, "The root-labelled AR quiver as Graphviz text.");
    m.def("preprojective_dims", &preprojective, py::arg("colours"), py::arg("orient") = "",
          py::arg("signs") = std::nullopt, "Graded dimensions of the preprojective algebra.");
    m.def("run_cli", &run, py::arg("args"), "Runs the command line tool; returns (exit code, stdout, stderr).");

    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_RuntimeError);
}
