#include "superquiver/serialize.hpp"

namespace superquiver {

using nlohmann::json;

json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const SuperRoot& r) {
    return {{"name", r.name(true)}, {"coords", r.coords()}, {"parity", to_int(r.parity())}};
}

json to_json(const SimpleSystem& pi) {
    json roots = json::array();
    for (const auto& r : pi.roots()) roots.push_back(to_json(r));
    return roots;
}

json to_json(const ColouredQuiver& q) {
    json parity = json::array();
    for (auto p : q.colours()) parity.push_back(to_int(p));
    json edges = json::array();
    for (std::size_t j = 0; j < q.edge_count(); ++j) {
        const Edge e = q.edge(j);
        edges.push_back({e.source + 1, e.target + 1});
    }
    return {{"parity", parity}, {"edges", edges}, {"orientation", q.orientation().to_string()}};
}

json to_json(const Representation& x) {
    json maps = json::array();
    for (std::size_t j = 0; j < x.maps().size(); ++j) {
        const Edge e = x.orientation().edge(j);
        maps.push_back({{"source", e.source + 1}, {"target", e.target + 1}, {"matrix", to_json(x.map(j))}});
    }
    return {{"orientation", x.orientation().to_string()}, {"dims", x.dims()}, {"maps", maps}};
}

json to_json(const SuperRep& x) {
    json spaces = json::array();
    for (const auto& s : x.spaces()) spaces.push_back({s.even, s.odd});
    json maps = json::array();
    for (std::size_t j = 0; j < x.maps().size(); ++j) {
        const Edge e = x.quiver().edge(j);
        maps.push_back({{"source", e.source + 1},
                        {"target", e.target + 1},
                        {"degree", to_int(x.map(j).degree())},
                        {"matrix", to_json(x.map(j).matrix())}});
    }
    return {{"quiver", to_json(x.quiver())}, {"spaces", spaces}, {"maps", maps}, {"text", render(x, true)}};
}

json to_json(const RootCheck& c) {
    return {{"root", c.root.name(true)},
            {"dim_vector", c.dims},
            {"parity", to_int(c.parity)},
            {"word_prefix", c.prefix.to_string()},
            {"indecomposable", c.indecomposable},
            {"checks",
             {{"indecomposable", c.indecomposable},
              {"dimension", c.dimension_matches},
              {"parity", c.parity_matches}}}};
}

json to_json(const MainTheoremReport& r) {
    json roots = json::array();
    for (const auto& c : r.checks) roots.push_back(to_json(c));
    return {{"roots", roots}, {"failures", r.failures()}, {"passed", r.passed()}};
}

json to_json(const GrothendieckReport& r) {
    return {{"lattice_rank", r.lattice_rank},       {"expected_rank", r.expected_rank},
            {"class_count", r.class_count},         {"root_count", r.root_count},
            {"classes_match_roots", r.classes_match_roots}, {"negation_consistent", r.negation_consistent},
            {"passed", r.passed()}};
}

json to_json(const ARQuiver& ar) {
    json vertices = json::array();
    for (const auto& v : ar.vertices) {
        json entry = {{"vertex", v.vertex + 1}, {"level", v.level}};
        if (auto it = ar.labels.find(v); it != ar.labels.end()) entry["root"] = it->second.name(true);
        if (auto it = ar.colours.find(v); it != ar.colours.end()) entry["parity"] = to_int(it->second);
        vertices.push_back(std::move(entry));
    }
    json arrows = json::array();
    for (const auto& [a, b] : ar.arrows) arrows.push_back({{a.vertex + 1, a.level}, {b.vertex + 1, b.level}});
    return {{"coxeter_number", ar.coxeter_number}, {"vertices", vertices}, {"arrows", arrows}};
}

json to_json(const PreprojectiveDims& d) {
    json table = json::object();
    for (std::size_t k = 0; k < d.by_length.size(); ++k) {
        table[std::to_string(k)] = {{"even", d.by_length[k].even}, {"odd", d.by_length[k].odd}};
    }
    const GradedSlice t = d.total_graded();
    return {{"by_length", table}, {"total", d.total()}, {"total_even", t.even}, {"total_odd", t.odd},
            {"vanished", d.vanished}};
}

}  // namespace superquiver
