#include "superquiver/quiver.hpp"

#include <algorithm>
#include <sstream>

#include "superquiver/errors.hpp"

namespace superquiver {

Orientation::Orientation(std::size_t vertices) {
    if (vertices == 0) throw PreconditionError("Orientation: a quiver needs at least one vertex");
    arrows_.assign(vertices - 1, Arrow::left);
}

Orientation::Orientation(std::vector<Arrow> arrows) : arrows_(std::move(arrows)) {}

Orientation Orientation::parse(std::string_view text) {
    std::vector<Arrow> arrows;
    arrows.reserve(text.size());
    for (char c : text) {
        if (c == '<') {
            arrows.push_back(Arrow::left);
        } else if (c == '>') {
            arrows.push_back(Arrow::right);
        } else {
            throw PreconditionError(std::string("Orientation::parse: unexpected character '") + c + "'");
        }
    }
    return Orientation(std::move(arrows));
}

std::vector<Orientation> Orientation::all(std::size_t vertices) {
    if (vertices == 0) throw PreconditionError("Orientation::all: no vertices");
    const std::size_t edges = vertices - 1;
    std::vector<Orientation> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << edges); ++mask) {
        std::vector<Arrow> arrows(edges);
        for (std::size_t j = 0; j < edges; ++j) arrows[j] = ((mask >> j) & 1U) ? Arrow::right : Arrow::left;
        out.emplace_back(std::move(arrows));
    }
    return out;
}

void Orientation::check_vertex(std::size_t i) const {
    if (i >= vertex_count()) {
        throw PreconditionError("vertex " + std::to_string(i + 1) + " out of range 1.." +
                                std::to_string(vertex_count()));
    }
}

Edge Orientation::edge(std::size_t j) const {
    return arrows_.at(j) == Arrow::right ? Edge{j, j + 1} : Edge{j + 1, j};
}

std::vector<std::size_t> Orientation::neighbours(std::size_t i) const {
    check_vertex(i);
    std::vector<std::size_t> out;
    if (i > 0) out.push_back(i - 1);
    if (i + 1 < vertex_count()) out.push_back(i + 1);
    return out;
}

std::size_t Orientation::edge_between(std::size_t i, std::size_t k) const {
    if (k + 1 == i) return k;
    if (i + 1 == k) return i;
    throw PreconditionError("vertices " + std::to_string(i + 1) + " and " + std::to_string(k + 1) +
                            " are not adjacent");
}

bool Orientation::is_sink(std::size_t i) const {
    check_vertex(i);
    for (std::size_t k : neighbours(i)) {
        if (edge(edge_between(i, k)).source == i) return false;
    }
    return true;
}

bool Orientation::is_source(std::size_t i) const {
    check_vertex(i);
    for (std::size_t k : neighbours(i)) {
        if (edge(edge_between(i, k)).target == i) return false;
    }
    return true;
}

std::vector<std::size_t> Orientation::sinks() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < vertex_count(); ++i)
        if (is_sink(i)) out.push_back(i);
    return out;
}

std::vector<std::size_t> Orientation::sources() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < vertex_count(); ++i)
        if (is_source(i)) out.push_back(i);
    return out;
}

Orientation Orientation::reflected(std::size_t i) const {
    check_vertex(i);
    std::vector<Arrow> arrows = arrows_;
    for (std::size_t k : neighbours(i)) {
        auto& a = arrows[edge_between(i, k)];
        a = a == Arrow::left ? Arrow::right : Arrow::left;
    }
    return Orientation(std::move(arrows));
}

Orientation Orientation::reversed() const {
    std::vector<Arrow> arrows = arrows_;
    for (auto& a : arrows) a = a == Arrow::left ? Arrow::right : Arrow::left;
    return Orientation(std::move(arrows));
}

std::string Orientation::to_string() const {
    std::string s;
    for (Arrow a : arrows_) s += a == Arrow::left ? '<' : '>';
    return s;
}

ColouredQuiver::ColouredQuiver(std::vector<Parity> colours, Orientation orientation)
    : colours_(std::move(colours)), orientation_(std::move(orientation)) {
    if (colours_.size() != orientation_.vertex_count()) {
        throw DimensionError("ColouredQuiver: " + std::to_string(colours_.size()) + " colours for " +
                             std::to_string(orientation_.vertex_count()) + " vertices");
    }
}

ColouredQuiver ColouredQuiver::parse(std::string_view colours, std::string_view orientation) {
    std::vector<Parity> ps;
    for (char c : colours) {
        if (c == 'o' || c == '0') {
            ps.push_back(Parity::even);
        } else if (c == 'x' || c == '1') {
            ps.push_back(Parity::odd);
        } else {
            throw PreconditionError(std::string("ColouredQuiver::parse: bad colour '") + c + "'");
        }
    }
    return {std::move(ps), Orientation::parse(orientation)};
}

Parity ColouredQuiver::edge_degree(std::size_t j) const {
    const Edge e = edge(j);
    return colour(e.source) + colour(e.target);
}

std::string ColouredQuiver::to_string(bool ascii) const {
    std::string s;
    for (std::size_t i = 0; i < vertex_count(); ++i) {
        if (i > 0) {
            const bool left = orientation_.arrow(i - 1) == Arrow::left;
            if (ascii) {
                s += left ? " <- " : " -> ";
            } else {
                s += left ? " ← " : " → ";
            }
        }
        if (ascii) {
            s += is_odd(colour(i)) ? "(x)" : "o";
        } else {
            s += is_odd(colour(i)) ? "⊗" : "○";
        }
    }
    return s;
}

ColouredQuiver reflect_quiver(const ColouredQuiver& q, std::size_t i) {
    const Orientation& o = q.orientation();
    if (!o.is_sink(i) && !o.is_source(i)) {
        throw PreconditionError("reflect_quiver: vertex " + std::to_string(i + 1) + " is neither a sink nor a source");
    }
    std::vector<Parity> colours = q.colours();
    if (is_odd(q.colour(i))) {
        for (std::size_t k : o.neighbours(i)) colours[k] += Parity::odd;
    }
    return {std::move(colours), o.reflected(i)};
}

HeightFunction::HeightFunction(std::vector<int> values, int coxeter_number)
    : values_(std::move(values)), coxeter_number_(coxeter_number) {
    if (values_.empty()) throw PreconditionError("HeightFunction: no vertices");
    const int period = 2 * coxeter_number_;
    for (auto& v : values_) v = ((v % period) + period) % period;
    for (std::size_t j = 0; j + 1 < values_.size(); ++j) {
        const int d = ((values_[j + 1] - values_[j]) % period + period) % period;
        if (d != 1 && d != period - 1) {
            throw PreconditionError("HeightFunction: adjacent values must differ by one");
        }
    }
}

Orientation orientation_from_height(const HeightFunction& h) {
    const int period = h.period();
    std::vector<Arrow> arrows;
    for (std::size_t j = 0; j + 1 < h.values().size(); ++j) {
        const int d = ((h(j + 1) - h(j)) % period + period) % period;
        arrows.push_back(d == 1 ? Arrow::right : Arrow::left);
    }
    return Orientation(std::move(arrows));
}

HeightFunction height_from_orientation(const Orientation& omega) {
    std::vector<int> values(omega.vertex_count(), 0);
    for (std::size_t j = 0; j < omega.edge_count(); ++j) {
        values[j + 1] = values[j] + (omega.arrow(j) == Arrow::right ? 1 : -1);
    }
    const int lo = *std::min_element(values.begin(), values.end());
    for (auto& v : values) v -= lo;
    return {std::move(values), static_cast<int>(omega.vertex_count()) + 1};
}

std::string quiver_to_dot(const ColouredQuiver& q, std::string_view name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < q.vertex_count(); ++i) {
        os << "  v" << i + 1 << " [label=\"" << (is_odd(q.colour(i)) ? "⊗" : "○") << "\\n" << i + 1
           << "\", shape=" << (is_odd(q.colour(i)) ? "doublecircle" : "circle") << "];\n";
    }
    for (std::size_t j = 0; j < q.edge_count(); ++j) {
        const Edge e = q.edge(j);
        os << "  v" << e.source + 1 << " -> v" << e.target + 1 << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace superquiver
