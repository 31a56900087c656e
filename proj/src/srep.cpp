#include "superquiver/srep.hpp"

#include "superquiver/errors.hpp"

namespace superquiver {

SuperRep::SuperRep(ColouredQuiver quiver, std::vector<SuperDim> spaces, std::vector<GradedMap> maps)
    : quiver_(std::move(quiver)), spaces_(std::move(spaces)), maps_(std::move(maps)) {
    if (spaces_.size() != quiver_.vertex_count()) {
        throw DimensionError("SuperRep: " + std::to_string(spaces_.size()) + " spaces for " +
                             std::to_string(quiver_.vertex_count()) + " vertices");
    }
    if (maps_.size() != quiver_.edge_count()) throw DimensionError("SuperRep: wrong number of edge maps");
    for (std::size_t j = 0; j < maps_.size(); ++j) {
        const Edge e = quiver_.edge(j);
        const GradedMap& f = maps_[j];
        if (!(f.source() == spaces_[e.source]) || !(f.target() == spaces_[e.target])) {
            throw DimensionError("SuperRep: map on edge " + std::to_string(e.source + 1) + "->" +
                                 std::to_string(e.target + 1) + " does not match the vertex spaces");
        }
        if (f.degree() != quiver_.edge_degree(j)) {
            throw DimensionError("SuperRep: map on edge " + std::to_string(e.source + 1) + "->" +
                                 std::to_string(e.target + 1) + " has degree " + std::to_string(to_int(f.degree())) +
                                 ", expected " + std::to_string(to_int(quiver_.edge_degree(j))));
        }
    }
}

SuperRep SuperRep::zero_maps(ColouredQuiver quiver, std::vector<SuperDim> spaces) {
    std::vector<GradedMap> maps;
    for (std::size_t j = 0; j < quiver.edge_count(); ++j) {
        const Edge e = quiver.edge(j);
        maps.push_back(GradedMap::zero(spaces.at(e.source), spaces.at(e.target), quiver.edge_degree(j)));
    }
    return {std::move(quiver), std::move(spaces), std::move(maps)};
}

DimensionVector SuperRep::dimension_vector() const {
    DimensionVector d;
    for (const auto& s : spaces_) d.push_back(s.total());
    return d;
}

bool SuperRep::is_zero() const {
    for (const auto& s : spaces_)
        if (s.total() != 0) return false;
    return true;
}

Parity parity_value(const SuperRep& x) {
    std::size_t odd = 0;
    for (const auto& s : x.spaces()) odd += s.odd;
    return parity_of(odd);
}

SuperRep parity_functor(const SuperRep& x) {
    std::vector<SuperDim> spaces;
    for (const auto& s : x.spaces()) spaces.push_back(parity_change(s));
    std::vector<GradedMap> maps;
    for (const auto& f : x.maps()) maps.push_back(parity_change_map(f));
    return {x.quiver(), std::move(spaces), std::move(maps)};
}

namespace {

bool squares_commute(const SuperRep& x, const SuperRep& y, const std::vector<Matrix>& phi) {
    for (std::size_t e = 0; e < x.maps().size(); ++e) {
        const Edge edge = x.quiver().edge(e);
        if (!(y.map(e).matrix() * phi[edge.source] == phi[edge.target] * x.map(e).matrix())) return false;
    }
    return true;
}

// Restriction of f to the component `from_shift` of its source and the
// component `to_shift` of its target, as a map of the given degree between
// single-component spaces placed in the given degrees.
GradedMap restrict_map(const GradedMap& f, Parity from, Parity to, Parity source_place, Parity target_place) {
    SuperDim src;
    SuperDim tgt;
    (is_odd(source_place) ? src.odd : src.even) = f.source().part(from);
    (is_odd(target_place) ? tgt.odd : tgt.even) = f.target().part(to);
    return {src, tgt, source_place + target_place, f.block(to, from)};
}

GradedMap direct_sum_map(const GradedMap& f, const GradedMap& g) {
    if (f.degree() != g.degree()) throw DimensionError("direct_sum: edge maps of different degree");
    const Parity d = f.degree();
    return GradedMap::from_blocks(direct_sum(f.source(), g.source()), direct_sum(f.target(), g.target()), d,
                                  block_diagonal(f.block(d, Parity::even), g.block(d, Parity::even)),
                                  block_diagonal(f.block(d + Parity::odd, Parity::odd),
                                                 g.block(d + Parity::odd, Parity::odd)));
}

}  // namespace

bool is_morphism(const SuperRep& x, const SuperRep& y, const SuperMorphism& phi) {
    if (!(x.quiver() == y.quiver()) || phi.components.size() != x.vertex_count()) return false;
    std::vector<Matrix> raw;
    for (std::size_t j = 0; j < phi.components.size(); ++j) {
        const GradedMap& c = phi.components[j];
        if (c.degree() != phi.degree || !(c.source() == x.space(j)) || !(c.target() == y.space(j))) return false;
        raw.push_back(c.matrix());
    }
    return squares_commute(x, y, raw);
}

SuperMorphism parity_isomorphism(const SuperRep& x) {
    SuperMorphism phi{Parity::odd, {}};
    for (const auto& s : x.spaces()) phi.components.push_back(GradedMap::parity_shift(s));
    return phi;
}

std::pair<SuperRep, SuperRep> split_even_odd(const SuperRep& x) {
    const ColouredQuiver& q = x.quiver();
    std::vector<SuperDim> matching;
    std::vector<SuperDim> other;
    for (std::size_t j = 0; j < x.vertex_count(); ++j) {
        const Parity p = q.colour(j);
        SuperDim a;
        SuperDim b;
        (is_odd(p) ? a.odd : a.even) = x.space(j).part(p);
        (is_odd(p) ? b.even : b.odd) = x.space(j).part(p + Parity::odd);
        matching.push_back(a);
        other.push_back(b);
    }
    std::vector<GradedMap> m1;
    std::vector<GradedMap> m2;
    for (std::size_t e = 0; e < q.edge_count(); ++e) {
        const Edge edge = q.edge(e);
        const Parity ps = q.colour(edge.source);
        const Parity pt = q.colour(edge.target);
        m1.push_back(restrict_map(x.map(e), ps, pt, ps, pt));
        m2.push_back(restrict_map(x.map(e), ps + Parity::odd, pt + Parity::odd, ps + Parity::odd, pt + Parity::odd));
    }
    return {SuperRep(q, std::move(matching), std::move(m1)), SuperRep(q, std::move(other), std::move(m2))};
}

SuperRep direct_sum(const SuperRep& x, const SuperRep& y) {
    if (!(x.quiver() == y.quiver())) throw DimensionError("direct_sum: different coloured quivers");
    std::vector<SuperDim> spaces;
    for (std::size_t j = 0; j < x.vertex_count(); ++j) spaces.push_back(direct_sum(x.space(j), y.space(j)));
    std::vector<GradedMap> maps;
    for (std::size_t e = 0; e < x.maps().size(); ++e) maps.push_back(direct_sum_map(x.map(e), y.map(e)));
    return {x.quiver(), std::move(spaces), std::move(maps)};
}

SuperRep embed_G(const Representation& x, const ColouredQuiver& q) {
    if (!(x.orientation() == q.orientation())) throw DimensionError("embed_G: orientations differ");
    std::vector<SuperDim> spaces;
    for (std::size_t j = 0; j < x.vertex_count(); ++j) {
        spaces.push_back(is_odd(q.colour(j)) ? SuperDim{0, x.dim(j)} : SuperDim{x.dim(j), 0});
    }
    std::vector<GradedMap> maps;
    for (std::size_t e = 0; e < q.edge_count(); ++e) {
        const Edge edge = q.edge(e);
        maps.emplace_back(spaces[edge.source], spaces[edge.target], q.edge_degree(e), x.map(e));
    }
    return {q, std::move(spaces), std::move(maps)};
}

SuperRep normalize(const SuperRep& x) {
    const ColouredQuiver& q = x.quiver();
    std::vector<SuperDim> spaces;
    for (std::size_t j = 0; j < x.vertex_count(); ++j) spaces.push_back(shift(x.space(j), q.colour(j)));
    std::vector<GradedMap> maps;
    for (std::size_t e = 0; e < q.edge_count(); ++e) {
        const Edge edge = q.edge(e);
        maps.push_back(regrade(x.map(e), q.colour(edge.source), q.colour(edge.target)));
    }
    return {ColouredQuiver(std::vector<Parity>(q.vertex_count(), Parity::even), q.orientation()), std::move(spaces),
            std::move(maps)};
}

Representation forget_F(const SuperRep& y) {
    const SuperRep n = normalize(y);
    std::vector<Matrix> maps;
    for (const auto& f : n.maps()) maps.push_back(f.matrix());
    return {y.quiver().orientation(), y.dimension_vector(), std::move(maps)};
}

VertexIsomorphism gf_isomorphism(const SuperRep& x) {
    VertexIsomorphism iso;
    bool matching_only = true;
    bool other_only = true;
    for (std::size_t j = 0; j < x.vertex_count(); ++j) {
        const Parity p = x.quiver().colour(j);
        iso.components.push_back(parity_permutation(x.space(j), p).transpose());
        if (x.space(j).part(p + Parity::odd) != 0) matching_only = false;
        if (x.space(j).part(p) != 0) other_only = false;
    }
    if (matching_only) {
        iso.degree = Parity::even;
    } else if (other_only) {
        iso.degree = Parity::odd;
    }
    return iso;
}

bool is_isomorphism(const SuperRep& x, const SuperRep& y, const VertexIsomorphism& phi) {
    if (!(x.quiver().orientation() == y.quiver().orientation()) || phi.components.size() != x.vertex_count()) {
        return false;
    }
    for (std::size_t j = 0; j < x.vertex_count(); ++j) {
        const Matrix& c = phi.components[j];
        if (c.rows() != y.space(j).total() || c.cols() != x.space(j).total() || !is_invertible(c)) return false;
    }
    return squares_commute(x, y, phi.components);
}

SuperRep super_reflect(const SuperRep& x, std::size_t i, Direction direction) {
    const ColouredQuiver& q = x.quiver();
    const Orientation& o = q.orientation();
    if (direction == Direction::minus && !o.is_sink(i)) {
        throw PreconditionError("super_reflect: vertex " + std::to_string(i + 1) + " is not a sink");
    }
    if (direction == Direction::plus && !o.is_source(i)) {
        throw PreconditionError("super_reflect: vertex " + std::to_string(i + 1) + " is not a source");
    }
    const SuperRep n = normalize(x);
    std::vector<Representation> parts;
    for (Parity c : {Parity::even, Parity::odd}) {
        DimensionVector d;
        for (const auto& s : n.spaces()) d.push_back(s.part(c));
        std::vector<Matrix> maps;
        for (const auto& f : n.maps()) maps.push_back(f.block(c, c));
        Representation r(o, std::move(d), std::move(maps));
        parts.push_back(direction == Direction::minus ? bgp_minus(r, i) : bgp_plus(r, i));
    }
    const ColouredQuiver reflected = reflect_quiver(q, i);
    std::vector<SuperDim> spaces;
    for (std::size_t j = 0; j < q.vertex_count(); ++j) {
        spaces.push_back(shift(SuperDim{parts[0].dim(j), parts[1].dim(j)}, reflected.colour(j)));
    }
    std::vector<GradedMap> maps;
    for (std::size_t e = 0; e < q.edge_count(); ++e) {
        const Edge edge = reflected.edge(e);
        const GradedMap normal = GradedMap::from_blocks(SuperDim{parts[0].dim(edge.source), parts[1].dim(edge.source)},
                                                        SuperDim{parts[0].dim(edge.target), parts[1].dim(edge.target)},
                                                        Parity::even, parts[0].map(e), parts[1].map(e));
        maps.push_back(regrade(normal, reflected.colour(edge.source), reflected.colour(edge.target)));
    }
    return {reflected, std::move(spaces), std::move(maps)};
}

SuperRep simple_super(const ColouredQuiver& q, std::size_t i, Parity p) {
    if (i >= q.vertex_count()) throw PreconditionError("simple_super: vertex out of range");
    std::vector<SuperDim> spaces(q.vertex_count());
    spaces[i] = is_odd(p) ? SuperDim{0, 1} : SuperDim{1, 0};
    return SuperRep::zero_maps(q, std::move(spaces));
}

std::size_t super_hom_dimension(const SuperRep& x, const SuperRep& y, Parity degree) {
    if (!(x.quiver() == y.quiver())) throw DimensionError("super_hom_dimension: different coloured quivers");
    std::vector<Matrix> xm;
    std::vector<Matrix> ym;
    for (const auto& f : x.maps()) xm.push_back(f.matrix());
    for (const auto& f : y.maps()) ym.push_back(f.matrix());
    const auto& xs = x.spaces();
    const auto& ys = y.spaces();
    auto allowed = [&](std::size_t j, std::size_t r, std::size_t c) {
        const Parity rp = r < ys[j].even ? Parity::even : Parity::odd;
        const Parity cp = c < xs[j].even ? Parity::even : Parity::odd;
        return rp + cp == degree;
    };
    return solve_hom({&x.quiver().orientation(), x.dimension_vector(), y.dimension_vector(), &xm, &ym, allowed}).size();
}

std::string render(const SuperRep& x, bool ascii) {
    const ColouredQuiver& q = x.quiver();
    std::string s;
    for (std::size_t i = 0; i < q.vertex_count(); ++i) {
        if (i > 0) {
            const bool left = q.orientation().arrow(i - 1) == Arrow::left;
            s += ascii ? (left ? " <- " : " -> ") : (left ? " ← " : " → ");
        }
        if (ascii) {
            s += is_odd(q.colour(i)) ? "(x)" : "o";
        } else {
            s += is_odd(q.colour(i)) ? "⊗" : "○";
        }
        s += "^{" + std::to_string(x.space(i).even) + "|" + std::to_string(x.space(i).odd) + "}";
    }
    return s;
}

}  // namespace superquiver
