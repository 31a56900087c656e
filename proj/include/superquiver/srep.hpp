#pragma once

// Super-representations of a coloured quiver: a graded space per vertex and,
// on each edge e, a homogeneous map of degree p(s(e)) + p(t(e)).

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superquiver/graded.hpp"
#include "superquiver/quiver.hpp"
#include "superquiver/rep.hpp"

namespace superquiver {

class SuperRep {
public:
    SuperRep(ColouredQuiver quiver, std::vector<SuperDim> spaces, std::vector<GradedMap> maps);

    static SuperRep zero_maps(ColouredQuiver quiver, std::vector<SuperDim> spaces);

    [[nodiscard]] const ColouredQuiver& quiver() const { return quiver_; }
    [[nodiscard]] std::size_t vertex_count() const { return spaces_.size(); }
    [[nodiscard]] const std::vector<SuperDim>& spaces() const { return spaces_; }
    [[nodiscard]] SuperDim space(std::size_t i) const { return spaces_.at(i); }
    [[nodiscard]] const std::vector<GradedMap>& maps() const { return maps_; }
    [[nodiscard]] const GradedMap& map(std::size_t edge) const { return maps_.at(edge); }
    // Total dimension per vertex.
    [[nodiscard]] DimensionVector dimension_vector() const;
    [[nodiscard]] bool is_zero() const;

    friend bool operator==(const SuperRep&, const SuperRep&) = default;

private:
    ColouredQuiver quiver_;
    std::vector<SuperDim> spaces_;
    std::vector<GradedMap> maps_;
};

/// Sum of the odd dimensions, mod 2.
Parity parity_value(const SuperRep& x);

/// P applied at every vertex and on every edge map.
SuperRep parity_functor(const SuperRep& x);

/// A vertex family of graded maps sharing one degree.
struct SuperMorphism {
    Parity degree = Parity::even;
    std::vector<GradedMap> components;
};

bool is_morphism(const SuperRep& x, const SuperRep& y, const SuperMorphism& phi);

/// The degree-1 isomorphism X -> P(X) built from the canonical parity maps.
SuperMorphism parity_isomorphism(const SuperRep& x);

/// (X', X''): X' keeps the component of each X(i) of degree p(i), X'' the
/// other one.
std::pair<SuperRep, SuperRep> split_even_odd(const SuperRep& x);

/// Vertexwise sum; each space is ordered even(X), even(Y), odd(X), odd(Y).
SuperRep direct_sum(const SuperRep& x, const SuperRep& y);

/// G: X(i) placed in degree p(i).
SuperRep embed_G(const Representation& x, const ColouredQuiver& q);

/// F: the underlying classical representation. Each vertex basis lists the
/// component of degree p(i) first.
Representation forget_F(const SuperRep& y);

/// The canonical isomorphism X -> G(F(X)). Its components are the basis
/// reorderings; `degree` is set only when they are homogeneous (X lives
/// entirely in the colour-matching part, or entirely in the other part).
struct VertexIsomorphism {
    std::vector<Matrix> components;
    std::optional<Parity> degree;
};
VertexIsomorphism gf_isomorphism(const SuperRep& x);

/// Checks that the components are invertible and the squares commute.
bool is_isomorphism(const SuperRep& x, const SuperRep& y, const VertexIsomorphism& phi);

/// P^{p(j)} on every vertex: all edge maps become degree 0 and the result
/// lives on the all-even colouring.
SuperRep normalize(const SuperRep& x);

enum class Direction { minus, plus };

/// S~_i^- (i a sink) or S~_i^+ (i a source); the result lives on
/// reflect_quiver(quiver, i).
SuperRep super_reflect(const SuperRep& x, std::size_t i, Direction direction);

/// K^{1|0} (p even) or K^{0|1} (p odd) at i, zero elsewhere.
SuperRep simple_super(const ColouredQuiver& q, std::size_t i, Parity p);

/// Dimension of the space of degree-d morphisms X -> Y.
std::size_t super_hom_dimension(const SuperRep& x, const SuperRep& y, Parity degree);

/// "○^{1|0} ← ⊗^{0|1} ← ○^{0|0}", or "o^{1|0} <- (x)^{0|1} <- o^{0|0}".
std::string render(const SuperRep& x, bool ascii = false);

}  // namespace superquiver
