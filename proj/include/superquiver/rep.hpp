#pragma once

// Classical representations of an oriented path: a vector space K^{d_i}
// per vertex and a matrix per edge (shape dim target x dim source).

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "superquiver/matrix.hpp"
#include "superquiver/quiver.hpp"

namespace superquiver {

using DimensionVector = std::vector<std::size_t>;

class Representation {
public:
    Representation(Orientation orientation, DimensionVector dims, std::vector<Matrix> maps);

    // All maps zero.
    static Representation zero_maps(Orientation orientation, DimensionVector dims);

    [[nodiscard]] const Orientation& orientation() const { return orientation_; }
    [[nodiscard]] std::size_t vertex_count() const { return dims_.size(); }
    [[nodiscard]] const DimensionVector& dims() const { return dims_; }
    [[nodiscard]] std::size_t dim(std::size_t i) const { return dims_.at(i); }
    [[nodiscard]] const std::vector<Matrix>& maps() const { return maps_; }
    [[nodiscard]] const Matrix& map(std::size_t edge) const { return maps_.at(edge); }
    [[nodiscard]] std::size_t total_dimension() const;
    [[nodiscard]] bool is_zero() const { return total_dimension() == 0; }

    friend bool operator==(const Representation&, const Representation&) = default;

private:
    Orientation orientation_;
    DimensionVector dims_;
    std::vector<Matrix> maps_;
};

Representation simple_rep(const Orientation& o, std::size_t i);

/// Identity maps on the edges inside [a, b], zero elsewhere (0-based,
/// inclusive).
Representation interval_rep(const Orientation& o, std::size_t a, std::size_t b);

Representation direct_sum(const Representation& x, const Representation& y);

/// S_i^- at a sink i: the space at i becomes ker(sum of X(k) -> X(i)), the
/// new maps i -> k are the components of the kernel inclusion.
Representation bgp_minus(const Representation& x, std::size_t i);

/// S_i^+ at a source i: the space at i becomes coker(X(i) -> sum of X(k)),
/// the new maps k -> i are the components of the quotient map.
Representation bgp_plus(const Representation& x, std::size_t i);

/// A family of matrices phi_j : X(j) -> Y(j), one per vertex.
using VertexMaps = std::vector<Matrix>;

/// Basis of the solution space of y_e phi_s = phi_t x_e over all edges,
/// with phi_j restricted to the entries where allowed(j, row, col) holds.
/// Shared by the classical and the graded Hom computations.
struct HomProblem {
    const Orientation* orientation;
    DimensionVector source_dims;
    DimensionVector target_dims;
    const std::vector<Matrix>* source_maps;
    const std::vector<Matrix>* target_maps;
    std::function<bool(std::size_t, std::size_t, std::size_t)> allowed;
};
std::vector<VertexMaps> solve_hom(const HomProblem& problem);

std::vector<VertexMaps> hom_basis(const Representation& x, const Representation& y);
std::size_t hom_dimension(const Representation& x, const Representation& y);
std::size_t end_dimension(const Representation& x);

bool is_morphism(const Representation& x, const Representation& y, const VertexMaps& phi);

/// dim End(X) == 1. Throws PreconditionError on the zero representation.
bool is_indecomposable(const Representation& x);

/// For bricks X, Y: an isomorphism X -> Y if one exists. Throws
/// PreconditionError unless both X and Y have one-dimensional End.
std::optional<VertexMaps> find_isomorphism(const Representation& x, const Representation& y);

/// Multiset of dimension vectors of the summands of X, drawn from the given
/// pairwise non-isomorphic bricks. The multiplicity of a brick Y is the rank
/// of the composition pairing Hom(Y,X) x Hom(X,Y) -> End(Y) = K. Throws
/// ConstructionError when the multiplicities do not account for dim X.
std::vector<DimensionVector> decompose_check(const Representation& x, const std::vector<Representation>& bricks);

/// Every interval representation of the orientation; for type A these are
/// the indecomposables up to isomorphism.
std::vector<Representation> interval_reps(const Orientation& o);

}  // namespace superquiver
