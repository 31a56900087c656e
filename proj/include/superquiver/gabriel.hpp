#pragma once

// The objects X_alpha built by iterated super reflection functors and
// their checks against the roots of A(n,m).
//
// The periodic AR quiver labelled by roots.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "superquiver/quiver.hpp"
#include "superquiver/roots.hpp"
#include "superquiver/srep.hpp"

namespace superquiver {

struct BuildOptions {
    // Negative control for the verification pipeline: seed with the wrong
    // parity.
    bool inject_fault = false;
};

struct RootObject {
    SuperRoot root;
    SuperRep object;
    // Prefix i_1 .. i_{j-1} of the adapted word.
    Word prefix;
    // Vertex i_j and parity p_j of the simple seed.
    std::size_t seed_vertex;
    Parity seed_parity;
    SuperRep seed;
};

/// The coloured quiver of a simple system with the given orientation.
ColouredQuiver coloured_quiver(const SimpleSystem& pi, const Orientation& omega);

RootObject build_X_alpha(const SimpleSystem& pi, const Orientation& omega, const SuperRoot& alpha,
                         const BuildOptions& options = {});

/// X_alpha for every positive root, in the order of the adapted word.
std::vector<RootObject> build_root_table(const SimpleSystem& pi, const Orientation& omega,
                                         const BuildOptions& options = {});

struct RootCheck {
    SuperRoot root;
    DimensionVector dims;
    Parity parity;
    Word prefix;
    bool indecomposable;
    bool dimension_matches;
    bool parity_matches;
    [[nodiscard]] bool passed() const { return indecomposable && dimension_matches && parity_matches; }
};

struct MainTheoremReport {
    std::vector<RootCheck> checks;
    [[nodiscard]] std::size_t failures() const;
    [[nodiscard]] bool passed() const { return failures() == 0; }
};

MainTheoremReport verify_main_theorem(const SimpleSystem& pi, const Orientation& omega,
                                      const BuildOptions& options = {});

struct GrothendieckReport {
    std::size_t lattice_rank;       // rank of the span of the classes [X_alpha]
    std::size_t expected_rank;      // number of vertices
    std::size_t class_count;        // distinct classes after adding [X_{-alpha}] = -[X_alpha]
    std::size_t root_count;         // |R|
    bool classes_match_roots;       // every class, read in the simple-root basis, is a root
    bool negation_consistent;       // [T X] = -[X]
    [[nodiscard]] bool passed() const {
        return lattice_rank == expected_rank && class_count == root_count && classes_match_roots &&
               negation_consistent;
    }
};

GrothendieckReport grothendieck_check(const SimpleSystem& pi, const Orientation& omega);

struct ARVertex {
    std::size_t vertex;
    int level;
    friend auto operator<=>(const ARVertex&, const ARVertex&) = default;
};

struct ARQuiver {
    std::size_t vertex_count;  // |Gamma|
    int coxeter_number;        // h
    std::vector<ARVertex> vertices;
    std::vector<std::pair<ARVertex, ARVertex>> arrows;
    std::map<ARVertex, SuperRoot> labels;
    std::map<ARVertex, Parity> colours;

    [[nodiscard]] int period() const { return 2 * coxeter_number; }
    [[nodiscard]] ARVertex tau(const ARVertex& v) const { return {v.vertex, (v.level + 2) % period()}; }
    [[nodiscard]] const ARVertex& position(const SuperRoot& alpha) const;
};

/// Bipartition class of vertex i of the path.
inline int bipartition(std::size_t i) { return static_cast<int>(i % 2); }

/// Vertices and arrows of Gamma-hat for the path on k vertices.
ARQuiver ar_quiver_shape(std::size_t k);

/// Number of oriented paths i ~> j (0 or 1 on a path graph).
DimensionVector projective_dims(const Orientation& omega, std::size_t i);

/// Gamma-hat with the root labelling Phi and parity colouring. Throws
/// ConstructionError if Phi fails to be a bijection or to intertwine the
/// Coxeter element with tau.
ARQuiver build_ar_quiver(const SimpleSystem& pi, const Orientation& omega);

std::string emit_dot(const ARQuiver& ar, bool ascii = false);

}  // namespace superquiver
