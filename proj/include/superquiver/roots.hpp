#pragma once

// The root system A(n,m) with its simple systems and reflections, seen
// inside A_{n+m-1}.
//
// Weyl-group words: adapted reduced words for w0 and Coxeter elements.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superquiver/graded.hpp"
#include "superquiver/quiver.hpp"

namespace superquiver {

/// Integer vector in Z^{n+m}; roots of A_{n+m-1} are e_a - e_b.
using LatticeVector = std::vector<int>;

class SuperRootSystem {
public:
    SuperRootSystem(std::size_t n, std::size_t m);

    [[nodiscard]] std::size_t n() const { return n_; }
    [[nodiscard]] std::size_t m() const { return m_; }
    // Length of coordinate vectors (n + m).
    [[nodiscard]] std::size_t dimension() const { return n_ + m_; }
    // Number of simple roots / Dynkin vertices (n + m - 1).
    [[nodiscard]] std::size_t rank() const { return n_ + m_ - 1; }
    // Coxeter number of the underlying A_{n+m-1}.
    [[nodiscard]] std::size_t coxeter_number() const { return n_ + m_; }
    // Coordinate c belongs to an epsilon functional.
    [[nodiscard]] bool is_epsilon(std::size_t c) const { return c < n_; }

    friend bool operator==(const SuperRootSystem&, const SuperRootSystem&) = default;

private:
    std::size_t n_;
    std::size_t m_;
};

/// A root e_a - e_b of A(n,m) in (epsilon | delta) coordinates.
class SuperRoot {
public:
    SuperRoot(const SuperRootSystem& rs, std::size_t plus, std::size_t minus);
    // Throws PreconditionError unless coords is e_a - e_b, a != b.
    static SuperRoot from_coords(const SuperRootSystem& rs, const LatticeVector& coords);
    // "e1-d2", "eps1-delta2", "ε1−δ2", "d2-e1", ... (1-based indices).
    static SuperRoot parse(const SuperRootSystem& rs, std::string_view text);

    [[nodiscard]] const LatticeVector& coords() const { return coords_; }
    [[nodiscard]] std::size_t plus_index() const { return plus_; }
    [[nodiscard]] std::size_t minus_index() const { return minus_; }
    [[nodiscard]] Parity parity() const { return parity_; }
    [[nodiscard]] SuperRoot negated() const;
    [[nodiscard]] std::string name(bool ascii = false) const;

    friend bool operator==(const SuperRoot& a, const SuperRoot& b) { return a.coords_ == b.coords_; }
    friend auto operator<=>(const SuperRoot& a, const SuperRoot& b) { return a.coords_ <=> b.coords_; }

private:
    SuperRoot() = default;
    std::size_t n_ = 0;
    std::size_t plus_ = 0;
    std::size_t minus_ = 0;
    Parity parity_ = Parity::even;
    LatticeVector coords_;
};

/// All roots: even roots first (epsilon block, then delta block), then odd
/// roots; within each group ordered by (plus, minus) index.
std::vector<SuperRoot> all_roots(const SuperRootSystem& rs);

/// Image in A_{n+m-1}: epsilon_i -> e_i, delta_i -> e_{n+i}. The coordinate
/// vector is unchanged; the parity is forgotten.
LatticeVector flatten(const SuperRoot& alpha);

/// v - (v, r) r for a root r of norm 2 (standard Euclidean form).
LatticeVector reflect_lattice(const LatticeVector& v, const LatticeVector& root);

/// Reflection in the k-th standard simple root e_k - e_{k+1} (0-based k).
LatticeVector simple_reflection_action(std::size_t k, const LatticeVector& v);

int dot(const LatticeVector& a, const LatticeVector& b);

/// Ordered simple system alpha_1..alpha_{n+m-1}.
class SimpleSystem {
public:
    SimpleSystem(SuperRootSystem rs, std::vector<SuperRoot> roots);

    /// Pi_{S,T} with cumulative breakpoints S, T (1-based counts, strictly
    /// increasing); blocks alternate epsilon, delta, epsilon, ... and the
    /// final breakpoints must be n and m. `negative` flips every root.
    static SimpleSystem from_st(const SuperRootSystem& rs, const std::vector<std::size_t>& s,
                                const std::vector<std::size_t>& t, bool negative = false);
    /// epsilon_1 - epsilon_2, ..., epsilon_n - delta_1, ..., delta_{m-1} - delta_m.
    static SimpleSystem distinguished(const SuperRootSystem& rs);

    [[nodiscard]] const SuperRootSystem& system() const { return rs_; }
    [[nodiscard]] std::size_t size() const { return roots_.size(); }
    [[nodiscard]] const SuperRoot& operator[](std::size_t i) const { return roots_.at(i); }
    [[nodiscard]] const std::vector<SuperRoot>& roots() const { return roots_; }

    /// Vertex colours of the coloured Dynkin diagram (parities of the
    /// simple roots).
    [[nodiscard]] std::vector<Parity> colours() const;

    /// Coefficients of v in the basis of (flattened) simple roots; v must lie
    /// in the root lattice.
    [[nodiscard]] std::vector<int> coefficients(const LatticeVector& v) const;
    /// Inverse of coefficients().
    [[nodiscard]] LatticeVector combine(const std::vector<int>& coefficients) const;

    [[nodiscard]] bool is_positive(const SuperRoot& alpha) const;
    /// Positive roots ordered by height, then by coefficient vector.
    [[nodiscard]] std::vector<SuperRoot> positive_roots() const;

    /// Odd reflection (alpha_i odd) or even reflection s_{alpha_i} applied to
    /// every simple root (alpha_i even). Vertex index is 0-based.
    [[nodiscard]] SimpleSystem reflect(std::size_t i) const;

    friend bool operator==(const SimpleSystem& a, const SimpleSystem& b) { return a.roots_ == b.roots_; }

    /// "e1-e2, e2-d1, d1-d2".
    [[nodiscard]] std::string to_string(bool ascii = false) const;

private:
    SuperRootSystem rs_;
    std::vector<SuperRoot> roots_;
    // Ordering f_1..f_{n+m} of coordinates with alpha_j = sign (e_{f_j} - e_{f_{j+1}}).
    std::vector<std::size_t> order_;
    int sign_ = 1;
};

/// Up to `limit` distinct simple systems: the distinguished one, then the
/// remaining Pi_{S,T} of either sign, then systems reached by repeated
/// reflections, in breadth-first order.
std::vector<SimpleSystem> sample_simple_systems(const SuperRootSystem& rs, std::size_t limit);

/// Applies reflect() at the given vertices in order.
SimpleSystem reflect_sequence(const SimpleSystem& pi, const std::vector<std::size_t>& vertices);

/// A word in the simple reflections; letters are 0-based vertex indices.
struct Word {
    std::vector<std::size_t> letters;

    [[nodiscard]] std::size_t size() const { return letters.size(); }
    // "s1s2s3" (1-based).
    [[nodiscard]] std::string to_string() const;
    friend bool operator==(const Word&, const Word&) = default;
};

/// Simple-root coordinates of a vector of A_k (k = number of vertices).
using RootCoefficients = std::vector<int>;

/// s_i acting on simple-root coordinates via the A_k Cartan matrix.
RootCoefficients apply_simple_reflection(std::size_t i, RootCoefficients c);

/// s_{i_1} ... s_{i_r} applied to c (rightmost letter first).
RootCoefficients apply_word(const Word& w, RootCoefficients c);

/// gamma_j = s_{i_1} ... s_{i_{j-1}} alpha_{i_j}. Throws PreconditionError if
/// some gamma_j is negative or repeated (word not reduced).
std::vector<RootCoefficients> enumerate_positive_roots(const Word& word, std::size_t rank);

/// Sink-ordered Coxeter word: repeatedly the smallest unused vertex that is
/// a sink of the partially reflected orientation.
Word coxeter_element(const Orientation& orientation);

/// Reduced word for w0 adapted to the orientation (each letter a sink of
/// the orientation reflected by the preceding letters).
Word adapted_longest_word(const Orientation& orientation);

bool is_adapted(const Word& word, const Orientation& orientation);

}  // namespace superquiver
