#pragma once

// Z2-graded path algebras of coloured path quivers and their double quivers.
//
// Mesh relations and super-modules.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superquiver/graded.hpp"
#include "superquiver/quiver.hpp"
#include "superquiver/rational.hpp"
#include "superquiver/srep.hpp"

namespace superquiver {

/// A path as the sequence of vertices it visits; a single vertex i is the
/// trivial path v_i.
struct Path {
    std::vector<std::size_t> vertices;

    static Path trivial(std::size_t i) { return Path{{i}}; }
    [[nodiscard]] std::size_t length() const { return vertices.size() - 1; }
    [[nodiscard]] std::size_t source() const { return vertices.front(); }
    [[nodiscard]] std::size_t target() const { return vertices.back(); }
    // Sum of p(s(e)) + p(t(e)) over the steps.
    [[nodiscard]] Parity degree(const std::vector<Parity>& colours) const;
    [[nodiscard]] std::string to_string() const;  // "1-2-1" (1-based)

    friend auto operator<=>(const Path&, const Path&) = default;
};

/// Finite linear combination of paths; zero coefficients are never stored.
class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(const Path& p, const Rational& c = Rational(1));

    [[nodiscard]] const std::map<Path, Rational>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Rational coefficient(const Path& p) const;
    // Degree if every term has the same degree; nullopt otherwise (or zero).
    [[nodiscard]] std::optional<Parity> homogeneous_degree(const std::vector<Parity>& colours) const;

    AlgebraElement& add(const Path& p, const Rational& c);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
    friend AlgebraElement operator*(const Rational& s, AlgebraElement a);
    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

private:
    std::map<Path, Rational> terms_;
};

/// Path product: a * b is "b, then a" and needs t(b) = s(a); otherwise 0.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

/// Base quiver plus a reversed arrow for every arrow. Arrow 2j is edge j of
/// the base quiver, arrow 2j+1 its reverse.
class DoubleQuiver {
public:
    // epsilon = +1 on original arrows, -1 on reversed ones.
    explicit DoubleQuiver(ColouredQuiver base);
    // epsilon(e_j) = signs[j] on the original arrows, -signs[j] on their
    // reverses.
    DoubleQuiver(ColouredQuiver base, std::vector<int> signs);

    [[nodiscard]] const ColouredQuiver& base() const { return base_; }
    [[nodiscard]] std::size_t vertex_count() const { return base_.vertex_count(); }
    [[nodiscard]] std::size_t arrow_count() const { return 2 * base_.edge_count(); }
    [[nodiscard]] Edge arrow(std::size_t a) const;
    [[nodiscard]] int sign(std::size_t a) const;

private:
    ColouredQuiver base_;
    std::vector<int> signs_;
};

/// Paths i ~> j of length k following the arrows of q, sorted.
std::vector<Path> graded_component(const ColouredQuiver& q, std::size_t i, std::size_t j, std::size_t k);
std::vector<Path> graded_component(const DoubleQuiver& dq, std::size_t i, std::size_t j, std::size_t k);

/// All paths of length k in the double quiver, sorted.
std::vector<Path> paths_of_length(const DoubleQuiver& dq, std::size_t k);

/// theta_i = sum over arrows a with s(a) = i of epsilon(a) * abar a.
std::vector<AlgebraElement> mesh_elements(const DoubleQuiver& dq);

struct GradedSlice {
    std::size_t even = 0;
    std::size_t odd = 0;
    [[nodiscard]] std::size_t total() const { return even + odd; }
    friend bool operator==(const GradedSlice&, const GradedSlice&) = default;
};

struct PreprojectiveDims {
    std::vector<GradedSlice> by_length;  // index = path length
    bool vanished = false;               // a zero slice was reached
    [[nodiscard]] std::size_t total() const;
    [[nodiscard]] GradedSlice total_graded() const;
};

/// Graded dimensions of P(double quiver) / (theta_i), slice by slice in path
/// length. Stops after the first zero slice (later slices lie in the ideal
/// generated by it) or after max_len.
PreprojectiveDims preprojective_dims(const DoubleQuiver& dq, std::size_t max_len);
/// max_len defaults to twice the Coxeter number.
PreprojectiveDims preprojective_dims(const DoubleQuiver& dq);

/// Graded module over the path algebra of a coloured quiver. The total
/// space is the sum of the vertex spaces; `blocks` records each vertex's
/// even and odd coordinates inside the even-first total basis.
struct SuperModule {
    ColouredQuiver quiver;
    SuperDim space;
    std::vector<GradedMap> idempotents;  // action of v_i
    std::vector<GradedMap> arrows;       // action of edge e
};

SuperModule module_from_srep(const SuperRep& x);

/// X_M(i) = v_i M, with x_e the action of e restricted to v_{s(e)} M.
/// Throws PreconditionError unless the v_i are orthogonal degree-0
/// idempotents summing to 1 and each e satisfies e = v_{t(e)} e v_{s(e)}
/// with degree p(e).
SuperRep srep_from_module(const SuperModule& m);

/// Action of a path of the base quiver.
GradedMap path_action(const SuperModule& m, const Path& p);

/// Degree-d module maps M -> N.
std::size_t module_hom_dimension(const SuperModule& m, const SuperModule& n, Parity degree);

}  // namespace superquiver
