#pragma once

// Orientations and colourings of the path graph 0 - 1 - ... - (k-1), with
// their height functions. Edge j always joins vertices j and j+1; only its
// direction changes under reflection.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superquiver/graded.hpp"

namespace superquiver {

enum class Arrow : unsigned char {
    left,   // j <- j+1
    right,  // j -> j+1
};

struct Edge {
    std::size_t source;
    std::size_t target;
    friend bool operator==(const Edge&, const Edge&) = default;
};

class Orientation {
public:
    Orientation() = default;
    // A path with `vertices` vertices, every edge pointing left.
    explicit Orientation(std::size_t vertices);
    explicit Orientation(std::vector<Arrow> arrows);

    // '<' / '>' per edge, read left to right; "" is the single vertex.
    static Orientation parse(std::string_view text);
    // All 2^{k-1} orientations of the path on k vertices.
    static std::vector<Orientation> all(std::size_t vertices);

    [[nodiscard]] std::size_t vertex_count() const { return arrows_.size() + 1; }
    [[nodiscard]] std::size_t edge_count() const { return arrows_.size(); }
    [[nodiscard]] Arrow arrow(std::size_t j) const { return arrows_.at(j); }
    [[nodiscard]] const std::vector<Arrow>& arrows() const { return arrows_; }
    [[nodiscard]] Edge edge(std::size_t j) const;
    // Neighbours of i in increasing order.
    [[nodiscard]] std::vector<std::size_t> neighbours(std::size_t i) const;
    // Edge index joining i and its neighbour k.
    [[nodiscard]] std::size_t edge_between(std::size_t i, std::size_t k) const;

    [[nodiscard]] bool is_sink(std::size_t i) const;
    [[nodiscard]] bool is_source(std::size_t i) const;
    [[nodiscard]] std::vector<std::size_t> sinks() const;
    [[nodiscard]] std::vector<std::size_t> sources() const;

    // All arrows at i reversed.
    [[nodiscard]] Orientation reflected(std::size_t i) const;
    [[nodiscard]] Orientation reversed() const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Orientation&, const Orientation&) = default;

private:
    void check_vertex(std::size_t i) const;
    std::vector<Arrow> arrows_;
};

class ColouredQuiver {
public:
    ColouredQuiver(std::vector<Parity> colours, Orientation orientation);

    // Colours from a string of 'o' (even) and 'x' (odd).
    static ColouredQuiver parse(std::string_view colours, std::string_view orientation);

    [[nodiscard]] std::size_t vertex_count() const { return colours_.size(); }
    [[nodiscard]] Parity colour(std::size_t i) const { return colours_.at(i); }
    [[nodiscard]] const std::vector<Parity>& colours() const { return colours_; }
    [[nodiscard]] const Orientation& orientation() const { return orientation_; }
    [[nodiscard]] std::size_t edge_count() const { return orientation_.edge_count(); }
    [[nodiscard]] Edge edge(std::size_t j) const { return orientation_.edge(j); }
    // p(s(e)) + p(t(e)).
    [[nodiscard]] Parity edge_degree(std::size_t j) const;

    [[nodiscard]] std::vector<std::size_t> sinks() const { return orientation_.sinks(); }
    [[nodiscard]] std::vector<std::size_t> sources() const { return orientation_.sources(); }

    // "○ ← ⊗ ← ○" (or "o <- (x) <- o" in ascii).
    [[nodiscard]] std::string to_string(bool ascii = false) const;

    friend bool operator==(const ColouredQuiver&, const ColouredQuiver&) = default;

private:
    std::vector<Parity> colours_;
    Orientation orientation_;
};

/// s_i(Gamma_col, Omega): arrows at i reversed; if i is odd, the colours of
/// its neighbours flip. Requires i to be a sink or a source.
ColouredQuiver reflect_quiver(const ColouredQuiver& q, std::size_t i);

/// Values in Z_{2h}, h = k + 1, adjacent values differing by one.
class HeightFunction {
public:
    HeightFunction(std::vector<int> values, int coxeter_number);

    [[nodiscard]] const std::vector<int>& values() const { return values_; }
    [[nodiscard]] int operator()(std::size_t i) const { return values_.at(i); }
    [[nodiscard]] int period() const { return 2 * coxeter_number_; }
    [[nodiscard]] int coxeter_number() const { return coxeter_number_; }

    friend bool operator==(const HeightFunction&, const HeightFunction&) = default;

private:
    std::vector<int> values_;
    int coxeter_number_;
};

/// i -> j whenever h(j) = h(i) + 1.
Orientation orientation_from_height(const HeightFunction& h);

/// The height function with orientation_from_height(h) == omega and
/// minimum value 0.
HeightFunction height_from_orientation(const Orientation& omega);

/// Graphviz digraph: even vertices as circles, odd vertices as "⊗" nodes.
std::string quiver_to_dot(const ColouredQuiver& q, std::string_view name = "quiver");

}  // namespace superquiver
