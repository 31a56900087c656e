#pragma once

// Random generators shared by the test binaries.

#include <random>

#include "superquiver/graded.hpp"
#include "superquiver/quiver.hpp"
#include "superquiver/srep.hpp"

namespace superquiver::testing {

inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo = -1, int hi = 1) {
    std::uniform_int_distribution<int> entry(lo, hi);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
    return m;
}

inline GradedMap random_graded_map(std::mt19937& rng, SuperDim s, SuperDim t, Parity degree) {
    return GradedMap::from_blocks(s, t, degree, random_matrix(rng, t.part(degree), s.even),
                                  random_matrix(rng, t.part(degree + Parity::odd), s.odd));
}

inline ColouredQuiver random_quiver(std::mt19937& rng, std::size_t k) {
    std::vector<Parity> colours(k);
    for (auto& c : colours) c = parity_of(rng());
    std::vector<Arrow> arrows(k - 1);
    for (auto& a : arrows) a = (rng() % 2) ? Arrow::right : Arrow::left;
    return {colours, Orientation(arrows)};
}

inline SuperRep random_super_rep(std::mt19937& rng, const ColouredQuiver& q, std::size_t max_dim) {
    std::uniform_int_distribution<std::size_t> dim(0, max_dim);
    std::vector<SuperDim> spaces(q.vertex_count());
    for (auto& s : spaces) s = {dim(rng), dim(rng)};
    std::vector<GradedMap> maps;
    for (std::size_t j = 0; j < q.edge_count(); ++j) {
        const Edge e = q.edge(j);
        maps.push_back(random_graded_map(rng, spaces[e.source], spaces[e.target], q.edge_degree(j)));
    }
    return {q, spaces, maps};
}

}  // namespace superquiver::testing
