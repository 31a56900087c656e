#include <doctest.h>

#include <random>

#include "superquiver/errors.hpp"
#include "superquiver/srep.hpp"
#include "support.hpp"

using namespace superquiver;
using superquiver::testing::random_quiver;
using superquiver::testing::random_super_rep;

namespace {

// The five-vertex object o^{1|0} <- o^{1|0} <- o^{1|0} -> (x)^{0|0} <- (x)^{0|1}
// with identity maps where both ends are nonzero.
SuperRep five_vertex_example() {
    const ColouredQuiver q = ColouredQuiver::parse("oooxx", "<<><");
    const std::vector<SuperDim> spaces{{1, 0}, {1, 0}, {1, 0}, {0, 0}, {0, 1}};
    std::vector<GradedMap> maps{
        GradedMap::identity({1, 0}),
        GradedMap::identity({1, 0}),
        GradedMap::zero({1, 0}, {0, 0}, Parity::odd),
        GradedMap::zero({0, 1}, {0, 0}, Parity::even),
    };
    return {q, spaces, maps};
}

Representation random_classical(std::mt19937& rng, const Orientation& o, std::size_t max_dim) {
    std::uniform_int_distribution<std::size_t> dim(0, max_dim);
    DimensionVector dims(o.vertex_count());
    for (auto& d : dims) d = dim(rng);
    std::vector<Matrix> maps;
    for (std::size_t j = 0; j < o.edge_count(); ++j) {
        const Edge e = o.edge(j);
        maps.push_back(superquiver::testing::random_matrix(rng, dims[e.target], dims[e.source]));
    }
    return {o, dims, maps};
}

}  // namespace

TEST_CASE("edge maps must have the forced degree") {
    const ColouredQuiver q = ColouredQuiver::parse("ox", "<");
    CHECK_THROWS_AS(SuperRep(q, {{1, 0}, {0, 1}}, {GradedMap::zero({0, 1}, {1, 0}, Parity::even)}), DimensionError);
    CHECK_NOTHROW(SuperRep(q, {{1, 0}, {0, 1}}, {GradedMap::zero({0, 1}, {1, 0}, Parity::odd)}));
    CHECK_THROWS_AS(SuperRep(q, {{1, 0}, {0, 1}}, {GradedMap::zero({1, 0}, {1, 0}, Parity::odd)}), DimensionError);
}

TEST_CASE("parity functor") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const SuperRep x = random_super_rep(rng, random_quiver(rng, 1 + trial % 4), 2);
        const SuperRep px = parity_functor(x);
        CHECK(parity_functor(px) == x);
        const SuperMorphism iso = parity_isomorphism(x);
        CHECK(iso.degree == Parity::odd);
        CHECK(is_morphism(x, px, iso));
        std::size_t total = 0;
        for (const auto& s : x.spaces()) total += s.total();
        CHECK(parity_value(px) == parity_value(x) + parity_of(total));
        if (total % 2 == 1) CHECK(parity_value(px) != parity_value(x));
    }
}

TEST_CASE("parity value of simple super objects") {
    const ColouredQuiver q = ColouredQuiver::parse("xoo", "<<");
    const SuperRep s = simple_super(q, 0, Parity::odd);
    CHECK(s.space(0) == SuperDim{0, 1});
    CHECK(s.space(1) == SuperDim{0, 0});
    for (std::size_t i = 0; i < 3; ++i)
        for (Parity p : {Parity::even, Parity::odd}) {
            const SuperRep t = simple_super(q, i, p);
            CHECK(parity_value(t) == p);
            CHECK(forget_F(t) == simple_rep(q.orientation(), i));
        }
}

TEST_CASE("splitting into colour-matching and complementary parts") {
    const ColouredQuiver q = ColouredQuiver::parse("oxo", "<>");
    const SuperRep g = embed_G(interval_rep(q.orientation(), 0, 2), q);
    const auto [g1, g2] = split_even_odd(g);
    CHECK(g1 == g);
    CHECK(g2.is_zero());

    const SuperRep flat = SuperRep::zero_maps(q, {{1, 1}, {1, 1}, {1, 1}});
    const auto [f1, f2] = split_even_odd(flat);
    CHECK(f1.dimension_vector() == DimensionVector{1, 1, 1});
    CHECK(f2.dimension_vector() == DimensionVector{1, 1, 1});
    CHECK(f1.space(1) == SuperDim{0, 1});
    CHECK(f2.space(1) == SuperDim{1, 0});

    std::mt19937 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const SuperRep x = random_super_rep(rng, random_quiver(rng, 1 + trial % 5), 2);
        const auto [a, b] = split_even_odd(x);
        CHECK(direct_sum(a, b) == x);
    }
}

TEST_CASE("the embedding G places each space in the degree of its vertex") {
    const ColouredQuiver q = ColouredQuiver::parse("xo", "<");
    const SuperRep g = embed_G(simple_rep(q.orientation(), 0), q);
    CHECK(g.space(0) == SuperDim{0, 1});
    // Four edge-colour cases: the edge matrix lands in the block joining the
    // two colour-matching components.
    for (const char* colours : {"oo", "ox", "xo", "xx"}) {
        const ColouredQuiver c = ColouredQuiver::parse(colours, ">");
        const Matrix a = Matrix::from_rows({{2, 3}});
        const Representation x(c.orientation(), {2, 1}, {a});
        const SuperRep gx = embed_G(x, c);
        CHECK(gx.map(0).degree() == c.edge_degree(0));
        CHECK(gx.map(0).block(c.colour(1), c.colour(0)) == a);
        CHECK(forget_F(gx) == x);
    }
}

TEST_CASE("F after G is the identity and G after F is isomorphic to the identity") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const ColouredQuiver q = random_quiver(rng, 1 + trial % 5);
        const Representation x = random_classical(rng, q.orientation(), 3);
        CHECK(forget_F(embed_G(x, q)) == x);
        const SuperRep y = random_super_rep(rng, q, 2);
        const VertexIsomorphism phi = gf_isomorphism(y);
        CHECK(is_isomorphism(y, embed_G(forget_F(y), q), phi));
    }
}

TEST_CASE("G after F is homogeneous on objects concentrated in one part") {
    const ColouredQuiver q = ColouredQuiver::parse("ox", "<");
    const SuperRep g = embed_G(interval_rep(q.orientation(), 0, 1), q);
    CHECK(gf_isomorphism(g).degree == Parity::even);
    CHECK(gf_isomorphism(parity_functor(g)).degree == Parity::odd);
    const SuperRep mixed = SuperRep::zero_maps(q, {{1, 1}, {0, 0}});
    CHECK_FALSE(gf_isomorphism(mixed).degree.has_value());
}

TEST_CASE("super reflection reproduces the five-vertex example up to the grading at the sink") {
    const SuperRep x = five_vertex_example();
    CHECK(render(x, true) == "o^{1|0} <- o^{1|0} <- o^{1|0} -> (x)^{0|0} <- (x)^{0|1}");
    const SuperRep y = super_reflect(x, 3, Direction::minus);
    CHECK(y.quiver() == ColouredQuiver::parse("ooxxo", "<<<>"));
    CHECK(y.space(0) == SuperDim{1, 0});
    CHECK(y.space(1) == SuperDim{1, 0});
    CHECK(y.space(2) == SuperDim{0, 1});
    CHECK(y.space(4) == SuperDim{1, 0});
    // The degree rules force 0|2 at the reflected sink: both new maps kill
    // its even part while together forming the injective kernel inclusion.
    CHECK(y.space(3) == SuperDim{0, 2});
    CHECK(render(y, true) == "o^{1|0} <- o^{1|0} <- (x)^{0|1} <- (x)^{0|2} -> o^{1|0}");
    CHECK(y.dimension_vector() == DimensionVector{1, 1, 1, 2, 1});
    // Maps out of the reflected sink are coordinate inclusions.
    const Matrix out = vstack(y.map(2).matrix(), y.map(3).matrix());
    CHECK(is_invertible(out));
    CHECK(y.map(0).matrix() == Matrix::identity(1));
    CHECK(y.map(1).matrix() == Matrix::identity(1));
}

TEST_CASE("super reflection of an embedded object is the classical functor") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const ColouredQuiver q = random_quiver(rng, 1 + trial % 5);
        const Representation x = random_classical(rng, q.orientation(), 3);
        const SuperRep g = embed_G(x, q);
        for (std::size_t i : q.sinks()) {
            const SuperRep r = super_reflect(g, i, Direction::minus);
            CHECK(forget_F(r) == bgp_minus(x, i));
            CHECK(r.quiver() == reflect_quiver(q, i));
            CHECK(r == embed_G(bgp_minus(x, i), r.quiver()));
        }
        for (std::size_t i : q.sources()) {
            const SuperRep r = super_reflect(g, i, Direction::plus);
            CHECK(forget_F(r) == bgp_plus(x, i));
            CHECK(r == embed_G(bgp_plus(x, i), r.quiver()));
        }
    }
}

TEST_CASE("super reflection flips the grading next to odd vertices") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const ColouredQuiver q = random_quiver(rng, 2 + trial % 4);
        const SuperRep x = random_super_rep(rng, q, 2);
        for (std::size_t i : q.sinks()) {
            const SuperRep y = super_reflect(x, i, Direction::minus);
            CHECK(y.quiver() == reflect_quiver(q, i));
            for (std::size_t j = 0; j < q.vertex_count(); ++j) {
                if (j == i) continue;
                const bool adjacent = j + 1 == i || i + 1 == j;
                const SuperDim expected = (adjacent && is_odd(q.colour(i))) ? parity_change(x.space(j)) : x.space(j);
                CHECK(y.space(j) == expected);
            }
            // Total dimensions agree with the classical functor.
            CHECK(y.dimension_vector() == bgp_minus(forget_F(x), i).dims());
        }
    }
}

TEST_CASE("super reflection preconditions") {
    const SuperRep x = five_vertex_example();
    CHECK_THROWS_AS(super_reflect(x, 1, Direction::minus), PreconditionError);
    CHECK_THROWS_AS(super_reflect(x, 3, Direction::plus), PreconditionError);
    CHECK_NOTHROW(super_reflect(x, 2, Direction::plus));
}

TEST_CASE("super reflections undo each other on bricks") {
    const ColouredQuiver q = ColouredQuiver::parse("ox", ">");
    const SuperRep x = embed_G(interval_rep(q.orientation(), 0, 1), q);
    const SuperRep y = super_reflect(x, 1, Direction::minus);
    CHECK(y.dimension_vector() == DimensionVector{1, 0});
    CHECK(y.quiver() == ColouredQuiver::parse("xx", "<"));
    const SuperRep z = super_reflect(y, 1, Direction::plus);
    CHECK(z.quiver() == q);
    CHECK(z.spaces() == x.spaces());
    CHECK(super_hom_dimension(x, z, Parity::even) == 1);
    CHECK(super_hom_dimension(z, x, Parity::even) == 1);
}

TEST_CASE("graded Hom spaces") {
    const ColouredQuiver q = ColouredQuiver::parse("ox", "<");
    const SuperRep x = embed_G(interval_rep(q.orientation(), 0, 1), q);
    CHECK(super_hom_dimension(x, x, Parity::even) == 1);
    CHECK(super_hom_dimension(x, x, Parity::odd) == 0);
    CHECK(super_hom_dimension(x, parity_functor(x), Parity::odd) == 1);
    CHECK(super_hom_dimension(x, parity_functor(x), Parity::even) == 0);
}

TEST_CASE("rendering") {
    const SuperRep s = simple_super(ColouredQuiver::parse("oxo", "<<"), 1, Parity::odd);
    CHECK(render(s) == "○^{0|0} ← ⊗^{0|1} ← ○^{0|0}");
    CHECK(render(s, true) == "o^{0|0} <- (x)^{0|1} <- o^{0|0}");
}

TEST_CASE("forgetting the grading commutes with reflection up to a basis change at the reflected vertex") {
    std::mt19937 rng(57);
    for (int trial = 0; trial < 300; ++trial) {
        const ColouredQuiver q = random_quiver(rng, 1 + trial % 5);
        const SuperRep x = random_super_rep(rng, q, 3);
        const Representation fx = forget_F(x);
        const auto check = [&](std::size_t i, Direction dir) {
            const Representation lhs = forget_F(super_reflect(x, i, dir));
            const Representation rhs = dir == Direction::minus ? bgp_minus(fx, i) : bgp_plus(fx, i);
            REQUIRE(lhs.dims() == rhs.dims());
            const Orientation& o = rhs.orientation();
            // Stack the maps at i: columns (minus) or rows (plus) index the
            // new basis at i, so equal spans mean equal up to a basis change.
            Matrix l(0, lhs.dim(i));
            Matrix r(0, rhs.dim(i));
            for (std::size_t e = 0; e < o.edge_count(); ++e) {
                const Edge edge = o.edge(e);
                if (edge.source != i && edge.target != i) {
                    CHECK(lhs.map(e) == rhs.map(e));
                    continue;
                }
                const Matrix a = dir == Direction::minus ? lhs.map(e) : lhs.map(e).transpose();
                const Matrix b = dir == Direction::minus ? rhs.map(e) : rhs.map(e).transpose();
                l = vstack(l, a);
                r = vstack(r, b);
            }
            if (l.rows() == 0) return;
            CHECK(rank(l) == lhs.dim(i));
            CHECK(rank(hstack(l, r)) == rank(l));
        };
        for (std::size_t i : q.sinks()) check(i, Direction::minus);
        for (std::size_t i : q.sources()) check(i, Direction::plus);
    }
}

TEST_CASE("grading-blind kernel bases cannot follow the graded order") {
    // X and X2 below have the same underlying representation, but the
    // graded kernel at the middle sink lists its basis in different orders.
    const ColouredQuiver q = ColouredQuiver::parse("ooo", "><");
    const SuperRep x = SuperRep::zero_maps(q, {{1, 1}, {0, 0}, {1, 1}});
    const SuperRep x2 = SuperRep::zero_maps(q, {{2, 0}, {0, 0}, {0, 2}});
    CHECK(forget_F(x) == forget_F(x2));
    const Representation classical = bgp_minus(forget_F(x), 1);
    CHECK(forget_F(super_reflect(x2, 1, Direction::minus)) == classical);
    CHECK_FALSE(forget_F(super_reflect(x, 1, Direction::minus)) == classical);
}
