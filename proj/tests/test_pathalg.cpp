#include <doctest.h>

#include <map>
#include <random>

#include "superquiver/errors.hpp"
#include "superquiver/gabriel.hpp"
#include "superquiver/pathalg.hpp"
#include "support.hpp"

using namespace superquiver;
using superquiver::testing::random_quiver;
using superquiver::testing::random_super_rep;

namespace {

AlgebraElement elem(std::vector<std::size_t> vertices) { return AlgebraElement(Path{std::move(vertices)}); }

std::vector<Parity> colours_from_mask(std::size_t k, std::size_t mask) {
    std::vector<Parity> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = parity_of(mask >> i);
    return c;
}

// Dimension of the length-L part of the quotient, computed from the span of
// every x * theta_i * y with x, y paths of total length L - 2.
std::size_t brute_force_slice(const DoubleQuiver& dq, std::size_t len) {
    const auto basis = paths_of_length(dq, len);
    if (len < 2) return basis.size();
    std::map<Path, std::size_t> index;
    for (std::size_t c = 0; c < basis.size(); ++c) index[basis[c]] = c;
    std::vector<std::vector<Rational>> rows;
    for (std::size_t left = 0; left + 2 <= len; ++left) {
        const std::size_t right = len - 2 - left;
        for (const auto& x : paths_of_length(dq, left))
            for (const auto& theta : mesh_elements(dq))
                for (const auto& y : paths_of_length(dq, right)) {
                    const AlgebraElement g = multiply(AlgebraElement(x), multiply(theta, AlgebraElement(y)));
                    if (g.is_zero()) continue;
                    std::vector<Rational> row(basis.size());
                    for (const auto& [p, c] : g.terms()) row[index.at(p)] = c;
                    rows.push_back(row);
                }
        }
    if (rows.empty()) return basis.size();
    return basis.size() - rank(Matrix::from_rows(rows));
}

}  // namespace

TEST_CASE("multiplication of idempotents and arrows") {
    const AlgebraElement v0 = elem({0});
    const AlgebraElement v1 = elem({1});
    CHECK(multiply(v0, v0) == v0);
    CHECK(multiply(v0, v1).is_zero());
    const AlgebraElement e = elem({1, 0});  // arrow 2 -> 1
    CHECK(multiply(e, v1) == e);
    CHECK(multiply(v0, e) == e);
    CHECK(multiply(v1, e).is_zero());
    const AlgebraElement ebar = elem({0, 1});
    const AlgebraElement loop = multiply(ebar, e);
    CHECK(loop == elem({1, 0, 1}));
    for (std::size_t mask = 0; mask < 4; ++mask) {
        const auto colours = colours_from_mask(2, mask);
        CHECK(loop.homogeneous_degree(colours) == Parity::even);
        CHECK(e.homogeneous_degree(colours) == colours[0] + colours[1]);
    }
}

TEST_CASE("associativity, unit and multiplicative grading on random elements") {
    const DoubleQuiver dq(ColouredQuiver::parse("oxox", "<><"));
    const auto colours = dq.base().colours();
    std::vector<Path> pool;
    for (std::size_t len = 0; len <= 4; ++len)
        for (const auto& p : paths_of_length(dq, len)) pool.push_back(p);
    std::mt19937 rng(3);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    const auto random_element = [&] {
        AlgebraElement a;
        for (int t = 0; t < 3; ++t) a.add(pool[pick(rng)], Rational(coef(rng)));
        return a;
    };
    AlgebraElement one;
    for (std::size_t i = 0; i < dq.vertex_count(); ++i) one.add(Path::trivial(i), Rational(1));
    for (int trial = 0; trial < 200; ++trial) {
        const AlgebraElement a = random_element();
        const AlgebraElement b = random_element();
        const AlgebraElement c = random_element();
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
        CHECK(multiply(one, a) == a);
        CHECK(multiply(a, one) == a);
        const Path p = pool[pick(rng)];
        const Path q = pool[pick(rng)];
        const AlgebraElement pq = multiply(AlgebraElement(p), AlgebraElement(q));
        if (!pq.is_zero()) CHECK(pq.homogeneous_degree(colours) == p.degree(colours) + q.degree(colours));
    }
}

TEST_CASE("graded components of a coloured quiver") {
    const ColouredQuiver q = ColouredQuiver::parse("oxx", ">>");
    CHECK(graded_component(q, 1, 1, 0) == std::vector<Path>{Path::trivial(1)});
    CHECK(graded_component(q, 0, 1, 0).empty());
    const auto p = graded_component(q, 0, 2, 2);
    REQUIRE(p.size() == 1);
    CHECK(p[0].to_string() == "1-2-3");
    CHECK(p[0].degree(q.colours()) == q.colour(0) + q.colour(2));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(graded_component(q, i, j, 3).empty());
}

TEST_CASE("mesh elements") {
    const DoubleQuiver dq(ColouredQuiver::parse("ox", ">"));
    const auto theta = mesh_elements(dq);
    REQUIRE(theta.size() == 2);
    CHECK(theta[0] == dq.sign(0) * elem({0, 1, 0}));
    CHECK(theta[1] == dq.sign(1) * elem({1, 0, 1}));
    CHECK(dq.sign(0) + dq.sign(1) == 0);
    const DoubleQuiver line(ColouredQuiver::parse("oxo", "<<"));
    const auto t3 = mesh_elements(line);
    CHECK(t3[0].terms().size() == 1);
    CHECK(t3[1].terms().size() == 2);
    CHECK(t3[2].terms().size() == 1);
}

TEST_CASE("mesh elements are even for every colouring") {
    for (std::size_t k = 1; k <= 6; ++k) {
        const std::size_t masks = std::size_t{1} << k;
        const std::size_t step = k <= 4 ? 1 : 5;
        for (std::size_t mask = 0; mask < masks; mask += step)
            for (const auto& o : Orientation::all(k)) {
                const auto colours = colours_from_mask(k, mask);
                const DoubleQuiver dq(ColouredQuiver(colours, o));
                for (const auto& theta : mesh_elements(dq)) {
                    if (theta.is_zero()) continue;
                    CHECK(theta.homogeneous_degree(colours) == Parity::even);
                    for (const auto& [p, c] : theta.terms()) CHECK(p.length() == 2);
                }
            }
    }
}

TEST_CASE("preprojective algebra of A1 and A2") {
    const auto a1 = preprojective_dims(DoubleQuiver(ColouredQuiver::parse("o", "")));
    CHECK(a1.total() == 1);
    const auto a2 = preprojective_dims(DoubleQuiver(ColouredQuiver::parse("oo", "<")));
    CHECK(a2.total() == 4);
    REQUIRE(a2.by_length.size() == 3);
    CHECK(a2.by_length[0] == GradedSlice{2, 0});
    CHECK(a2.by_length[1] == GradedSlice{2, 0});
    CHECK(a2.by_length[2].total() == 0);
    CHECK(a2.vanished);
    const auto a2odd = preprojective_dims(DoubleQuiver(ColouredQuiver::parse("ox", "<")));
    CHECK(a2odd.by_length[1] == GradedSlice{0, 2});
}

TEST_CASE("preprojective dimensions agree with the closed form and with brute force") {
    for (std::size_t k = 1; k <= 5; ++k) {
        const DoubleQuiver dq(ColouredQuiver(std::vector<Parity>(k, Parity::even), Orientation(k)));
        const auto dims = preprojective_dims(dq);
        CHECK(dims.vanished);
        CHECK(dims.total() == k * (k + 1) * (k + 2) / 6);
        if (k <= 4) {
            for (std::size_t len = 0; len < dims.by_length.size(); ++len)
                CHECK(dims.by_length[len].total() == brute_force_slice(dq, len));
        }
    }
}

TEST_CASE("preprojective dimensions do not depend on the signs") {
    for (std::size_t k = 2; k <= 5; ++k)
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); mask += (k <= 3 ? 1 : 3)) {
            const ColouredQuiver q(colours_from_mask(k, mask), Orientation(k));
            std::vector<int> flipped(k - 1, 1);
            for (std::size_t j = 0; j < flipped.size(); j += 2) flipped[j] = -1;
            const auto a = preprojective_dims(DoubleQuiver(q));
            const auto b = preprojective_dims(DoubleQuiver(q, flipped));
            CHECK(a.by_length == b.by_length);
            CHECK(a.total() == k * (k + 1) * (k + 2) / 6);
        }
}

TEST_CASE("module round trip on the A(2,2) root objects") {
    const SimpleSystem pi = SimpleSystem::distinguished(SuperRootSystem(2, 2));
    for (const auto& obj : build_root_table(pi, Orientation::parse("<<"))) {
        const SuperModule m = module_from_srep(obj.object);
        CHECK(srep_from_module(m) == obj.object);
        for (std::size_t e = 0; e < m.arrows.size(); ++e)
            CHECK(m.arrows[e].degree() == m.quiver.edge_degree(e));
    }
}

TEST_CASE("module of a simple super object") {
    const ColouredQuiver q = ColouredQuiver::parse("ox", "<");
    for (Parity p : {Parity::even, Parity::odd}) {
        const SuperModule m = module_from_srep(simple_super(q, 1, p));
        CHECK(m.space == SuperDim{is_odd(p) ? 0U : 1U, is_odd(p) ? 1U : 0U});
        CHECK(m.idempotents[1] == GradedMap::identity(m.space));
        CHECK(m.idempotents[0].matrix().is_zero());
    }
}

TEST_CASE("path actions compose and Hom dimensions agree") {
    std::mt19937 rng(44);
    for (int trial = 0; trial < 60; ++trial) {
        const ColouredQuiver q = random_quiver(rng, 2 + trial % 3);
        const SuperRep x = random_super_rep(rng, q, 2);
        const SuperRep y = random_super_rep(rng, q, 2);
        const SuperModule mx = module_from_srep(x);
        const SuperModule my = module_from_srep(y);
        CHECK(srep_from_module(mx) == x);
        for (std::size_t i = 0; i < q.vertex_count(); ++i)
            for (std::size_t j = 0; j < q.vertex_count(); ++j)
                for (std::size_t len = 2; len <= 3; ++len)
                    for (const auto& p : graded_component(q, i, j, len)) {
                        GradedMap expected = mx.idempotents[i];
                        for (std::size_t s = 0; s + 1 < p.vertices.size(); ++s)
                            expected = compose(mx.arrows[q.orientation().edge_between(p.vertices[s], p.vertices[s + 1])],
                                               expected);
                        CHECK(path_action(mx, p) == expected);
                    }
        for (Parity d : {Parity::even, Parity::odd})
            CHECK(module_hom_dimension(mx, my, d) == super_hom_dimension(x, y, d));
    }
}

TEST_CASE("malformed modules are rejected") {
    const ColouredQuiver q = ColouredQuiver::parse("oo", "<");
    SuperModule m = module_from_srep(SuperRep::zero_maps(q, {{1, 0}, {1, 0}}));
    m.idempotents[0] = GradedMap::identity(m.space);
    CHECK_THROWS_AS(srep_from_module(m), PreconditionError);
}
