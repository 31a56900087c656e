#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "superquiver/errors.hpp"
#include "superquiver/roots.hpp"

using namespace superquiver;

namespace {

// Positive roots of A_k in simple-root coordinates, found by closing the
// simple roots under all simple reflections and keeping the nonnegative
// vectors.
std::set<RootCoefficients> brute_force_positive(std::size_t k) {
    std::set<RootCoefficients> seen;
    std::vector<RootCoefficients> frontier;
    for (std::size_t i = 0; i < k; ++i) {
        RootCoefficients c(k, 0);
        c[i] = 1;
        frontier.push_back(c);
        seen.insert(c);
    }
    while (!frontier.empty()) {
        const RootCoefficients c = frontier.back();
        frontier.pop_back();
        for (std::size_t i = 0; i < k; ++i) {
            RootCoefficients r = c;
            int pairing = 2 * c[i];
            if (i > 0) pairing -= c[i - 1];
            if (i + 1 < k) pairing -= c[i + 1];
            r[i] -= pairing;
            if (seen.insert(r).second) frontier.push_back(r);
        }
    }
    std::set<RootCoefficients> positive;
    for (const auto& c : seen)
        if (std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; })) positive.insert(c);
    return positive;
}

// The permutation of {0..k} realised by a word (s_i swaps i and i+1),
// composed left to right as in w = s_{i_1} ... s_{i_r}.
std::vector<std::size_t> word_permutation(const Word& w, std::size_t k) {
    std::vector<std::size_t> perm(k + 1);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t letter : w.letters) std::swap(perm[letter], perm[letter + 1]);
    return perm;
}

std::size_t inversions(const std::vector<std::size_t>& perm) {
    std::size_t count = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b]) ++count;
    return count;
}

RootCoefficients unit(std::size_t k, std::size_t i) {
    RootCoefficients c(k, 0);
    c[i] = 1;
    return c;
}

}  // namespace

TEST_CASE("A(2,2) has four even and eight odd roots") {
    const SuperRootSystem rs(2, 2);
    const auto roots = all_roots(rs);
    CHECK(roots.size() == 12);
    std::set<std::string> even;
    std::size_t odd = 0;
    for (const auto& r : roots) {
        if (is_odd(r.parity()))
            ++odd;
        else
            even.insert(r.name(true));
    }
    CHECK(odd == 8);
    CHECK(even == std::set<std::string>{"e1-e2", "e2-e1", "d1-d2", "d2-d1"});
    for (std::size_t i = 1; i <= 2; ++i)
        for (std::size_t j = 1; j <= 2; ++j) {
            const std::string s = "e" + std::to_string(i) + "-d" + std::to_string(j);
            CHECK(is_odd(SuperRoot::parse(rs, s).parity()));
            CHECK(std::count(roots.begin(), roots.end(), SuperRoot::parse(rs, s)) == 1);
            CHECK(std::count(roots.begin(), roots.end(), SuperRoot::parse(rs, s).negated()) == 1);
        }
}

TEST_CASE("A(1,1) has exactly two odd roots") {
    const auto roots = all_roots(SuperRootSystem(1, 1));
    REQUIRE(roots.size() == 2);
    CHECK(is_odd(roots[0].parity()));
    CHECK(is_odd(roots[1].parity()));
}

TEST_CASE("root counts match the count formula") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::size_t m = 1; m <= 5; ++m) {
            const auto roots = all_roots(SuperRootSystem(n, m));
            const auto odd = std::count_if(roots.begin(), roots.end(), [](const SuperRoot& r) { return is_odd(r.parity()); });
            CHECK(static_cast<std::size_t>(odd) == 2 * n * m);
            CHECK(roots.size() - odd == n * (n - 1) + m * (m - 1));
            CHECK(roots.size() == (n + m) * (n + m - 1));
        }
    CHECK(all_roots(SuperRootSystem(3, 2)).size() == 20);
}

TEST_CASE("root names parse in ascii and unicode") {
    const SuperRootSystem rs(2, 2);
    const SuperRoot a = SuperRoot::parse(rs, "e1-d2");
    CHECK(SuperRoot::parse(rs, "eps1-delta2") == a);
    CHECK(SuperRoot::parse(rs, "ε1−δ2") == a);
    CHECK(a.name() == "ε1−δ2");
    CHECK(a.name(true) == "e1-d2");
    CHECK_THROWS_AS(SuperRoot::parse(rs, "e3-d1"), PreconditionError);
    CHECK_THROWS_AS(SuperRoot::parse(rs, "e1-e1"), PreconditionError);
    CHECK_THROWS(SuperRoot::parse(rs, "bogus"));
}

TEST_CASE("flatten shifts delta indices by n") {
    const SuperRootSystem rs(2, 2);
    CHECK(flatten(SuperRoot::parse(rs, "e1-d1")) == LatticeVector{1, 0, -1, 0});
    CHECK(flatten(SuperRoot::parse(rs, "e1-e2")) == LatticeVector{1, -1, 0, 0});
    CHECK(flatten(SuperRoot::parse(rs, "d2-e2")) == LatticeVector{0, -1, 0, 1});
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t m = 1; m <= 4; ++m) {
            std::set<LatticeVector> images;
            for (const auto& r : all_roots(SuperRootSystem(n, m))) images.insert(flatten(r));
            std::set<LatticeVector> expected;
            for (std::size_t a = 0; a < n + m; ++a)
                for (std::size_t b = 0; b < n + m; ++b)
                    if (a != b) {
                        LatticeVector v(n + m, 0);
                        v[a] = 1;
                        v[b] = -1;
                        expected.insert(v);
                    }
            CHECK(images == expected);
        }
}

TEST_CASE("odd reflection of the distinguished system of A(2,2)") {
    const SuperRootSystem rs(2, 2);
    const SimpleSystem pi = SimpleSystem::distinguished(rs);
    CHECK(pi.to_string(true) == "e1-e2, e2-d1, d1-d2");
    const SimpleSystem pi2 = pi.reflect(1);
    CHECK(pi2.to_string(true) == "e1-d1, d1-e2, e2-d2");
    CHECK(pi2.colours() == std::vector<Parity>{Parity::odd, Parity::odd, Parity::odd});
    CHECK(pi2.reflect(1) == pi);
}

TEST_CASE("even reflections act on every simple root") {
    const SuperRootSystem rs(2, 2);
    const SimpleSystem pi = SimpleSystem::distinguished(rs);
    const SimpleSystem r = pi.reflect(0);
    CHECK(r.to_string(true) == "e2-e1, e1-d1, d1-d2");
    CHECK(r.colours() == pi.colours());
    CHECK(r.reflect(0) == pi);
}

TEST_CASE("reflections change colours only next to odd vertices") {
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t m = 1; m <= 4; ++m) {
            const SuperRootSystem rs(n, m);
            for (const auto& pi : sample_simple_systems(rs, 12)) {
                const auto before = pi.colours();
                for (std::size_t i = 0; i < pi.size(); ++i) {
                    const auto after = pi.reflect(i).colours();
                    for (std::size_t j = 0; j < pi.size(); ++j) {
                        const bool adjacent = j + 1 == i || i + 1 == j;
                        const bool flips = is_odd(before[i]) && adjacent;
                        CHECK((after[j] != before[j]) == flips);
                    }
                }
            }
        }
}

TEST_CASE("simple systems from S,T data") {
    const SuperRootSystem rs(2, 2);
    CHECK(SimpleSystem::from_st(rs, {2}, {2}) == SimpleSystem::distinguished(rs));
    const SimpleSystem alt = SimpleSystem::from_st(rs, {1, 2}, {1, 2});
    CHECK(alt.to_string(true) == "e1-d1, d1-e2, e2-d2");
    CHECK(alt == SimpleSystem::distinguished(rs).reflect(1));
    const SimpleSystem neg = SimpleSystem::from_st(rs, {2}, {2}, true);
    CHECK(neg[0] == SuperRoot::parse(rs, "e2-e1"));
    CHECK_THROWS(SimpleSystem::from_st(rs, {1}, {2}));
}

TEST_CASE("positive roots with respect to a simple system") {
    const SuperRootSystem rs(2, 2);
    const SimpleSystem pi = SimpleSystem::distinguished(rs);
    const auto pos = pi.positive_roots();
    CHECK(pos.size() == 6);
    for (const auto& r : pos) {
        CHECK(pi.is_positive(r));
        CHECK_FALSE(pi.is_positive(r.negated()));
        const auto c = pi.coefficients(flatten(r));
        CHECK(pi.combine(c) == flatten(r));
    }
    for (const auto& sys : sample_simple_systems(SuperRootSystem(3, 2), 20)) {
        CHECK(sys.positive_roots().size() == 10);
    }
}

TEST_CASE("simple reflection action on the lattice") {
    CHECK(simple_reflection_action(0, {1, -1, 0}) == LatticeVector{-1, 1, 0});
    CHECK(simple_reflection_action(1, {1, -1, 0, 0}) == LatticeVector{1, 0, -1, 0});
    CHECK(reflect_lattice({1, -1, 0}, {1, -1, 0}) == LatticeVector{-1, 1, 0});
}

TEST_CASE("adapted longest word for the linear A3 orientation") {
    const Orientation o = Orientation::parse("<<");
    const Word w = adapted_longest_word(o);
    CHECK(w.to_string() == "s1s2s3s1s2s1");
    CHECK(is_adapted(w, o));
    const auto gammas = enumerate_positive_roots(w, 3);
    const std::vector<RootCoefficients> expected = {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {0, 1, 0}, {0, 1, 1}, {0, 0, 1}};
    CHECK(gammas == expected);
    // gamma_6 = s1 s2 s3 s1 s2 alpha_1 = alpha_3.
    CHECK(apply_word(Word{{0, 1, 2, 0, 1}}, unit(3, 0)) == RootCoefficients{0, 0, 1});
}

TEST_CASE("single vertex words") {
    const Orientation o(1);
    CHECK(adapted_longest_word(o).to_string() == "s1");
    CHECK(coxeter_element(o).to_string() == "s1");
    CHECK(enumerate_positive_roots(Word{{0}}, 1) == std::vector<RootCoefficients>{{1}});
}

TEST_CASE("adapted words are reduced words for w0 on every orientation") {
    for (std::size_t k = 1; k <= 5; ++k) {
        const auto expected = brute_force_positive(k);
        CHECK(expected.size() == k * (k + 1) / 2);
        for (const auto& o : Orientation::all(k)) {
            const Word w = adapted_longest_word(o);
            CHECK(w.size() == k * (k + 1) / 2);
            CHECK(is_adapted(w, o));
            // w0 reverses {0..k}, which has k(k+1)/2 inversions.
            const auto perm = word_permutation(w, k);
            std::vector<std::size_t> reversed(k + 1);
            std::iota(reversed.rbegin(), reversed.rend(), 0);
            CHECK(perm == reversed);
            CHECK(inversions(perm) == w.size());
            // w0 alpha_i = -alpha_{k+1-i}.
            for (std::size_t i = 0; i < k; ++i) {
                RootCoefficients neg(k, 0);
                neg[k - 1 - i] = -1;
                CHECK(apply_word(w, unit(k, i)) == neg);
            }
            const auto gammas = enumerate_positive_roots(w, k);
            CHECK(std::set<RootCoefficients>(gammas.begin(), gammas.end()) == expected);
        }
    }
}

TEST_CASE("positive root enumeration covers every e_a - e_b of A4") {
    const auto gammas = enumerate_positive_roots(adapted_longest_word(Orientation(4)), 4);
    std::set<std::pair<std::size_t, std::size_t>> intervals;
    for (const auto& g : gammas) {
        std::size_t a = 0;
        while (g[a] == 0) ++a;
        std::size_t b = a;
        while (b < g.size() && g[b] == 1) ++b;
        for (std::size_t j = b; j < g.size(); ++j) CHECK(g[j] == 0);
        intervals.insert({a, b});
    }
    CHECK(intervals.size() == 10);
}

TEST_CASE("non-reduced words are rejected") {
    CHECK_THROWS_AS(enumerate_positive_roots(Word{{0, 0}}, 2), PreconditionError);
    CHECK_THROWS_AS(enumerate_positive_roots(Word{{0, 1, 0, 1}}, 2), PreconditionError);
}

TEST_CASE("Coxeter elements") {
    CHECK(coxeter_element(Orientation::parse("<<")).to_string() == "s1s2s3");
    for (std::size_t k = 1; k <= 5; ++k) {
        for (const auto& o : Orientation::all(k)) {
            const Word c = coxeter_element(o);
            std::vector<std::size_t> letters = c.letters;
            std::sort(letters.begin(), letters.end());
            std::vector<std::size_t> all(k);
            std::iota(all.begin(), all.end(), 0);
            CHECK(letters == all);
            CHECK(is_adapted(c, o));
            // C^h = 1 on every positive root, with h = k + 1.
            for (const auto& beta : brute_force_positive(k)) {
                RootCoefficients v = beta;
                for (std::size_t step = 0; step <= k; ++step) v = apply_word(c, v);
                CHECK(v == beta);
            }
        }
    }
}

TEST_CASE("sampled simple systems are distinct and valid") {
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t m = 1; m <= 3; ++m) {
            const SuperRootSystem rs(n, m);
            const auto systems = sample_simple_systems(rs, 10);
            CHECK(systems.front() == SimpleSystem::distinguished(rs));
            for (std::size_t a = 0; a < systems.size(); ++a)
                for (std::size_t b = a + 1; b < systems.size(); ++b) CHECK_FALSE(systems[a] == systems[b]);
            if (n + m >= 3) CHECK(systems.size() >= 5);
        }
    CHECK(sample_simple_systems(SuperRootSystem(1, 1), 10).size() == 2);
}
