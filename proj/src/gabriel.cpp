#include "superquiver/gabriel.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "superquiver/errors.hpp"

namespace superquiver {

ColouredQuiver coloured_quiver(const SimpleSystem& pi, const Orientation& omega) {
    if (pi.size() != omega.vertex_count()) {
        throw DimensionError("orientation has " + std::to_string(omega.vertex_count()) + " vertices, simple system " +
                             std::to_string(pi.size()) + " roots");
    }
    return {pi.colours(), omega};
}

namespace {

struct WordData {
    Word word;
    std::vector<RootCoefficients> gammas;
};

WordData word_data(const Orientation& omega) {
    WordData d{adapted_longest_word(omega), {}};
    d.gammas = enumerate_positive_roots(d.word, omega.vertex_count());
    return d;
}

RootObject build_from_word(const SimpleSystem& pi, const Orientation& omega, const WordData& wd,
                           const SuperRoot& alpha, const BuildOptions& options) {
    const ColouredQuiver q0 = coloured_quiver(pi, omega);
    if (!pi.is_positive(alpha)) {
        throw PreconditionError("root " + alpha.name(true) + " is not positive for the simple system");
    }
    const auto coeffs = pi.coefficients(alpha.coords());
    const auto it = std::find(wd.gammas.begin(), wd.gammas.end(), coeffs);
    if (it == wd.gammas.end()) throw ConstructionError("root " + alpha.name(true) + " missing from the adapted word");
    const auto j = static_cast<std::size_t>(it - wd.gammas.begin());

    std::vector<ColouredQuiver> quivers{q0};
    for (std::size_t t = 0; t < j; ++t) quivers.push_back(reflect_quiver(quivers.back(), wd.word.letters[t]));

    const std::size_t seed_vertex = wd.word.letters[j];
    Parity p = quivers[j].colour(seed_vertex);
    if (options.inject_fault) p += Parity::odd;
    const SuperRep seed = simple_super(quivers[j], seed_vertex, p);
    SuperRep x = seed;
    for (std::size_t t = j; t-- > 0;) x = super_reflect(x, wd.word.letters[t], Direction::plus);

    Word prefix{std::vector<std::size_t>(wd.word.letters.begin(), wd.word.letters.begin() + static_cast<long>(j))};
    return {alpha, std::move(x), std::move(prefix), seed_vertex, p, seed};
}

}  // namespace

RootObject build_X_alpha(const SimpleSystem& pi, const Orientation& omega, const SuperRoot& alpha,
                         const BuildOptions& options) {
    return build_from_word(pi, omega, word_data(omega), alpha, options);
}

std::vector<RootObject> build_root_table(const SimpleSystem& pi, const Orientation& omega,
                                         const BuildOptions& options) {
    const WordData wd = word_data(omega);
    std::vector<RootObject> out;
    for (const auto& g : wd.gammas) {
        const SuperRoot alpha = SuperRoot::from_coords(pi.system(), pi.combine(g));
        out.push_back(build_from_word(pi, omega, wd, alpha, options));
    }
    return out;
}

std::size_t MainTheoremReport::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const RootCheck& c) { return !c.passed(); }));
}

MainTheoremReport verify_main_theorem(const SimpleSystem& pi, const Orientation& omega, const BuildOptions& options) {
    MainTheoremReport report;
    for (const auto& obj : build_root_table(pi, omega, options)) {
        const DimensionVector dims = obj.object.dimension_vector();
        std::vector<int> as_int(dims.begin(), dims.end());
        const Representation classical = forget_F(obj.object);
        const bool indec = !classical.is_zero() && is_indecomposable(classical);
        report.checks.push_back(RootCheck{obj.root, dims, parity_value(obj.object), obj.prefix, indec,
                                          pi.combine(as_int) == flatten(obj.root),
                                          parity_value(obj.object) == obj.root.parity()});
    }
    return report;
}

GrothendieckReport grothendieck_check(const SimpleSystem& pi, const Orientation& omega) {
    const auto table = build_root_table(pi, omega);
    const std::size_t k = omega.vertex_count();
    Matrix classes(table.size(), k);
    std::set<std::vector<int>> distinct;
    bool match = true;
    bool negation = true;
    for (std::size_t r = 0; r < table.size(); ++r) {
        const DimensionVector dims = table[r].object.dimension_vector();
        std::vector<int> c(dims.begin(), dims.end());
        std::vector<int> neg(c.size());
        std::transform(c.begin(), c.end(), neg.begin(), [](int v) { return -v; });
        for (std::size_t j = 0; j < k; ++j) classes(r, j) = Rational(c[j]);
        distinct.insert(c);
        distinct.insert(neg);
        if (pi.combine(c) != table[r].root.coords()) match = false;
        if (pi.combine(neg) != table[r].root.negated().coords()) negation = false;
    }
    return {rank(classes), k, distinct.size(), pi.system().dimension() * (pi.system().dimension() - 1), match,
            negation};
}

const ARVertex& ARQuiver::position(const SuperRoot& alpha) const {
    for (const auto& [v, r] : labels)
        if (r == alpha) return v;
    throw PreconditionError("ARQuiver::position: root " + alpha.name(true) + " not placed");
}

ARQuiver ar_quiver_shape(std::size_t k) {
    if (k == 0) throw PreconditionError("ar_quiver_shape: empty graph");
    ARQuiver ar;
    ar.vertex_count = k;
    ar.coxeter_number = static_cast<int>(k) + 1;
    const int period = ar.period();
    for (std::size_t i = 0; i < k; ++i)
        for (int n = 0; n < period; ++n)
            if ((n + bipartition(i)) % 2 == 0) ar.vertices.push_back({i, n});
    for (const auto& v : ar.vertices) {
        for (std::size_t j : {v.vertex - 1, v.vertex + 1}) {
            if (j >= k) continue;  // wraps for vertex 0
            ar.arrows.push_back({v, ARVertex{j, (v.level + 1) % period}});
        }
    }
    return ar;
}

DimensionVector projective_dims(const Orientation& omega, std::size_t i) {
    DimensionVector d(omega.vertex_count(), 0);
    d.at(i) = 1;
    for (std::size_t j = i; j > 0 && omega.edge(j - 1) == Edge{j, j - 1}; --j) d[j - 1] = 1;
    for (std::size_t j = i; j + 1 < omega.vertex_count() && omega.edge(j) == Edge{j, j + 1}; ++j) d[j + 1] = 1;
    return d;
}

ARQuiver build_ar_quiver(const SimpleSystem& pi, const Orientation& omega) {
    const std::size_t k = omega.vertex_count();
    coloured_quiver(pi, omega);
    ARQuiver ar = ar_quiver_shape(k);
    const int h = ar.coxeter_number;
    const int period = ar.period();
    const Word cox = coxeter_element(omega);

    std::vector<int> height = height_from_orientation(omega.reversed()).values();
    const int lift = (height[0] + bipartition(0)) % 2;
    for (auto& v : height) v = (v + lift) % period;

    std::set<std::vector<int>> placed;
    for (std::size_t i = 0; i < k; ++i) {
        const DimensionVector beta = projective_dims(omega, i);
        RootCoefficients c(beta.begin(), beta.end());
        for (int step = 0; step < h; ++step) {
            const ARVertex pos{i, (height[i] + 2 * step) % period};
            if (ar.labels.count(pos)) throw ConstructionError("build_ar_quiver: two roots placed at one vertex");
            if (!placed.insert(c).second) throw ConstructionError("build_ar_quiver: root placed twice");
            const SuperRoot alpha = SuperRoot::from_coords(pi.system(), pi.combine(c));
            ar.labels.emplace(pos, alpha);
            ar.colours.emplace(pos, alpha.parity());
            c = apply_word(cox, std::move(c));
        }
        if (c != RootCoefficients(beta.begin(), beta.end())) {
            throw ConstructionError("build_ar_quiver: Coxeter orbit does not close after h steps");
        }
    }
    if (ar.labels.size() != ar.vertices.size()) throw ConstructionError("build_ar_quiver: Phi is not surjective");
    for (const auto& v : ar.vertices) {
        if (!ar.labels.count(v)) throw ConstructionError("build_ar_quiver: vertex left unlabelled");
    }
    // tau o Phi = Phi o C
    for (const auto& [v, alpha] : ar.labels) {
        const RootCoefficients moved = apply_word(cox, pi.coefficients(alpha.coords()));
        const SuperRoot image = SuperRoot::from_coords(pi.system(), pi.combine(moved));
        if (!(ar.labels.at(ar.tau(v)) == image)) throw ConstructionError("build_ar_quiver: tau does not match C");
    }
    return ar;
}

std::string emit_dot(const ARQuiver& ar, bool ascii) {
    auto id = [](const ARVertex& v) { return "\"" + std::to_string(v.vertex + 1) + "," + std::to_string(v.level) + "\""; };
    std::ostringstream os;
    os << "digraph ar_quiver {\n  rankdir=BT;\n  node [fontname=\"Helvetica\"];\n";
    for (const auto& v : ar.vertices) {
        os << "  " << id(v);
        const auto label = ar.labels.find(v);
        const auto colour = ar.colours.find(v);
        const bool odd = colour != ar.colours.end() && is_odd(colour->second);
        os << " [label=\"" << (label != ar.labels.end() ? label->second.name(ascii) : std::string()) << "\", shape="
           << (odd ? "doublecircle, style=filled, fillcolor=lightgrey" : "circle") << ", parity=" << (odd ? 1 : 0)
           << "];\n";
    }
    for (const auto& [from, to] : ar.arrows) {
        os << "  " << id(from) << " -> " << id(to);
        if (to.level < from.level) os << " [style=dashed]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace superquiver
