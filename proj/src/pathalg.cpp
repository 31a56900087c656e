#include "superquiver/pathalg.hpp"

#include <algorithm>

#include "superquiver/errors.hpp"

namespace superquiver {

Parity Path::degree(const std::vector<Parity>& colours) const {
    Parity d = Parity::even;
    for (std::size_t s = 0; s + 1 < vertices.size(); ++s) d += colours.at(vertices[s]) + colours.at(vertices[s + 1]);
    return d;
}

std::string Path::to_string() const {
    std::string s;
    for (std::size_t v = 0; v < vertices.size(); ++v) s += (v ? "-" : "") + std::to_string(vertices[v] + 1);
    return s;
}

AlgebraElement::AlgebraElement(const Path& p, const Rational& c) { add(p, c); }

Rational AlgebraElement::coefficient(const Path& p) const {
    const auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Parity> AlgebraElement::homogeneous_degree(const std::vector<Parity>& colours) const {
    std::optional<Parity> d;
    for (const auto& [p, c] : terms_) {
        const Parity pd = p.degree(colours);
        if (d && *d != pd) return std::nullopt;
        d = pd;
    }
    return d;
}

AlgebraElement& AlgebraElement::add(const Path& p, const Rational& c) {
    if (p.vertices.empty()) throw PreconditionError("AlgebraElement: empty path");
    auto [it, inserted] = terms_.try_emplace(p, Rational(0));
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
    return *this;
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    for (const auto& [p, c] : b.terms_) a.add(p, c);
    return a;
}

AlgebraElement operator*(const Rational& s, AlgebraElement a) {
    if (s.is_zero()) return {};
    for (auto& [p, c] : a.terms_) c *= s;
    return a;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out;
    for (const auto& [pa, ca] : a.terms()) {
        for (const auto& [pb, cb] : b.terms()) {
            if (pb.target() != pa.source()) continue;
            Path p = pb;
            p.vertices.insert(p.vertices.end(), pa.vertices.begin() + 1, pa.vertices.end());
            out.add(p, ca * cb);
        }
    }
    return out;
}

DoubleQuiver::DoubleQuiver(ColouredQuiver base)
    : DoubleQuiver(base, std::vector<int>(base.edge_count(), 1)) {}

DoubleQuiver::DoubleQuiver(ColouredQuiver base, std::vector<int> signs)
    : base_(std::move(base)), signs_(std::move(signs)) {
    if (signs_.size() != base_.edge_count()) throw DimensionError("DoubleQuiver: one sign per edge required");
    for (int s : signs_)
        if (s != 1 && s != -1) throw PreconditionError("DoubleQuiver: signs must be +1 or -1");
}

Edge DoubleQuiver::arrow(std::size_t a) const {
    const Edge e = base_.edge(a / 2);
    return a % 2 == 0 ? e : Edge{e.target, e.source};
}

int DoubleQuiver::sign(std::size_t a) const {
    const int s = signs_.at(a / 2);
    return a % 2 == 0 ? s : -s;
}

namespace {

std::vector<Path> extend_all(const std::vector<Edge>& arrows, std::vector<Path> paths, std::size_t steps) {
    for (std::size_t s = 0; s < steps; ++s) {
        std::vector<Path> next;
        for (const auto& p : paths) {
            for (const auto& e : arrows) {
                if (e.source != p.target()) continue;
                Path q = p;
                q.vertices.push_back(e.target);
                next.push_back(std::move(q));
            }
        }
        paths = std::move(next);
    }
    std::sort(paths.begin(), paths.end());
    return paths;
}

std::vector<Edge> arrows_of(const ColouredQuiver& q) {
    std::vector<Edge> out;
    for (std::size_t j = 0; j < q.edge_count(); ++j) out.push_back(q.edge(j));
    return out;
}

std::vector<Edge> arrows_of(const DoubleQuiver& dq) {
    std::vector<Edge> out;
    for (std::size_t a = 0; a < dq.arrow_count(); ++a) out.push_back(dq.arrow(a));
    return out;
}

std::vector<Path> component(const std::vector<Edge>& arrows, std::size_t vertices, std::size_t i, std::size_t j,
                            std::size_t k) {
    if (i >= vertices || j >= vertices) throw PreconditionError("graded_component: vertex out of range");
    auto all = extend_all(arrows, {Path::trivial(i)}, k);
    std::vector<Path> out;
    for (auto& p : all)
        if (p.target() == j) out.push_back(std::move(p));
    return out;
}

}  // namespace

std::vector<Path> graded_component(const ColouredQuiver& q, std::size_t i, std::size_t j, std::size_t k) {
    return component(arrows_of(q), q.vertex_count(), i, j, k);
}

std::vector<Path> graded_component(const DoubleQuiver& dq, std::size_t i, std::size_t j, std::size_t k) {
    return component(arrows_of(dq), dq.vertex_count(), i, j, k);
}

std::vector<Path> paths_of_length(const DoubleQuiver& dq, std::size_t k) {
    std::vector<Path> start;
    for (std::size_t i = 0; i < dq.vertex_count(); ++i) start.push_back(Path::trivial(i));
    return extend_all(arrows_of(dq), std::move(start), k);
}

std::vector<AlgebraElement> mesh_elements(const DoubleQuiver& dq) {
    std::vector<AlgebraElement> out(dq.vertex_count());
    for (std::size_t a = 0; a < dq.arrow_count(); ++a) {
        const Edge e = dq.arrow(a);
        // abar a: first a, then its reverse
        out[e.source].add(Path{{e.source, e.target, e.source}}, Rational(dq.sign(a)));
    }
    return out;
}

std::size_t PreprojectiveDims::total() const {
    std::size_t t = 0;
    for (const auto& s : by_length) t += s.total();
    return t;
}

GradedSlice PreprojectiveDims::total_graded() const {
    GradedSlice t;
    for (const auto& s : by_length) {
        t.even += s.even;
        t.odd += s.odd;
    }
    return t;
}

namespace {

// Reduce a spanning set of length-L elements to a basis of its span.
std::vector<AlgebraElement> reduce_span(const std::vector<AlgebraElement>& gens, const std::vector<Path>& basis) {
    if (gens.empty()) return {};
    std::map<Path, std::size_t> index;
    for (std::size_t c = 0; c < basis.size(); ++c) index.emplace(basis[c], c);
    Matrix m(gens.size(), basis.size());
    for (std::size_t r = 0; r < gens.size(); ++r)
        for (const auto& [p, c] : gens[r].terms()) m(r, index.at(p)) = c;
    const auto ech = rref(m);
    std::vector<AlgebraElement> out;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
        AlgebraElement e;
        for (std::size_t c = 0; c < basis.size(); ++c)
            if (!ech.reduced(r, c).is_zero()) e.add(basis[c], ech.reduced(r, c));
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

PreprojectiveDims preprojective_dims(const DoubleQuiver& dq, std::size_t max_len) {
    const auto& colours = dq.base().colours();
    std::vector<AlgebraElement> single_arrows;
    for (std::size_t a = 0; a < dq.arrow_count(); ++a) {
        const Edge e = dq.arrow(a);
        single_arrows.emplace_back(Path{{e.source, e.target}});
    }

    PreprojectiveDims out;
    // ideal slice of the previous length, split by degree
    std::vector<AlgebraElement> ideal[2];
    for (std::size_t len = 0; len <= max_len; ++len) {
        const auto paths = paths_of_length(dq, len);
        std::vector<Path> by_degree[2];
        for (const auto& p : paths) by_degree[to_int(p.degree(colours))].push_back(p);

        std::vector<AlgebraElement> gens[2];
        if (len == 2) {
            for (const auto& theta : mesh_elements(dq)) {
                if (theta.is_zero()) continue;
                gens[to_int(*theta.homogeneous_degree(colours))].push_back(theta);
            }
        } else if (len > 2) {
            for (int d = 0; d < 2; ++d) {
                for (const auto& v : ideal[d]) {
                    for (const auto& a : single_arrows) {
                        for (const auto& g : {multiply(a, v), multiply(v, a)}) {
                            if (g.is_zero()) continue;
                            const auto deg = g.homogeneous_degree(colours);
                            if (!deg) throw ConstructionError("preprojective_dims: inhomogeneous ideal element");
                            gens[to_int(*deg)].push_back(g);
                        }
                    }
                }
            }
        }
        GradedSlice slice;
        for (int d = 0; d < 2; ++d) {
            ideal[d] = reduce_span(gens[d], by_degree[d]);
            (d == 0 ? slice.even : slice.odd) = by_degree[d].size() - ideal[d].size();
        }
        out.by_length.push_back(slice);
        if (slice.total() == 0) {
            out.vanished = true;
            break;
        }
    }
    return out;
}

PreprojectiveDims preprojective_dims(const DoubleQuiver& dq) {
    return preprojective_dims(dq, 2 * (dq.vertex_count() + 1));
}

namespace {

// Embedding of X(i) into the even-first total space.
Matrix vertex_embedding(const std::vector<SuperDim>& spaces, std::size_t i) {
    std::size_t even_total = 0;
    std::size_t total = 0;
    for (const auto& s : spaces) {
        even_total += s.even;
        total += s.total();
    }
    std::size_t even_off = 0;
    std::size_t odd_off = even_total;
    for (std::size_t j = 0; j < i; ++j) {
        even_off += spaces[j].even;
        odd_off += spaces[j].odd;
    }
    Matrix m(total, spaces[i].total());
    for (std::size_t a = 0; a < spaces[i].even; ++a) m(even_off + a, a) = 1;
    for (std::size_t b = 0; b < spaces[i].odd; ++b) m(odd_off + b, spaces[i].even + b) = 1;
    return m;
}

// Canonical basis of the column space of a square block: the nonzero rows of
// rref(block^T), as columns.
Matrix image_basis(const Matrix& block) {
    const auto ech = rref(block.transpose());
    Matrix b(block.rows(), ech.pivots.size());
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
        for (std::size_t c = 0; c < block.rows(); ++c) b(c, r) = ech.reduced(r, c);
    return b;
}

}  // namespace

SuperModule module_from_srep(const SuperRep& x) {
    const ColouredQuiver& q = x.quiver();
    SuperDim space;
    for (const auto& s : x.spaces()) space = direct_sum(space, s);
    std::vector<Matrix> emb;
    for (std::size_t i = 0; i < x.vertex_count(); ++i) emb.push_back(vertex_embedding(x.spaces(), i));

    SuperModule m{q, space, {}, {}};
    for (std::size_t i = 0; i < x.vertex_count(); ++i) {
        m.idempotents.emplace_back(space, space, Parity::even, emb[i] * emb[i].transpose());
    }
    for (std::size_t e = 0; e < q.edge_count(); ++e) {
        const Edge edge = q.edge(e);
        m.arrows.emplace_back(space, space, q.edge_degree(e),
                              emb[edge.target] * x.map(e).matrix() * emb[edge.source].transpose());
    }
    return m;
}

SuperRep srep_from_module(const SuperModule& m) {
    const ColouredQuiver& q = m.quiver;
    const std::size_t k = q.vertex_count();
    if (m.idempotents.size() != k || m.arrows.size() != q.edge_count()) {
        throw PreconditionError("srep_from_module: wrong number of generator actions");
    }
    const std::size_t n = m.space.total();
    Matrix sum(n, n);
    for (std::size_t i = 0; i < k; ++i) {
        const GradedMap& v = m.idempotents[i];
        if (!(v.source() == m.space) || !(v.target() == m.space) || v.degree() != Parity::even) {
            throw PreconditionError("srep_from_module: idempotent of wrong shape or degree");
        }
        for (std::size_t j = 0; j < k; ++j) {
            const Matrix prod = v.matrix() * m.idempotents[j].matrix();
            if (!(prod == (i == j ? v.matrix() : Matrix(n, n)))) {
                throw PreconditionError("srep_from_module: idempotents are not orthogonal idempotents");
            }
        }
        sum = sum + v.matrix();
    }
    if (!(sum == Matrix::identity(n))) throw PreconditionError("srep_from_module: idempotents do not sum to 1");

    std::vector<SuperDim> spaces;
    std::vector<Matrix> bases;
    for (std::size_t i = 0; i < k; ++i) {
        const GradedMap& v = m.idempotents[i];
        const Matrix be = image_basis(v.block(Parity::even, Parity::even));
        const Matrix bo = image_basis(v.block(Parity::odd, Parity::odd));
        Matrix b(n, be.cols() + bo.cols());
        b.set_block(0, 0, be);
        b.set_block(m.space.even, be.cols(), bo);
        spaces.push_back({be.cols(), bo.cols()});
        bases.push_back(std::move(b));
    }
    std::vector<GradedMap> maps;
    for (std::size_t e = 0; e < q.edge_count(); ++e) {
        const Edge edge = q.edge(e);
        const GradedMap& a = m.arrows[e];
        if (a.degree() != q.edge_degree(e) || !(a.source() == m.space) || !(a.target() == m.space)) {
            throw PreconditionError("srep_from_module: arrow action of wrong shape or degree");
        }
        const Matrix& vt = m.idempotents[edge.target].matrix();
        const Matrix& vs = m.idempotents[edge.source].matrix();
        if (!(vt * a.matrix() * vs == a.matrix())) {
            throw PreconditionError("srep_from_module: arrow action not supported between its endpoint idempotents");
        }
        const auto x = solve(bases[edge.target], a.matrix() * bases[edge.source]);
        if (!x) throw ConstructionError("srep_from_module: arrow action leaves the target vertex space");
        maps.emplace_back(spaces[edge.source], spaces[edge.target], a.degree(), *x);
    }
    return {q, std::move(spaces), std::move(maps)};
}

GradedMap path_action(const SuperModule& m, const Path& p) {
    GradedMap acc = m.idempotents.at(p.source());
    const Orientation& o = m.quiver.orientation();
    for (std::size_t s = 0; s + 1 < p.vertices.size(); ++s) {
        const std::size_t a = p.vertices[s];
        const std::size_t b = p.vertices[s + 1];
        const std::size_t e = o.edge_between(a, b);
        if (!(o.edge(e) == Edge{a, b})) {
            throw PreconditionError("path_action: " + p.to_string() + " is not a path of the quiver");
        }
        acc = compose(m.arrows[e], acc);
    }
    return acc;
}

std::size_t module_hom_dimension(const SuperModule& m, const SuperModule& n, Parity degree) {
    if (!(m.quiver == n.quiver)) throw DimensionError("module_hom_dimension: different quivers");
    const std::size_t rows = n.space.total();
    const std::size_t cols = m.space.total();
    std::vector<long> var(rows * cols, -1);
    long count = 0;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const Parity rp = r < n.space.even ? Parity::even : Parity::odd;
            const Parity cp = c < m.space.even ? Parity::even : Parity::odd;
            if (rp + cp == degree) var[r * cols + c] = count++;
        }
    }
    std::vector<std::pair<const Matrix*, const Matrix*>> gens;
    for (std::size_t i = 0; i < m.idempotents.size(); ++i)
        gens.emplace_back(&m.idempotents[i].matrix(), &n.idempotents[i].matrix());
    for (std::size_t e = 0; e < m.arrows.size(); ++e) gens.emplace_back(&m.arrows[e].matrix(), &n.arrows[e].matrix());

    std::vector<std::vector<Rational>> eqs;
    for (const auto& [gm, gn] : gens) {
        // (g_N Phi - Phi g_M)(a, b) = 0
        for (std::size_t a = 0; a < rows; ++a) {
            for (std::size_t b = 0; b < cols; ++b) {
                std::vector<Rational> row(static_cast<std::size_t>(count));
                bool nonzero = false;
                for (std::size_t t = 0; t < rows; ++t) {
                    const long v = var[t * cols + b];
                    if (v < 0 || (*gn)(a, t).is_zero()) continue;
                    row[static_cast<std::size_t>(v)] += (*gn)(a, t);
                    nonzero = true;
                }
                for (std::size_t t = 0; t < cols; ++t) {
                    const long v = var[a * cols + t];
                    if (v < 0 || (*gm)(t, b).is_zero()) continue;
                    row[static_cast<std::size_t>(v)] -= (*gm)(t, b);
                    nonzero = true;
                }
                if (nonzero) eqs.push_back(std::move(row));
            }
        }
    }
    Matrix system(eqs.size(), static_cast<std::size_t>(count));
    for (std::size_t r = 0; r < eqs.size(); ++r)
        for (std::size_t c = 0; c < eqs[r].size(); ++c) system(r, c) = eqs[r][c];
    return static_cast<std::size_t>(count) - rank(system);
}

}  // namespace superquiver
