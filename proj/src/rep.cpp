#include "superquiver/rep.hpp"

#include <numeric>

#include "superquiver/errors.hpp"

namespace superquiver {

Representation::Representation(Orientation orientation, DimensionVector dims, std::vector<Matrix> maps)
    : orientation_(std::move(orientation)), dims_(std::move(dims)), maps_(std::move(maps)) {
    if (dims_.size() != orientation_.vertex_count()) {
        throw DimensionError("Representation: " + std::to_string(dims_.size()) + " dimensions for " +
                             std::to_string(orientation_.vertex_count()) + " vertices");
    }
    if (maps_.size() != orientation_.edge_count()) {
        throw DimensionError("Representation: wrong number of edge maps");
    }
    for (std::size_t j = 0; j < maps_.size(); ++j) {
        const Edge e = orientation_.edge(j);
        if (maps_[j].rows() != dims_[e.target] || maps_[j].cols() != dims_[e.source]) {
            throw DimensionError("Representation: map on edge " + std::to_string(e.source + 1) + "->" +
                                 std::to_string(e.target + 1) + " has shape " + std::to_string(maps_[j].rows()) +
                                 "x" + std::to_string(maps_[j].cols()));
        }
    }
}

Representation Representation::zero_maps(Orientation orientation, DimensionVector dims) {
    std::vector<Matrix> maps;
    for (std::size_t j = 0; j < orientation.edge_count(); ++j) {
        const Edge e = orientation.edge(j);
        maps.emplace_back(dims.at(e.target), dims.at(e.source));
    }
    return {std::move(orientation), std::move(dims), std::move(maps)};
}

std::size_t Representation::total_dimension() const {
    return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
}

Representation simple_rep(const Orientation& o, std::size_t i) {
    if (i >= o.vertex_count()) throw PreconditionError("simple_rep: vertex out of range");
    DimensionVector d(o.vertex_count(), 0);
    d[i] = 1;
    return Representation::zero_maps(o, std::move(d));
}

Representation interval_rep(const Orientation& o, std::size_t a, std::size_t b) {
    if (a > b || b >= o.vertex_count()) throw PreconditionError("interval_rep: bad interval");
    DimensionVector d(o.vertex_count(), 0);
    for (std::size_t i = a; i <= b; ++i) d[i] = 1;
    std::vector<Matrix> maps;
    for (std::size_t j = 0; j < o.edge_count(); ++j) {
        const Edge e = o.edge(j);
        const bool inside = j >= a && j + 1 <= b;
        maps.push_back(inside ? Matrix::identity(1) : Matrix(d[e.target], d[e.source]));
    }
    return {o, std::move(d), std::move(maps)};
}

std::vector<Representation> interval_reps(const Orientation& o) {
    std::vector<Representation> out;
    for (std::size_t a = 0; a < o.vertex_count(); ++a)
        for (std::size_t b = a; b < o.vertex_count(); ++b) out.push_back(interval_rep(o, a, b));
    return out;
}

Representation direct_sum(const Representation& x, const Representation& y) {
    if (!(x.orientation() == y.orientation())) throw DimensionError("direct_sum: different quivers");
    DimensionVector d(x.vertex_count());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = x.dim(i) + y.dim(i);
    std::vector<Matrix> maps;
    for (std::size_t j = 0; j < x.maps().size(); ++j) maps.push_back(block_diagonal(x.map(j), y.map(j)));
    return {x.orientation(), std::move(d), std::move(maps)};
}

Representation bgp_minus(const Representation& x, std::size_t i) {
    const Orientation& o = x.orientation();
    if (!o.is_sink(i)) throw PreconditionError("bgp_minus: vertex " + std::to_string(i + 1) + " is not a sink");
    const auto nbrs = o.neighbours(i);
    Matrix h(x.dim(i), 0);
    for (std::size_t k : nbrs) h = hstack(h, x.map(o.edge_between(i, k)));
    const Matrix kernel = kernel_basis(h);

    DimensionVector d = x.dims();
    d[i] = kernel.cols();
    std::vector<Matrix> maps = x.maps();
    std::size_t offset = 0;
    for (std::size_t k : nbrs) {
        maps[o.edge_between(i, k)] = kernel.block(offset, 0, x.dim(k), kernel.cols());
        offset += x.dim(k);
    }
    return {o.reflected(i), std::move(d), std::move(maps)};
}

Representation bgp_plus(const Representation& x, std::size_t i) {
    const Orientation& o = x.orientation();
    if (!o.is_source(i)) throw PreconditionError("bgp_plus: vertex " + std::to_string(i + 1) + " is not a source");
    const auto nbrs = o.neighbours(i);
    Matrix v(0, x.dim(i));
    for (std::size_t k : nbrs) v = vstack(v, x.map(o.edge_between(i, k)));
    const Matrix q = cokernel_projection(v);

    DimensionVector d = x.dims();
    d[i] = q.rows();
    std::vector<Matrix> maps = x.maps();
    std::size_t offset = 0;
    for (std::size_t k : nbrs) {
        maps[o.edge_between(i, k)] = q.block(0, offset, q.rows(), x.dim(k));
        offset += x.dim(k);
    }
    return {o.reflected(i), std::move(d), std::move(maps)};
}

std::vector<VertexMaps> solve_hom(const HomProblem& p) {
    const Orientation& o = *p.orientation;
    const std::size_t k = o.vertex_count();
    // variable index of phi_j(r, c), or -1 when the entry is forced to zero
    std::vector<std::vector<long>> var(k);
    long count = 0;
    for (std::size_t j = 0; j < k; ++j) {
        var[j].assign(p.target_dims[j] * p.source_dims[j], -1);
        for (std::size_t r = 0; r < p.target_dims[j]; ++r)
            for (std::size_t c = 0; c < p.source_dims[j]; ++c)
                if (p.allowed(j, r, c)) var[j][r * p.source_dims[j] + c] = count++;
    }
    std::vector<std::vector<Rational>> rows;
    for (std::size_t e = 0; e < o.edge_count(); ++e) {
        const Edge edge = o.edge(e);
        const std::size_t s = edge.source;
        const std::size_t t = edge.target;
        const Matrix& xe = (*p.source_maps)[e];
        const Matrix& ye = (*p.target_maps)[e];
        // (y_e phi_s - phi_t x_e)(a, b) = 0
        for (std::size_t a = 0; a < p.target_dims[t]; ++a) {
            for (std::size_t b = 0; b < p.source_dims[s]; ++b) {
                std::vector<Rational> row(static_cast<std::size_t>(count));
                bool nonzero = false;
                for (std::size_t m = 0; m < p.target_dims[s]; ++m) {
                    const long v = var[s][m * p.source_dims[s] + b];
                    if (v < 0 || ye(a, m).is_zero()) continue;
                    row[static_cast<std::size_t>(v)] += ye(a, m);
                    nonzero = true;
                }
                for (std::size_t m = 0; m < p.source_dims[t]; ++m) {
                    const long v = var[t][a * p.source_dims[t] + m];
                    if (v < 0 || xe(m, b).is_zero()) continue;
                    row[static_cast<std::size_t>(v)] -= xe(m, b);
                    nonzero = true;
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
    }
    Matrix system(rows.size(), static_cast<std::size_t>(count));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) system(r, c) = rows[r][c];
    const Matrix basis = kernel_basis(system);

    std::vector<VertexMaps> out;
    for (std::size_t b = 0; b < basis.cols(); ++b) {
        VertexMaps phi;
        for (std::size_t j = 0; j < k; ++j) {
            Matrix m(p.target_dims[j], p.source_dims[j]);
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c) {
                    const long v = var[j][r * m.cols() + c];
                    if (v >= 0) m(r, c) = basis(static_cast<std::size_t>(v), b);
                }
            phi.push_back(std::move(m));
        }
        out.push_back(std::move(phi));
    }
    return out;
}

std::vector<VertexMaps> hom_basis(const Representation& x, const Representation& y) {
    if (!(x.orientation() == y.orientation())) throw DimensionError("hom_basis: different quivers");
    return solve_hom({&x.orientation(), x.dims(), y.dims(), &x.maps(), &y.maps(),
                      [](std::size_t, std::size_t, std::size_t) { return true; }});
}

std::size_t hom_dimension(const Representation& x, const Representation& y) { return hom_basis(x, y).size(); }

std::size_t end_dimension(const Representation& x) { return hom_dimension(x, x); }

bool is_morphism(const Representation& x, const Representation& y, const VertexMaps& phi) {
    if (!(x.orientation() == y.orientation()) || phi.size() != x.vertex_count()) return false;
    for (std::size_t j = 0; j < phi.size(); ++j) {
        if (phi[j].rows() != y.dim(j) || phi[j].cols() != x.dim(j)) return false;
    }
    for (std::size_t e = 0; e < x.maps().size(); ++e) {
        const Edge edge = x.orientation().edge(e);
        if (!(y.map(e) * phi[edge.source] == phi[edge.target] * x.map(e))) return false;
    }
    return true;
}

bool is_indecomposable(const Representation& x) {
    if (x.is_zero()) throw PreconditionError("is_indecomposable: zero representation");
    return end_dimension(x) == 1;
}

std::optional<VertexMaps> find_isomorphism(const Representation& x, const Representation& y) {
    if (x.is_zero() || y.is_zero() || end_dimension(x) != 1 || end_dimension(y) != 1) {
        throw PreconditionError("find_isomorphism: both representations must be bricks");
    }
    if (x.dims() != y.dims()) return std::nullopt;
    const auto forward = hom_basis(x, y);
    if (forward.size() != 1 || hom_dimension(y, x) != 1) return std::nullopt;
    for (const auto& m : forward.front()) {
        if (!is_invertible(m)) return std::nullopt;
    }
    return forward.front();
}

namespace {

// The scalar c with phi = c * id for an endomorphism of a brick.
Rational brick_scalar(const VertexMaps& phi) {
    for (const auto& m : phi) {
        if (m.rows() > 0) return m(0, 0);
    }
    throw PreconditionError("brick_scalar: zero representation");
}

}  // namespace

std::vector<DimensionVector> decompose_check(const Representation& x, const std::vector<Representation>& bricks) {
    std::vector<DimensionVector> out;
    DimensionVector accounted(x.vertex_count(), 0);
    for (const auto& y : bricks) {
        if (y.is_zero() || end_dimension(y) != 1) throw PreconditionError("decompose_check: candidate is not a brick");
        const auto into = hom_basis(y, x);
        const auto back = hom_basis(x, y);
        Matrix pairing(into.size(), back.size());
        for (std::size_t a = 0; a < into.size(); ++a) {
            for (std::size_t b = 0; b < back.size(); ++b) {
                VertexMaps comp;
                for (std::size_t j = 0; j < x.vertex_count(); ++j) comp.push_back(back[b][j] * into[a][j]);
                pairing(a, b) = brick_scalar(comp);
            }
        }
        const std::size_t mult = rank(pairing);
        for (std::size_t r = 0; r < mult; ++r) {
            out.push_back(y.dims());
            for (std::size_t j = 0; j < accounted.size(); ++j) accounted[j] += y.dim(j);
        }
    }
    if (accounted != x.dims()) {
        throw ConstructionError("decompose_check: the given bricks do not account for the dimension vector");
    }
    return out;
}

}  // namespace superquiver
