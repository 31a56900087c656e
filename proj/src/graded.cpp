#include "superquiver/graded.hpp"

#include <sstream>

namespace superquiver {

namespace {

std::string describe(SuperDim d) {
    std::ostringstream os;
    os << d;
    return os.str();
}

}  // namespace

GradedMap::GradedMap(SuperDim source, SuperDim target, Parity degree, Matrix matrix)
    : source_(source), target_(target), degree_(degree), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.total() || matrix_.cols() != source_.total()) {
        throw DimensionError("GradedMap: matrix is " + std::to_string(matrix_.rows()) + "x" +
                             std::to_string(matrix_.cols()) + ", expected " + describe(target_) + " <- " +
                             describe(source_));
    }
    // forbidden blocks: target component t <- source component s with s + t != degree
    for (Parity to : {Parity::even, Parity::odd}) {
        for (Parity from : {Parity::even, Parity::odd}) {
            if (from + to == degree_) continue;
            if (!block(to, from).is_zero()) {
                throw DimensionError("GradedMap: map is not homogeneous of degree " +
                                     std::to_string(to_int(degree_)));
            }
        }
    }
}

GradedMap GradedMap::zero(SuperDim source, SuperDim target, Parity degree) {
    return {source, target, degree, Matrix(target.total(), source.total())};
}

GradedMap GradedMap::identity(SuperDim space) {
    return {space, space, Parity::even, Matrix::identity(space.total())};
}

GradedMap GradedMap::parity_shift(SuperDim space) {
    const SuperDim target = parity_change(space);
    Matrix m(space.total(), space.total());
    // even coordinate a of V becomes odd coordinate a of PV
    for (std::size_t a = 0; a < space.even; ++a) m(target.even + a, a) = 1;
    for (std::size_t b = 0; b < space.odd; ++b) m(b, space.even + b) = 1;
    return {space, target, Parity::odd, std::move(m)};
}

GradedMap GradedMap::from_blocks(SuperDim source, SuperDim target, Parity degree, const Matrix& first,
                                 const Matrix& second) {
    Matrix m(target.total(), source.total());
    const Parity to_first = degree;  // image of the even source component
    const Parity to_second = degree + Parity::odd;
    auto place = [&](const Matrix& b, Parity to, Parity from) {
        if (b.rows() != target.part(to) || b.cols() != source.part(from)) {
            throw DimensionError("GradedMap::from_blocks: block shape mismatch");
        }
        m.set_block(target.offset(to), source.offset(from), b);
    };
    place(first, to_first, Parity::even);
    place(second, to_second, Parity::odd);
    return {source, target, degree, std::move(m)};
}

Matrix GradedMap::block(Parity to, Parity from) const {
    return matrix_.block(target_.offset(to), source_.offset(from), target_.part(to), source_.part(from));
}

Matrix parity_permutation(SuperDim space, Parity s) {
    if (!is_odd(s)) return Matrix::identity(space.total());
    // columns index the basis of P(V), rows the basis of V
    return GradedMap::parity_shift(parity_change(space)).matrix();
}

GradedMap regrade(const GradedMap& f, Parity source_shift, Parity target_shift) {
    // new matrix = Perm_target^{-1} * M * Perm_source, where Perm_X maps P^s X
    // coordinates to X coordinates.
    const Matrix left = parity_permutation(f.target(), target_shift).transpose();
    const Matrix right = parity_permutation(f.source(), source_shift);
    return {shift(f.source(), source_shift), shift(f.target(), target_shift),
            f.degree() + source_shift + target_shift, left * f.matrix() * right};
}

GradedMap parity_change_map(const GradedMap& f) {
    return regrade(f, Parity::odd, Parity::odd);
}

GradedMap compose(const GradedMap& f, const GradedMap& g) {
    if (!(f.source() == g.target())) {
        throw DimensionError("compose: source " + describe(f.source()) + " of outer map differs from target " +
                             describe(g.target()) + " of inner map");
    }
    return {g.source(), f.target(), f.degree() + g.degree(), f.matrix() * g.matrix()};
}

GradedMap operator+(const GradedMap& f, const GradedMap& g) {
    if (!(f.source() == g.source()) || !(f.target() == g.target()) || f.degree() != g.degree()) {
        throw DimensionError("GradedMap sum: operands differ in shape or degree");
    }
    return {f.source(), f.target(), f.degree(), f.matrix() + g.matrix()};
}

std::ostream& operator<<(std::ostream& os, const GradedMap& f) {
    return os << "GradedMap(" << f.source() << " -> " << f.target() << ", deg " << f.degree() << ", "
              << f.matrix() << ')';
}

}  // namespace superquiver
