#pragma once

// Z2-graded spaces K^{even|odd} with the standard basis, even coordinates
// first, and homogeneous linear maps between them.

#include <cstddef>
#include <ostream>
#include <string>

#include "superquiver/matrix.hpp"

namespace superquiver {

enum class Parity : unsigned char { even = 0, odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>(static_cast<unsigned char>(a) ^ static_cast<unsigned char>(b));
}
constexpr Parity& operator+=(Parity& a, Parity b) { return a = a + b; }
constexpr Parity parity_of(std::size_t n) { return (n % 2) ? Parity::odd : Parity::even; }
constexpr bool is_odd(Parity p) { return p == Parity::odd; }
constexpr int to_int(Parity p) { return static_cast<int>(p); }

inline std::ostream& operator<<(std::ostream& os, Parity p) { return os << to_int(p); }

struct SuperDim {
    std::size_t even = 0;
    std::size_t odd = 0;

    [[nodiscard]] std::size_t total() const { return even + odd; }
    // Dimension of the component of the given degree.
    [[nodiscard]] std::size_t part(Parity p) const { return is_odd(p) ? odd : even; }
    // Offset of that component inside the even-first basis.
    [[nodiscard]] std::size_t offset(Parity p) const { return is_odd(p) ? even : 0; }

    friend bool operator==(const SuperDim&, const SuperDim&) = default;
    friend std::ostream& operator<<(std::ostream& os, const SuperDim& d) { return os << d.even << '|' << d.odd; }
};

/// K^{n|m} -> K^{m|n}.
inline SuperDim parity_change(SuperDim d) { return {d.odd, d.even}; }
inline SuperDim shift(SuperDim d, Parity p) { return is_odd(p) ? parity_change(d) : d; }
inline SuperDim direct_sum(SuperDim a, SuperDim b) { return {a.even + b.even, a.odd + b.odd}; }

/// Homogeneous linear map. The matrix has shape target.total x
/// source.total in even-first bases; the blocks forbidden by the degree
/// are zero (checked on construction).
class GradedMap {
public:
    GradedMap() = default;
    GradedMap(SuperDim source, SuperDim target, Parity degree, Matrix matrix);

    static GradedMap zero(SuperDim source, SuperDim target, Parity degree);
    static GradedMap identity(SuperDim space);
    // The canonical degree-1 isomorphism V -> P(V): the same vectors, with
    // the even and odd coordinate blocks exchanged.
    static GradedMap parity_shift(SuperDim space);
    // Assemble from the two blocks allowed by `degree`. For degree 0 these
    // are (even<-even, odd<-odd); for degree 1 (odd<-even, even<-odd).
    static GradedMap from_blocks(SuperDim source, SuperDim target, Parity degree, const Matrix& first,
                                 const Matrix& second);

    [[nodiscard]] SuperDim source() const { return source_; }
    [[nodiscard]] SuperDim target() const { return target_; }
    [[nodiscard]] Parity degree() const { return degree_; }
    [[nodiscard]] const Matrix& matrix() const { return matrix_; }

    // Block mapping the `from` component of the source into the `to`
    // component of the target.
    [[nodiscard]] Matrix block(Parity to, Parity from) const;

    friend bool operator==(const GradedMap&, const GradedMap&) = default;

private:
    SuperDim source_{};
    SuperDim target_{};
    Parity degree_ = Parity::even;
    Matrix matrix_;
};

/// P(T): both spaces parity-changed, blocks A<->D and B<->C exchanged.
GradedMap parity_change_map(const GradedMap& f);

/// The same linear map seen as P^a(source) -> P^b(target); degree becomes
/// deg f + a + b.
GradedMap regrade(const GradedMap& f, Parity source_shift, Parity target_shift);

/// f o g. Requires source(f) == target(g).
GradedMap compose(const GradedMap& f, const GradedMap& g);

GradedMap operator+(const GradedMap& f, const GradedMap& g);

/// Permutation taking the even-first basis of P^s(V) to the even-first
/// basis of V (identity when s is even).
Matrix parity_permutation(SuperDim space, Parity s);

std::ostream& operator<<(std::ostream& os, const GradedMap& f);

}  // namespace superquiver
