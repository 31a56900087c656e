#include "superquiver/rational.hpp"

#include "superquiver/errors.hpp"

namespace superquiver {

Rational::Rational(long num, long den) {
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) {
        throw std::invalid_argument("Rational::parse: empty string");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) {
        throw std::invalid_argument("Rational::parse: not a rational: " + s);
    }
    if (q.get_den() == 0) {
        throw std::domain_error("Rational::parse: zero denominator");
    }
    q.canonicalize();
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= o.value_;
    return *this;
}

}  // namespace superquiver
