#include "diamond/rational.hpp"

namespace diamond {

Rational Rational::from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) {
        throw std::invalid_argument("Rational: cannot parse \"" + s + "\"");
    }
    if (q.get_den() == 0) {
        throw std::invalid_argument("Rational: zero denominator in \"" + s + "\"");
    }
    q.canonicalize();
    return Rational(q);
}

std::string GaussianRational::str() const {
    if (im_.is_zero()) return re_.str();
    std::string imag = im_ == Rational(1)    ? "i"
                     : im_ == Rational(-1)   ? "-i"
                                             : im_.str() + "*i";
    if (re_.is_zero()) return imag;
    return re_.str() + (im_.is_negative() ? "" : "+") + imag;
}

}  // namespace diamond
