#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace diamond {

/// Arbitrary-precision rational, always stored in canonical form:
/// denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, long d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }

    /// Parses "p/q" or "p". Accepts unreduced input, stores reduced form.
    static Rational from_string(const std::string& s);

    /// Canonical form: "p/q" with q > 1, plain "p" for integers, "0" for zero.
    std::string str() const { return q_.get_str(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_negative() const { return sgn(q_) < 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(q_ / o.q_));
    }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    Rational inv() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1 / q_));
    }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        int c = cmp(q_, o.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    const mpq_class& raw() const { return q_; }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

/// Element of the field Q(i): re + im*i with rational components.
/// Equality is component-wise; a nonzero element is invertible.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long n) : re_(n) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re_ + o.re_, im_ + o.im_}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re_ - o.re_, im_ - o.im_}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    GaussianRational operator/(const GaussianRational& o) const {
        if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        Rational n = o.re_ * o.re_ + o.im_ * o.im_;
        return {(re_ * o.re_ + im_ * o.im_) / n, (im_ * o.re_ - re_ * o.im_) / n};
    }
    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_; im_ += o.im_; return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_; im_ -= o.im_; return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    GaussianRational conj() const { return {re_, -im_}; }
    GaussianRational inv() const { return GaussianRational(1) / *this; }

    bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }

    /// Display form, e.g. "1/2", "i", "-2/3*i", "1+1/2*i". JSON encoding is separate.
    std::string str() const;

private:
    Rational re_;
    Rational im_;
};

}  // namespace diamond
