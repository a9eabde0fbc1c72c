#ifndef PADICLAB_RATIONAL_HPP
#define PADICLAB_RATIONAL_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace padiclab {

/// Exact arbitrary-precision fraction, kept canonical: gcd(|num|, den) = 1,
/// den >= 1, zero is 0/1. This is the oracle-grade number type.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    explicit Rational(const mpz_class& n) : q_(n) {}
    Rational(long n, long d);
    Rational(const mpz_class& n, const mpz_class& d);

    static Rational from_string(const std::string& s);

    const mpz_class& numerator() const { return q_.get_num(); }
    const mpz_class& denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.q_ == b.q_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) {
        return a.q_ != b.q_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.q_ < b.q_;
    }

    Rational inverse() const;
    Rational pow(long e) const;

    /// p-adic valuation; throws DomainError on zero.
    long val_p(std::uint64_t p) const;

    /// "n" for integers, "n/d" otherwise.
    std::string str() const;

    double to_double() const { return q_.get_d(); }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace padiclab

#endif
