#include "padiclab/rational.hpp"

#include <ostream>

#include "padiclab/errors.hpp"

namespace padiclab {

Rational::Rational(long n, long d) : q_(n, d) {
    if (d == 0)
        throw DomainError("rational with zero denominator");
    q_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) : q_(n, d) {
    if (d == 0)
        throw DomainError("rational with zero denominator");
    q_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw DomainError("malformed rational literal: " + s);
    q.canonicalize();
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero())
        throw DomainError("inverse of zero");
    return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(long e) const {
    if (e == 0)
        return Rational(1);
    bool neg = e < 0;
    unsigned long k = neg ? -(unsigned long)e : (unsigned long)e;
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), q_.get_num_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), q_.get_den_mpz_t(), k);
    Rational out{r};
    return neg ? out.inverse() : out;
}

long Rational::val_p(std::uint64_t p) const {
    if (is_zero())
        throw DomainError("valuation of zero");
    mpz_class pp{std::uint64_t(p)}, tmp;
    if (mpz_divisible_p(q_.get_num_mpz_t(), pp.get_mpz_t()))
        return (long)mpz_remove(tmp.get_mpz_t(), q_.get_num_mpz_t(), pp.get_mpz_t());
    if (mpz_divisible_p(q_.get_den_mpz_t(), pp.get_mpz_t()))
        return -(long)mpz_remove(tmp.get_mpz_t(), q_.get_den_mpz_t(), pp.get_mpz_t());
    return 0;
}

std::string Rational::str() const {
    return q_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace padiclab
