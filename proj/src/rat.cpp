#include "invz/rat.hpp"

#include <ostream>
#include <stdexcept>

namespace invz {

Rat::Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rat Rat::from_mpq(mpq_class q) {
    q.canonicalize();
    Rat r;
    r.value_ = std::move(q);
    return r;
}

Rat Rat::inverse() const {
    if (is_zero()) {
        throw std::domain_error("inverse of zero");
    }
    return from_mpq(1 / value_);
}

Rat Rat::pow(unsigned exponent) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), exponent);
    // n/d is already reduced and d > 0
    Rat r;
    r.value_ = mpq_class(n, d);
    return r;
}

std::string Rat::str() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rat::short_str() const {
    return is_integer() ? value_.get_num().get_str() : str();
}

Rat& Rat::operator+=(const Rat& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rat& Rat::operator-=(const Rat& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rat& Rat::operator*=(const Rat& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rat& Rat::operator/=(const Rat& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.short_str(); }

bool is_canonical(const Rat& r) {
    const mpz_class d = r.den();
    if (d <= 0) {
        return false;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.mpq().get_num_mpz_t(), d.get_mpz_t());
    return g == 1;
}

}  // namespace invz
