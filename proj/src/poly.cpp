#include "invz/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace invz {

Poly::Poly(std::vector<Rat> coefficients) : c_(std::move(coefficients)) { normalize(); }

Poly::Poly(Rat constant) {
    if (!constant.is_zero()) {
        c_.push_back(std::move(constant));
    }
}

Poly Poly::monomial(const Rat& c, std::size_t power) {
    std::vector<Rat> v(power + 1);
    v[power] = c;
    return Poly(std::move(v));
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
    }
}

const Rat& Poly::leading() const {
    if (c_.empty()) {
        throw std::domain_error("zero polynomial has no leading coefficient");
    }
    return c_.back();
}

Poly Poly::monic() const {
    if (is_zero()) {
        return *this;
    }
    const Rat inv = leading().inverse();
    std::vector<Rat> v = c_;
    for (auto& x : v) {
        x *= inv;
    }
    return Poly(std::move(v));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) {
        return {};
    }
    std::vector<Rat> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        v[i - 1] = c_[i] * Rat(static_cast<long>(i));
    }
    return Poly(std::move(v));
}

Rat Poly::eval(const Rat& x) const {
    Rat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

std::string Poly::str() const {
    if (c_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rat& c = c_[k];
        if (c.is_zero()) {
            continue;
        }
        const Rat mag = c.abs();
        const bool first_term = first;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag.short_str();
            continue;
        }
        // A bare leading "-z^k" would read back as (-z)^k.
        if (!mag.is_one() || (first_term && c.sign() < 0 && k > 1)) {
            os << mag.short_str() << "*";
        }
        os << "z";
        if (k > 1) {
            os << "^" << k;
        }
    }
    return os.str();
}

Poly Poly::operator-() const {
    std::vector<Rat> v = c_;
    for (auto& x : v) {
        x = -x;
    }
    return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.c_.size() > c_.size()) {
        c_.resize(rhs.c_.size());
    }
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) {
        c_[i] += rhs.c_[i];
    }
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) { return *this += -rhs; }

Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) {
        return {};
    }
    std::vector<Rat> v(lhs.c_.size() + rhs.c_.size() - 1);
    for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
        if (lhs.c_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
            v[i + j] += lhs.c_[i] * rhs.c_[j];
        }
    }
    return Poly(std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& p, const Poly& d) {
    if (d.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    const int dd = d.degree();
    std::vector<Rat> rem(p.coefficients().begin(), p.coefficients().end());
    if (p.degree() < dd) {
        return {Poly{}, p};
    }
    std::vector<Rat> quo(static_cast<std::size_t>(p.degree() - dd + 1));
    const Rat inv_lead = d.leading().inverse();
    for (int k = p.degree() - dd; k >= 0; --k) {
        const Rat t = rem[static_cast<std::size_t>(k + dd)] * inv_lead;
        quo[static_cast<std::size_t>(k)] = t;
        if (t.is_zero()) {
            continue;
        }
        for (int i = 0; i <= dd; ++i) {
            rem[static_cast<std::size_t>(k + i)] -= t * d.coefficient(static_cast<std::size_t>(i));
        }
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero()) {
        throw std::domain_error("gcd of two zero polynomials");
    }
    Poly a = p;
    Poly b = q;
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();  // keeps coefficient growth in check
    }
    return a.monic();
}

bool is_squarefree(const Poly& p) {
    if (p.is_zero()) {
        throw std::domain_error("square-free test of the zero polynomial");
    }
    if (p.is_constant()) {
        return true;
    }
    return gcd(p, p.derivative()).is_constant();
}

Poly poly_from_roots(std::span<const Rat> roots, bool include_zero_root) {
    Poly result = include_zero_root ? Poly::z() : Poly(Rat(1));
    for (const Rat& a : roots) {
        result = result * Poly(std::vector<Rat>{-a, 1});
    }
    return result;
}

}  // namespace invz
