#include "invz/series.hpp"

#include <algorithm>
#include <sstream>

namespace invz {

namespace {

// o(f) for the product rule, with a window-zero series counted as N + 1.
std::size_t known_valuation(const InvZSeries& f) {
    const Valuation v = valuation(f);
    return v.is_infinite() ? f.truncation() + 1 : v.value();
}

}  // namespace

std::size_t Valuation::value() const {
    if (!value_) {
        throw std::logic_error("valuation is infinite");
    }
    return *value_;
}

InvZSeries::InvZSeries(std::size_t truncation) : coeffs_(truncation + 1) {}

InvZSeries::InvZSeries(std::vector<Rat> coefficients, std::size_t truncation)
    : coeffs_(std::move(coefficients)) {
    coeffs_.resize(truncation + 1);
}

InvZSeries InvZSeries::constant(const Rat& c, std::size_t truncation) {
    return monomial(c, 0, truncation);
}

InvZSeries InvZSeries::monomial(const Rat& c, std::size_t power, std::size_t truncation) {
    InvZSeries s(truncation);
    if (power <= truncation) {
        s.coeffs_[power] = c;
    }
    return s;
}

const Rat& InvZSeries::operator[](std::size_t n) const {
    if (n >= coeffs_.size()) {
        throw std::out_of_range("coefficient beyond series truncation");
    }
    return coeffs_[n];
}

InvZSeries InvZSeries::truncated(std::size_t n) const {
    if (n > truncation()) {
        throw std::out_of_range("cannot extend a series past its truncation");
    }
    return InvZSeries(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n + 1)), n);
}

std::string InvZSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        if (coeffs_[n].is_zero()) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        os << "(" << coeffs_[n].short_str() << ")";
        if (n > 0) {
            os << "*z^-" << n;
        }
    }
    if (first) {
        os << "0";
    }
    os << " + O(z^-" << coeffs_.size() << ")";
    return os.str();
}

InvZSeries InvZSeries::operator-() const {
    InvZSeries r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

InvZSeries& InvZSeries::operator*=(const Rat& c) {
    for (auto& x : coeffs_) {
        x *= c;
    }
    return *this;
}

InvZSeries operator+(const InvZSeries& f, const InvZSeries& g) {
    const std::size_t n = std::min(f.truncation(), g.truncation());
    std::vector<Rat> v(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        v[i] = f[i] + g[i];
    }
    return InvZSeries(std::move(v), n);
}

InvZSeries operator-(const InvZSeries& f, const InvZSeries& g) { return f + (-g); }

InvZSeries operator*(const InvZSeries& f, const InvZSeries& g) {
    const std::size_t of = known_valuation(f);
    const std::size_t og = known_valuation(g);
    const std::size_t n = std::min(f.truncation() + og, g.truncation() + of);
    std::vector<Rat> v(n + 1);
    for (std::size_t i = of; i <= std::min(n, f.truncation()); ++i) {
        if (f[i].is_zero()) {
            continue;
        }
        for (std::size_t j = og; i + j <= n && j <= g.truncation(); ++j) {
            v[i + j] += f[i] * g[j];
        }
    }
    return InvZSeries(std::move(v), n);
}

InvZSeries operator*(const Rat& c, InvZSeries f) { return f *= c; }

bool agree_on_window(const InvZSeries& f, const InvZSeries& g) {
    const std::size_t n = std::min(f.truncation(), g.truncation());
    for (std::size_t i = 0; i <= n; ++i) {
        if (f[i] != g[i]) {
            return false;
        }
    }
    return true;
}

Valuation valuation(const InvZSeries& f) {
    const auto& c = f.coefficients();
    const auto it = std::find_if(c.begin(), c.end(), [](const Rat& x) { return !x.is_zero(); });
    if (it == c.end()) {
        return Valuation::infinity();
    }
    return Valuation::finite(static_cast<std::size_t>(it - c.begin()));
}

InvZSeries derivative(const InvZSeries& f) {
    const std::size_t n = f.truncation() + 1;
    std::vector<Rat> v(n + 1);
    for (std::size_t i = 1; i <= f.truncation(); ++i) {
        v[i + 1] = -Rat(static_cast<long>(i)) * f[i];
    }
    return InvZSeries(std::move(v), n);
}

InvZSeries antiderivative(const InvZSeries& f) {
    if (f.truncation() < 1) {
        throw NotIntegrableInRing("z^-1 coefficient unknown; cannot rule out a logarithm");
    }
    if (!f[0].is_zero()) {
        throw NotIntegrableInRing("nonzero z^0 coefficient integrates to a multiple of z");
    }
    if (!f[1].is_zero()) {
        throw NotIntegrableInRing("nonzero z^-1 coefficient integrates to a logarithm");
    }
    const std::size_t n = f.truncation() - 1;
    std::vector<Rat> v(n + 1);
    for (std::size_t k = 2; k <= f.truncation(); ++k) {
        v[k - 1] = -f[k] / Rat(static_cast<long>(k - 1));
    }
    return InvZSeries(std::move(v), n);
}

InvZSeries inverse_linear_series(const Rat& a, std::size_t truncation) {
    std::vector<Rat> v(truncation + 1);
    Rat power = 1;
    for (std::size_t n = 1; n <= truncation; ++n) {
        v[n] = power;
        power *= a;
    }
    return InvZSeries(std::move(v), truncation);
}

InvZSeries log_factor_series(const Rat& a, std::size_t truncation) {
    std::vector<Rat> v(truncation + 1);
    Rat power = 1;
    for (std::size_t n = 1; n <= truncation; ++n) {
        power *= a;
        v[n] = -power / Rat(static_cast<long>(n));
    }
    return InvZSeries(std::move(v), truncation);
}

InvZSeries rational_to_series(const Poly& numerator, const Poly& denominator, std::size_t truncation) {
    if (denominator.is_zero()) {
        throw std::domain_error("rational_to_series: zero denominator");
    }
    if (numerator.degree() >= denominator.degree()) {
        throw std::domain_error("rational_to_series: numerator degree must be below denominator degree");
    }
    const std::size_t d = static_cast<std::size_t>(denominator.degree());
    const Rat inv_lead = denominator.leading().inverse();
    // Matching coefficients of z^(d-n) in Q*f = P:
    //   q_d f_n + sum_{j=1..min(d,n-1)} q_{d-j} f_{n-j} = p_{d-n}.
    std::vector<Rat> f(truncation + 1);
    for (std::size_t n = 1; n <= truncation; ++n) {
        Rat acc = n <= d ? numerator.coefficient(d - n) : Rat(0);
        for (std::size_t j = 1; j <= std::min(d, n - 1); ++j) {
            acc -= denominator.coefficient(d - j) * f[n - j];
        }
        f[n] = acc * inv_lead;
    }
    return InvZSeries(std::move(f), truncation);
}

}  // namespace invz
