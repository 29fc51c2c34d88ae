#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "invz/rat.hpp"

namespace invz {

/// Dense univariate polynomial over Rat. Coefficient i multiplies z^i.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coefficients);
    Poly(Rat constant);  // NOLINT

    static Poly z() { return Poly(std::vector<Rat>{0, 1}); }
    static Poly monomial(const Rat& c, std::size_t power);

    std::span<const Rat> coefficients() const { return c_; }
    /// Coefficient of z^i, zero beyond the degree.
    Rat coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    const Rat& leading() const;

    Poly monic() const;
    Poly derivative() const;
    Rat eval(const Rat& x) const;

    /// "z^3 - 3*z^2 + 2*z"; accepted back by the expression parser.
    std::string str() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void normalize();

    std::vector<Rat> c_;
};

/// Quotient and remainder of Euclidean division; throws on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& p, const Poly& d);

/// Monic gcd by the Euclidean algorithm. Throws when both inputs are zero.
Poly gcd(const Poly& p, const Poly& q);

/// True iff gcd(p, p') is constant. Throws on the zero polynomial.
bool is_squarefree(const Poly& p);

/// Monic polynomial with the given roots, times z when include_zero_root is set.
Poly poly_from_roots(std::span<const Rat> roots, bool include_zero_root);

}  // namespace invz
