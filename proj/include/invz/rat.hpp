#pragma once

/**
 * @file rat.hpp
 * @brief Exact rational numbers, the constant field of every computation.
 *
 * A Rat is always stored in lowest terms with a positive denominator, and
 * zero is 0/1. Storage is a GMP rational which canonicalizes after every
 * operation; the wrapper keeps that invariant out of reach of callers.
 */

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace invz {

class Rat {
public:
    Rat() = default;
    Rat(long value) : value_(value) {}  // NOLINT: integers promote implicitly
    Rat(long num, long den);
    Rat(const mpz_class& num, const mpz_class& den);

    static Rat from_mpq(mpq_class q);

    mpz_class num() const { return value_.get_num(); }
    mpz_class den() const { return value_.get_den(); }
    const mpq_class& mpq() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rat inverse() const;
    Rat abs() const { return from_mpq(::abs(value_)); }
    Rat pow(unsigned exponent) const;
    double to_double() const { return value_.get_d(); }

    /// Canonical text "p/q"; the denominator is always printed.
    std::string str() const;
    /// Short text: "p" for integers, "p/q" otherwise.
    std::string short_str() const;

    Rat operator-() const { return from_mpq(-value_); }
    Rat& operator+=(const Rat& rhs);
    Rat& operator-=(const Rat& rhs);
    Rat& operator*=(const Rat& rhs);
    Rat& operator/=(const Rat& rhs);

    friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
    friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
    friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
    friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// True when the stored form is reduced with a positive denominator.
bool is_canonical(const Rat& r);

/// Operations a constant field must provide for the polynomial and series code.
template <class F>
concept ConstantField = std::regular<F> && requires(const F a, const F b) {
    { a + b } -> std::same_as<F>;
    { a * b } -> std::same_as<F>;
    { -a } -> std::same_as<F>;
    { a.inverse() } -> std::same_as<F>;
    { a.is_zero() } -> std::same_as<bool>;
    F(0);
    F(1);
};

static_assert(ConstantField<Rat>);

}  // namespace invz
