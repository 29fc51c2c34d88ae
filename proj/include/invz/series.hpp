#pragma once

/**
 * @file series.hpp
 * @brief Truncated formal series in 1/z.
 *
 * An InvZSeries with truncation N stores b_0..b_N and stands for
 *
 *     b_0 + b_1 z^-1 + ... + b_N z^-N + O(z^-(N+1)).
 *
 * Every operation returns the largest truncation its inputs justify, so
 * coefficients are never reported beyond what is actually known.
 */

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "invz/poly.hpp"
#include "invz/rat.hpp"

namespace invz {

/// o(f): index of the first nonzero coefficient, or infinity.
class Valuation {
public:
    static Valuation infinity() { return Valuation(); }
    static Valuation finite(std::size_t v) { return Valuation(v); }

    bool is_infinite() const { return !value_; }
    /// Throws std::logic_error on infinity.
    std::size_t value() const;
    std::string str() const { return value_ ? std::to_string(*value_) : "inf"; }

    friend bool operator==(const Valuation&, const Valuation&) = default;

private:
    Valuation() = default;
    explicit Valuation(std::size_t v) : value_(v) {}
    std::optional<std::size_t> value_;
};

/// Raised when an antiderivative would need a log term (a z^0 or z^-1 coefficient).
class NotIntegrableInRing : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class InvZSeries {
public:
    /// Zero series known up to z^-truncation.
    explicit InvZSeries(std::size_t truncation = 0);
    /// Coefficients past the truncation are dropped; missing ones are zero.
    InvZSeries(std::vector<Rat> coefficients, std::size_t truncation);

    static InvZSeries constant(const Rat& c, std::size_t truncation);
    /// c * z^-power.
    static InvZSeries monomial(const Rat& c, std::size_t power, std::size_t truncation);

    std::size_t truncation() const { return coeffs_.size() - 1; }
    /// b_n; throws std::out_of_range beyond the truncation.
    const Rat& operator[](std::size_t n) const;
    const std::vector<Rat>& coefficients() const { return coeffs_; }

    /// Same series known to a smaller order. Throws if n exceeds the truncation.
    InvZSeries truncated(std::size_t n) const;

    std::string str() const;

    InvZSeries operator-() const;
    InvZSeries& operator*=(const Rat& c);

private:
    std::vector<Rat> coeffs_;
};

InvZSeries operator+(const InvZSeries& f, const InvZSeries& g);
InvZSeries operator-(const InvZSeries& f, const InvZSeries& g);
/// Cauchy product. The result truncation is min(N_f + o(g), N_g + o(f)),
/// with a window-zero operand counting as o = N + 1.
InvZSeries operator*(const InvZSeries& f, const InvZSeries& g);
InvZSeries operator*(const Rat& c, InvZSeries f);

/// Coefficient-wise equality on the shared window.
bool agree_on_window(const InvZSeries& f, const InvZSeries& g);

Valuation valuation(const InvZSeries& f);

/// sum b_n z^-n  ->  sum -n b_n z^-(n+1); truncation grows by one.
InvZSeries derivative(const InvZSeries& f);

/// The g with g' = f and b_0 = 0. Requires f_0 = f_1 = 0 (both known);
/// otherwise throws NotIntegrableInRing. Truncation shrinks by one.
InvZSeries antiderivative(const InvZSeries& f);

/// 1/(z - a) = sum_{n>=0} a^n z^-(n+1).
InvZSeries inverse_linear_series(const Rat& a, std::size_t truncation);

/// log(1 - a/z) = -sum_{n>=1} a^n/n z^-n.
InvZSeries log_factor_series(const Rat& a, std::size_t truncation);

/// Expansion of P/Q at infinity for deg P < deg Q, by long division in 1/z.
/// Throws std::domain_error when Q is zero or deg P >= deg Q.
InvZSeries rational_to_series(const Poly& numerator, const Poly& denominator,
                              std::size_t truncation);

}  // namespace invz
