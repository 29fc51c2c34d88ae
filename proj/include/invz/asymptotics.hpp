#pragma once

/**
 * @file asymptotics.hpp
 * @brief Shrinking-root limit of the integral and the matching charge picture.
 *
 * Charges 1/Q'(pole) at the poles 0, a_1, ..., a_q give the potential
 * sum_j c_j log(z - pole_j), whose derivative is 1/Q. As the roots shrink
 * towards 0 the potential (equivalently the integral g) tends to
 * -1/(q z^q) uniformly on |z| > R.
 *
 * This is the only floating-point part of the library; exact coefficient
 * tables are still produced alongside every numeric result.
 */

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "invz/integral.hpp"
#include "invz/rat.hpp"
#include "invz/series.hpp"

namespace invz {

struct Charge {
    Rat location;
    Rat magnitude;
};

class ChargeSystem {
public:
    ChargeSystem() = default;
    /// Throws std::domain_error unless the magnitudes sum to zero exactly.
    explicit ChargeSystem(std::vector<Charge> charges);

    const std::vector<Charge>& charges() const { return charges_; }
    Rat total_charge() const;

private:
    std::vector<Charge> charges_;
};

/// Charge 1/Q'(pole) at every pole of 1/Q.
ChargeSystem charge_system_from_roots(const RootConfig& cfg);

/// sum_j magnitude_j * log(z - location_j), principal branch, in double precision.
/// Throws std::domain_error when z sits exactly on a charge.
std::complex<double> potential_numeric(const ChargeSystem& system, std::complex<double> z);

/// sum_n b_n z^-n over the stored window (Horner in 1/z).
std::complex<double> evaluate_series(const InvZSeries& f, std::complex<double> z);

struct ScalingRow {
    Rat t;
    /// b_q..b_N of the integral for the scaled roots.
    std::vector<Rat> coefficients;
    double sup_error = 0.0;
    bool leading_ok = false;      // b_q(t a) == -1/q
    bool scaling_law_ok = false;  // b_{q+l}(t a) == t^l b_{q+l}(a)
    /// sup_error / previous sup_error; unset on the first row.
    double ratio = 0.0;
    bool ratio_in_band = true;
};

struct ScalingReport {
    std::size_t q = 0;
    std::size_t truncation = 0;
    double radius = 0.0;
    std::size_t samples = 0;
    std::vector<ScalingRow> rows;
    bool monotone_decreasing = false;

    bool exact_checks_pass() const;
    /// CSV with header "t,l,exact_b,numeric_sup_error", one line per (t, l).
    std::string csv() const;
};

/// Band for the consecutive sup-error ratio once the first correction term dominates.
inline constexpr double kRatioBandLow = 0.3;
inline constexpr double kRatioBandHigh = 0.7;

/// For each t: exact integral of 1/Q for the roots t*a, then
/// sup |g_t(z) + 1/(q z^q)| over `samples` equispaced points on |z| = radius.
/// Throws std::domain_error if a scale is not positive or radius does not
/// exceed every |t a_j|; std::invalid_argument for samples == 0 or a short truncation.
ScalingReport scaling_limit_table(const RootConfig& cfg, const std::vector<Rat>& scales,
                                  double radius, std::size_t samples, std::size_t truncation);

/// Formats a double with 17 significant digits.
std::string format_double(double x);

}  // namespace invz
