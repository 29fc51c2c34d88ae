#include "invz/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace invz {

ChargeSystem::ChargeSystem(std::vector<Charge> charges) : charges_(std::move(charges)) {
    if (!total_charge().is_zero()) {
        throw std::domain_error("charge system must have zero total charge");
    }
}

Rat ChargeSystem::total_charge() const {
    Rat total;
    for (const auto& c : charges_) {
        total += c.magnitude;
    }
    return total;
}

ChargeSystem charge_system_from_roots(const RootConfig& cfg) {
    const PartialFractions pf = partial_fractions(Poly(Rat(1)), cfg);
    std::vector<Charge> charges;
    charges.reserve(pf.terms.size());
    for (const auto& t : pf.terms) {
        charges.push_back({t.pole, t.coefficient});
    }
    return ChargeSystem(std::move(charges));
}

std::complex<double> potential_numeric(const ChargeSystem& system, std::complex<double> z) {
    std::complex<double> sum{0.0, 0.0};
    for (const auto& c : system.charges()) {
        const std::complex<double> d = z - c.location.to_double();
        if (d == std::complex<double>{0.0, 0.0}) {
            throw std::domain_error("potential evaluated at a charge location");
        }
        sum += c.magnitude.to_double() * std::log(d);
    }
    return sum;
}

std::complex<double> evaluate_series(const InvZSeries& f, std::complex<double> z) {
    const std::complex<double> w = 1.0 / z;
    std::complex<double> acc{0.0, 0.0};
    const auto& c = f.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * w + it->to_double();
    }
    return acc;
}

bool ScalingReport::exact_checks_pass() const {
    return std::all_of(rows.begin(), rows.end(),
                       [](const ScalingRow& r) { return r.leading_ok && r.scaling_law_ok; });
}

std::string ScalingReport::csv() const {
    std::ostringstream os;
    os << "t,l,exact_b,numeric_sup_error\n";
    for (const auto& row : rows) {
        for (std::size_t l = 0; l < row.coefficients.size(); ++l) {
            os << row.t.str() << ',' << l << ',' << row.coefficients[l].str() << ','
               << format_double(row.sup_error) << '\n';
        }
    }
    return os.str();
}

ScalingReport scaling_limit_table(const RootConfig& cfg, const std::vector<Rat>& scales,
                                  double radius, std::size_t samples, std::size_t truncation) {
    if (samples == 0) {
        throw std::invalid_argument("scaling_limit_table: need at least one sample point");
    }
    double max_root = 0.0;
    for (const Rat& t : scales) {
        if (t.sign() <= 0) {
            throw std::domain_error("scaling_limit_table: scales must be positive");
        }
        for (const Rat& a : cfg.roots()) {
            max_root = std::max(max_root, (t * a).abs().to_double());
        }
    }
    if (!(radius > max_root)) {
        throw std::domain_error("scaling_limit_table: radius must exceed every scaled root modulus");
    }

    const std::size_t q = cfg.q();
    const IntegralResult base = integrate_via_coefficients(cfg, truncation);

    ScalingReport report;
    report.q = q;
    report.truncation = truncation;
    report.radius = radius;
    report.samples = samples;

    for (const Rat& t : scales) {
        const RootConfig scaled = cfg.scaled(t);
        const IntegralResult g = integrate_via_coefficients(scaled, truncation);

        ScalingRow row;
        row.t = t;
        row.coefficients.assign(g.series.coefficients().begin() + static_cast<std::ptrdiff_t>(q),
                                g.series.coefficients().end());
        row.leading_ok = row.coefficients.front() == -Rat(static_cast<long>(q)).inverse();
        row.scaling_law_ok = true;
        Rat tl = 1;
        for (std::size_t l = 0; l < row.coefficients.size(); ++l) {
            if (row.coefficients[l] != tl * base.series[q + l]) {
                row.scaling_law_ok = false;
            }
            tl *= t;
        }

        double sup = 0.0;
        for (std::size_t s = 0; s < samples; ++s) {
            const double theta = 2.0 * std::numbers::pi * static_cast<double>(s) / static_cast<double>(samples);
            const std::complex<double> z = std::polar(radius, theta);
            const std::complex<double> limit = -1.0 / (static_cast<double>(q) * std::pow(z, static_cast<int>(q)));
            sup = std::max(sup, std::abs(evaluate_series(g.series, z) - limit));
        }
        row.sup_error = sup;
        if (!report.rows.empty()) {
            const double prev = report.rows.back().sup_error;
            row.ratio = prev > 0.0 ? sup / prev : 0.0;
            row.ratio_in_band = row.ratio >= kRatioBandLow && row.ratio <= kRatioBandHigh;
        }
        report.rows.push_back(std::move(row));
    }

    // Ordered by decreasing t, errors must strictly decrease.
    std::vector<const ScalingRow*> order;
    for (const auto& r : report.rows) {
        order.push_back(&r);
    }
    std::sort(order.begin(), order.end(), [](const ScalingRow* a, const ScalingRow* b) { return a->t > b->t; });
    report.monotone_decreasing = true;
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (order[i]->t == order[i - 1]->t || !(order[i]->sup_error < order[i - 1]->sup_error)) {
            report.monotone_decreasing = false;
        }
    }
    return report;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace invz
