#include "invz/integral.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "invz/symmetric.hpp"

namespace invz {

namespace {

void require_truncation(const RootConfig& cfg, std::size_t truncation) {
    if (truncation < cfg.q() + 1) {
        throw std::invalid_argument("truncation must be at least q + 1 (q = " +
                                    std::to_string(cfg.q()) + ")");
    }
}

IntegralResult finish(const RootConfig& cfg, InvZSeries series) {
    const std::size_t count = series.truncation() - cfg.q() + 1;
    IntegralResult r{std::move(series), Valuation::infinity(), closed_form_coefficients(cfg, count)};
    r.valuation = valuation(r.series);
    return r;
}

}  // namespace

RootConfig::RootConfig(std::vector<Rat> roots) : roots_(std::move(roots)) {
    if (roots_.empty()) {
        throw InvalidRoots("at least one nonzero root is required (q >= 1)");
    }
    if (std::any_of(roots_.begin(), roots_.end(), [](const Rat& a) { return a.is_zero(); })) {
        throw InvalidRoots("roots must be nonzero; the root 0 is implicit");
    }
    std::vector<Rat> sorted = roots_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InvalidRoots("roots must be pairwise distinct");
    }
    q_poly_ = poly_from_roots(roots_, true);
    dq_poly_ = q_poly_.derivative();
}

std::vector<Rat> RootConfig::poles() const {
    std::vector<Rat> p;
    p.reserve(roots_.size() + 1);
    p.emplace_back(0);
    p.insert(p.end(), roots_.begin(), roots_.end());
    return p;
}

RootConfig RootConfig::scaled(const Rat& t) const {
    std::vector<Rat> r = roots_;
    for (auto& a : r) {
        a *= t;
    }
    return RootConfig(std::move(r));
}

Poly PartialFractions::reconstruct() const {
    Poly total;
    for (std::size_t j = 0; j < terms.size(); ++j) {
        Poly prod(terms[j].coefficient);
        for (std::size_t k = 0; k < terms.size(); ++k) {
            if (k != j) {
                prod = prod * Poly(std::vector<Rat>{-terms[k].pole, 1});
            }
        }
        total += prod;
    }
    return total;
}

Rat PartialFractions::coefficient_sum() const {
    Rat s;
    for (const auto& t : terms) {
        s += t.coefficient;
    }
    return s;
}

PartialFractions partial_fractions(const Poly& numerator, const RootConfig& cfg) {
    if (numerator.degree() >= cfg.denominator().degree()) {
        throw std::domain_error("partial_fractions: numerator degree must be below q + 1");
    }
    PartialFractions pf;
    for (const Rat& pole : cfg.poles()) {
        // Q' does not vanish at a simple root.
        pf.terms.push_back({pole, numerator.eval(pole) / cfg.denominator_derivative().eval(pole)});
    }
    return pf;
}

Rat moment(const RootConfig& cfg, std::size_t k) {
    const Poly& dq = cfg.denominator_derivative();
    Rat m;
    if (k == 0) {
        m += dq.eval(0).inverse();
    }
    for (const Rat& a : cfg.roots()) {
        m += a.pow(static_cast<unsigned>(k)) / dq.eval(a);
    }
    return m;
}

bool LemmaReport::all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const LemmaRow& r) { return r.pass; });
}

LemmaReport verify_lemma(const RootConfig& cfg, std::size_t max_k) {
    const std::size_t q = cfg.q();
    if (max_k < q) {
        throw std::invalid_argument("verify_lemma: max_k must be at least q");
    }
    const SymTable table = sym_table(cfg.roots(), max_k - q);
    LemmaReport report;
    for (std::size_t k = 0; k <= max_k; ++k) {
        LemmaRow row;
        row.k = k;
        row.lhs = moment(cfg, k);
        if (k < q) {
            row.rule = LemmaRule::Vanishing;
            row.rhs = 0;
        } else if (k == q) {
            row.rule = LemmaRule::Unit;
            row.rhs = 1;
        } else {
            row.rule = LemmaRule::CompleteHomogeneous;
            row.rhs = table.h[k - q];
        }
        row.pass = row.lhs == row.rhs;
        report.rows.push_back(std::move(row));
    }
    return report;
}

IntegralResult integrate_via_pfd(const RootConfig& cfg, std::size_t truncation) {
    require_truncation(cfg, truncation);
    const PartialFractions pf = partial_fractions(Poly(Rat(1)), cfg);
    // log(z - a) = log z + log(1 - a/z); the log z parts cancel only if the residues sum to 0.
    if (!pf.coefficient_sum().is_zero()) {
        throw std::logic_error("residues of 1/Q do not sum to zero");
    }
    InvZSeries g(truncation);
    for (const auto& term : pf.terms) {
        if (term.pole.is_zero()) {
            continue;  // log(1 - 0/z) = 0
        }
        g = g + term.coefficient * log_factor_series(term.pole, truncation);
    }
    return finish(cfg, std::move(g));
}

IntegralResult integrate_via_coefficients(const RootConfig& cfg, std::size_t truncation) {
    require_truncation(cfg, truncation);
    const InvZSeries f = rational_to_series(Poly(Rat(1)), cfg.denominator(), truncation + 1);
    return finish(cfg, antiderivative(f));
}

std::vector<Rat> closed_form_coefficients(const RootConfig& cfg, std::size_t count) {
    std::vector<Rat> out;
    if (count == 0) {
        return out;
    }
    const SymTable table = sym_table(cfg.roots(), count - 1);
    const long q = static_cast<long>(cfg.q());
    out.reserve(count);
    for (std::size_t l = 0; l < count; ++l) {
        out.push_back(-table.h[l] / Rat(q + static_cast<long>(l)));
    }
    return out;
}

Rat closed_form_coefficient(const RootConfig& cfg, std::size_t l) {
    return closed_form_coefficients(cfg, l + 1).back();
}

ValuationReport theorem_valuation_check(const RootConfig& cfg, std::size_t truncation) {
    const IntegralResult reference = integrate_via_coefficients(cfg, truncation);
    const IntegralResult check = integrate_via_pfd(cfg, truncation);
    ValuationReport r;
    r.expected = cfg.q();
    r.via_coefficients = reference.valuation;
    r.via_pfd = check.valuation;
    r.leading = reference.series[cfg.q()];
    r.expected_leading = closed_form_coefficient(cfg, 0);
    r.paths_agree = agree_on_window(reference.series, check.series);
    r.pass = r.paths_agree && r.via_coefficients == Valuation::finite(r.expected) &&
             r.via_pfd == Valuation::finite(r.expected) && r.leading == r.expected_leading;
    return r;
}

}  // namespace invz
