#pragma once

/**
 * @file integral.hpp
 * @brief The formal integral of 1/Q for Q(z) = z (z - a_1) ... (z - a_q).
 *
 * For distinct nonzero a_j the antiderivative g of 1/Q, normalized to
 * vanish at infinity, lives in Q[[1/z]]:
 *
 *     g = sum_{l>=0} b_{q+l} z^-(q+l),   b_q = -1/q,   b_{q+l} = -h_l(a) / (q+l)
 *
 * where h_l is the complete homogeneous symmetric function. Two independent
 * constructions are provided. The coefficient route expands 1/Q from the
 * coefficients of Q alone and integrates term-wise; it is the reference. The
 * partial-fraction route sums 1/Q'(pole) * log(1 - pole/z) over the poles,
 * which only works because the residues sum to zero.
 *
 * The weighted power sums m_k = sum_poles pole^k / Q'(pole) obey
 * m_k = 0 for k < q, m_q = 1 and m_{q+l} = h_l(a).
 */

#include <cstddef>
#include <span>
#include <vector>

#include "invz/poly.hpp"
#include "invz/rat.hpp"
#include "invz/series.hpp"

namespace invz {

/// Raised for root lists that do not describe a valid square-free Q.
class InvalidRoots : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The nonzero roots a_1..a_q; the root 0 is implicit.
class RootConfig {
public:
    /// Throws InvalidRoots when the list is empty, contains 0 or repeats a value.
    explicit RootConfig(std::vector<Rat> roots);

    std::span<const Rat> roots() const { return roots_; }
    std::size_t q() const { return roots_.size(); }
    /// Poles of 1/Q: 0 first, then the roots in input order.
    std::vector<Rat> poles() const;
    /// z (z - a_1) ... (z - a_q).
    const Poly& denominator() const { return q_poly_; }
    const Poly& denominator_derivative() const { return dq_poly_; }

    /// Roots multiplied by a nonzero t.
    RootConfig scaled(const Rat& t) const;

private:
    std::vector<Rat> roots_;
    Poly q_poly_;
    Poly dq_poly_;
};

struct PartialFractionTerm {
    Rat pole;
    Rat coefficient;
};

struct PartialFractions {
    std::vector<PartialFractionTerm> terms;

    /// sum_j c_j prod_{k != j} (z - pole_k), which equals P for a correct decomposition.
    Poly reconstruct() const;
    Rat coefficient_sum() const;
};

/// P/Q = sum c_j / (z - pole_j) with c_j = P(pole_j) / Q'(pole_j).
/// Throws std::domain_error when deg P > q.
PartialFractions partial_fractions(const Poly& numerator, const RootConfig& cfg);

/// m_k: includes the pole at 0 only for k = 0.
Rat moment(const RootConfig& cfg, std::size_t k);

enum class LemmaRule { Vanishing, Unit, CompleteHomogeneous };

struct LemmaRow {
    std::size_t k = 0;
    LemmaRule rule = LemmaRule::Vanishing;
    Rat lhs;  // m_k
    Rat rhs;  // 0, 1 or h_{k-q}
    bool pass = false;
};

struct LemmaReport {
    std::vector<LemmaRow> rows;
    bool all_pass() const;
};

/// Checks m_k against its predicted value for 0 <= k <= max_k.
/// Throws std::invalid_argument when max_k < q.
LemmaReport verify_lemma(const RootConfig& cfg, std::size_t max_k);

struct IntegralResult {
    InvZSeries series;
    Valuation valuation = Valuation::infinity();
    /// b_q, b_{q+1}, ..., b_N from the closed form.
    std::vector<Rat> closed_form;
};

/// Residue route. Throws std::logic_error if the residues fail to sum to zero.
/// Throws std::invalid_argument when truncation < q + 1.
IntegralResult integrate_via_pfd(const RootConfig& cfg, std::size_t truncation);

/// Coefficient route; never evaluates anything at an individual root.
/// Throws std::invalid_argument when truncation < q + 1.
IntegralResult integrate_via_coefficients(const RootConfig& cfg, std::size_t truncation);

/// b_{q+l}: -1/q for l = 0, -h_l(a)/(q+l) otherwise.
Rat closed_form_coefficient(const RootConfig& cfg, std::size_t l);

/// The whole table b_q..b_{q+count-1}, sharing one symmetric-function pass.
std::vector<Rat> closed_form_coefficients(const RootConfig& cfg, std::size_t count);

struct ValuationReport {
    std::size_t expected = 0;
    Valuation via_pfd = Valuation::infinity();
    Valuation via_coefficients = Valuation::infinity();
    Rat leading;           // b_q from the reference series
    Rat expected_leading;  // -1/q
    bool paths_agree = false;
    bool pass = false;
};

ValuationReport theorem_valuation_check(const RootConfig& cfg, std::size_t truncation);

}  // namespace invz
