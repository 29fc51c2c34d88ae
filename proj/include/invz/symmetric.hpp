#pragma once

/**
 * @file symmetric.hpp
 * @brief Symmetric-function evaluation and Vandermonde determinants.
 *
 * Elementary values e_k and complete homogeneous values h_l (written S_l
 * elsewhere) evaluated at a finite set of rationals, tied together by
 *
 *     sum_{i=0..min(l,q)} (-1)^i e_i h_{l-i} = 0   for l >= 1.
 *
 * The generalized Vandermonde determinant uses rows
 * (1, x_i, ..., x_i^{n-2}, x_i^{n-1+l}) and factors as V_n * h_l.
 */

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "invz/rat.hpp"

namespace invz {

using RatMatrix = std::vector<std::vector<Rat>>;

struct SymTable {
    std::size_t q = 0;
    std::vector<Rat> e;  // e_0..e_q
    std::vector<Rat> h;  // h_0..h_L
    std::size_t depth() const { return h.empty() ? 0 : h.size() - 1; }
    /// Checks e_0 = h_0 = 1 and the e/h relation for every 1 <= l <= depth().
    bool consistent() const;
};

/// e_0..e_q of the given values.
std::vector<Rat> elementary_from_roots(std::span<const Rat> roots);

/// h_l by the e/h recurrence.
Rat complete_homogeneous(std::span<const Rat> roots, std::size_t l);

/// e and h_0..h_depth in one pass.
SymTable sym_table(std::span<const Rat> roots, std::size_t depth);

/// Default cap on the number of multisets enumerated by the direct route.
inline constexpr std::uint64_t kEnumerationBudget = 1'000'000;

/// h_l by enumerating weakly increasing index tuples. Throws std::length_error
/// when C(n+l-1, l) exceeds the budget.
Rat complete_homogeneous_direct(std::span<const Rat> roots, std::size_t l,
                                std::uint64_t budget = kEnumerationBudget);

/// prod_{i<j} (x_j - x_i).
Rat vandermonde_product(std::span<const Rat> points);

/// Row i is x_i^0..x_i^{n-2}, x_i^{n-1+l}; l = 0 is the ordinary Vandermonde matrix.
RatMatrix vandermonde_matrix(std::span<const Rat> points, std::size_t l = 0);

/// Exact determinant: cofactor expansion up to 4x4, fraction-free elimination above.
/// Throws std::invalid_argument on a non-square matrix.
Rat determinant_exact(const RatMatrix& m);

Rat determinant_cofactor(const RatMatrix& m);
Rat determinant_bareiss(const RatMatrix& m);

/// det of vandermonde_matrix(points, l). Throws on an empty point set.
Rat generalized_vandermonde(std::span<const Rat> points, std::size_t l);

}  // namespace invz
