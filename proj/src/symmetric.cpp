#include "invz/symmetric.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace invz {

namespace {

void require_square(const RatMatrix& m) {
    for (const auto& row : m) {
        if (row.size() != m.size()) {
            throw std::invalid_argument("determinant of a non-square matrix");
        }
    }
}

// Number of multisets of size l drawn from n values, saturating above cap.
std::uint64_t multiset_count(std::size_t n, std::size_t l, std::uint64_t cap) {
    if (n == 0) {
        return l == 0 ? 1 : 0;
    }
    // C(n-1+l, l) built incrementally; each prefix is itself an integer.
    std::uint64_t c = 1;
    for (std::size_t i = 1; i <= l; ++i) {
        const std::uint64_t mul = n - 1 + i;
        if (c > std::numeric_limits<std::uint64_t>::max() / mul) {
            return cap + 1;
        }
        c = c * mul / i;
        if (c > cap) {
            return cap + 1;
        }
    }
    return c;
}

}  // namespace

bool SymTable::consistent() const {
    if (e.empty() || h.empty() || !e[0].is_one() || !h[0].is_one()) {
        return false;
    }
    for (std::size_t l = 1; l < h.size(); ++l) {
        Rat sum;
        for (std::size_t i = 0; i <= std::min(l, q); ++i) {
            const Rat term = e[i] * h[l - i];
            sum += (i % 2 == 0) ? term : -term;
        }
        if (!sum.is_zero()) {
            return false;
        }
    }
    return true;
}

std::vector<Rat> elementary_from_roots(std::span<const Rat> roots) {
    std::vector<Rat> e(roots.size() + 1);
    e[0] = 1;
    for (std::size_t j = 0; j < roots.size(); ++j) {
        for (std::size_t k = j + 1; k >= 1; --k) {
            e[k] += e[k - 1] * roots[j];
        }
    }
    return e;
}

SymTable sym_table(std::span<const Rat> roots, std::size_t depth) {
    SymTable t;
    t.q = roots.size();
    t.e = elementary_from_roots(roots);
    t.h.resize(depth + 1);
    t.h[0] = 1;
    for (std::size_t l = 1; l <= depth; ++l) {
        Rat acc;
        for (std::size_t i = 1; i <= std::min(l, t.q); ++i) {
            const Rat term = t.e[i] * t.h[l - i];
            acc += (i % 2 == 1) ? term : -term;
        }
        t.h[l] = std::move(acc);
    }
    return t;
}

Rat complete_homogeneous(std::span<const Rat> roots, std::size_t l) {
    return sym_table(roots, l).h[l];
}

Rat complete_homogeneous_direct(std::span<const Rat> roots, std::size_t l, std::uint64_t budget) {
    const std::size_t n = roots.size();
    if (multiset_count(n, l, budget) > budget) {
        throw std::length_error("complete_homogeneous_direct: enumeration budget exceeded");
    }
    if (l == 0) {
        return 1;
    }
    if (n == 0) {
        return 0;
    }
    // Walk every tuple 0 <= i_1 <= ... <= i_l < n in lexicographic order.
    std::vector<std::size_t> idx(l, 0);
    Rat total;
    while (true) {
        Rat term = 1;
        for (std::size_t i : idx) {
            term *= roots[i];
        }
        total += term;
        std::size_t pos = l;
        while (pos > 0 && idx[pos - 1] == n - 1) {
            --pos;
        }
        if (pos == 0) {
            break;
        }
        const std::size_t next = idx[pos - 1] + 1;
        std::fill(idx.begin() + static_cast<std::ptrdiff_t>(pos - 1), idx.end(), next);
    }
    return total;
}

Rat vandermonde_product(std::span<const Rat> points) {
    Rat v = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            v *= points[j] - points[i];
        }
    }
    return v;
}

RatMatrix vandermonde_matrix(std::span<const Rat> points, std::size_t l) {
    const std::size_t n = points.size();
    RatMatrix m(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t power = (k + 1 == n) ? k + l : k;
            m[i][k] = points[i].pow(static_cast<unsigned>(power));
        }
    }
    return m;
}

Rat determinant_cofactor(const RatMatrix& m) {
    require_square(m);
    const std::size_t n = m.size();
    if (n == 0) {
        return 1;
    }
    if (n == 1) {
        return m[0][0];
    }
    if (n == 2) {
        return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    }
    // Laplace expansion along the first row.
    Rat det;
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col].is_zero()) {
            continue;
        }
        RatMatrix minor(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            minor[r - 1].reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c) {
                if (c != col) {
                    minor[r - 1].push_back(m[r][c]);
                }
            }
        }
        const Rat term = m[0][col] * determinant_cofactor(minor);
        det += (col % 2 == 0) ? term : -term;
    }
    return det;
}

Rat determinant_bareiss(const RatMatrix& m) {
    require_square(m);
    const std::size_t n = m.size();
    if (n == 0) {
        return 1;
    }
    RatMatrix a = m;
    Rat prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].is_zero()) {
                ++swap_row;
            }
            if (swap_row == n) {
                return 0;
            }
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    const Rat& det = a[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

Rat determinant_exact(const RatMatrix& m) {
    require_square(m);
    return m.size() <= 4 ? determinant_cofactor(m) : determinant_bareiss(m);
}

Rat generalized_vandermonde(std::span<const Rat> points, std::size_t l) {
    if (points.empty()) {
        throw std::invalid_argument("generalized_vandermonde needs at least one point");
    }
    return determinant_exact(vandermonde_matrix(points, l));
}

}  // namespace invz
