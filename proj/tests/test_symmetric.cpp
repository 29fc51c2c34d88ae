#include <doctest.h>

#include <stdexcept>

#include "invz/poly.hpp"
#include "invz/symmetric.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using invz::Rat;

TEST_CASE("elementary_from_roots") {
    const std::vector<Rat> r{1, 2};
    CHECK(invz::elementary_from_roots(r) == std::vector<Rat>{1, 3, 2});
    const std::vector<Rat> a{Rat(-5, 7)};
    CHECK(invz::elementary_from_roots(a) == std::vector<Rat>{1, Rat(-5, 7)});
    const std::vector<Rat> zeros(4, Rat(0));
    CHECK(invz::elementary_from_roots(zeros) == std::vector<Rat>{1, 0, 0, 0, 0});
}

TEST_CASE("elementary values match the signed coefficients of the monic polynomial") {
    invz::testing::Gen gen(3);
    for (int i = 0; i < 40; ++i) {
        const auto roots = gen.distinct_rationals(gen.index(1, 7), 30, true);
        const auto e = invz::elementary_from_roots(roots);
        const invz::Poly p = invz::poly_from_roots(roots, false);
        const std::size_t q = roots.size();
        for (std::size_t k = 0; k <= q; ++k) {
            const Rat signed_e = k % 2 == 0 ? e[k] : -e[k];
            CHECK(p.coefficient(q - k) == signed_e);
        }
    }
}

TEST_CASE("complete_homogeneous") {
    const std::vector<Rat> r{1, 2};
    CHECK(invz::complete_homogeneous(r, 1) == Rat(3));
    CHECK(invz::complete_homogeneous(r, 2) == Rat(7));
    CHECK(invz::complete_homogeneous(r, 0) == Rat(1));
    CHECK(invz::complete_homogeneous({}, 0) == Rat(1));
    CHECK(invz::complete_homogeneous({}, 3) == Rat(0));
}

TEST_CASE("complete_homogeneous_direct") {
    const std::vector<Rat> r{1, 2};
    CHECK(invz::complete_homogeneous_direct(r, 3) == Rat(15));
    const std::vector<Rat> one{1};
    CHECK(invz::complete_homogeneous_direct(one, 5) == Rat(1));
    CHECK(invz::complete_homogeneous_direct({}, 2) == Rat(0));
    CHECK(invz::complete_homogeneous_direct({}, 0) == Rat(1));

    const std::vector<Rat> many(20, Rat(1));
    // C(20 + 10 - 1, 10) = 20030010 multisets
    CHECK_THROWS_AS(invz::complete_homogeneous_direct(many, 10), std::length_error);
    CHECK(invz::complete_homogeneous_direct(many, 2) == Rat(210));
}

TEST_CASE("sym_table satisfies the e/h relation") {
    invz::testing::Gen gen(17);
    for (int i = 0; i < 30; ++i) {
        const auto roots = gen.distinct_rationals(gen.index(1, 8), 100, true);
        const invz::SymTable t = invz::sym_table(roots, 12);
        CHECK(t.consistent());
        CHECK(t.depth() == 12);
    }
    invz::SymTable broken = invz::sym_table(std::vector<Rat>{1, 2}, 4);
    broken.h[3] += Rat(1);
    CHECK_FALSE(broken.consistent());
}

TEST_CASE("recurrence, direct enumeration and the exponent-vector oracle agree") {
    invz::testing::Gen gen(5);
    for (int i = 0; i < 40; ++i) {
        const auto roots = gen.distinct_rationals(gen.index(0, 5), 50, true);
        for (std::size_t l = 0; l <= 8; ++l) {
            const Rat h = invz::complete_homogeneous(roots, l);
            CHECK(h == invz::complete_homogeneous_direct(roots, l));
            CHECK(h == invz::testing::oracle_complete_homogeneous(roots, l));
        }
    }
}

TEST_CASE("complete_homogeneous is symmetric") {
    invz::testing::Gen gen(8);
    for (int i = 0; i < 30; ++i) {
        auto roots = gen.distinct_rationals(gen.index(1, 7), 40, true);
        const Rat h = invz::complete_homogeneous(roots, 6);
        gen.shuffle(roots);
        CHECK(invz::complete_homogeneous(roots, 6) == h);
    }
}

TEST_CASE("vandermonde_product") {
    CHECK(invz::vandermonde_product(std::vector<Rat>{0, 1, 2}) == Rat(2));
    CHECK(invz::vandermonde_product(std::vector<Rat>{Rat(3, 4), Rat(3, 4)}) == Rat(0));
    CHECK(invz::vandermonde_product(std::vector<Rat>{9}) == Rat(1));
}

TEST_CASE("determinant_exact") {
    const invz::RatMatrix id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(invz::determinant_exact(id) == Rat(1));
    const invz::RatMatrix swapped{{0, 1}, {1, 0}};
    CHECK(invz::determinant_exact(swapped) == Rat(-1));
    CHECK(invz::determinant_exact(invz::vandermonde_matrix(std::vector<Rat>{0, 1, 2})) == Rat(2));
    const invz::RatMatrix ragged{{1, 2}, {3}};
    CHECK_THROWS_AS(invz::determinant_exact(ragged), std::invalid_argument);
    const invz::RatMatrix wide{{1, 2, 3}, {4, 5, 6}};
    CHECK_THROWS_AS(invz::determinant_exact(wide), std::invalid_argument);
    // Zero leading pivot forces a row swap in the elimination path.
    const invz::RatMatrix pivot{{0, 1, 2, 3, 4}, {1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}};
    CHECK(invz::determinant_bareiss(pivot) == Rat(-1));
    CHECK(invz::determinant_cofactor(pivot) == Rat(-1));
}

TEST_CASE("both determinant paths match the permutation-sum oracle") {
    invz::testing::Gen gen(41);
    for (int i = 0; i < 60; ++i) {
        const std::size_t n = gen.index(1, 6);
        invz::RatMatrix m(n, std::vector<Rat>(n));
        for (auto& row : m) {
            for (auto& x : row) {
                x = gen.integer(0, 3) == 0 ? Rat(0) : gen.rational(12);
            }
        }
        const Rat expected = invz::testing::oracle_determinant(m);
        CHECK(invz::determinant_cofactor(m) == expected);
        CHECK(invz::determinant_bareiss(m) == expected);
        CHECK(invz::determinant_exact(m) == expected);
    }
}

TEST_CASE("generalized_vandermonde") {
    CHECK(invz::generalized_vandermonde(std::vector<Rat>{1, 2}, 1) == Rat(3));
    CHECK(invz::generalized_vandermonde(std::vector<Rat>{1, 2}, 2) == Rat(7));
    CHECK(invz::generalized_vandermonde(std::vector<Rat>{Rat(1, 3), 5, Rat(1, 3)}, 2) == Rat(0));
    CHECK(invz::generalized_vandermonde(std::vector<Rat>{Rat(2, 3)}, 3) == Rat(8, 27));
    CHECK_THROWS_AS(invz::generalized_vandermonde({}, 1), std::invalid_argument);
}

TEST_CASE("Vandermonde identities on random point sets") {
    invz::testing::Gen gen(1234);
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = gen.index(1, 6);
        const auto x = gen.distinct_rationals(n, 25, true);
        const Rat v = invz::vandermonde_product(x);
        CHECK(invz::determinant_exact(invz::vandermonde_matrix(x)) == v);

        // V_n = (-1)^(n-1) prod_{i<n} (x_i - x_n) V_{n-1}
        Rat step = (n - 1) % 2 == 0 ? Rat(1) : Rat(-1);
        for (std::size_t k = 0; k + 1 < n; ++k) {
            step *= x[k] - x[n - 1];
        }
        CHECK(v == step * invz::vandermonde_product(std::span(x).first(n - 1)));

        for (std::size_t l = 1; l <= 6; ++l) {
            CHECK(invz::generalized_vandermonde(x, l) == v * invz::complete_homogeneous(x, l));
        }
    }
}
