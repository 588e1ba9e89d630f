#include <complex>
#include <random>

#include "cgw/cyclotomic.hpp"
#include "doctest.h"

using namespace cgw;

TEST_CASE("cyclotomic polynomials by divide-out recursion") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<long long>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<long long>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
}

TEST_CASE("multiplication reduces exponents mod k") {
    // zeta_3 * zeta_3^2 = 1
    CHECK(CycElt::root(3, 1) * CycElt::root(3, 2) == CycElt::root(3, 0));

    // (1 + zeta_4)(1 - zeta_4) = 2, using zeta_4^2 = -1
    CycElt one = CycElt::root(4, 0);
    CycElt i = CycElt::root(4, 1);
    CycElt two = CycElt::from_coeffs(4, {2, 0, 0, 0});
    CHECK((one + i) * (one - i) == two);

    // zeta_6 * zeta_6 = zeta_6^2
    CHECK(CycElt::root(6, 1) * CycElt::root(6, 1) == CycElt::from_coeffs(6, {0, 0, 1, 0, 0, 0}));

    CHECK_THROWS_AS(CycElt::root(3, 1) * CycElt::root(4, 1), std::invalid_argument);
}

TEST_CASE("conjugation") {
    CHECK(CycElt::root(4, 1).conj() == CycElt::root(4, 3));
    CycElt a = CycElt::root(3, 0) + CycElt::root(3, 1);  // 1 + zeta_3
    CHECK(a.conj() == CycElt::root(3, 0) + CycElt::root(3, 2));
    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        int k = 1 + static_cast<int>(rng() % 12);
        std::vector<long long> c(k);
        for (auto& x : c) x = static_cast<long long>(rng() % 11) - 5;
        CycElt e = CycElt::from_coeffs(k, c);
        CHECK(e.conj().conj() == e);
    }
}

TEST_CASE("is_zero detects vanishing sums") {
    CHECK(CycElt::from_coeffs(3, {1, 1, 1}).is_zero());
    CHECK(CycElt::from_coeffs(4, {1, 0, 1, 0}).is_zero());
    CHECK_FALSE(CycElt::from_coeffs(5, {2, 1, 1, 1, 1}).is_zero());
    CHECK(CycElt::from_coeffs(6, {0, 1, 0, 0, 1, 0}).is_zero());  // zeta_6 + zeta_6^4 = 0
}

TEST_CASE("prime order zero sums have constant coefficients") {
    for (int k : {2, 3, 5, 7}) {
        long long total = 1;
        for (int i = 0; i < k; ++i) total *= 6;
        std::vector<long long> c(k, 0);
        for (long long code = 0; code < total; ++code) {
            long long x = code;
            bool constant = true;
            for (int i = 0; i < k; ++i) {
                c[i] = x % 6;
                x /= 6;
                if (c[i] != c[0]) constant = false;
            }
            CHECK(CycElt::from_coeffs(k, c).is_zero() == constant);
        }
    }
}

TEST_CASE("float cross-check on random elements") {
    std::mt19937 rng(123456);
    int zeros_seen = 0;
    for (int t = 0; t < 1000; ++t) {
        int k = 1 + static_cast<int>(rng() % 30);
        std::vector<long long> ca(k), cb(k);
        for (auto& x : ca) x = static_cast<long long>(rng() % 21) - 10;
        cb = ca;
        if (t % 3 == 0) {
            // Same element, different representative: add a multiple of Phi_k.
            const auto& phi = cyclotomic_polynomial(k);
            long long mult = static_cast<long long>(rng() % 5) - 2;
            int shift = static_cast<int>(rng() % std::max<std::size_t>(1, k - phi.size() + 1));
            for (std::size_t i = 0; i < phi.size(); ++i) cb[i + shift] += mult * phi[i];
        } else {
            for (auto& x : cb) x = static_cast<long long>(rng() % 21) - 10;
        }
        CycElt a = CycElt::from_coeffs(k, ca), b = CycElt::from_coeffs(k, cb);
        bool exact = (a - b).is_zero();
        long double approx = std::abs((a - b).eval());
        CHECK(exact == (approx < 1e-9L));
        if (exact) ++zeros_seen;
    }
    CHECK(zeros_seen > 100);  // the engineered representatives must actually exercise the zero branch
}

TEST_CASE("ring laws on random triples") {
    std::mt19937 rng(99);
    for (int t = 0; t < 200; ++t) {
        int k = 1 + static_cast<int>(rng() % 12);
        auto rnd = [&] {
            std::vector<long long> c(k);
            for (auto& x : c) x = static_cast<long long>(rng() % 7) - 3;
            return CycElt::from_coeffs(k, c);
        };
        CycElt a = rnd(), b = rnd(), c = rnd();
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * b).conj() == a.conj() * b.conj());
    }
}

TEST_CASE("lam_leung_feasible") {
    CHECK(lam_leung_feasible(7, 6));    // 7 = 2 + 2 + 3
    CHECK_FALSE(lam_leung_feasible(1, 5));
    CHECK_FALSE(lam_leung_feasible(4, 15));  // no 3a + 5b = 4
    CHECK(lam_leung_feasible(0, 1));
    CHECK_FALSE(lam_leung_feasible(3, 1));  // k = 1 has no primes
    CHECK(lam_leung_feasible(6, 2));
    CHECK_FALSE(lam_leung_feasible(9, 4));
}

TEST_CASE("ppaf basics") {
    // All-zero sequence gives zero at any shift.
    UkSeq z{4, {kZeroEntry, kZeroEntry, kZeroEntry, kZeroEntry, kZeroEntry}};
    for (int s = 1; s <= 4; ++s) CHECK(ppaf(z, 0, s).is_zero());

    // a = (1,1), alpha = 1, s = 1: a0*conj(a1) + a1*conj(a0) = 2.
    UkSeq ones{2, {0, 0}};
    CHECK(ppaf(ones, 0, 1) == CycElt::from_coeffs(2, {2, 0}));

    CHECK_THROWS_AS(ppaf(ones, 0, 2), std::out_of_range);
    CHECK_THROWS_AS(ppaf(ones, 0, 0), std::out_of_range);
}

TEST_CASE("the published WPPGP(U4,5,1,6) pair cancels at every shift") {
    // a = (1, zeta_4, 1, 0, 0), b = (1, -1, -1, 0, 0)
    UkSeq a{4, {0, 1, 0, kZeroEntry, kZeroEntry}};
    UkSeq b{4, {0, 2, 2, kZeroEntry, kZeroEntry}};
    for (int s = 1; s <= 4; ++s) {
        CHECK((ppaf(a, 0, s) + ppaf(b, 0, s)).is_zero());
    }
}

TEST_CASE("squarefree part and prime factors") {
    CHECK(squarefree_part(12) == 3);
    CHECK(squarefree_part(7) == 7);
    CHECK(squarefree_part(36) == 1);
    CHECK(prime_factors(6) == std::vector<long long>{2, 3});
    CHECK(prime_factors(1).empty());
}
