#include <random>
#include <stdexcept>

#include "cgw/gf.hpp"
#include "doctest.h"

using namespace cgw;

namespace {

void check_axioms_exhaustive(const FieldCtx& F) {
    const uint32_t q = F.size();
    for (uint32_t a = 0; a < q; ++a) {
        CHECK(F.add(a, 0) == a);
        CHECK(F.mul(a, 1) == a);
        CHECK(F.add(a, F.neg(a)) == 0);
        if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
        for (uint32_t b = 0; b < q; ++b) {
            CHECK(F.add(a, b) == F.add(b, a));
            CHECK(F.mul(a, b) == F.mul(b, a));
            for (uint32_t c = 0; c < q; ++c) {
                CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            }
        }
    }
}

}  // namespace

TEST_CASE("GF(4) uses x^2+x+1 and satisfies the axioms") {
    FieldCtx F(2, 2);
    CHECK(F.modulus() == std::vector<int>{1, 1, 1});
    CHECK(F.size() == 4);
    check_axioms_exhaustive(F);
    // omega + omega^2 = 1 for the primitive element omega.
    uint32_t w = F.prim();
    CHECK(F.add(w, F.mul(w, w)) == 1);
}

TEST_CASE("GF(9) and GF(81) generators have full order") {
    FieldCtx F9(3, 2);
    CHECK(F9.size() == 9);
    uint32_t g = F9.prim();
    uint32_t x = 1;
    int order = 0;
    do {
        x = F9.mul(x, g);
        ++order;
    } while (x != 1);
    CHECK(order == 8);
    CHECK(F9.ind(1) == 0);
    check_axioms_exhaustive(F9);

    FieldCtx F81(3, 4);
    CHECK(F81.size() == 81);
    x = 1;
    order = 0;
    do {
        x = F81.mul(x, F81.prim());
        ++order;
    } while (x != 1);
    CHECK(order == 80);
    check_axioms_exhaustive(F81);
}

TEST_CASE("random-sample axioms on larger fields") {
    std::mt19937 rng(5);
    for (auto [p, m] : {std::pair<int, int>{2, 4}, {5, 2}, {17, 2}, {5, 4}}) {
        FieldCtx F(p, m);
        const uint32_t q = F.size();
        CHECK(F.pow(F.prim(), q - 1) == 1);
        for (int t = 0; t < 300; ++t) {
            uint32_t a = rng() % q, b = rng() % q, c = rng() % q;
            CHECK(F.add(a, b) == F.add(b, a));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
        }
    }
}

TEST_CASE("ind is a bijection onto 0..q-2") {
    FieldCtx F(3, 2);
    std::vector<char> seen(8, 0);
    for (uint32_t x = 1; x < 9; ++x) {
        uint32_t t = F.ind(x);
        CHECK(t < 8);
        CHECK(!seen[t]);
        seen[t] = 1;
        CHECK(F.from_ind(t) == x);
    }
    CHECK_THROWS_AS(F.ind(0), std::domain_error);
    CHECK_THROWS_AS(F.inv(0), std::domain_error);
    for (uint32_t t = 0; t < 8; ++t) CHECK(F.ind(F.pow(F.prim(), t)) == t);
}

TEST_CASE("frobenius is the q-power involution fixing the subfield") {
    FieldCtx F(2, 2);  // GF(4) over GF(2)
    uint32_t w = F.prim();
    CHECK(F.frobenius(w) == F.add(w, 1));  // omega^2 = omega + 1
    for (uint32_t x = 0; x < 4; ++x) CHECK(F.frobenius(F.frobenius(x)) == x);

    FieldCtx F81(3, 4);  // GF(81) over GF(9)
    CHECK(F81.subfield_order() == 9);
    int fixed = 0;
    for (uint32_t x = 0; x < 81; ++x) {
        CHECK(F81.frobenius(F81.frobenius(x)) == x);
        if (F81.frobenius(x) == x) ++fixed;
    }
    CHECK(fixed == 9);  // the subfield GF(9) is exactly the fixed set

    FieldCtx F8(2, 3);
    CHECK_THROWS_AS(F8.frobenius(1), std::domain_error);
}

TEST_CASE("construction preconditions") {
    CHECK_THROWS_AS(FieldCtx(4, 1), std::invalid_argument);   // not prime
    CHECK_THROWS_AS(FieldCtx(2, 21), std::invalid_argument);  // over the size bound
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(15));
}
