#include <doctest.h>

#include <map>
#include <random>

#include "mvspcurves/gf.hpp"

using namespace mvsp;

namespace {

// Independent irreducibility certificate for small p: no roots in F_p and,
// for degree 5 over F_2, no factor x^2+x+1 (the only irreducible
// quadratic).  Enough to re-derive the minimal cubic and quintic moduli.
bool has_root_fp(const std::vector<uint32_t>& poly, uint32_t p) {
    for (uint32_t a = 0; a < p; ++a) {
        uint64_t acc = 0;
        for (size_t i = poly.size(); i-- > 0;) acc = (acc * a + poly[i]) % p;
        if (acc == 0) return true;
    }
    return false;
}

std::vector<uint32_t> decode_poly(uint64_t enc, uint32_t deg, uint32_t p) {
    std::vector<uint32_t> c(deg + 1);
    for (uint32_t i = 0; i < deg; ++i) {
        c[i] = static_cast<uint32_t>(enc % p);
        enc /= p;
    }
    c[deg] = 1;
    return c;
}

bool divisible_by_x2x1(const std::vector<uint32_t>& poly) {
    // remainder mod x^2+x+1 over F_2
    uint32_t r1 = 0, r0 = 0;
    for (size_t i = poly.size(); i-- > 0;) {
        uint32_t nr1 = r0 ^ r1;  // shift by x, reduce x^2 = x+1
        uint32_t nr0 = r1 ^ poly[i];
        r1 = nr1;
        r0 = nr0;
    }
    return r0 == 0 && r1 == 0;
}

}  // namespace

TEST_CASE("minimal modulus selection") {
    auto f8 = FieldSpec::make(2, 1, 3);
    CHECK(f8->modulus() == std::vector<uint32_t>{1, 1, 0, 1});  // 1 + x + x^3, encoding 11

    // oracle: first monic cubic over F_2 without a root is the modulus
    uint64_t first = 0;
    for (uint64_t enc = 0; enc < 8; ++enc)
        if (!has_root_fp(decode_poly(enc, 3, 2), 2)) {
            first = enc;
            break;
        }
    CHECK(first == 3);  // coefficients (1,1,0) -> 1 + x + x^3

    auto f3 = FieldSpec::make(3, 1, 1);
    CHECK(f3->modulus() == std::vector<uint32_t>{0, 1});  // x

    auto f32 = FieldSpec::make(2, 1, 5);
    CHECK(f32->modulus() == std::vector<uint32_t>{1, 0, 1, 0, 0, 1});  // 1 + x^2 + x^5
    for (uint64_t enc = 0; enc < 5; ++enc) {
        auto cand = decode_poly(enc, 5, 2);
        CHECK((has_root_fp(cand, 2) || divisible_by_x2x1(cand)));  // everything below is reducible
    }

    CHECK_THROWS_AS(FieldSpec::make(4, 1, 1), InvalidInput);
    CHECK_THROWS_AS(FieldSpec::make(2, 1, 40), BoundExceeded);
}

TEST_CASE("field arithmetic") {
    auto f4 = FieldSpec::make(2, 1, 2);  // F_2[w]/(w^2+w+1)
    FieldElement w = f4->element(2);     // [0,1]
    CHECK((w * w) == f4->element(3));    // w^2 = w + 1
    CHECK((w + f4->zero()) == w);
    CHECK((w / w) == f4->one());
    CHECK_THROWS_AS(w / f4->zero(), InvalidInput);

    auto f9 = FieldSpec::make(3, 1, 2);
    for (uint64_t i = 0; i < f9->order(); ++i) {
        FieldElement a = f9->element(i);
        CHECK(a.pow(Int(f9->order())) == a);
        CHECK((a + f9->zero()) == a);
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }

    auto f8 = FieldSpec::make(2, 1, 3);
    CHECK_THROWS_AS(f8->one() + f9.get()->one(), InvalidInput);
}

TEST_CASE("pow with unbounded exponents") {
    auto f8 = FieldSpec::make(2, 1, 3);
    FieldElement g = f8->element(2);
    Int huge = int_pow(Int(2), 200) + 5;  // way past 64 bits
    Int reduced = huge % (f8->order() - 1);
    CHECK(g.pow(huge) == g.pow(reduced));
    CHECK(f8->zero().pow(Int(0)).is_one());
    CHECK(f8->zero().pow(huge).is_zero());
}

TEST_CASE("frobenius") {
    auto f4 = FieldSpec::make(2, 1, 2);
    FieldElement w = f4->element(2);
    CHECK(frobenius(w, 1) == f4->element(3));  // squaring
    for (uint64_t i = 0; i < f4->order(); ++i) {
        FieldElement a = f4->element(i);
        CHECK(frobenius(a, 0) == a);
        CHECK(frobenius(a, f4->n()) == a);
    }

    // additive and multiplicative on random samples in F_{3^4}
    auto f81 = FieldSpec::make(3, 1, 4);
    std::mt19937 rng(7);
    std::uniform_int_distribution<uint64_t> pick(0, f81->order() - 1);
    for (int trial = 0; trial < 100; ++trial) {
        FieldElement a = f81->element(pick(rng)), b = f81->element(pick(rng));
        uint32_t k = trial % 5;
        CHECK(frobenius(a + b, k) == frobenius(a, k) + frobenius(b, k));
        CHECK(frobenius(a * b, k) == frobenius(a, k) * frobenius(b, k));
    }
}

TEST_CASE("partial trace") {
    auto f8 = FieldSpec::make(2, 1, 3);
    std::map<uint64_t, int> counts;
    for (uint64_t i = 0; i < 8; ++i) {
        FieldElement a = f8->element(i);
        CHECK(partial_trace(a, 0).is_zero());
        CHECK(partial_trace(a, 1) == a);
        counts[partial_trace(a, 3).index()]++;
    }
    CHECK(counts == std::map<uint64_t, int>{{0, 4}, {1, 4}});
    CHECK_THROWS_AS(partial_trace(f8->one(), 4), InvalidInput);
}

TEST_CASE("trace maps onto the base field with uniform fibers") {
    for (auto [p, e, n] : {std::tuple<uint32_t, uint32_t, uint32_t>{2, 1, 4},
                           {3, 1, 3},
                           {2, 2, 2}}) {
        auto spec = FieldSpec::make(p, e, n);
        std::map<uint64_t, uint64_t> fibers;
        for (uint64_t i = 0; i < spec->order(); ++i) {
            FieldElement t = partial_trace(spec->element(i), n);
            CHECK(frobenius(t, 1) == t);  // lands in F_q
            fibers[t.index()]++;
        }
        CHECK(fibers.size() == spec->q());
        for (const auto& [_, cnt] : fibers) CHECK(cnt == spec->order() / spec->q());
    }
}

TEST_CASE("subfield elements") {
    auto f8 = FieldSpec::make(2, 1, 3);
    auto base = subfield_elements(f8, 1);
    REQUIRE(base.size() == 2);
    CHECK(base[0].is_zero());
    CHECK(base[1].is_one());
    CHECK(subfield_elements(f8, 3).size() == 8);
    CHECK_THROWS_AS(subfield_elements(f8, 2), InvalidInput);

    auto f64 = FieldSpec::make(2, 2, 3);  // q = 4, n = 3
    auto f4_in_f64 = subfield_elements(f64, 1);
    CHECK(f4_in_f64.size() == 4);
    for (const auto& a : f4_in_f64)
        for (const auto& b : f4_in_f64) {
            CHECK(frobenius(a + b, 1) == a + b);
            CHECK(frobenius(a * b, 1) == a * b);
        }
}

TEST_CASE("table path is bit-identical to the basis path") {
    for (auto [p, e, n] : {std::tuple<uint32_t, uint32_t, uint32_t>{2, 1, 3}, {3, 1, 2}, {2, 2, 2}}) {
        auto spec = FieldSpec::make(p, e, n);
        REQUIRE(spec->has_tables());
        for (uint64_t i = 0; i < spec->order(); ++i)
            for (uint64_t j = 0; j < spec->order(); ++j) {
                auto a = spec->coeffs_of(i), b = spec->coeffs_of(j);
                CHECK(spec->mul_raw(a, b) == spec->mul_basis(a, b));
            }
    }
}

TEST_CASE("serialization") {
    auto f8 = FieldSpec::make(2, 1, 3);
    CHECK(to_string(f8->element(5)) == "[1,0,1]");
    CHECK(to_string(f8->zero()) == "[0,0,0]");
}

TEST_CASE("prime power factoring") {
    CHECK(factor_prime_power(4) == std::pair<uint32_t, uint32_t>{2, 2});
    CHECK(factor_prime_power(27) == std::pair<uint32_t, uint32_t>{3, 3});
    CHECK(factor_prime_power(7) == std::pair<uint32_t, uint32_t>{7, 1});
    CHECK_THROWS_AS(factor_prime_power(12), InvalidInput);
    CHECK_THROWS_AS(factor_prime_power(1), InvalidInput);
}
