#include <doctest.h>

#include "agc/galois.hpp"
#include "helpers.hpp"

using namespace agc;
using test::error_code_of;

namespace {

FieldPtr gf4() { return Field::make(2, 2, {1, 1, 1}); }

}  // namespace

TEST_SUITE("galois") {

TEST_CASE("field construction accepts valid descriptions") {
    const FieldPtr f4 = gf4();
    CHECK(f4->q() == 4);
    CHECK(f4->p() == 2);
    CHECK(f4->e() == 2);

    const FieldPtr f7 = Field::make(7, 1, {0, 1});
    CHECK(f7->q() == 7);
    CHECK(*f7 == *Field::prime(7));
}

TEST_CASE("field construction rejects bad descriptions") {
    // x^2 + 1 = (x + 1)^2 over GF(2)
    CHECK(error_code_of([] { Field::make(2, 2, {1, 0, 1}); }) == errc::reducible_modulus);
    CHECK(error_code_of([] { Field::make(3, 2, {0, 0, 1}); }) == errc::reducible_modulus);
    CHECK(error_code_of([] { Field::make(4, 1, {0, 1}); }) == errc::non_prime_characteristic);
    CHECK(error_code_of([] { Field::make(6, 1, {0, 1}); }) == errc::non_prime_characteristic);
    CHECK(error_code_of([] { Field::make(1, 1, {0, 1}); }) == errc::non_prime_characteristic);
    CHECK(error_code_of([] { Field::make(2, 2, {1, 1}); }) == errc::bad_config);
    CHECK(error_code_of([] { Field::make(2, 2, {1, 1, 0, 1}); }) == errc::bad_config);
}

TEST_CASE("GF(4) arithmetic is forced by the modulus x^2+x+1") {
    const FieldPtr f = gf4();
    const FieldElement w = f->element(2);   // the residue of x
    const FieldElement w1 = f->element(3);  // x + 1
    CHECK(w * w == w1);
    CHECK(w.inv() == w1);
    CHECK(w * w1 == f->one());
    CHECK(w + w == f->zero());
}

TEST_CASE("prime field powers") {
    const FieldPtr f = Field::prime(7);
    CHECK(f->element(3).pow(6) == f->one());
    CHECK(f->element(3).pow(0) == f->one());
    CHECK(f->zero().pow(0) == f->one());
    CHECK(f->zero().pow(5) == f->zero());
    CHECK(f->element(3).pow(-1) == f->element(3).inv());
}

TEST_CASE("enumeration is deterministic with zero first") {
    const FieldPtr f2 = Field::prime(2);
    const auto e2 = f2->elements();
    REQUIRE(e2.size() == 2);
    CHECK(e2[0] == f2->zero());
    CHECK(e2[1] == f2->one());

    const auto e4 = gf4()->elements();
    REQUIRE(e4.size() == 4);
    CHECK(e4[0].is_zero());
    for (size_t i = 0; i < e4.size(); ++i)
        for (size_t j = i + 1; j < e4.size(); ++j) CHECK(e4[i] != e4[j]);

    const FieldPtr f7 = Field::prime(7);
    for (int i = 0; i < 7; ++i) CHECK(f7->element(i).index() == i);
    // prime-field semantics: index arithmetic is mod-p arithmetic
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            CHECK((f7->element(i) + f7->element(j)).index() == (i + j) % 7);
            CHECK((f7->element(i) * f7->element(j)).index() == (i * j) % 7);
        }
}

TEST_CASE("field axioms hold exhaustively on small fields") {
    const std::vector<FieldPtr> fields = {
        Field::prime(2),
        Field::prime(3),
        Field::prime(5),
        gf4(),
        Field::make(2, 3, {1, 1, 0, 1}),     // GF(8), x^3+x+1
        Field::make(3, 2, {1, 0, 1}),        // GF(9), x^2+1
        Field::make(2, 4, {1, 1, 0, 0, 1}),  // GF(16), x^4+x+1
        Field::make(5, 2, {2, 0, 1}),        // GF(25), x^2+2
    };
    for (const FieldPtr& f : fields) {
        INFO("q = ", f->q());
        const auto elems = f->elements();
        REQUIRE(static_cast<int>(elems.size()) == f->q());
        for (const FieldElement& a : elems) {
            CHECK(a + f->zero() == a);
            CHECK(a * f->one() == a);
            CHECK(a + (-a) == f->zero());
            if (!a.is_zero()) {
                CHECK(a * a.inv() == f->one());
                CHECK(a.pow(f->q() - 1) == f->one());
            }
        }
        for (const FieldElement& a : elems)
            for (const FieldElement& b : elems) {
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                CHECK(a - b == a + (-b));
            }
        // associativity and distributivity over all triples
        for (const FieldElement& a : elems)
            for (const FieldElement& b : elems)
                for (const FieldElement& c : elems) {
                    CHECK((a + b) + c == a + (b + c));
                    CHECK((a * b) * c == a * (b * c));
                    CHECK(a * (b + c) == a * b + a * c);
                }
    }
}

TEST_CASE("coefficient round trip") {
    const FieldPtr f = Field::make(3, 2, {1, 0, 1});
    for (const FieldElement& a : f->elements()) {
        CHECK(f->from_coeffs(f->coeffs(a)) == a);
    }
    // reduction happens mod p and mod the modulus: x^2 = -1 = 2 in GF(9)
    CHECK(f->from_coeffs({0, 0, 1}) == f->element(2));
}

TEST_CASE("error cases") {
    const FieldPtr f = Field::prime(7);
    CHECK(error_code_of([&] { f->zero().inv(); }) == errc::division_by_zero);
    CHECK(error_code_of([&] { f->one() / f->zero(); }) == errc::division_by_zero);
    CHECK(error_code_of([&] { f->element(7); }) == errc::index_out_of_range);
    CHECK(error_code_of([&] { f->element(-1); }) == errc::index_out_of_range);

    const FieldPtr g = gf4();
    CHECK(error_code_of([&] { f->one() + g->one(); }) == errc::field_mismatch);

    // equal specs built twice are the same field
    const FieldPtr f2 = Field::prime(7);
    CHECK(f->one() + f2->element(3) == f->element(4));
}

}  // TEST_SUITE
