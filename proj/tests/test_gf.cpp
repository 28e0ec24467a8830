#include "pforge/gf.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace pforge;

namespace {

const std::vector<std::pair<int, int>> kAllFields = {
    {2, 1}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {13, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 2}};

}  // namespace

TEST_CASE("F_2 arithmetic is xor / and") {
    auto f = Field::make(2, 1);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            CHECK(f->add(a, b) == (a ^ b));
            CHECK(f->mul(a, b) == (a & b));
        }
}

TEST_CASE("F_4 multiplication against hand-reduced polynomials") {
    // Modulus x^2 + x + 1: x * x = x + 1, so index 2 squared is index 3.
    auto f = Field::make(2, 2);
    CHECK(f->mul(2, 2) == 3);
    CHECK(f->inv(2) == 3);  // x (x+1) = x^2 + x = 1
    CHECK(f->add(2, 2) == 0);
    CHECK(f->mul(3, 3) == 2);  // (x+1)^2 = x^2 + 1 = x
}

TEST_CASE("extension field spot values") {
    auto f8 = Field::make(2, 3);  // x^3 + x + 1
    CHECK(f8->mul(2, 4) == 3);    // x * x^2 = x^3 = x + 1
    auto f16 = Field::make(2, 4);  // x^4 + x + 1
    CHECK(f16->mul(4, 4) == 3);    // x^2 * x^2 = x^4 = x + 1
    auto f9 = Field::make(3, 2);  // x^2 + 1
    CHECK(f9->mul(3, 3) == 2);    // x * x = -1 = 2
    CHECK(f9->mul(4, 4) == 6);    // (1+x)^2 = 2x
    CHECK(f9->inv(3) == 6);       // x * 2x = 2x^2 = -2 = 1
}

TEST_CASE("invalid field parameters are rejected") {
    CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);   // non-prime p
    CHECK_THROWS_AS(Field::make(17, 1), std::invalid_argument);  // q > 16
    CHECK_THROWS_AS(Field::make(2, 5), std::invalid_argument);   // q > 16
    CHECK_THROWS_AS(Field::make(2, 2, {1, 0, 1}), std::invalid_argument);  // (x+1)^2
    CHECK_THROWS_AS(Field::make(2, 2, {1, 1}), std::invalid_argument);     // wrong degree
    CHECK_THROWS_AS(Field::make(2, 2, {1, 1, 0}), std::invalid_argument);  // not monic
    CHECK_THROWS_AS(Field::of_order(6), std::invalid_argument);
    CHECK_THROWS_AS(Field::of_order(1), std::invalid_argument);
}

TEST_CASE("prime field examples") {
    auto f3 = Field::make(3, 1);
    CHECK(f3->add(2, 2) == 1);
    auto f5 = Field::make(5, 1);
    CHECK(f5->neg(2) == 3);
}

TEST_CASE("field axioms hold exhaustively for every supported field") {
    for (auto [p, k] : kAllFields) {
        auto f = Field::make(p, k);
        const int q = f->q();
        for (int a = 0; a < q; ++a) {
            CHECK(f->add(a, 0) == a);
            CHECK(f->mul(a, 1) == a);
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                CHECK(f->sub(a, b) == f->add(a, f->neg(b)));
                if (b != 0) CHECK(f->mul(f->div(a, b), b) == a);
                for (int c = 0; c < q; ++c) {
                    CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
                    CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                    CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("exp/log tables realize multiplication") {
    for (auto [p, k] : kAllFields) {
        auto f = Field::make(p, k);
        const int q = f->q();
        const auto& exp = f->exp_table();
        const auto& log = f->log_table();
        REQUIRE(int(exp.size()) == q - 1);
        for (int i = 0; i < q - 1; ++i) CHECK(log[exp[i]] == i);
        for (int a = 1; a < q; ++a)
            for (int b = 1; b < q; ++b)
                CHECK(f->mul(a, b) == exp[(log[a] + log[b]) % (q - 1)]);
    }
}

TEST_CASE("zero division and inversion are rejected") {
    auto f = Field::make(3, 1);
    CHECK_THROWS_AS(f->div(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(f->inv(0), std::invalid_argument);
}

TEST_CASE("element operations enforce matching fields") {
    auto f3 = Field::make(3, 1);
    auto f5 = Field::make(5, 1);
    auto a = element(f3, 2);
    auto b = element(f5, 2);
    CHECK_THROWS_AS((void)(a + b), std::invalid_argument);
    auto f3_again = Field::make(3, 1);
    CHECK((element(f3, 2) + element(f3_again, 2)).idx == 1);
    CHECK_THROWS_AS(element(f3, 3), std::invalid_argument);
}

TEST_CASE("permutation construction and validation") {
    auto f2 = Field::of_order(2);
    auto f3 = Field::of_order(3);

    const FieldPermutation flip(f2, {1, 0});
    CHECK(flip(0) == 1);
    CHECK(flip(1) == 0);
    CHECK(FieldPermutation::transposition01(f2) == flip);

    const FieldPermutation swap12(f3, {0, 2, 1});
    CHECK_FALSE(swap12.fixes_one());

    CHECK_THROWS_AS(FieldPermutation(f3, {0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(FieldPermutation(f3, {0, 1}), std::invalid_argument);

    CHECK(FieldPermutation::shift_cycle(f3)(1) == 2);
    CHECK(FieldPermutation::shift_cycle(f3)(2) == 1);
    CHECK(FieldPermutation::shift_cycle(f3)(0) == 0);
}

TEST_CASE("inverse composed with itself is the identity, all permutations of F_4") {
    auto f4 = Field::of_order(4);
    std::vector<Symbol> table = {0, 1, 2, 3};
    do {
        const FieldPermutation sigma(f4, table);
        CHECK(sigma.compose(sigma.inverse()).is_identity());
        CHECK(sigma.inverse().compose(sigma).is_identity());
    } while (std::next_permutation(table.begin(), table.end()));
}
