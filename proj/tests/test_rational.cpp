#include <gpoly/rational.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using gpoly::Int;
using gpoly::Rat;

TEST_CASE("rationals stay in canonical reduced form") {
    Rat a(3, 6);
    CHECK(numerator(a) == 1);
    CHECK(denominator(a) == 2);

    Rat b(-2, 4);
    CHECK(numerator(b) == -1);
    CHECK(denominator(b) == 2);

    Rat c = Rat(2, 3) + Rat(1, 3);
    CHECK(numerator(c) == 1);
    CHECK(denominator(c) == 1);
}

TEST_CASE("string round trips") {
    CHECK(gpoly::rat_to_string(Rat(7)) == "7");
    CHECK(gpoly::rat_to_string(Rat(-3, 4)) == "-3/4");
    CHECK(gpoly::rat_from_string("6/8") == Rat(3, 4));
    CHECK(gpoly::rat_from_string("-9") == Rat(-9));
    CHECK(gpoly::rat_from_string("0/5") == Rat(0));
    CHECK(gpoly::rat_to_string(gpoly::rat_from_string("-10/15")) == "-2/3");
}

TEST_CASE("malformed rational strings are rejected") {
    for (const char* bad : {"", "1/0", "a", "1.5", "--2", "1/-2", "2/", "/3", "1 /2", "+4"}) {
        CHECK_THROWS_AS(gpoly::rat_from_string(bad), std::invalid_argument);
    }
}

TEST_CASE("arithmetic is exact and keeps invariants") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
    for (int i = 0; i < 500; ++i) {
        Rat a(num(rng), den(rng));
        Rat b(num(rng), den(rng));
        CHECK((a + b) - b == a);
        if (b != 0) CHECK((a * b) / b == a);

        const Rat c = a * b + a - b;
        CHECK(denominator(c) > 0);
        CHECK(gcd(Int(abs(numerator(c))), Int(denominator(c))) == 1);
    }
}
