#include <doctest.h>

#include "singwords/continuant.hpp"
#include "singwords/tridiagonal.hpp"
#include "test_helpers.hpp"

using namespace singwords;
using testing::w;

TEST_SUITE_BEGIN("continuants");

TEST_CASE("bigint basics") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-42).to_string() == "-42");
    CHECK((BigInt(1000000000LL) * BigInt(1000000000LL)).to_string() == "1000000000000000000");
    CHECK(BigInt::parse("123456789012345678901234567890").to_string() ==
          "123456789012345678901234567890");
    CHECK((BigInt::parse("100000000000000000000") - BigInt(1)).to_string() ==
          "99999999999999999999");
    CHECK(BigInt(5) - BigInt(7) == BigInt(-2));
    CHECK(BigInt(-3) * BigInt(-4) == BigInt(12));
    CHECK(BigInt(7) + BigInt(-7) == BigInt(0));
    CHECK(compare(BigInt(-5), BigInt(3)) < 0);
    auto gen = testing::rng(3);
    std::uniform_int_distribution<long long> dist(-1000000, 1000000);
    for (int t = 0; t < 500; ++t) {
        long long a = dist(gen), b = dist(gen);
        CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
        CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
        CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
        CHECK((compare(BigInt(a), BigInt(b)) < 0) == (a < b));
    }
}

TEST_CASE("regular continuant values") {
    CHECK(continuant_regular({5}) == BigInt(5));
    CHECK(continuant_regular({2, 1, 2}) == BigInt(8)); // denominator of [0;2,1,2] = 3/8
    CHECK(continuant_regular({1, 1, 1, 1, 1}) == BigInt(8)); // Fibonacci growth
    CHECK(continuant_regular({}) == BigInt(1));              // K_0
    CHECK_THROWS_AS(continuant_regular({2, 0, 1}), std::domain_error);
}

TEST_CASE("semi-regular continuant values") {
    CHECK(continuant_semiregular({7, 3}) == BigInt(7 * 3 - 1));
    CHECK(continuant_semiregular({4, 5, 6, 4, 6, 3}) == BigInt(6827));
    CHECK(continuant_semiregular({4, 16, 4, 15, 16, 3}) == BigInt(171135));
    CHECK(continuant_semiregular({4, 15, 16, 4, 16, 3}) == BigInt(171127));
    CHECK_THROWS_AS(continuant_semiregular({3, 1, 3}), std::domain_error);
}

TEST_CASE("semi-regular continuants grow strictly for digits >= 2") {
    auto gen = testing::rng(4);
    std::uniform_int_distribution<long long> digit(2, 9);
    for (int t = 0; t < 100; ++t) {
        DigitSequence d;
        BigInt prev = continuant_semiregular(d);
        for (int i = 0; i < 12; ++i) {
            d.push_back(digit(gen));
            BigInt cur = continuant_semiregular(d);
            if (i >= 1) CHECK(compare(cur, prev) > 0);
            prev = cur;
        }
    }
}

TEST_CASE("tridiagonal cross-check: small exact values") {
    TridiagonalResult r = tridiagonal_check({3, 3});
    CHECK(r.permanent == BigInt(10));
    CHECK(r.determinant == BigInt(8));
    CHECK(tridiagonal_check({4, 5, 6, 4, 6, 3}).determinant == BigInt(6827));
    CHECK_THROWS_AS(tridiagonal_check({1, 1, 1}, 2), std::length_error);
}

TEST_CASE("permanent equals K and determinant equals Kdot on random sequences") {
    auto gen = testing::rng(5);
    std::uniform_int_distribution<size_t> len(1, 8);
    std::uniform_int_distribution<long long> digit(2, 9);
    for (int t = 0; t < 120; ++t) {
        DigitSequence d(len(gen));
        for (auto& x : d) x = digit(gen);
        TridiagonalResult r = tridiagonal_check(d);
        CHECK(r.permanent == continuant_regular(d));
        CHECK(r.determinant == continuant_semiregular(d));
    }
    // permanent identity also covers digit 1
    std::uniform_int_distribution<long long> digit1(1, 9);
    for (int t = 0; t < 120; ++t) {
        DigitSequence d(len(gen));
        for (auto& x : d) x = digit1(gen);
        CHECK(tridiagonal_check(d).permanent == continuant_regular(d));
    }
}

TEST_CASE("continuants are invariant under digit reversal") {
    auto gen = testing::rng(6);
    std::uniform_int_distribution<size_t> len(1, 20);
    std::uniform_int_distribution<long long> digit(2, 12);
    for (int t = 0; t < 300; ++t) {
        DigitSequence d(len(gen));
        for (auto& x : d) x = digit(gen);
        DigitSequence r(d.rbegin(), d.rend());
        CHECK(continuant_regular(d) == continuant_regular(r));
        CHECK(continuant_semiregular(d) == continuant_semiregular(r));
    }
}

TEST_CASE("evaluate_word maps letters through a digit assignment") {
    AlphabetPtr abcd = OrderedAlphabet::shared("abcd");
    DigitAssignment phi{{'a', 3}, {'b', 4}, {'c', 5}, {'d', 6}};
    CHECK(evaluate_word(w(abcd, "bcdbda"), phi, ContinuantKind::semiregular) == BigInt(6827));
    DigitAssignment psi{{'a', 3}, {'b', 4}, {'c', 7}, {'d', 8}};
    CHECK(evaluate_word(w(abcd, "bdbcda"), psi, ContinuantKind::semiregular) == BigInt(18247));
    CHECK(evaluate_word(w(abcd, "bcdbda"), psi, ContinuantKind::semiregular) == BigInt(18247));
    AlphabetPtr a1 = OrderedAlphabet::shared("a");
    CHECK(evaluate_word(w(a1, "a"), {{'a', 5}}, ContinuantKind::regular) == BigInt(5));

    CHECK_THROWS_AS(evaluate_word(w(abcd, "bcdbda"), {{'b', 4}}, ContinuantKind::regular),
                    std::domain_error);
    DigitAssignment bad{{'a', 9}, {'b', 4}, {'c', 5}, {'d', 6}};
    CHECK_THROWS_AS(evaluate_word(w(abcd, "bcdbda"), bad, ContinuantKind::semiregular),
                    std::domain_error);
    CHECK(evaluate_word(w(abcd, "ab"), bad, ContinuantKind::semiregular,
                        /*require_order_preserving=*/false) == BigInt(9 * 4 - 1));
}

TEST_SUITE_END();
