#include <doctest.h>

#include "singwords/classify.hpp"
#include "singwords/morphisms.hpp"
#include "test_helpers.hpp"

using namespace singwords;
using testing::for_each_word;
using testing::w;

TEST_SUITE_BEGIN("morphisms");

static const AlphabetPtr ABC = OrderedAlphabet::shared("abc");

namespace {

// Reference implementation of xi by direct rewriting: add one b to each run
// of b, and insert a b inside each aa and cc. Kept deliberately different
// from the transducer.
std::string xi_naive(const std::string& x) {
    std::string out;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 'b') {
            size_t j = i;
            while (j < x.size() && x[j] == 'b') ++j;
            out.append(j - i + 1, 'b');
            i = j - 1;
            continue;
        }
        out.push_back(x[i]);
        if (i + 1 < x.size() && x[i + 1] == x[i] && (x[i] == 'a' || x[i] == 'c'))
            out.push_back('b');
    }
    return out;
}

} // namespace

TEST_CASE("letter-doubling maps") {
    CHECK(lambda_apply('a', w(ABC, "bb")).text() == "abab");
    CHECK(lambda_apply('a', w(ABC, "")).text() == "");
    CHECK(lambda_apply('a', w(ABC, "aba")).text() == "aaba");
    CHECK(rho_apply('b', w(ABC, "a")).text() == "ab");
    CHECK(rho_apply('c', w(ABC, "abbbabba")).text() == "acbcbcbcacbcbcac");
    CHECK(drop_final('c', rho_apply('c', w(ABC, "abbbabba"))).text() == "acbcbcbcacbcbca");
    CHECK_THROWS_AS(lambda_apply('z', w(ABC, "ab")), std::invalid_argument);
    CHECK_THROWS_AS(drop_final('c', w(ABC, "ab")), std::logic_error);
}

TEST_CASE("doubling identities d|rev(lambda_d(x)) = lambda_d(rev(x))|d and d rho_d = lambda_d d") {
    for (char d : {'a', 'b', 'c'}) {
        for_each_word(*ABC, 6, [&](const std::string& s) {
            Word x = w(ABC, s);
            Word lam = lambda_apply(d, x);
            CHECK(d + reverse_text(lam.view()) == lambda_apply(d, reverse(x)).text() + d);
            CHECK(d + rho_apply(d, x).text() == lam.text() + d);
        });
    }
}

TEST_CASE("xi transducer on known words") {
    CHECK(xi_apply(w(ABC, "cacbccaccac")).text() == "cacbbcbcacbcac");
    CHECK(xi_apply(w(ABC, "")).text() == "");
    CHECK(xi_apply(w(ABC, "b")).text() == "bb");
    CHECK(xi_apply(w(ABC, "aa")).text() == "aba");
    CHECK(xi_apply(w(ABC, "cc")).text() == "cbc");
}

TEST_CASE("xi transducer agrees with the naive rewriter") {
    for_each_word(*ABC, 9, [&](const std::string& s) {
        CHECK(xi_apply(w(ABC, s)).text() == xi_naive(s));
    });
}

TEST_CASE("xi commutes with reversal") {
    for_each_word(*ABC, 8, [&](const std::string& s) {
        CHECK(reverse(xi_apply(w(ABC, s))) == xi_apply(reverse(w(ABC, s))));
    });
}

TEST_CASE("bounded xi on the worked ternary chain") {
    CHECK(xi_bounded(w(ABC, "acbccacca")).text() == "acbbcbcacbca");
    CHECK(xi_bounded(w(ABC, "acbbcbcacbca")).text() == "acbbbcbbcacbbca");
    CHECK(xi_bounded(w(ABC, "")).text() == "b");
}

TEST_CASE("bounded xi equals c^-1 xi(cxc) c^-1 computed the long way") {
    for_each_word(*ABC, 8, [&](const std::string& s) {
        std::string long_way = xi_naive("c" + s + "c");
        REQUIRE(long_way.front() == 'c');
        REQUIRE(long_way.back() == 'c');
        CHECK(xi_bounded(w(ABC, s)).text() == long_way.substr(1, long_way.size() - 2));
    });
}

TEST_CASE("bounded xi inverse on known words") {
    CHECK(xi_bounded_inverse(w(ABC, "acbbbcbbcacbbca")).text() == "acbbcbcacbca");
    CHECK(xi_bounded_inverse(w(ABC, "b")).text() == "");
    CHECK_THROWS_WITH_AS(xi_bounded_inverse(w(ABC, "aab")),
                         doctest::Contains("aa factor"), std::domain_error);
    CHECK_THROWS_AS(xi_bounded_inverse(w(ABC, "")), std::domain_error);
    CHECK_THROWS_AS(xi_bounded_inverse(w(ABC, "ca")), std::domain_error);
    CHECK_THROWS_AS(xi_bounded_inverse(w(ABC, "bab")), std::domain_error);
    CHECK_THROWS_AS(xi_bounded_inverse(w(ABC, "abcb")), std::domain_error);
}

TEST_CASE("bounded xi round-trips through its inverse") {
    for_each_word(*ABC, 8, [&](const std::string& s) {
        Word image = xi_bounded(w(ABC, s));
        CHECK(xi_bounded_image_violation(image).empty());
        CHECK(xi_bounded_inverse(image).text() == s);
    });
    // and the image conditions characterize the image exactly
    for_each_word(*ABC, 7, [&](const std::string& s) {
        Word x = w(ABC, s);
        if (!xi_bounded_image_violation(x).empty()) return;
        CHECK(xi_bounded(xi_bounded_inverse(x)) == x);
    });
}

TEST_CASE("order preservation of the doubling and run-increment maps") {
    std::vector<std::string> words;
    for_each_word(*ABC, 4, [&](const std::string& s) { words.push_back(s); });
    for (const auto& xs : words) {
        Word x = w(ABC, xs);
        Word lax = Word(ABC, lambda_apply('a', x).text() + 'a');
        Word lcx = lambda_apply('c', x);
        Word xix = xi_apply(x);
        for (const auto& ys : words) {
            Word y = w(ABC, ys);
            Ordering base = lex_compare(x, y);
            CHECK(lex_compare(lax, Word(ABC, lambda_apply('a', y).text() + 'a')) == base);
            CHECK(lex_compare(lcx, lambda_apply('c', y)) == base);
            CHECK(lex_compare(xix, xi_apply(y)) == base);
        }
    }
}

TEST_CASE("xi(xc)c^-1 preserves order") {
    auto xi_minus = [&](const std::string& s) {
        std::string t = xi_naive(s + "c");
        REQUIRE(t.back() == 'c');
        return t.substr(0, t.size() - 1);
    };
    std::vector<std::string> words;
    for_each_word(*ABC, 4, [&](const std::string& s) { words.push_back(s); });
    for (const auto& xs : words)
        for (const auto& ys : words)
            CHECK(lex_compare(*ABC, xi_minus(xs), xi_minus(ys)) == lex_compare(*ABC, xs, ys));
}

TEST_CASE("singularity is preserved by the three maps") {
    for_each_word(*ABC, 7, [&](const std::string& s) {
        bool base = is_singular(*ABC, s);
        Word x = w(ABC, s);
        CHECK(is_singular(*ABC, lambda_apply('a', x).text() + "a") == base);
        if (!s.empty())
            CHECK(is_singular(*ABC, drop_final('c', rho_apply('c', x)).view()) == base);
        CHECK(is_singular(*ABC, xi_bounded(x).view()) == base);
    });
}

TEST_SUITE_END();
