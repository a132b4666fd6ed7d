#include <doctest.h>

#include <numeric>

#include "singwords/streams.hpp"
#include "test_helpers.hpp"

using namespace singwords;
using testing::w;

TEST_SUITE_BEGIN("streams");

static const AlphabetPtr AB = OrderedAlphabet::shared("ab");
static const AlphabetPtr ABC = OrderedAlphabet::shared("abc");

TEST_CASE("stream comparison decides equality within the periodic bound") {
    Stream s1(AB, "", "ab");
    Stream s2(AB, "a", "ba");
    CHECK(stream_compare(s1, s1) == Ordering::equal);
    CHECK(stream_compare(s1, s2) == Ordering::equal); // both are abab...
    CHECK(stream_compare(Stream(AB, "", "a"), s1) == Ordering::less);
    CHECK(stream_compare(s1, Stream(AB, "", "a")) == Ordering::greater);
    Stream s3(AB, "abababab", "b");
    CHECK(stream_compare(s1, s3) == Ordering::less);
}

TEST_CASE("stream comparison agrees with long prefix comparison") {
    auto gen = testing::rng(9);
    std::uniform_int_distribution<size_t> pre(0, 6), per(1, 5);
    for (int t = 0; t < 400; ++t) {
        Stream x(AB, testing::random_word(gen, *AB, pre(gen)),
                 testing::random_word(gen, *AB, per(gen)));
        Stream y(AB, testing::random_word(gen, *AB, pre(gen)),
                 testing::random_word(gen, *AB, per(gen)));
        size_t n = 200; // far beyond the decision bound for these sizes
        std::string px = x.prefix(n), py = y.prefix(n);
        Ordering expected = px == py ? Ordering::equal
                                     : (px < py ? Ordering::less : Ordering::greater);
        CHECK(stream_compare(x, y) == expected);
    }
}

TEST_CASE("finite words against streams use the prefix-flip convention") {
    Stream s(AB, "", "ab");
    CHECK(lex_compare(w(AB, "ab"), s) == Ordering::greater); // proper prefix of the stream
    CHECK(lex_compare(w(AB, ""), s) == Ordering::greater);
    CHECK(lex_compare(w(AB, "aa"), s) == Ordering::less);
    CHECK(lex_compare(s, w(AB, "ab")) == Ordering::less);
}

TEST_CASE("biword indexing: position -1 is the last letter of the left period") {
    BiWord x(AB, "ab", "ba", "ab");
    CHECK(x.at(-1) == 'b');
    CHECK(x.at(-2) == 'a');
    CHECK(x.at(-3) == 'b');
    CHECK(x.at(0) == 'b');
    CHECK(x.at(1) == 'a');
    CHECK(x.at(2) == 'a');
    CHECK(x.at(3) == 'b');
    CHECK(x.window(-4, 4) == "abab" + std::string("ba") + "ab");
}

TEST_CASE("directional streams expand tails correctly") {
    BiWord x(AB, "ab", "ba", "ab");
    CHECK(x.rightward_stream(0).prefix(6) == "baabab");
    CHECK(x.rightward_stream(2).prefix(4) == "abab");
    CHECK(x.rightward_stream(5).prefix(4) == "baba");
    CHECK(x.leftward_stream(-1).prefix(6) == "bababa");
    CHECK(x.leftward_stream(1).prefix(6) == "abbaba");
    CHECK(x.leftward_stream(3).prefix(6) == "baabba");
}

TEST_CASE("markoff property on periodic words") {
    CHECK(markoff_check(BiWord(AB, "ab", "", "ab")).holds);
    CHECK_FALSE(markoff_check(BiWord(AB, "ab", "aabb", "ab")).holds);
    CHECK(markoff_check(BiWord(AB, "abaab", "", "abaab")).holds);
    CHECK(markoff_check(BiWord(AB, "a", "", "a")).holds); // no occurrences at all
    CHECK_THROWS_AS(markoff_check(BiWord(ABC, "abc", "", "abc")), std::invalid_argument);
}

TEST_CASE("markoff violations carry a checkable witness") {
    BiWord x(AB, "ab", "aabb", "ab");
    MarkoffResult r = markoff_check(x);
    REQUIRE_FALSE(r.holds);
    REQUIRE(r.violation.has_value());
    long long i = r.violation->occurrence;
    CHECK(x.at(i) != x.at(i + 1));
    StreamComparison cmp =
        stream_compare_detail(x.leftward_stream(i - 1), x.rightward_stream(i + 2));
    REQUIRE(cmp.order != Ordering::equal);
    CHECK(cmp.first_difference == r.violation->difference);
}

TEST_CASE("window check flags the reversible biword and clears periodic ones") {
    CHECK(window_singular_check(BiWord(AB, "ab", "aabb", "ab"), 20).violation_found);
    CHECK_FALSE(window_singular_check(BiWord(AB, "a", "", "a"), 10).violation_found);
    CHECK_FALSE(window_singular_check(BiWord(AB, "ab", "", "ab"), 15).violation_found);
}

TEST_CASE("window check witnesses re-verify independently") {
    BiWord x(AB, "ab", "aabb", "ab");
    WindowVerdict v = window_singular_check(x, 20);
    REQUIRE(v.violation_found);
    const WindowWitness& wit = *v.witness;
    std::string vtext = x.window(wit.v_begin, wit.v_end);
    CHECK(vtext != reverse_text(vtext));
    Ordering cv = lex_compare(*AB, vtext, reverse_text(vtext));
    CHECK(cv == wit.v_vs_reversal);
    Ordering cuw = stream_compare(x.leftward_stream(wit.v_begin - 1),
                                  x.rightward_stream(wit.v_end));
    CHECK(cuw == wit.u_vs_w);
    CHECK(cv == cuw);
}

TEST_CASE("infinite concatenations of ac and abc stay clear of violations") {
    auto gen = testing::rng(10);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int t = 0; t < 60; ++t) {
        std::string pre, per;
        for (int i = 0; i < 12; ++i) pre += coin(gen) ? "abc" : "ac";
        for (int i = 0; i < 5; ++i) per += coin(gen) ? "abc" : "ac";
        Stream x(ABC, pre, per);
        CHECK_FALSE(window_singular_check(x, 60).violation_found);
    }
}

TEST_CASE("one-sided window check catches reversible streams") {
    // aabb followed by anything over {a<b} embeds the reversible square
    CHECK(window_singular_check(Stream(AB, "aabb", "ab"), 10).violation_found);
    // b^omega is singular
    CHECK_FALSE(window_singular_check(Stream(AB, "", "b"), 20).violation_found);
    // a violation whose u-part is empty: ba^omega with v = ba
    WindowVerdict v = window_singular_check(Stream(AB, "ba", "a"), 5);
    REQUIRE(v.violation_found);
    CHECK(v.witness->v_begin == 0);
    CHECK(v.witness->v_end == 2);
}

TEST_CASE("lyndon prefix checks") {
    CHECK(lyndon_prefix_check(Stream(AB, "", "ab"), 30).consistent);
    LyndonCheck bad = lyndon_prefix_check(Stream(AB, "", "ba"), 30);
    CHECK_FALSE(bad.consistent);
    CHECK(bad.violating_shift == 1);
    CHECK(lyndon_prefix_check(Stream(AB, "a", "ab"), 30).consistent);
}

TEST_CASE("one-sided periodic edge cases: suffix order versus singularity") {
    // (ab)^w: minimal among its shifts and clear of violations
    Stream ab(AB, "", "ab");
    CHECK(lyndon_prefix_check(ab, 40).consistent);
    CHECK_FALSE(window_singular_check(ab, 40).violation_found);
    // (ba)^w: both fail
    Stream ba(AB, "", "ba");
    CHECK_FALSE(lyndon_prefix_check(ba, 40).consistent);
    CHECK(window_singular_check(ba, 40).violation_found);
    // a(ab)^w: singular and suffix-minimal even though its factor set is not
    // closed under reversal (aab occurs, baa never does)
    Stream aab(AB, "a", "ab");
    CHECK(lyndon_prefix_check(aab, 40).consistent);
    CHECK_FALSE(window_singular_check(aab, 40).violation_found);
    // b(ab)^w: a reversible prefix factorization (v = ba, empty u)
    Stream bab(AB, "b", "ab");
    CHECK_FALSE(lyndon_prefix_check(bab, 40).consistent);
    CHECK(window_singular_check(bab, 40).violation_found);
}

TEST_CASE("biword balance") {
    CHECK(balance_check_biword(BiWord(AB, "ab", "", "ab"), 12).balanced);
    BiWordBalanceReport r = balance_check_biword(BiWord(AB, "ab", "aabb", "ab"), 12);
    CHECK_FALSE(r.balanced);
    REQUIRE(r.palindrome_witness.has_value());
    CHECK(*r.palindrome_witness == "");
    CHECK(balance_check_biword(BiWord(AB, "abaab", "", "abaab"), 20).balanced);
}

TEST_CASE("stream operations are invariant under re-representation") {
    auto gen = testing::rng(14);
    std::uniform_int_distribution<size_t> pre(0, 5), per(1, 4), shift(1, 7);
    for (int t = 0; t < 300; ++t) {
        std::string p = testing::random_word(gen, *AB, pre(gen));
        std::string q = testing::random_word(gen, *AB, per(gen));
        Stream x(AB, p, q);
        // push k letters of the period into the preperiod: same stream
        size_t k = shift(gen) % (q.size() + 1);
        Stream y(AB, p + q.substr(0, k), q.substr(k) + q.substr(0, k));
        CHECK(stream_compare(x, y) == Ordering::equal);
        Stream z(AB, testing::random_word(gen, *AB, pre(gen)),
                 testing::random_word(gen, *AB, per(gen)));
        CHECK(stream_compare(x, z) == stream_compare(y, z));
    }
}

TEST_CASE("biword verdicts are invariant under re-representation") {
    auto gen = testing::rng(15);
    std::uniform_int_distribution<size_t> tail(1, 3), mid(0, 3);
    for (int t = 0; t < 250; ++t) {
        std::string l = testing::random_word(gen, *AB, tail(gen));
        std::string c = testing::random_word(gen, *AB, mid(gen));
        std::string r = testing::random_word(gen, *AB, tail(gen));
        BiWord x(AB, l, c, r);
        // absorb whole periods into the center and double the tails: the
        // bi-infinite word is unchanged, the scanned windows widen
        BiWord y(AB, l + l, l + l + c + r + r, r + r);
        CHECK(markoff_check(x).holds == markoff_check(y).holds);
        CHECK(balance_check_biword(x, 12).balanced == balance_check_biword(y, 12).balanced);
    }
}

TEST_CASE("markoff, balance and window verdicts coincide at small scale") {
    AlphabetPtr BA = OrderedAlphabet::shared("ba");
    std::vector<std::string> tails, centers;
    testing::for_each_word(*AB, 3, [&](const std::string& s) {
        if (!s.empty()) tails.push_back(s);
        centers.push_back(s);
    });
    for (const auto& l : tails)
        for (const auto& r : tails)
            for (const auto& c : centers) {
                BiWord x(AB, l, c, r);
                size_t bound = c.size() + 2 * std::lcm(l.size(), r.size()) + 4;
                bool balanced = balance_check_biword(x, bound).balanced;
                bool markoff = markoff_check(x).holds;
                long long radius = static_cast<long long>(
                    c.size() + l.size() + r.size() + 2 * bound + 6);
                bool clean_ab = !window_singular_check(x, radius).violation_found;
                bool clean_ba =
                    !window_singular_check(BiWord(BA, l, c, r), radius).violation_found;
                CHECK(markoff == balanced);
                CHECK(markoff == (clean_ab && clean_ba));
            }
}

TEST_SUITE_END();
