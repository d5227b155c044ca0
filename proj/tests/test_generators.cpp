#include "doctest.h"
#include "oracles.hpp"

#include "tangram/cut_number.hpp"
#include "tangram/generators.hpp"

#include <random>

using namespace tangram;

namespace {

// Lengths of all tangram factors, via prefix parities.
std::vector<std::size_t> tangram_factor_lengths(const Word &w)
{
    std::vector<std::uint64_t> prefix{0};
    for (Letter l : w)
        prefix.push_back(prefix.back() ^ (std::uint64_t{1} << l));
    std::vector<std::size_t> lengths;
    for (std::size_t i = 0; i < prefix.size(); ++i)
        for (std::size_t j = i + 1; j < prefix.size(); ++j)
            if (prefix[i] == prefix[j])
                lengths.push_back(j - i);
    return lengths;
}

} // namespace

TEST_CASE("Zimin words")
{
    CHECK(format_word(zimin(1)) == "a");
    CHECK(format_word(zimin(2)) == "aba");
    CHECK(format_word(zimin(3)) == "abacaba");
    CHECK(zimin(5).size() == 31);
    CHECK_THROWS_AS(zimin(0), std::invalid_argument);
    CHECK_THROWS_AS(zimin(27), std::invalid_argument);
}

TEST_CASE("Zimin words have no tangram factors")
{
    for (std::size_t n = 1; n <= 5; ++n) {
        Word z = zimin(n);
        CHECK(z.size() == (std::size_t{1} << n) - 1);
        for (std::size_t i = 1; i <= z.size(); ++i)
            for (std::size_t m = 1; i + m - 1 <= z.size(); ++m)
                CHECK_FALSE(oracle::is_tangram(oracle::letters_of(z.factor(i, m))));
    }
}

TEST_CASE("periodic Zimin prefixes")
{
    CHECK(format_word(zimin_periodic_prefix(2, 6)) == "ababab");
    CHECK(format_word(zimin_periodic_prefix(3, 8)) == "abacabac");
    CHECK_THROWS_AS(zimin_periodic_prefix(1, 4), std::invalid_argument);

    for (std::size_t q = 2; q <= 5; ++q) {
        const std::size_t bound = std::size_t{1} << q;
        auto lengths = tangram_factor_lengths(zimin_periodic_prefix(q, 4 * bound));
        REQUIRE_FALSE(lengths.empty());
        CHECK(*std::min_element(lengths.begin(), lengths.end()) == bound);
    }
}

TEST_CASE("ternary square-free words")
{
    CHECK(format_word(ternary_square_free(10)) == "abcacbabcb");
    CHECK(ternary_square_free(0).empty());
    for (std::size_t n : {1u, 2u, 5u, 37u, 100u, 300u})
        CHECK(is_square_free(ternary_square_free(n)));
    CHECK_FALSE(oracle::has_square_factor(oracle::letters_of(ternary_square_free(100))));
}

TEST_CASE("every binary word longer than three contains a square")
{
    for (auto &letters : oracle::all_words(2, 4))
        CHECK(oracle::has_square_factor(letters));
}

TEST_CASE("Pansiot prefix")
{
    Word p = pansiot_prefix();
    CHECK(p.size() == 28);
    CHECK(p.alphabet_size() == 4);
    CHECK(format_word(p.factor(9, 8)) == "dabcdacb");
    CHECK(cut_number(p.factor(9, 8)).value() == 3u);
    // The prefix as given repeats cd at distance 4 < (5/2)*2.
    auto check = dejean_check(p, 4);
    CHECK_FALSE(check.ok);
    REQUIRE(check.violation);
    CHECK(check.violation->first == 8);
    CHECK(check.violation->second == 12);
    CHECK(check.violation->length == 2);
}

TEST_CASE("Dejean thresholds and checks")
{
    CHECK(dejean_threshold(5) == Threshold{4, 1});
    CHECK(dejean_threshold(4) == Threshold{5, 2});
    CHECK(dejean_threshold(3) == Threshold{4, 3});
    CHECK_THROWS_AS(dejean_threshold(1), std::invalid_argument);

    auto aa = dejean_check(parse_word("aa", TextEncoding::letters, 5), 5);
    CHECK_FALSE(aa.ok);
    REQUIRE(aa.violation);
    CHECK(aa.violation->length == 1);
    CHECK(aa.violation->distance() == 1);

    CHECK(dejean_check(parse_word("abcdea"), 5).ok);
    CHECK_FALSE(dejean_check(parse_word("abcdab"), 5).ok);
}

TEST_CASE("Dejean check agrees with the pairwise oracle")
{
    std::mt19937_64 rng(17);
    int positives = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const std::size_t r = 3 + rng() % 4;
        // Mostly permutation-like words so that both outcomes occur.
        std::vector<Letter> letters;
        const std::size_t length = 1 + rng() % 60;
        while (letters.size() < length) {
            Letter l = static_cast<Letter>(rng() % r);
            if (rng() % 4 != 0 && letters.size() >= 1 && l == letters.back())
                continue;
            letters.push_back(l);
        }
        Threshold t = dejean_threshold(r);
        bool expected = oracle::repetition_threshold_holds(letters, t.num, t.den);
        positives += expected;
        CHECK(dejean_check(Word(letters, r), r).ok == expected);
    }
    // Dejean words found by search are positives for the oracle too.
    for (std::size_t r = 5; r <= 6; ++r) {
        auto found = dejean_search(r, 60);
        REQUIRE(found.status == SearchStatus::found);
        CHECK(oracle::repetition_threshold_holds(oracle::letters_of(found.word), r - 1, 1));
    }
    CHECK(positives > 0);
}

TEST_CASE("Dejean search")
{
    auto one = dejean_search(5, 1);
    REQUIRE(one.status == SearchStatus::found);
    CHECK(format_word(one.word) == "a");

    auto fifty = dejean_search(5, 50);
    REQUIRE(fifty.status == SearchStatus::found);
    CHECK(fifty.word.size() == 50);
    CHECK(dejean_check(fifty.word, 5).ok);

    CHECK(dejean_search(5, 50, 10).status == SearchStatus::budget_exhausted);
    // Two letters cannot avoid repeats at distance >= 2|F| for long.
    CHECK(dejean_search(2, 10).status == SearchStatus::found);
    CHECK(dejean_search(3, 10).status == SearchStatus::found);
}

TEST_CASE("product words")
{
    Word v = parse_word("ab");
    Word w = Word({0, 1}, 2);
    Word x = product_word(v, w);
    CHECK(x.alphabet_size() == 4);
    CHECK(x == Word({0 * 2 + 0, 1 * 2 + 1}, 4));
    CHECK(project_first(x, 2) == v);
    CHECK(project_second(x, 2) == w);
    CHECK_THROWS_AS(product_word(parse_word("abc"), w), std::invalid_argument);
}

TEST_CASE("factors of a product with small cut number project to such factors")
{
    std::mt19937_64 rng(23);
    int witnessed = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 4 + rng() % 9;
        Word v(oracle::random_word(rng, 2, n), 2);
        Word w(oracle::random_word(rng, 2, n), 2);
        Word x = product_word(v, w);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t m = 2; i + m - 1 <= n; m += 2) {
                auto mu = cut_number(x.factor(i, m), {.max_cuts = 3}).value();
                if (!mu)
                    continue;
                ++witnessed;
                // Any certificate for the product is a certificate for both
                // coordinates at the same positions.
                auto fv = cut_number(v.factor(i, m), {.max_cuts = *mu}).value();
                auto fw = cut_number(w.factor(i, m), {.max_cuts = *mu}).value();
                CHECK(fv);
                CHECK(fw);
                CHECK(verify_cutting(v.factor(i, m), cut_number(x.factor(i, m)).cutting));
            }
    }
    CHECK(witnessed > 0);
}
