#include "doctest.h"
#include "oracles.hpp"

#include "tangram/gauss.hpp"

#include <random>

using namespace tangram;

TEST_CASE("factorization patterns")
{
    Word w = Word::from_letters({1, 2, 3, 4, 10, 11, 12, 10, 11, 12, 20, 21, 1, 2, 3, 4, 20, 21});
    // 1234|abc|abc|uv|1234|uv
    auto pattern = pattern_of(w, std::vector<std::size_t>{1, 5, 8, 11, 13, 17});
    CHECK(pattern.symbols == std::vector<std::size_t>{0, 1, 1, 2, 0, 2});
    CHECK(pattern.to_string() == "ABBCAC");
    CHECK(pattern.is_gauss());
    CHECK_FALSE(pattern.is_square());

    CHECK(pattern_of(parse_word("abab"), std::vector<std::size_t>{1}).size() == 1);
    auto square = pattern_of(parse_word("abab"), std::vector<std::size_t>{1, 3});
    CHECK(square.to_string() == "AA");
    CHECK(square.is_square());
    CHECK_THROWS_AS(pattern_of(parse_word("abab"), std::vector<std::size_t>{1, 3, 3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(pattern_of(parse_word("abab"), std::vector<std::size_t>{2}),
                    std::invalid_argument);
}

TEST_CASE("minimal Gauss factorizations")
{
    auto abab = min_gauss_pairs(parse_word("abab"));
    CHECK(abab.value() == 1u);
    CHECK(abab.factorization.pattern.to_string() == "AA");

    // Oracle first: the only factorization of aabb into four pieces.
    REQUIRE(oracle::min_gauss_pairs(oracle::letters_of(parse_word("aabb"))) == 2u);
    auto aabb = min_gauss_pairs(parse_word("aabb"));
    CHECK(aabb.value() == 2u);
    CHECK(aabb.factorization.starts == std::vector<std::size_t>{1, 2, 3, 4});
    CHECK(aabb.factorization.pattern.to_string() == "AABB");
    CHECK(verify_gauss(parse_word("aabb"), aabb.factorization));

    auto tut = min_gauss_pairs(parse_word("tuteurer"));
    REQUIRE(tut.value());
    CHECK(*tut.value() <= 4u);

    CHECK(min_gauss_pairs(parse_word("abc")).status == SolveStatus::not_tangram);
    CHECK(min_gauss_pairs(parse_word("tuteurer"), 1).status == SolveStatus::exceeds_limit);
    CHECK(min_gauss_pairs(parse_word("tuteurer"), std::nullopt, 3).status ==
          SolveStatus::budget_exhausted);
    CHECK_THROWS_AS(min_gauss_pairs(Word({}, 1)), std::invalid_argument);
}

TEST_CASE("Gauss pairs agree with the oracle and sandwich the cut number")
{
    for (std::size_t q = 2; q <= 3; ++q)
        for (std::size_t n = 2; n <= (q == 2 ? 10u : 8u); n += 2)
            for (auto &letters : oracle::all_words(q, n)) {
                Word w(letters, q);
                auto g = min_gauss_pairs(w);
                REQUIRE(g.value() == oracle::min_gauss_pairs(letters));
                if (!g.value())
                    continue;
                CHECK(verify_gauss(w, g.factorization));
                const std::size_t s = *g.value();
                const std::size_t mu = *cut_number(w).value();
                CHECK(s <= mu);
                CHECK(mu <= 2 * s - 1);
            }
}

TEST_CASE("twin distance witness examples")
{
    auto abab = gauss_factorization(parse_word("abab"), std::vector<std::size_t>{1, 2, 3, 4});
    REQUIRE(abab);
    CHECK(abab->pattern.to_string() == "ABAB");
    auto w1 = twin_distance_witness(*abab);
    CHECK(w1.distance == 2);
    CHECK(w1.bound == 2);
    CHECK(twin_bound_equality_case(*abab));

    auto aabb = gauss_factorization(parse_word("aabb"), std::vector<std::size_t>{1, 2, 3, 4});
    REQUIRE(aabb);
    auto w2 = twin_distance_witness(*aabb);
    CHECK(aabb->twins[w2.pair_index].twin == parse_word("a"));
    CHECK(w2.distance == 1);
    CHECK(w2.bound == 2);
    CHECK_FALSE(twin_bound_equality_case(*aabb));

    CHECK_FALSE(gauss_factorization(parse_word("aabb"), std::vector<std::size_t>{1, 3}));
}

TEST_CASE("Gauss patterns may pair equal factors in several ways")
{
    const std::vector<std::size_t> singles{1, 2, 3, 4};
    auto all = gauss_factorizations(parse_word("aaaa"), singles);
    REQUIRE(all.size() == 3);
    std::vector<std::string> patterns;
    for (auto &g : all)
        patterns.push_back(g.pattern.to_string());
    std::sort(patterns.begin(), patterns.end());
    CHECK(patterns == std::vector<std::string>{"AABB", "ABAB", "ABBA"});
    CHECK(gauss_factorization(parse_word("aaaa"), singles)->pattern.to_string() == "AABB");

    auto abab = FactorizationPattern{{0, 1, 0, 1}};
    auto explicit_pairs = gauss_factorization(parse_word("aaaa"), singles, abab);
    REQUIRE(explicit_pairs);
    CHECK(explicit_pairs->pattern == abab);
    CHECK(twin_bound_equality_case(*explicit_pairs));
    CHECK_FALSE(gauss_factorization(parse_word("aabb"), singles, abab));
    CHECK_FALSE(gauss_factorization(parse_word("aaaa"), singles, FactorizationPattern{{0, 0, 0, 0}}));
    CHECK(gauss_factorizations(parse_word("aabbb"), std::vector<std::size_t>{1, 2, 3, 4, 5}).empty());

    // Six single letters: a a a b b a pairs as a|a, a|a and b|b.
    REQUIRE(oracle::min_gauss_pairs(oracle::letters_of(parse_word("aaabba"))) == 3u);
    auto g = min_gauss_pairs(parse_word("aaabba"));
    CHECK(g.value() == 3u);
    CHECK(verify_gauss(parse_word("aaabba"), g.factorization));
}

namespace {

void check_twin_bound(const GaussFactorization &g)
{
    auto witness = twin_distance_witness(g);
    CHECK(witness.distance <= witness.bound);
    if (!twin_bound_equality_case(g))
        CHECK(witness.distance < witness.bound);
}

} // namespace

TEST_CASE("twin distance bound over all Gauss factorizations of short binary words")
{
    std::size_t factorizations = 0;
    for (std::size_t n = 2; n <= 8; ++n)
        for (auto &letters : oracle::all_words(2, n)) {
            Word w(letters, 2);
            for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
                std::vector<std::size_t> starts{1};
                for (std::size_t p = 1; p < n; ++p)
                    if ((mask >> (p - 1)) & 1u)
                        starts.push_back(p + 1);
                for (auto &g : gauss_factorizations(w, starts)) {
                    ++factorizations;
                    CHECK(verify_gauss(w, g));
                    check_twin_bound(g);
                }
            }
        }
    CHECK(factorizations > 0);
}

TEST_CASE("twin distance bound on random Gauss substitutions")
{
    std::mt19937_64 rng(314159);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t s = 1 + rng() % 5;
        std::vector<std::size_t> pattern;
        for (std::size_t symbol = 0; symbol < s; ++symbol)
            pattern.insert(pattern.end(), {symbol, symbol});
        std::shuffle(pattern.begin(), pattern.end(), rng);

        // Distinct random words for distinct symbols.
        std::vector<std::vector<Letter>> images;
        while (images.size() < s) {
            auto image = oracle::random_word(rng, 3, 1 + rng() % 4);
            if (std::find(images.begin(), images.end(), image) == images.end())
                images.push_back(image);
        }
        std::vector<Letter> letters;
        std::vector<std::size_t> starts;
        for (std::size_t symbol : pattern) {
            starts.push_back(letters.size() + 1);
            letters.insert(letters.end(), images[symbol].begin(), images[symbol].end());
        }
        auto g = gauss_factorization(Word(letters, 3), starts);
        REQUIRE(g);
        CHECK(g->pairs() == s);
        check_twin_bound(*g);
    }
}

TEST_CASE("segment families")
{
    CHECK(interval_sum(SegmentFamily({{1, 2}, {3, 4}})) == 2);
    CHECK(interval_sum(SegmentFamily({{1, 4}, {2, 3}})) == 4);
    CHECK(interval_sum(SegmentFamily({{1, 3}, {2, 4}})) == 4);
    CHECK_THROWS_AS(SegmentFamily({{1, 2}, {2, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(SegmentFamily({{1, 5}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(SegmentFamily({{2, 1}, {3, 4}}), std::invalid_argument);
}

TEST_CASE("interval lemma by enumeration")
{
    std::uint64_t double_factorial = 1;
    for (std::size_t n = 1; n <= 6; ++n) {
        double_factorial *= 2 * n - 1;
        auto report = verify_interval_lemma(n);
        CHECK(report.holds);
        CHECK(report.pairings == double_factorial);
        CHECK(report.max_sum == n * n);
        CHECK(report.at_bound > 0);
    }
    CHECK(verify_interval_lemma(5).pairings == 945);
    CHECK_THROWS_AS(verify_interval_lemma(0), std::invalid_argument);
}
