#include "doctest.h"
#include "oracles.hpp"

#include "tangram/codec.hpp"

#include <random>
#include <set>

using namespace tangram;

namespace {

// Some factor of length >= min_length has cut number <= k.
bool has_qualifying_factor(const oracle::Letters &w, std::size_t min_length, std::size_t k)
{
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t m = min_length; i + m <= w.size(); ++m)
            if (auto mu = oracle::cut_number(oracle::Letters(w.begin() + i, w.begin() + i + m), k))
                return true;
    return false;
}

void check_encoding(const Word &x, const CodecParams &params)
{
    Encoding e = encode(x, params);
    CHECK(e.input_length == x.size());
    CHECK(e.residual.size() + e.total_removed() == x.size());
    for (std::size_t i = 0; i < e.log.size(); ++i) {
        const auto &entry = e.log[i];
        CHECK(entry.length >= params.min_length);
        CHECK(entry.length % 2 == 0);
        CHECK(entry.cuts.size() <= params.k);
        if (i > 0)
            CHECK(entry.step > e.log[i - 1].step);
        auto suffix = rebuild_suffix(entry);
        CHECK(verify_cutting(Word(suffix, params.alphabet_size),
                             Cutting{entry.cuts, entry.sigma, entry.split}));
    }
    CHECK(decode(e, params) == x);
}

} // namespace

TEST_CASE("default minimum length")
{
    CHECK(default_min_length(1) == 2);
    CHECK(default_min_length(2) == 2);
    CHECK(default_min_length(3) == 5);
    CHECK(default_min_length(4) == 8);
    CHECK(default_min_length(8) == 24);
    CHECK(CodecParams::with_default_min_length(4, 3).min_length == 5);
    CHECK_THROWS_AS(CodecParams::with_default_min_length(0, 3), std::invalid_argument);
    CHECK_THROWS_AS((CodecParams{2, 1, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((CodecParams{2, 0, 2}.validate()), std::invalid_argument);
}

TEST_CASE("hand-traced encodings")
{
    const CodecParams params{2, 1, 2};
    Encoding e = encode(parse_word("00", TextEncoding::digits, 2), params);
    CHECK(e.residual.empty());
    REQUIRE(e.log.size() == 1);
    CHECK(e.log[0].step == 2);
    CHECK(e.log[0].length == 2);
    CHECK(e.log[0].cuts == std::vector<std::size_t>{1});
    CHECK(e.log[0].half == std::vector<Letter>{0});
    CHECK(rebuild_suffix(e.log[0]) == std::vector<Letter>{0, 0});
    CHECK(decode(e, params) == parse_word("00", TextEncoding::digits, 2));

    Word abc = parse_word("abcabc"); // only the whole word is a tangram
    Encoding untouched = encode(abc, {3, 1, 8});
    CHECK(untouched.log.empty());
    CHECK(untouched.residual == std::vector<Letter>(abc.begin(), abc.end()));
    CHECK(decode(untouched, {3, 1, 8}) == abc);

    // abcabc is a square, removed at the sixth letter.
    Encoding square = encode(abc, {3, 1, 2});
    CHECK(square.residual.empty());
    REQUIRE(square.log.size() == 1);
    CHECK(square.log[0].step == 6);
    CHECK(square.log[0].half == std::vector<Letter>{0, 1, 2});
}

TEST_CASE("encoding rejects inputs outside the alphabet")
{
    CHECK_THROWS_AS(encode(parse_word("abc"), {2, 1, 2}), std::invalid_argument);
}

TEST_CASE("round trips and residuals on random inputs")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 1500; ++trial) {
        const std::size_t q = 1 + rng() % 4;
        const std::size_t k = 1 + rng() % 3;
        const std::size_t min_length = 2 + rng() % 6;
        const CodecParams params{q, k, min_length};
        Word x(oracle::random_word(rng, q, rng() % 25), q);
        CAPTURE(format_word(x));
        check_encoding(x, params);
        if (trial % 10 == 0) {
            auto residual = encode(x, params).residual;
            CHECK_FALSE(has_qualifying_factor(residual, min_length, k));
        }
    }
}

TEST_CASE("encoding is injective on all short binary inputs")
{
    for (const CodecParams params : {CodecParams{2, 1, 2}, CodecParams{2, 2, 4}, CodecParams{2, 3, 2}}) {
        std::set<std::string> images;
        std::size_t inputs = 0;
        for (std::size_t n = 0; n <= 8; ++n)
            for (auto &letters : oracle::all_words(2, n)) {
                Word x(letters, 2);
                Encoding e = encode(x, params);
                CHECK(decode(e, params) == x);
                images.insert(serialize(e, params));
                ++inputs;
            }
        CHECK(images.size() == inputs);
    }
}

TEST_CASE("serialization")
{
    const CodecParams params{3, 2, 4};
    Encoding e = encode(parse_word("abcacbcbaabcc"), params);
    std::string bytes = serialize(e, params);
    CHECK(bytes.substr(0, 4) == "TGCL");
    CHECK(bytes[4] == 1);
    Decoded back = deserialize(bytes);
    CHECK(back.encoding == e);
    CHECK(back.params.alphabet_size == 3);
    CHECK(back.params.k == 2);
    CHECK(back.params.min_length == 4);
    CHECK(serialize(back.encoding, back.params) == bytes);

    CHECK_THROWS_AS(deserialize("XXXX"), InconsistentLog);
    CHECK_THROWS_AS(deserialize(bytes.substr(0, bytes.size() - 1)), InconsistentLog);
    CHECK_THROWS_AS(deserialize(bytes + "x"), InconsistentLog);
    std::string versioned = bytes;
    versioned[4] = 2;
    CHECK_THROWS_AS(deserialize(versioned), InconsistentLog);
}

TEST_CASE("inconsistent logs are rejected")
{
    const CodecParams params{2, 1, 2};
    Encoding e = encode(parse_word("0110", TextEncoding::digits, 2), params);
    REQUIRE_FALSE(e.log.empty());

    Encoding longer = e;
    ++longer.input_length;
    CHECK_THROWS_AS(decode(longer, params), InconsistentLog);

    Encoding shorter_half = e;
    shorter_half.log[0].half.pop_back();
    CHECK_THROWS_AS(decode(shorter_half, params), InconsistentLog);

    Encoding late = e;
    late.log[0].step = e.input_length + 1;
    CHECK_THROWS_AS(decode(late, params), InconsistentLog);

    Encoding extra = e;
    extra.residual.push_back(0);
    CHECK_THROWS_AS(decode(extra, params), InconsistentLog);

    Encoding bad_sigma = e;
    bad_sigma.log[0].sigma = {1, 1};
    CHECK_THROWS_AS(decode(bad_sigma, params), InconsistentLog);

    CHECK_THROWS_AS(decode(e, CodecParams{2, 1, 4}), InconsistentLog);
}

TEST_CASE("budget exhaustion aborts encoding")
{
    CHECK_THROWS_AS(encode(parse_word("tuteurer"), {26, 4, 8, 1}), BudgetExhausted);
}

TEST_CASE("avoider counts")
{
    CHECK(count_avoiders(1, 2, 1, 3) == std::vector<std::uint64_t>{1, 1, 1});
    CHECK(count_avoiders(2, 2, 1, 4) == std::vector<std::uint64_t>{2, 4, 6, 6});

    struct Case
    {
        std::size_t q, min_length, k, n;
    };
    for (Case c : {Case{2, 2, 2, 8}, Case{2, 4, 3, 9}, Case{3, 2, 1, 7}, Case{3, 4, 2, 6}}) {
        std::vector<std::uint64_t> expected;
        std::uint64_t total = 0;
        std::uint64_t untouched = 0;
        for (std::size_t n = 1; n <= c.n; ++n) {
            for (auto &w : oracle::all_words(c.q, n)) {
                bool avoids = !has_qualifying_factor(w, c.min_length, c.k);
                total += avoids;
                bool kept = encode(Word(w, c.q), {c.q, c.k, c.min_length}).log.empty();
                CHECK(kept == avoids);
                untouched += kept;
            }
            expected.push_back(total);
        }
        CHECK(count_avoiders(c.q, c.min_length, c.k, c.n) == expected);
        CHECK(untouched == total);
    }
}
