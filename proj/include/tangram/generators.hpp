// generators.hpp -- Zimin words, square-free words, Dejean words and the
// product construction

#pragma once

#include "tangram/word.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>

namespace tangram {

/// Z_1 = a_1, Z_n = Z_{n-1} a_n Z_{n-1}, over letters 0..n-1. Length 2^n - 1.
/// Throws `std::invalid_argument` unless 1 <= n <= 26.
Word zimin(std::size_t n);

/// Prefix of length `length` of the periodic word (Z_{q-1} a_q)(Z_{q-1} a_q)...
/// over q letters. Throws `std::invalid_argument` unless 2 <= q <= 26.
Word zimin_periodic_prefix(std::size_t q, std::size_t length);

/// Prefix of the fixed point of a -> abc, b -> ac, c -> b, which is
/// square-free.
Word ternary_square_free(std::size_t length);

/// The 28-letter prefix abcadbacdabcdacbdcadbacdabca of Pansiot's quaternary
/// word with repetition threshold 7/5.
Word pansiot_prefix();

/// Minimal admissible repeat distance as a multiple num/den of |F|.
struct Threshold
{
    std::size_t num = 1;
    std::size_t den = 1;

    /// distance >= (num/den) * length, exactly.
    bool admits(std::size_t distance, std::size_t length) const noexcept
    {
        return distance * den >= num * length;
    }

    bool operator==(const Threshold &) const = default;
};

/// r - 1 for r >= 5 (and r = 2), 5/2 for r = 4 and 4/3 for r = 3.
/// Throws `std::invalid_argument` for r < 2.
Threshold dejean_threshold(std::size_t r);

/// A factor repeating too soon: occurrences at `first` < `second`.
struct RepeatViolation
{
    std::size_t first = 0;
    std::size_t second = 0;
    std::size_t length = 0;

    std::size_t distance() const noexcept { return second - first; }
};

/// First (by end of the later occurrence, then shortest factor) pair of
/// occurrences closer than the threshold allows, if any.
std::optional<RepeatViolation> find_repeat_violation(const Word &word, Threshold threshold);

/// Violation whose later occurrence is a suffix of the word. Appending a
/// letter to a word without violations keeps it clean iff this is empty.
std::optional<RepeatViolation> find_suffix_repeat_violation(std::span<const Letter> word,
                                                            Threshold threshold);

struct DejeanCheck
{
    bool ok = true;
    std::optional<RepeatViolation> violation;
};

/// Every repeated factor F occurs again only at distance >= threshold(r)*|F|.
DejeanCheck dejean_check(const Word &word, std::size_t r);

enum class SearchStatus
{
    found,
    exhausted,        ///< the whole tree was explored without success
    budget_exhausted,
};

const char *to_string(SearchStatus status) noexcept;

struct DejeanSearchResult
{
    SearchStatus status = SearchStatus::exhausted;
    Word word;
    std::uint64_t nodes = 0;
};

/// Lexicographically least word of the given length over r letters passing
/// `dejean_check(., r)`, by backtracking. Throws `std::invalid_argument`
/// for r < 2.
DejeanSearchResult dejean_search(std::size_t r, std::size_t length,
                                 std::uint64_t node_budget = 100'000'000);

/// Letter i is the pair (v_i, w_i), encoded as v_i * q_W + w_i over an
/// alphabet of q_V * q_W letters. Throws `std::invalid_argument` on a
/// length mismatch.
Word product_word(const Word &v, const Word &w);

/// First and second coordinates of a product word whose second factor had
/// `second_alphabet` letters.
Word project_first(const Word &product, std::size_t second_alphabet);
Word project_second(const Word &product, std::size_t second_alphabet);

} // namespace tangram
