// avoidance.hpp -- k-tangram-free words: checking and extremal search

#pragma once

#include "tangram/cut_number.hpp"
#include "tangram/word.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace tangram {

/// A factor with cut number at most k, with its certificate.
struct TangramWitness
{
    std::size_t position = 0; ///< 1-based start
    std::size_t length = 0;
    std::size_t cut_number = 0;
    Cutting cutting;
};

enum class FreenessStatus
{
    free,
    contains,
    inconclusive, ///< some factor could not be decided within the budget
};

const char *to_string(FreenessStatus status) noexcept;

struct FreenessResult
{
    FreenessStatus status = FreenessStatus::free;
    std::optional<TangramWitness> witness;
    std::size_t undecided = 0; ///< factors whose cut number was not settled
    std::uint64_t nodes = 0;

    bool is_free() const noexcept { return status == FreenessStatus::free; }
};

/// Whether no factor of `word` has cut number <= k. Factors are scanned by
/// end position, shortest first; the first one found is the witness.
/// `factor_budget` bounds the solver on each factor. Throws
/// `std::invalid_argument` for k == 0.
FreenessResult is_k_tangram_free(const Word &word, std::size_t k,
                                 std::uint64_t factor_budget = default_node_budget);

struct AvoidanceInstance
{
    std::size_t alphabet_size = 2;
    std::size_t k = 1;
    std::size_t target = 16;
    /// Explore the whole tree up to `target` instead of stopping at the
    /// first word of that length.
    bool exhaustive = false;
    std::uint64_t node_budget = default_node_budget;
    std::uint64_t factor_budget = 1'000'000;
    std::size_t threads = 1;
};

enum class AvoidanceStatus
{
    found,        ///< a word of the target length exists
    max_length,   ///< every such word has length at most `max_length` < target
    inconclusive, ///< budget exhausted or some factor undecided
};

const char *to_string(AvoidanceStatus status) noexcept;

struct AvoidanceOutcome
{
    AvoidanceStatus status = AvoidanceStatus::inconclusive;
    /// Lexicographically least word of the target length (found) or of the
    /// maximal length reached (otherwise).
    Word word;
    std::size_t max_length = 0;
    std::uint64_t nodes = 0;
    /// survivors[d] = number of canonical k-tangram-free words of length d
    /// visited; complete for exhaustive runs.
    std::vector<std::uint64_t> survivors;
    std::size_t undecided = 0;
    bool budget_exhausted = false;
};

/// Depth-first search over words in canonical form (each new letter is at
/// most one more than the largest letter used so far), letters tried in
/// increasing order and only suffixes ending at the new letter rechecked.
/// Outcomes do not depend on the thread count. Throws
/// `std::invalid_argument` unless 1 <= alphabet_size <= 64, k >= 1 and
/// threads >= 1.
AvoidanceOutcome search_k_tangram_free(const AvoidanceInstance &instance);

struct T2Report
{
    bool ok = true;
    std::uint64_t square_free_words = 0; ///< canonical words enumerated
    std::optional<Word> counterexample;
    bool long_word_free = false;
};

/// Every square-free ternary word of length <= `length` (up to renaming
/// letters) has no factor with cut number 2, and a square-free ternary word
/// of length 200 is 2-tangram-free. Throws `std::invalid_argument` for
/// lengths above 20.
T2Report verify_t2_is_3(std::size_t length);

} // namespace tangram
