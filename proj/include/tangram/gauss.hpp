// gauss.hpp -- factorization patterns, Gauss factorizations and the
// twin-distance bound

#pragma once

#include "tangram/cut_number.hpp"
#include "tangram/word.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tangram {

/// Symbol sequence of a factorization F_1 ... F_n; equal symbols stand for
/// equal factors. Symbols are numbered 0, 1, ... in order of first
/// occurrence.
struct FactorizationPattern
{
    std::vector<std::size_t> symbols;

    std::size_t size() const noexcept { return symbols.size(); }

    /// Every symbol occurs exactly twice.
    bool is_gauss() const;

    /// The pattern has the form HH.
    bool is_square() const;

    /// Upper-case rendering, "ABAB" for the pattern of a|b|a|b.
    std::string to_string() const;

    bool operator==(const FactorizationPattern &) const = default;
};

/// Equality pattern of the factorization with the given 1-based factor
/// start positions (the first must be 1): p_i == p_j iff F_i == F_j.
/// Throws `std::invalid_argument` if the positions do not induce nonempty
/// factors.
FactorizationPattern pattern_of(const Word &word, std::span<const std::size_t> starts);

/// Start positions for a factorization given by cut positions.
std::vector<std::size_t> starts_from_cuts(std::span<const std::size_t> cuts);

/// A pair of equal factors G_first == G_second == twin (1-based indices).
struct TwinPair
{
    std::size_t first = 0;
    std::size_t second = 0;
    Word twin;
};

/// T = G_1 G_2 ... G_{2s} with a Gauss pattern: the factors are matched
/// into s pairs of equal words. Factors in different pairs may be equal.
struct GaussFactorization
{
    std::size_t length = 0;          ///< |T|
    std::vector<std::size_t> starts; ///< 1-based start of each G_i
    FactorizationPattern pattern;
    std::vector<TwinPair> twins;     ///< ordered by first occurrence

    std::size_t pairs() const noexcept { return twins.size(); }
    std::size_t factor_length(std::size_t index) const; ///< 1-based
};

/// Gauss factorization for the given starts pairing the occurrences of
/// each distinct factor in order (first with second, third with fourth,
/// ...), or nothing if some factor occurs an odd number of times.
std::optional<GaussFactorization> gauss_factorization(const Word &word,
                                                      std::span<const std::size_t> starts);

/// Gauss factorization with an explicit pattern, or nothing if the pattern
/// is not a Gauss word of the right size or pairs unequal factors.
std::optional<GaussFactorization> gauss_factorization(const Word &word,
                                                      std::span<const std::size_t> starts,
                                                      const FactorizationPattern &pattern);

/// Every Gauss factorization with these starts, one per pairing of equal
/// factors.
std::vector<GaussFactorization> gauss_factorizations(const Word &word,
                                                     std::span<const std::size_t> starts);

/// True iff `g` is a consistent Gauss factorization of `word`.
bool verify_gauss(const Word &word, const GaussFactorization &g);

struct GaussResult
{
    SolveStatus status = SolveStatus::not_tangram;
    std::size_t pairs = 0;
    GaussFactorization factorization;
    std::uint64_t nodes = 0;

    std::optional<std::size_t> value() const
    {
        if (status == SolveStatus::found)
            return pairs;
        return std::nullopt;
    }
};

/// Least s such that the word has a Gauss factorization into 2s factors.
/// `max_pairs` defaults to ceil(|T|/2). Factorizations are explored left to
/// right in lexicographic order of factor lengths. Throws
/// `std::invalid_argument` for the empty word.
GaussResult min_gauss_pairs(const Word &word,
                            std::optional<std::size_t> max_pairs = std::nullopt,
                            std::uint64_t node_budget = default_node_budget);

struct TwinWitness
{
    std::size_t pair_index = 0; ///< 0-based index into `twins`
    std::size_t distance = 0;   ///< start(second) - start(first)
    std::size_t bound = 0;      ///< s * |X|
};

/// The twin pair with the smallest ratio distance / |X| (first such pair on
/// ties). Its distance is at most s|X|, and strictly below unless the
/// pattern is a square and all factors have equal length.
TwinWitness twin_distance_witness(const GaussFactorization &g);

/// True iff the pattern is a square and all factors have the same length,
/// the only case where the twin-distance bound can be attained.
bool twin_bound_equality_case(const GaussFactorization &g);

// ---------------------------------------------------------------------------
// Segments with endpoints partitioning [2n]
// ---------------------------------------------------------------------------

/// Segments [a, b] of integers whose 2n endpoints are exactly 1, ..., 2n.
class SegmentFamily
{
public:
    /// Throws `std::invalid_argument` unless a < b for every segment and the
    /// endpoints are pairwise distinct and cover [2n].
    explicit SegmentFamily(std::vector<std::pair<std::size_t, std::size_t>> segments);

    const auto &segments() const noexcept { return _segments; }
    std::size_t size() const noexcept { return _segments.size(); }

private:
    std::vector<std::pair<std::size_t, std::size_t>> _segments;
};

/// Sum of geometric lengths b - a.
std::size_t interval_sum(const SegmentFamily &family);

struct IntervalLemmaReport
{
    std::size_t n = 0;
    std::uint64_t pairings = 0;   ///< (2n-1)!! families checked
    std::size_t max_sum = 0;
    std::size_t bound = 0;        ///< n^2
    std::uint64_t at_bound = 0;   ///< families whose sum equals n^2
    bool holds = true;
};

/// Enumerates every pairing of [2n] into n segments and checks that the
/// interval sum never exceeds n^2.
IntervalLemmaReport verify_interval_lemma(std::size_t n);

} // namespace tangram
