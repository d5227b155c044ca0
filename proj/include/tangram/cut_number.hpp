// cut_number.hpp -- exact cut number and split number of tangrams

#pragma once

#include "tangram/word.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tangram {

/// Default limit on search states explored by one solver call.
inline constexpr std::uint64_t default_node_budget = 100'000'000;

/// Certificate that a word T can be cut into k+1 pieces F_1 ... F_{k+1}
/// which rearrange into two copies of one word:
///
///     F_sigma(1) ... F_sigma(j) == F_sigma(j+1) ... F_sigma(k+1)
///
/// `cuts` are interior positions (a cut at p separates letters p and p+1,
/// 1-based), strictly increasing. `sigma` is a 1-based permutation of
/// [k+1] and `split` is j, in [1, k].
struct Cutting
{
    std::vector<std::size_t> cuts;
    std::vector<std::size_t> sigma;
    std::size_t split = 0;

    std::size_t cut_count() const noexcept { return cuts.size(); }
    bool operator==(const Cutting &) const = default;
};

/// Pieces F_1 ... F_{k+1} induced by the cut positions. Throws
/// `std::invalid_argument` if the cuts are not strictly increasing interior
/// positions.
std::vector<Word> cut_pieces(const Word &word, std::span<const std::size_t> cuts);

/// True iff the cutting is well formed for `word` and its arranged halves
/// are letter-for-letter equal. Never throws.
bool verify_cutting(const Word &word, const Cutting &cutting);
bool verify_cutting(std::span<const Letter> word, const Cutting &cutting);

enum class SolveStatus
{
    found,            ///< a minimal certificate was found
    not_tangram,      ///< the value is infinite
    exceeds_limit,    ///< proved that no value up to the requested limit exists
    budget_exhausted, ///< ran out of nodes before deciding
};

const char *to_string(SolveStatus status) noexcept;

struct SolverOptions
{
    /// Largest number of cuts to try; defaults to |T| - 1.
    std::optional<std::size_t> max_cuts;
    std::uint64_t node_budget = default_node_budget;
};

struct CutResult
{
    SolveStatus status = SolveStatus::not_tangram;
    std::size_t cut_number = 0;
    Cutting cutting;
    std::uint64_t nodes = 0;

    /// The cut number when found, nothing otherwise.
    std::optional<std::size_t> value() const
    {
        if (status == SolveStatus::found)
            return cut_number;
        return std::nullopt;
    }
};

/// Least k such that the word splits by k cuts into pieces arranging into
/// UU, searching k = 1, 2, ... up to `max_cuts`.
///
/// For each k, cut sets are visited in lexicographic order and the first
/// one admitting an arrangement wins, so certificates are reproducible.
/// Throws `std::invalid_argument` for the empty word.
CutResult cut_number(const Word &word, const SolverOptions &options = {});
CutResult cut_number(std::span<const Letter> word, const SolverOptions &options = {});

/// Arrangement of the pieces given by fixed cuts into two equal rows, if
/// one exists. `nodes` is incremented by the states visited; the search
/// gives up (returning nothing and setting `exhausted`) once it exceeds
/// `node_budget`.
std::optional<Cutting> find_arrangement(std::span<const Letter> word,
                                        std::span<const std::size_t> cuts,
                                        std::uint64_t node_budget,
                                        std::uint64_t &nodes,
                                        bool &exhausted);

/// Certificate for the split number: the pieces listed in `first_group`
/// (1-based indices) have the same letter multiset as the remaining ones.
struct SplitCertificate
{
    std::vector<std::size_t> cuts;
    std::vector<std::size_t> first_group;
};

struct SplitResult
{
    SolveStatus status = SolveStatus::not_tangram;
    std::size_t split_number = 0;
    SplitCertificate certificate;
    std::uint64_t nodes = 0;

    std::optional<std::size_t> value() const
    {
        if (status == SolveStatus::found)
            return split_number;
        return std::nullopt;
    }
};

/// Least number of cuts after which the pieces form two groups that are
/// anagrams of each other. Throws `std::invalid_argument` for the empty word.
SplitResult split_number(const Word &word, const SolverOptions &options = {});

/// True iff the split certificate is valid for `word`.
bool verify_split(const Word &word, const SplitCertificate &certificate);

} // namespace tangram
