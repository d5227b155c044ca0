// codec.hpp -- entropy-compression encoder: repeatedly strip short-cut
// suffixes and log enough to rebuild them

#pragma once

#include "tangram/cut_number.hpp"
#include "tangram/word.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tangram {

/// Thrown when the cut-number solver runs out of budget while encoding.
class BudgetExhausted : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Thrown on a log or residual that no input could have produced.
class InconsistentLog : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// max(2, ceil(k log2 k)).
std::size_t default_min_length(std::size_t k);

struct CodecParams
{
    std::size_t alphabet_size = 2;
    std::size_t k = 1;
    std::size_t min_length = 2; ///< removed suffixes have at least this length
    std::uint64_t node_budget = default_node_budget;

    /// Parameters with `min_length` defaulted from k. Throws
    /// `std::invalid_argument` on invalid values.
    static CodecParams with_default_min_length(std::size_t alphabet_size, std::size_t k);

    /// Throws `std::invalid_argument` unless alphabet_size >= 1, k >= 1 and
    /// min_length >= 2.
    void validate() const;
};

/// One removal: at step `step` the suffix F of length `length` was cut at
/// `cuts` (positions inside F) into pieces with F_sigma(1)..F_sigma(split)
/// == F_sigma(split+1).. == `half`.
struct LogEntry
{
    std::size_t step = 0;
    std::size_t length = 0;
    std::vector<std::size_t> cuts;
    std::vector<std::size_t> sigma;
    std::size_t split = 0;
    std::vector<Letter> half;

    bool operator==(const LogEntry &) const = default;
};

/// The removed suffix described by an entry. Throws `InconsistentLog` if
/// the entry is malformed.
std::vector<Letter> rebuild_suffix(const LogEntry &entry);

struct Encoding
{
    std::size_t input_length = 0;
    std::vector<Letter> residual;
    std::vector<LogEntry> log;

    std::size_t total_removed() const noexcept;
    bool operator==(const Encoding &) const = default;
};

/// Appends the input letter by letter; whenever the current word has a
/// suffix F with |F| >= min_length and cut number <= k, the shortest such
/// suffix is logged and removed. Throws `std::invalid_argument` if the
/// input does not fit the alphabet and `BudgetExhausted` if a cut number
/// cannot be decided.
Encoding encode(const Word &input, const CodecParams &params);

/// Inverse of `encode`, replaying the steps backwards. Throws
/// `InconsistentLog` if the encoding is not well formed.
Word decode(const Encoding &encoding, const CodecParams &params);

/// Deterministic binary layout, see docs/codec-format.md.
std::string serialize(const Encoding &encoding, const CodecParams &params);

struct Decoded
{
    CodecParams params;
    Encoding encoding;
};

/// Throws `InconsistentLog` on malformed or truncated input.
Decoded deserialize(const std::string &bytes);

/// f(1), ..., f(N): numbers of nonempty words of length at most n over q
/// letters with no factor of length >= min_length and cut number <= k.
/// Throws `BudgetExhausted` if a cut number cannot be decided.
std::vector<std::uint64_t> count_avoiders(std::size_t q, std::size_t min_length, std::size_t k,
                                          std::size_t max_length,
                                          std::uint64_t node_budget = default_node_budget);

} // namespace tangram
