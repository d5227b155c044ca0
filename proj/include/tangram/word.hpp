// word.hpp -- words over small integer alphabets, parity vectors and
// factor utilities

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tangram {

/// Index of a letter in the alphabet.
using Letter = std::uint32_t;

/// A finite word w_1 w_2 ... w_n over the alphabet {0, 1, ..., q-1}.
///
/// Positions in the public API are 1-based, matching the usual convention
/// for occurrences of factors. The empty word is a valid value.
class Word
{
public:
    Word() = default;

    /// Throws `std::invalid_argument` if `alphabet_size` is zero or some
    /// letter is not below it.
    Word(std::vector<Letter> letters, std::size_t alphabet_size);

    Word(std::initializer_list<Letter> letters, std::size_t alphabet_size)
      : Word(std::vector<Letter>(letters), alphabet_size)
    {
    }

    /// Builds a word whose alphabet size is one more than the largest letter
    /// (1 for the empty word).
    static Word from_letters(std::vector<Letter> letters);

    std::size_t size() const noexcept { return _letters.size(); }
    bool empty() const noexcept { return _letters.empty(); }
    std::size_t alphabet_size() const noexcept { return _alphabet_size; }

    Letter operator[](std::size_t index) const noexcept { return _letters[index]; }
    std::span<const Letter> letters() const noexcept { return _letters; }

    auto begin() const noexcept { return _letters.begin(); }
    auto end() const noexcept { return _letters.end(); }

    /// Factor of length `length` starting at 1-based `position`.
    Word factor(std::size_t position, std::size_t length) const;

    /// Same word over a larger alphabet.
    Word with_alphabet(std::size_t alphabet_size) const;

    void push_back(Letter letter);
    void pop_back() noexcept { _letters.pop_back(); }

    Word operator+(const Word &other) const;

    bool operator==(const Word &other) const noexcept
    {
        return _letters == other._letters;
    }

private:
    std::vector<Letter> _letters;
    std::size_t _alphabet_size = 1;
};

/// Occurrence of a factor: 1-based start position and length.
struct Occurrence
{
    std::size_t position = 0;
    std::size_t length = 0;

    bool operator==(const Occurrence &) const = default;
};

/// Per-letter occurrence parities of a word, an element of Z_2^q.
/// Stored as a bitmask, so alphabets larger than 64 letters are rejected.
class ParityVector
{
public:
    static constexpr std::size_t max_dimension = 64;

    explicit ParityVector(std::size_t dimension, std::uint64_t bits = 0);

    std::size_t dimension() const noexcept { return _dimension; }
    std::uint64_t bits() const noexcept { return _bits; }
    bool bit(std::size_t letter) const noexcept { return (_bits >> letter) & 1u; }
    bool is_zero() const noexcept { return _bits == 0; }

    void flip(Letter letter) noexcept { _bits ^= std::uint64_t{1} << letter; }

    ParityVector operator^(const ParityVector &other) const;
    bool operator==(const ParityVector &other) const noexcept = default;

private:
    std::size_t _dimension;
    std::uint64_t _bits;
};

/// Bit t is the parity of the number of occurrences of letter t.
ParityVector parity_vector(const Word &word);

/// True iff every letter occurs an even number of times. Works for any
/// alphabet size; the empty word is a tangram.
bool is_tangram(const Word &word);
bool is_tangram(std::span<const Letter> letters);

/// Tangram factor found by comparing prefix parity vectors.
///
/// A zero prefix parity, or two prefixes with the same parity, delimit a
/// tangram. The reported factor is the one ending earliest; among those the
/// latest possible start is used (the shortest such factor). Always returns
/// an occurrence when |W| >= 2^q.
std::optional<Occurrence> find_tangram_prefix_parity(const Word &word);

/// True iff the word is UU for some nonempty U.
bool is_square(std::span<const Letter> letters);
bool is_square(const Word &word);

/// Leftmost-ending square factor, if any.
std::optional<Occurrence> find_square(const Word &word);
bool is_square_free(const Word &word);

/// True iff some suffix is a square. Appending a letter to a square-free
/// word keeps it square-free exactly when this is false.
bool has_square_suffix(std::span<const Letter> letters);

/// All 1-based start positions of `pattern` in `word`, increasing.
/// Throws `std::invalid_argument` for an empty pattern.
std::vector<std::size_t> occurrences(const Word &word, const Word &pattern);

/// Minimal distance j - i between consecutive occurrences, or nothing if
/// the pattern occurs fewer than two times.
std::optional<std::size_t> min_repeat_distance(const Word &word,
                                               const Word &pattern);

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

/// How words are written as text.
///
/// - letters: `a`..`z` map to 0..25
/// - digits:  `0`..`9` map to 0..9
/// - ints:    comma-separated nonnegative integers
enum class TextEncoding
{
    automatic,
    letters,
    digits,
    ints,
};

/// Parses a word. With `automatic`, a string made only of digits is read
/// as digits, otherwise as letters. The alphabet size is the larger of
/// `min_alphabet` and one more than the largest letter seen.
///
/// Throws `std::invalid_argument` on characters outside the chosen format.
Word parse_word(std::string_view text,
                TextEncoding encoding = TextEncoding::automatic,
                std::size_t min_alphabet = 1);

/// Formats a word. `automatic` picks letters when every letter is below 26
/// and ints otherwise. Throws `std::invalid_argument` when a letter does
/// not fit the requested glyph set.
std::string format_word(const Word &word,
                        TextEncoding encoding = TextEncoding::automatic);

/// Encoding actually used by `parse_word` for this text.
TextEncoding detect_encoding(std::string_view text, TextEncoding requested);

} // namespace tangram
