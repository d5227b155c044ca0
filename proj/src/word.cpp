#include "tangram/word.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <unordered_map>

namespace tangram {

Word::Word(std::vector<Letter> letters, std::size_t alphabet_size)
  : _letters(std::move(letters)), _alphabet_size(alphabet_size)
{
    if (alphabet_size == 0)
        throw std::invalid_argument("alphabet size must be positive");
    for (Letter letter : _letters)
        if (letter >= alphabet_size)
            throw std::invalid_argument("letter " + std::to_string(letter) +
                                        " outside alphabet of size " +
                                        std::to_string(alphabet_size));
}

Word Word::from_letters(std::vector<Letter> letters)
{
    std::size_t q = 1;
    for (Letter letter : letters)
        q = std::max<std::size_t>(q, std::size_t{letter} + 1);
    return Word(std::move(letters), q);
}

Word Word::factor(std::size_t position, std::size_t length) const
{
    if (position == 0 || position - 1 + length > _letters.size())
        throw std::out_of_range("factor outside word");
    auto first = _letters.begin() + static_cast<std::ptrdiff_t>(position - 1);
    return Word(std::vector<Letter>(first, first + static_cast<std::ptrdiff_t>(length)),
                _alphabet_size);
}

Word Word::with_alphabet(std::size_t alphabet_size) const
{
    return Word(_letters, alphabet_size);
}

void Word::push_back(Letter letter)
{
    if (letter >= _alphabet_size)
        throw std::invalid_argument("letter outside alphabet");
    _letters.push_back(letter);
}

Word Word::operator+(const Word &other) const
{
    std::vector<Letter> joined = _letters;
    joined.insert(joined.end(), other._letters.begin(), other._letters.end());
    return Word(std::move(joined), std::max(_alphabet_size, other._alphabet_size));
}

ParityVector::ParityVector(std::size_t dimension, std::uint64_t bits)
  : _dimension(dimension), _bits(bits)
{
    if (dimension > max_dimension)
        throw std::invalid_argument("parity vectors support at most 64 letters");
    if (dimension < max_dimension && (bits >> dimension) != 0)
        throw std::invalid_argument("parity bits outside dimension");
}

ParityVector ParityVector::operator^(const ParityVector &other) const
{
    if (_dimension != other._dimension)
        throw std::invalid_argument("parity vector dimensions differ");
    return ParityVector(_dimension, _bits ^ other._bits);
}

ParityVector parity_vector(const Word &word)
{
    ParityVector parity(word.alphabet_size());
    for (Letter letter : word)
        parity.flip(letter);
    return parity;
}

bool is_tangram(std::span<const Letter> letters)
{
    // Count letters whose running parity is odd; works for any alphabet.
    std::unordered_map<Letter, bool> odd;
    std::size_t odd_count = 0;
    for (Letter letter : letters) {
        bool &flag = odd[letter];
        flag = !flag;
        odd_count = flag ? odd_count + 1 : odd_count - 1;
    }
    return odd_count == 0;
}

bool is_tangram(const Word &word)
{
    if (word.alphabet_size() <= ParityVector::max_dimension)
        return parity_vector(word).is_zero();
    return is_tangram(word.letters());
}

std::optional<Occurrence> find_tangram_prefix_parity(const Word &word)
{
    // Latest prefix length seen with each parity; the empty prefix has 0.
    std::unordered_map<std::uint64_t, std::size_t> last_seen;
    last_seen[0] = 0;
    ParityVector parity(word.alphabet_size());
    for (std::size_t end = 1; end <= word.size(); ++end) {
        parity.flip(word[end - 1]);
        auto it = last_seen.find(parity.bits());
        if (it != last_seen.end())
            return Occurrence{it->second + 1, end - it->second};
        last_seen[parity.bits()] = end;
    }
    return std::nullopt;
}

bool is_square(std::span<const Letter> letters)
{
    const std::size_t n = letters.size();
    if (n < 2 || n % 2 != 0)
        return false;
    return std::equal(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(n / 2),
                      letters.begin() + static_cast<std::ptrdiff_t>(n / 2));
}

bool is_square(const Word &word) { return is_square(word.letters()); }

bool has_square_suffix(std::span<const Letter> letters)
{
    const std::size_t n = letters.size();
    for (std::size_t half = 1; 2 * half <= n; ++half)
        if (is_square(letters.subspan(n - 2 * half)))
            return true;
    return false;
}

std::optional<Occurrence> find_square(const Word &word)
{
    auto letters = word.letters();
    for (std::size_t end = 2; end <= letters.size(); ++end) {
        auto prefix = letters.first(end);
        for (std::size_t half = 1; 2 * half <= end; ++half)
            if (is_square(prefix.subspan(end - 2 * half)))
                return Occurrence{end - 2 * half + 1, 2 * half};
    }
    return std::nullopt;
}

bool is_square_free(const Word &word) { return !find_square(word).has_value(); }

std::vector<std::size_t> occurrences(const Word &word, const Word &pattern)
{
    if (pattern.empty())
        throw std::invalid_argument("pattern must be nonempty");
    std::vector<std::size_t> positions;
    if (pattern.size() > word.size())
        return positions;
    for (std::size_t start = 0; start + pattern.size() <= word.size(); ++start)
        if (std::equal(pattern.begin(), pattern.end(),
                       word.begin() + static_cast<std::ptrdiff_t>(start)))
            positions.push_back(start + 1);
    return positions;
}

std::optional<std::size_t> min_repeat_distance(const Word &word, const Word &pattern)
{
    auto positions = occurrences(word, pattern);
    if (positions.size() < 2)
        return std::nullopt;
    std::size_t best = positions[1] - positions[0];
    for (std::size_t i = 2; i < positions.size(); ++i)
        best = std::min(best, positions[i] - positions[i - 1]);
    return best;
}

TextEncoding detect_encoding(std::string_view text, TextEncoding requested)
{
    if (requested != TextEncoding::automatic)
        return requested;
    bool all_digits = std::all_of(text.begin(), text.end(),
                                  [](char c) { return c >= '0' && c <= '9'; });
    return all_digits ? TextEncoding::digits : TextEncoding::letters;
}

Word parse_word(std::string_view text, TextEncoding encoding, std::size_t min_alphabet)
{
    std::vector<Letter> letters;
    switch (detect_encoding(text, encoding)) {
    case TextEncoding::letters:
        for (char c : text) {
            if (c < 'a' || c > 'z')
                throw std::invalid_argument(std::string("invalid letter '") + c + "'");
            letters.push_back(static_cast<Letter>(c - 'a'));
        }
        break;
    case TextEncoding::digits:
        for (char c : text) {
            if (c < '0' || c > '9')
                throw std::invalid_argument(std::string("invalid digit '") + c + "'");
            letters.push_back(static_cast<Letter>(c - '0'));
        }
        break;
    case TextEncoding::ints: {
        std::size_t start = 0;
        while (start <= text.size() && !text.empty()) {
            std::size_t comma = text.find(',', start);
            if (comma == std::string_view::npos)
                comma = text.size();
            auto token = text.substr(start, comma - start);
            Letter value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
                throw std::invalid_argument("invalid integer '" + std::string(token) + "'");
            letters.push_back(value);
            start = comma + 1;
        }
        break;
    }
    case TextEncoding::automatic:
        break;
    }
    Word word = Word::from_letters(std::move(letters));
    if (word.alphabet_size() < min_alphabet)
        return word.with_alphabet(min_alphabet);
    return word;
}

std::string format_word(const Word &word, TextEncoding encoding)
{
    if (encoding == TextEncoding::automatic) {
        bool fits = std::all_of(word.begin(), word.end(), [](Letter l) { return l < 26; });
        encoding = fits ? TextEncoding::letters : TextEncoding::ints;
    }
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        Letter letter = word[i];
        switch (encoding) {
        case TextEncoding::letters:
            if (letter >= 26)
                throw std::invalid_argument("letter does not fit a-z");
            out.push_back(static_cast<char>('a' + letter));
            break;
        case TextEncoding::digits:
            if (letter >= 10)
                throw std::invalid_argument("letter does not fit 0-9");
            out.push_back(static_cast<char>('0' + letter));
            break;
        default:
            if (i > 0)
                out.push_back(',');
            out += std::to_string(letter);
            break;
        }
    }
    return out;
}

} // namespace tangram
