#include "tangram/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace tangram {

Word zimin(std::size_t n)
{
    if (n < 1 || n > 26)
        throw std::invalid_argument("Zimin index must be between 1 and 26");
    std::vector<Letter> letters{0};
    for (std::size_t i = 1; i < n; ++i) {
        std::vector<Letter> next = letters;
        next.push_back(static_cast<Letter>(i));
        next.insert(next.end(), letters.begin(), letters.end());
        letters = std::move(next);
    }
    return Word(std::move(letters), n);
}

Word zimin_periodic_prefix(std::size_t q, std::size_t length)
{
    if (q < 2 || q > 26)
        throw std::invalid_argument("alphabet size must be between 2 and 26");
    Word period = zimin(q - 1).with_alphabet(q);
    period.push_back(static_cast<Letter>(q - 1));
    std::vector<Letter> letters(length);
    for (std::size_t i = 0; i < length; ++i)
        letters[i] = period[i % period.size()];
    return Word(std::move(letters), q);
}

Word ternary_square_free(std::size_t length)
{
    static const std::vector<Letter> images[3] = {{0, 1, 2}, {0, 2}, {1}};
    // The fixed point starting with a: expand in place, reading letter i to
    // produce the image that continues the prefix.
    std::vector<Letter> letters{0, 1, 2};
    for (std::size_t read = 1; letters.size() < length; ++read)
        for (Letter l : images[letters[read]])
            letters.push_back(l);
    letters.resize(length);
    return Word(std::move(letters), 3);
}

Word pansiot_prefix()
{
    return parse_word("abcadbacdabcdacbdcadbacdabca", TextEncoding::letters, 4);
}

Threshold dejean_threshold(std::size_t r)
{
    if (r < 2)
        throw std::invalid_argument("alphabet size must be at least 2");
    if (r == 3)
        return {4, 3};
    if (r == 4)
        return {5, 2};
    return {r - 1, 1};
}

std::optional<RepeatViolation> find_suffix_repeat_violation(std::span<const Letter> word,
                                                            Threshold threshold)
{
    const std::size_t n = word.size();
    for (std::size_t m = 1; m < n; ++m) {
        const std::size_t later = n - m;
        // Only earlier starts within the forbidden window matter; the
        // nearest one is found first.
        for (std::size_t earlier = later; earlier-- > 0;) {
            if (threshold.admits(later - earlier, m))
                break;
            if (std::equal(word.begin() + static_cast<std::ptrdiff_t>(earlier),
                           word.begin() + static_cast<std::ptrdiff_t>(earlier + m),
                           word.begin() + static_cast<std::ptrdiff_t>(later)))
                return RepeatViolation{earlier + 1, later + 1, m};
        }
    }
    return std::nullopt;
}

std::optional<RepeatViolation> find_repeat_violation(const Word &word, Threshold threshold)
{
    auto letters = word.letters();
    for (std::size_t end = 2; end <= letters.size(); ++end)
        if (auto violation = find_suffix_repeat_violation(letters.first(end), threshold))
            return violation;
    return std::nullopt;
}

DejeanCheck dejean_check(const Word &word, std::size_t r)
{
    DejeanCheck check;
    check.violation = find_repeat_violation(word, dejean_threshold(r));
    check.ok = !check.violation;
    return check;
}

const char *to_string(SearchStatus status) noexcept
{
    switch (status) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted: return "exhausted";
    case SearchStatus::budget_exhausted: return "budget_exhausted";
    }
    return "unknown";
}

DejeanSearchResult dejean_search(std::size_t r, std::size_t length, std::uint64_t node_budget)
{
    const Threshold threshold = dejean_threshold(r);
    DejeanSearchResult result;
    result.word = Word({}, r);
    std::vector<Letter> letters;
    letters.reserve(length);
    // letters.back() is the candidate under test; on rejection it is
    // advanced, and exhausted positions are popped.
    bool extend = true;
    while (true) {
        if (extend && letters.size() == length) {
            result.status = SearchStatus::found;
            result.word = Word(letters, r);
            return result;
        }
        if (extend) {
            letters.push_back(0);
        } else {
            while (!letters.empty() && letters.back() + 1 == r)
                letters.pop_back();
            if (letters.empty()) {
                result.status = SearchStatus::exhausted;
                return result;
            }
            ++letters.back();
        }
        if (++result.nodes > node_budget) {
            result.status = SearchStatus::budget_exhausted;
            return result;
        }
        extend = !find_suffix_repeat_violation(letters, threshold);
    }
}

Word product_word(const Word &v, const Word &w)
{
    if (v.size() != w.size())
        throw std::invalid_argument("product words need equal lengths");
    const std::size_t qw = w.alphabet_size();
    std::vector<Letter> letters(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        letters[i] = static_cast<Letter>(v[i] * qw + w[i]);
    return Word(std::move(letters), v.alphabet_size() * qw);
}

Word project_first(const Word &product, std::size_t second_alphabet)
{
    std::vector<Letter> letters;
    for (Letter l : product)
        letters.push_back(static_cast<Letter>(l / second_alphabet));
    const std::size_t first_alphabet = (product.alphabet_size() + second_alphabet - 1) / second_alphabet;
    return Word(std::move(letters), first_alphabet);
}

Word project_second(const Word &product, std::size_t second_alphabet)
{
    std::vector<Letter> letters;
    for (Letter l : product)
        letters.push_back(static_cast<Letter>(l % second_alphabet));
    return Word(std::move(letters), second_alphabet);
}

} // namespace tangram
