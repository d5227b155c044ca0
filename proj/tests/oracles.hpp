// oracles.hpp -- slow, direct reference implementations used only by tests.
//
// Nothing here shares code with the library's search paths; each oracle
// follows the plain definition by enumeration.

#pragma once

#include "tangram/word.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using tangram::Letter;
using Letters = std::vector<Letter>;

inline Letters letters_of(const tangram::Word &word)
{
    return Letters(word.begin(), word.end());
}

inline bool is_tangram(const Letters &w)
{
    std::map<Letter, int> counts;
    for (Letter l : w)
        ++counts[l];
    for (auto &[letter, count] : counts)
        if (count % 2)
            return false;
    return true;
}

// Pieces for a bitmask of cut positions (bit p-1 set = cut after p).
inline std::vector<Letters> pieces_for_mask(const Letters &w, std::uint32_t mask)
{
    std::vector<Letters> pieces(1);
    for (std::size_t i = 0; i < w.size(); ++i) {
        pieces.back().push_back(w[i]);
        if (i + 1 < w.size() && (mask >> i) & 1u)
            pieces.emplace_back();
    }
    return pieces;
}

// Some permutation and split point make the two halves equal.
inline bool arrangeable(const std::vector<Letters> &pieces)
{
    std::vector<std::size_t> order(pieces.size());
    std::iota(order.begin(), order.end(), 0);
    do {
        Letters joined;
        std::vector<std::size_t> boundaries;
        for (std::size_t index : order) {
            joined.insert(joined.end(), pieces[index].begin(), pieces[index].end());
            boundaries.push_back(joined.size());
        }
        const std::size_t half = joined.size() / 2;
        bool boundary_at_half = std::find(boundaries.begin(), boundaries.end() - 1, half) !=
                                boundaries.end() - 1;
        if (joined.size() % 2 == 0 && boundary_at_half &&
            std::equal(joined.begin(), joined.begin() + half, joined.begin() + half))
            return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

/// Cut number by enumerating every cut set and every permutation.
/// Nothing for non-tangrams or when no k <= max_k works.
inline std::optional<std::size_t> cut_number(const Letters &w, std::size_t max_k = 64)
{
    if (w.empty() || !is_tangram(w))
        return std::nullopt;
    const std::size_t n = w.size();
    for (std::size_t k = 1; k < n && k <= max_k; ++k)
        for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask)
            if (static_cast<std::size_t>(__builtin_popcount(mask)) == k &&
                arrangeable(pieces_for_mask(w, mask)))
                return k;
    return std::nullopt;
}

/// Split number by enumerating cut sets and all 2-colourings of pieces.
inline std::optional<std::size_t> split_number(const Letters &w)
{
    if (w.empty() || !is_tangram(w))
        return std::nullopt;
    const std::size_t n = w.size();
    for (std::size_t k = 1; k < n; ++k)
        for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcount(mask)) != k)
                continue;
            auto pieces = pieces_for_mask(w, mask);
            for (std::uint32_t colour = 0; colour < (1u << pieces.size()); ++colour) {
                std::map<Letter, int> balance;
                for (std::size_t p = 0; p < pieces.size(); ++p)
                    for (Letter l : pieces[p])
                        balance[l] += (colour >> p) & 1u ? 1 : -1;
                if (std::all_of(balance.begin(), balance.end(),
                                [](auto &e) { return e.second == 0; }))
                    return k;
            }
        }
    return std::nullopt;
}

/// True iff the pieces can be matched into pairs of equal pieces, i.e.
/// they fit some Gauss pattern.
inline bool gauss_pattern(const std::vector<Letters> &pieces)
{
    std::map<Letters, int> counts;
    for (auto &p : pieces)
        ++counts[p];
    return std::all_of(counts.begin(), counts.end(), [](auto &e) { return e.second % 2 == 0; });
}

/// Least s with a factorization into 2s pieces whose pattern is a Gauss word.
inline std::optional<std::size_t> min_gauss_pairs(const Letters &w)
{
    if (w.empty() || !is_tangram(w))
        return std::nullopt;
    const std::size_t n = w.size();
    std::optional<std::size_t> best;
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        auto pieces = pieces_for_mask(w, mask);
        if (pieces.size() % 2 == 0 && gauss_pattern(pieces)) {
            std::size_t s = pieces.size() / 2;
            if (!best || s < *best)
                best = s;
        }
    }
    return best;
}

/// Every factor with two occurrences repeats at distance >= num/den * |F|,
/// by comparing all pairs of occurrences of all factors.
inline bool repetition_threshold_holds(const Letters &w, std::size_t num, std::size_t den)
{
    const std::size_t n = w.size();
    for (std::size_t m = 1; m <= n; ++m)
        for (std::size_t i = 0; i + m <= n; ++i)
            for (std::size_t j = i + 1; j + m <= n; ++j)
                if (std::equal(w.begin() + i, w.begin() + i + m, w.begin() + j) &&
                    (j - i) * den < num * m)
                    return false;
    return true;
}

/// All words of the given length over q letters, in lexicographic order.
inline std::vector<Letters> all_words(std::size_t q, std::size_t length)
{
    std::vector<Letters> out;
    Letters w(length, 0);
    while (true) {
        out.push_back(w);
        std::size_t i = length;
        while (i > 0 && w[i - 1] == q - 1)
            w[--i] = 0;
        if (i == 0)
            break;
        ++w[i - 1];
    }
    return out;
}

inline bool has_square_factor(const Letters &w)
{
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t m = 1; i + 2 * m <= w.size(); ++m)
            if (std::equal(w.begin() + i, w.begin() + i + m, w.begin() + i + m))
                return true;
    return false;
}

inline Letters random_word(std::mt19937_64 &rng, std::size_t q, std::size_t length)
{
    std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(q - 1));
    Letters w(length);
    for (auto &l : w)
        l = letter(rng);
    return w;
}

/// First factor (by end, then shortest) with cut number at most k, as a
/// 0-based (start, length) pair.
inline std::optional<std::pair<std::size_t, std::size_t>> small_cut_factor(const Letters &w,
                                                                           std::size_t k)
{
    for (std::size_t end = 1; end <= w.size(); ++end)
        for (std::size_t length = 1; length <= end; ++length) {
            Letters f(w.begin() + (end - length), w.begin() + end);
            if (auto mu = cut_number(f, k); mu && *mu <= k)
                return std::pair{end - length, length};
        }
    return std::nullopt;
}

/// Letters appear in order of first occurrence: 0, 1, 2, ...
inline bool is_canonical(const Letters &w)
{
    Letter next = 0;
    for (Letter l : w) {
        if (l > next)
            return false;
        if (l == next)
            ++next;
    }
    return true;
}

} // namespace oracle
