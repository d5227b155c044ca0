#include "tangram/cut_number.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace tangram {

namespace {

// Dense relabelling of the letters of one word with prefix letter counts,
// so piece letter counts are O(distinct letters) to read.
class LetterCounts
{
public:
    explicit LetterCounts(std::span<const Letter> word) : _length(word.size())
    {
        std::unordered_map<Letter, std::uint32_t> ids;
        std::vector<std::uint32_t> dense(word.size());
        for (std::size_t i = 0; i < word.size(); ++i) {
            auto [it, inserted] = ids.try_emplace(word[i], static_cast<std::uint32_t>(ids.size()));
            dense[i] = it->second;
        }
        _distinct = ids.size();
        _prefix.assign((_length + 1) * _distinct, 0);
        for (std::size_t i = 0; i < _length; ++i) {
            std::copy_n(&_prefix[i * _distinct], _distinct, &_prefix[(i + 1) * _distinct]);
            ++_prefix[(i + 1) * _distinct + dense[i]];
        }
    }

    std::size_t distinct() const noexcept { return _distinct; }

    /// Occurrences of dense letter `letter` in positions [begin, end).
    std::int32_t count(std::size_t begin, std::size_t end, std::size_t letter) const noexcept
    {
        return _prefix[end * _distinct + letter] - _prefix[begin * _distinct + letter];
    }

    bool all_even() const noexcept
    {
        for (std::size_t t = 0; t < _distinct; ++t)
            if (count(0, _length, t) % 2 != 0)
                return false;
        return true;
    }

private:
    std::size_t _length;
    std::size_t _distinct = 0;
    std::vector<std::int32_t> _prefix;
};

// Piece boundaries: piece i spans [start[i], start[i+1]).
std::vector<std::size_t> piece_starts(std::size_t length, std::span<const std::size_t> cuts)
{
    std::vector<std::size_t> starts;
    starts.reserve(cuts.size() + 2);
    starts.push_back(0);
    for (std::size_t cut : cuts)
        starts.push_back(cut);
    starts.push_back(length);
    return starts;
}

bool cuts_valid(std::size_t length, std::span<const std::size_t> cuts) noexcept
{
    std::size_t previous = 0;
    for (std::size_t cut : cuts) {
        if (cut <= previous || cut >= length)
            return false;
        previous = cut;
    }
    return true;
}

// Decides whether the pieces split into two groups with equal letter
// multisets. Piece 0 is always put in the first group.
class AnagramSplitter
{
public:
    AnagramSplitter(const LetterCounts &counts, std::span<const std::size_t> starts,
                    std::uint64_t node_budget, std::uint64_t &nodes)
      : _counts(counts), _starts(starts), _budget(node_budget), _nodes(nodes),
        _pieces(starts.size() - 1), _target(counts.distinct()), _acc(counts.distinct())
    {
        for (std::size_t t = 0; t < counts.distinct(); ++t)
            _target[t] = counts.count(0, starts.back(), t) / 2;
        _half = starts.back() / 2;
    }

    /// Some grouping exists; `group` holds piece indices of the first group.
    bool solve()
    {
        _group.clear();
        return visit(0, 0);
    }

    bool exhausted() const noexcept { return _exhausted; }
    const std::vector<std::size_t> &group() const noexcept { return _group; }

private:
    bool visit(std::size_t piece, std::size_t length)
    {
        if (++_nodes > _budget) {
            _exhausted = true;
            return false;
        }
        if (length == _half)
            return true;
        if (piece == _pieces)
            return false;

        const std::size_t begin = _starts[piece], end = _starts[piece + 1];
        if (length + (end - begin) <= _half) {
            bool fits = true;
            for (std::size_t t = 0; t < _acc.size(); ++t) {
                _acc[t] += _counts.count(begin, end, t);
                fits = fits && _acc[t] <= _target[t];
            }
            if (fits) {
                _group.push_back(piece);
                if (visit(piece + 1, length + (end - begin)))
                    return true;
                _group.pop_back();
            }
            for (std::size_t t = 0; t < _acc.size(); ++t)
                _acc[t] -= _counts.count(begin, end, t);
            if (_exhausted)
                return false;
        }
        if (piece == 0)
            return false;
        return visit(piece + 1, length);
    }

    const LetterCounts &_counts;
    std::span<const std::size_t> _starts;
    std::uint64_t _budget;
    std::uint64_t &_nodes;
    std::size_t _pieces;
    std::size_t _half = 0;
    std::vector<std::int32_t> _target;
    std::vector<std::int32_t> _acc;
    std::vector<std::size_t> _group;
    bool _exhausted = false;
};

// Two-row arrangement search. Rows are built left to right; the shorter row
// is always extended by an unused piece, which must agree with the overhang
// of the longer row. Equal pieces are interchangeable, so within a class of
// equal pieces only the lowest unused index is ever placed, which makes the
// used-piece mask canonical. Failed (mask, overhang) states are memoized.
class ArrangementSearch
{
public:
    ArrangementSearch(std::span<const Letter> word, std::span<const std::size_t> starts,
                      std::uint64_t node_budget, std::uint64_t &nodes)
      : _word(word), _starts(starts), _budget(node_budget), _nodes(nodes),
        _pieces(starts.size() - 1)
    {
        if (_pieces > 64)
            throw std::length_error("arrangement search supports at most 64 pieces");
        _class_of.assign(_pieces, 0);
        for (std::size_t i = 0; i < _pieces; ++i) {
            std::size_t found = _classes.size();
            for (std::size_t c = 0; c < _classes.size(); ++c)
                if (equal_pieces(_classes[c].front(), i)) {
                    found = c;
                    break;
                }
            if (found == _classes.size())
                _classes.emplace_back();
            _classes[found].push_back(i);
            _class_of[i] = found;
        }
        _used_in_class.assign(_classes.size(), 0);
    }

    std::optional<Cutting> solve(std::span<const std::size_t> cuts)
    {
        if (!extend(0, none, 0))
            return std::nullopt;
        Cutting cutting;
        cutting.cuts.assign(cuts.begin(), cuts.end());
        for (auto [piece, top] : _placed)
            if (top)
                cutting.sigma.push_back(piece + 1);
        cutting.split = cutting.sigma.size();
        for (auto [piece, top] : _placed)
            if (!top)
                cutting.sigma.push_back(piece + 1);
        return cutting;
    }

    bool exhausted() const noexcept { return _exhausted; }

private:
    static constexpr std::size_t none = ~std::size_t{0};

    struct Key
    {
        std::uint64_t mask;
        std::uint64_t overhang;
        bool operator==(const Key &) const = default;
    };

    struct KeyHash
    {
        std::size_t operator()(const Key &key) const noexcept
        {
            return std::hash<std::uint64_t>()(key.mask * 0x9e3779b97f4a7c15ull ^ key.overhang);
        }
    };

    std::size_t length(std::size_t piece) const noexcept
    {
        return _starts[piece + 1] - _starts[piece];
    }

    bool equal_pieces(std::size_t a, std::size_t b) const noexcept
    {
        return length(a) == length(b) &&
               std::equal(_word.begin() + static_cast<std::ptrdiff_t>(_starts[a]),
                          _word.begin() + static_cast<std::ptrdiff_t>(_starts[a + 1]),
                          _word.begin() + static_cast<std::ptrdiff_t>(_starts[b]));
    }

    // Letters [from, from+count) of piece a equal letters [0, count) of piece b.
    bool agree(std::size_t a, std::size_t from, std::size_t b, std::size_t count) const noexcept
    {
        auto first = _word.begin() + static_cast<std::ptrdiff_t>(_starts[a] + from);
        return std::equal(first, first + static_cast<std::ptrdiff_t>(count),
                          _word.begin() + static_cast<std::ptrdiff_t>(_starts[b]));
    }

    // The longer row overhangs by the suffix of piece `over` from `offset`;
    // `over == none` means both rows have equal length. `top_ahead` records
    // which row is longer, for the certificate only.
    bool extend(std::uint64_t mask, std::size_t over, std::size_t offset, bool top_ahead = true)
    {
        if (++_nodes > _budget) {
            _exhausted = true;
            return false;
        }
        const std::uint64_t full = _pieces == 64 ? ~std::uint64_t{0}
                                                 : (std::uint64_t{1} << _pieces) - 1;
        if (mask == full)
            return over == none;

        Key key{mask, over == none ? ~std::uint64_t{0}
                                   : (std::uint64_t{_class_of[over]} << 32) | offset};
        if (_failed.contains(key))
            return false;

        for (std::size_t c = 0; c < _classes.size(); ++c) {
            if (_used_in_class[c] == _classes[c].size())
                continue;
            const std::size_t piece = _classes[c][_used_in_class[c]];
            const std::size_t piece_length = length(piece);
            const std::uint64_t next_mask = mask | (std::uint64_t{1} << piece);

            std::size_t next_over;
            std::size_t next_offset;
            bool next_top_ahead;
            bool on_top;
            if (over == none) {
                on_top = true;
                next_over = piece;
                next_offset = 0;
                next_top_ahead = true;
            } else {
                const std::size_t overhang = length(over) - offset;
                on_top = !top_ahead;
                if (piece_length <= overhang) {
                    if (!agree(over, offset, piece, piece_length))
                        continue;
                    next_over = piece_length == overhang ? none : over;
                    next_offset = offset + piece_length;
                    next_top_ahead = top_ahead;
                } else {
                    if (!agree(over, offset, piece, overhang))
                        continue;
                    next_over = piece;
                    next_offset = overhang;
                    next_top_ahead = !top_ahead;
                }
            }

            ++_used_in_class[c];
            _placed.emplace_back(piece, on_top);
            if (extend(next_mask, next_over, next_offset, next_top_ahead))
                return true;
            _placed.pop_back();
            --_used_in_class[c];
            if (_exhausted)
                return false;
        }
        _failed.insert(key);
        return false;
    }

    std::span<const Letter> _word;
    std::span<const std::size_t> _starts;
    std::uint64_t _budget;
    std::uint64_t &_nodes;
    std::size_t _pieces;
    std::vector<std::vector<std::size_t>> _classes;
    std::vector<std::size_t> _class_of;
    std::vector<std::size_t> _used_in_class;
    std::vector<std::pair<std::size_t, bool>> _placed;
    std::unordered_set<Key, KeyHash> _failed;
    bool _exhausted = false;
};

// Advances `cuts` to the next k-subset of [1, length-1] in lexicographic
// order. Returns false after the last one.
bool next_cut_set(std::vector<std::size_t> &cuts, std::size_t length)
{
    const std::size_t k = cuts.size();
    for (std::size_t i = k; i-- > 0;) {
        // Largest value allowed at slot i is length - 1 - (k - 1 - i).
        if (cuts[i] < length - k + i) {
            ++cuts[i];
            for (std::size_t t = i + 1; t < k; ++t)
                cuts[t] = cuts[t - 1] + 1;
            return true;
        }
    }
    return false;
}

std::size_t cut_limit(std::size_t length, const SolverOptions &options)
{
    std::size_t limit = length - 1;
    if (options.max_cuts)
        limit = std::min(limit, *options.max_cuts);
    return limit;
}

} // namespace

const char *to_string(SolveStatus status) noexcept
{
    switch (status) {
    case SolveStatus::found: return "found";
    case SolveStatus::not_tangram: return "not_tangram";
    case SolveStatus::exceeds_limit: return "exceeds_limit";
    case SolveStatus::budget_exhausted: return "budget_exhausted";
    }
    return "unknown";
}

std::vector<Word> cut_pieces(const Word &word, std::span<const std::size_t> cuts)
{
    if (!cuts_valid(word.size(), cuts))
        throw std::invalid_argument("cuts must be strictly increasing interior positions");
    auto starts = piece_starts(word.size(), cuts);
    std::vector<Word> pieces;
    for (std::size_t i = 0; i + 1 < starts.size(); ++i)
        pieces.push_back(word.factor(starts[i] + 1, starts[i + 1] - starts[i]));
    return pieces;
}

bool verify_cutting(std::span<const Letter> word, const Cutting &cutting)
{
    const std::size_t k = cutting.cuts.size();
    if (k == 0 || !cuts_valid(word.size(), cutting.cuts))
        return false;
    if (cutting.sigma.size() != k + 1 || cutting.split < 1 || cutting.split > k)
        return false;
    std::vector<bool> seen(k + 2, false);
    for (std::size_t index : cutting.sigma) {
        if (index < 1 || index > k + 1 || seen[index])
            return false;
        seen[index] = true;
    }
    auto starts = piece_starts(word.size(), cutting.cuts);
    auto concat = [&](std::size_t from, std::size_t to) {
        std::vector<Letter> out;
        for (std::size_t t = from; t < to; ++t) {
            std::size_t piece = cutting.sigma[t] - 1;
            out.insert(out.end(), word.begin() + static_cast<std::ptrdiff_t>(starts[piece]),
                       word.begin() + static_cast<std::ptrdiff_t>(starts[piece + 1]));
        }
        return out;
    };
    return concat(0, cutting.split) == concat(cutting.split, k + 1);
}

bool verify_cutting(const Word &word, const Cutting &cutting)
{
    return verify_cutting(word.letters(), cutting);
}

std::optional<Cutting> find_arrangement(std::span<const Letter> word,
                                        std::span<const std::size_t> cuts,
                                        std::uint64_t node_budget,
                                        std::uint64_t &nodes,
                                        bool &exhausted)
{
    exhausted = false;
    if (cuts.empty() || !cuts_valid(word.size(), cuts))
        return std::nullopt;
    auto starts = piece_starts(word.size(), cuts);
    ArrangementSearch search(word, starts, node_budget, nodes);
    auto result = search.solve(cuts);
    exhausted = search.exhausted();
    return result;
}

CutResult cut_number(std::span<const Letter> word, const SolverOptions &options)
{
    if (word.empty())
        throw std::invalid_argument("cut number of the empty word is undefined");
    CutResult result;
    LetterCounts counts(word);
    if (!counts.all_even()) {
        result.status = SolveStatus::not_tangram;
        return result;
    }

    const std::size_t n = word.size();
    const std::size_t limit = cut_limit(n, options);
    const std::uint64_t budget = options.node_budget;
    std::uint64_t &nodes = result.nodes;

    for (std::size_t k = 1; k <= limit; ++k) {
        std::vector<std::size_t> cuts(k);
        std::iota(cuts.begin(), cuts.end(), std::size_t{1});
        do {
            if (++nodes > budget) {
                result.status = SolveStatus::budget_exhausted;
                return result;
            }
            auto starts = piece_starts(n, cuts);
            AnagramSplitter splitter(counts, starts, budget, nodes);
            if (!splitter.solve()) {
                if (splitter.exhausted()) {
                    result.status = SolveStatus::budget_exhausted;
                    return result;
                }
                continue;
            }
            ArrangementSearch search(word, starts, budget, nodes);
            auto cutting = search.solve(cuts);
            if (cutting) {
                result.status = SolveStatus::found;
                result.cut_number = k;
                result.cutting = std::move(*cutting);
                return result;
            }
            if (search.exhausted()) {
                result.status = SolveStatus::budget_exhausted;
                return result;
            }
        } while (next_cut_set(cuts, n));
    }
    result.status = SolveStatus::exceeds_limit;
    return result;
}

CutResult cut_number(const Word &word, const SolverOptions &options)
{
    return cut_number(word.letters(), options);
}

SplitResult split_number(const Word &word, const SolverOptions &options)
{
    if (word.empty())
        throw std::invalid_argument("split number of the empty word is undefined");
    SplitResult result;
    LetterCounts counts(word.letters());
    if (!counts.all_even()) {
        result.status = SolveStatus::not_tangram;
        return result;
    }

    const std::size_t n = word.size();
    const std::size_t limit = cut_limit(n, options);
    std::uint64_t &nodes = result.nodes;
    for (std::size_t k = 1; k <= limit; ++k) {
        std::vector<std::size_t> cuts(k);
        std::iota(cuts.begin(), cuts.end(), std::size_t{1});
        do {
            if (++nodes > options.node_budget) {
                result.status = SolveStatus::budget_exhausted;
                return result;
            }
            auto starts = piece_starts(n, cuts);
            AnagramSplitter splitter(counts, starts, options.node_budget, nodes);
            if (splitter.solve()) {
                result.status = SolveStatus::found;
                result.split_number = k;
                result.certificate.cuts = cuts;
                for (std::size_t piece : splitter.group())
                    result.certificate.first_group.push_back(piece + 1);
                return result;
            }
            if (splitter.exhausted()) {
                result.status = SolveStatus::budget_exhausted;
                return result;
            }
        } while (next_cut_set(cuts, n));
    }
    result.status = SolveStatus::exceeds_limit;
    return result;
}

bool verify_split(const Word &word, const SplitCertificate &certificate)
{
    if (certificate.cuts.empty() || !cuts_valid(word.size(), certificate.cuts))
        return false;
    const std::size_t pieces = certificate.cuts.size() + 1;
    auto starts = piece_starts(word.size(), certificate.cuts);
    std::vector<bool> in_first(pieces, false);
    for (std::size_t index : certificate.first_group) {
        if (index < 1 || index > pieces || in_first[index - 1])
            return false;
        in_first[index - 1] = true;
    }
    std::unordered_map<Letter, std::int64_t> balance;
    for (std::size_t piece = 0; piece < pieces; ++piece)
        for (std::size_t i = starts[piece]; i < starts[piece + 1]; ++i)
            balance[word[i]] += in_first[piece] ? 1 : -1;
    return std::all_of(balance.begin(), balance.end(),
                       [](const auto &entry) { return entry.second == 0; });
}

} // namespace tangram
