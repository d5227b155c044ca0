#include "tangram/gauss.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace tangram {

bool FactorizationPattern::is_gauss() const
{
    std::vector<std::size_t> counts;
    for (std::size_t symbol : symbols) {
        if (symbol >= counts.size())
            counts.resize(symbol + 1, 0);
        ++counts[symbol];
    }
    return !symbols.empty() &&
           std::all_of(counts.begin(), counts.end(), [](std::size_t c) { return c == 2; });
}

bool FactorizationPattern::is_square() const
{
    const std::size_t n = symbols.size();
    return n >= 2 && n % 2 == 0 &&
           std::equal(symbols.begin(), symbols.begin() + static_cast<std::ptrdiff_t>(n / 2),
                      symbols.begin() + static_cast<std::ptrdiff_t>(n / 2));
}

std::string FactorizationPattern::to_string() const
{
    std::string out;
    for (std::size_t symbol : symbols) {
        if (symbol < 26)
            out.push_back(static_cast<char>('A' + symbol));
        else
            out += "[" + std::to_string(symbol) + "]";
    }
    return out;
}

std::vector<std::size_t> starts_from_cuts(std::span<const std::size_t> cuts)
{
    std::vector<std::size_t> starts{1};
    for (std::size_t cut : cuts)
        starts.push_back(cut + 1);
    return starts;
}

namespace {

void check_starts(std::size_t length, std::span<const std::size_t> starts)
{
    if (starts.empty() || starts.front() != 1 || length == 0)
        throw std::invalid_argument("factorization must start at position 1");
    for (std::size_t i = 1; i < starts.size(); ++i)
        if (starts[i] <= starts[i - 1] || starts[i] > length)
            throw std::invalid_argument("factor starts must be increasing and inside the word");
}

std::size_t end_of(std::size_t length, std::span<const std::size_t> starts, std::size_t i)
{
    return i + 1 < starts.size() ? starts[i + 1] : length + 1;
}

} // namespace

FactorizationPattern pattern_of(const Word &word, std::span<const std::size_t> starts)
{
    check_starts(word.size(), starts);
    FactorizationPattern pattern;
    std::map<std::vector<Letter>, std::size_t> names;
    for (std::size_t i = 0; i < starts.size(); ++i) {
        auto first = word.begin() + static_cast<std::ptrdiff_t>(starts[i] - 1);
        auto last = word.begin() + static_cast<std::ptrdiff_t>(end_of(word.size(), starts, i) - 1);
        auto [it, inserted] = names.try_emplace(std::vector<Letter>(first, last), names.size());
        pattern.symbols.push_back(it->second);
    }
    return pattern;
}

std::size_t GaussFactorization::factor_length(std::size_t index) const
{
    if (index < 1 || index > starts.size())
        throw std::out_of_range("factor index");
    return end_of(length, starts, index - 1) - starts[index - 1];
}

namespace {

// Pattern naming each pair by the order of its first member.
FactorizationPattern pattern_of_pairs(std::size_t size,
                                      std::vector<std::pair<std::size_t, std::size_t>> pairs)
{
    std::sort(pairs.begin(), pairs.end());
    FactorizationPattern pattern;
    pattern.symbols.assign(size, 0);
    for (std::size_t symbol = 0; symbol < pairs.size(); ++symbol) {
        pattern.symbols[pairs[symbol].first] = symbol;
        pattern.symbols[pairs[symbol].second] = symbol;
    }
    return pattern;
}

// Indices of the factors, grouped by equal factor in order of first
// occurrence.
std::vector<std::vector<std::size_t>> equal_factor_groups(const Word &word,
                                                          std::span<const std::size_t> starts)
{
    auto equality = pattern_of(word, starts);
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < equality.size(); ++i) {
        if (equality.symbols[i] >= groups.size())
            groups.resize(equality.symbols[i] + 1);
        groups[equality.symbols[i]].push_back(i);
    }
    return groups;
}

void enumerate_matchings(const std::vector<std::vector<std::size_t>> &groups, std::size_t group,
                         std::vector<bool> &used,
                         std::vector<std::pair<std::size_t, std::size_t>> &pairs,
                         const std::function<void()> &emit)
{
    if (group == groups.size()) {
        emit();
        return;
    }
    const auto &members = groups[group];
    auto first = std::find_if(members.begin(), members.end(), [&](std::size_t i) { return !used[i]; });
    if (first == members.end()) {
        enumerate_matchings(groups, group + 1, used, pairs, emit);
        return;
    }
    used[*first] = true;
    for (auto partner = first + 1; partner != members.end(); ++partner) {
        if (used[*partner])
            continue;
        used[*partner] = true;
        pairs.emplace_back(*first, *partner);
        enumerate_matchings(groups, group, used, pairs, emit);
        pairs.pop_back();
        used[*partner] = false;
    }
    used[*first] = false;
}

} // namespace

std::optional<GaussFactorization> gauss_factorization(const Word &word,
                                                      std::span<const std::size_t> starts,
                                                      const FactorizationPattern &pattern)
{
    check_starts(word.size(), starts);
    if (pattern.size() != starts.size() || !pattern.is_gauss())
        return std::nullopt;
    GaussFactorization g;
    g.length = word.size();
    g.starts.assign(starts.begin(), starts.end());
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::size_t> first_index(pattern.size(), pattern.size());
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        const std::size_t symbol = pattern.symbols[i];
        if (first_index[symbol] == pattern.size())
            first_index[symbol] = i;
        else
            pairs.emplace_back(first_index[symbol], i);
    }
    for (auto [a, b] : pairs) {
        Word x = word.factor(starts[a], g.factor_length(a + 1));
        if (!(x == word.factor(starts[b], g.factor_length(b + 1))))
            return std::nullopt;
        g.twins.push_back(TwinPair{a + 1, b + 1, std::move(x)});
    }
    std::sort(g.twins.begin(), g.twins.end(),
              [](const TwinPair &a, const TwinPair &b) { return a.first < b.first; });
    g.pattern = pattern_of_pairs(pattern.size(), std::move(pairs));
    return g;
}

std::optional<GaussFactorization> gauss_factorization(const Word &word,
                                                      std::span<const std::size_t> starts)
{
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto &group : equal_factor_groups(word, starts)) {
        if (group.size() % 2 != 0)
            return std::nullopt;
        for (std::size_t i = 0; i < group.size(); i += 2)
            pairs.emplace_back(group[i], group[i + 1]);
    }
    return gauss_factorization(word, starts, pattern_of_pairs(starts.size(), std::move(pairs)));
}

std::vector<GaussFactorization> gauss_factorizations(const Word &word,
                                                     std::span<const std::size_t> starts)
{
    auto groups = equal_factor_groups(word, starts);
    std::vector<GaussFactorization> out;
    for (const auto &group : groups)
        if (group.size() % 2 != 0)
            return out;
    std::vector<bool> used(starts.size(), false);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    enumerate_matchings(groups, 0, used, pairs, [&] {
        out.push_back(*gauss_factorization(word, starts, pattern_of_pairs(starts.size(), pairs)));
    });
    return out;
}

bool verify_gauss(const Word &word, const GaussFactorization &g)
{
    try {
        if (g.length != word.size())
            return false;
        auto rebuilt = gauss_factorization(word, g.starts, g.pattern);
        if (!rebuilt || rebuilt->pattern != g.pattern || rebuilt->twins.size() != g.twins.size())
            return false;
        for (std::size_t i = 0; i < g.twins.size(); ++i)
            if (rebuilt->twins[i].first != g.twins[i].first ||
                rebuilt->twins[i].second != g.twins[i].second ||
                !(rebuilt->twins[i].twin == g.twins[i].twin))
                return false;
        return true;
    } catch (const std::exception &) {
        return false;
    }
}

namespace {

// Depth-first search over factor lengths with twin bookkeeping: every
// distinct factor must end up with an even number of occurrences, so
// factors seen an odd number of times ("open") must still fit in the
// remaining parts and letters.
class GaussSearch
{
public:
    GaussSearch(const Word &word, std::size_t parts, std::uint64_t budget, std::uint64_t &nodes)
      : _word(word), _parts(parts), _budget(budget), _nodes(nodes)
    {
    }

    bool solve() { return visit(0); }
    bool exhausted() const noexcept { return _exhausted; }

    std::vector<std::size_t> starts() const
    {
        std::vector<std::size_t> out;
        for (auto &[start, length] : _factors)
            out.push_back(start + 1);
        return out;
    }

private:
    struct Distinct
    {
        std::size_t start;
        std::size_t length;
        int count;
    };

    bool same(std::size_t a, std::size_t b, std::size_t length) const
    {
        auto w = _word.letters();
        return std::equal(w.begin() + static_cast<std::ptrdiff_t>(a),
                          w.begin() + static_cast<std::ptrdiff_t>(a + length),
                          w.begin() + static_cast<std::ptrdiff_t>(b));
    }

    bool visit(std::size_t position)
    {
        if (++_nodes > _budget) {
            _exhausted = true;
            return false;
        }
        const std::size_t n = _word.size();
        if (position == n)
            return _factors.size() == _parts && _open == 0;
        if (_factors.size() == _parts)
            return false;

        for (std::size_t length = 1; position + length <= n; ++length) {
            std::size_t match = _distinct.size();
            for (std::size_t d = 0; d < _distinct.size(); ++d)
                if (_distinct[d].length == length && same(_distinct[d].start, position, length)) {
                    match = d;
                    break;
                }
            const bool seen = match < _distinct.size();
            const bool closes = seen && _distinct[match].count % 2 == 1;
            const std::size_t open = closes ? _open - 1 : _open + 1;
            const std::size_t open_letters = closes ? _open_letters - length : _open_letters + length;
            const std::size_t used = _factors.size() + 1;
            const std::size_t rest = n - position - length;
            // Every open factor needs its twin among the remaining parts.
            if (used + open > _parts || (_parts - used - open) % 2 != 0 || open_letters > rest)
                continue;
            if (rest > 0 && used == _parts)
                continue;

            if (seen)
                ++_distinct[match].count;
            else
                _distinct.push_back({position, length, 1});
            _factors.emplace_back(position, length);
            _open = open;
            _open_letters = open_letters;

            if (visit(position + length))
                return true;

            _factors.pop_back();
            if (seen)
                --_distinct[match].count;
            else
                _distinct.pop_back();
            _open = closes ? _open + 1 : _open - 1;
            _open_letters = closes ? _open_letters + length : _open_letters - length;
            if (_exhausted)
                return false;
        }
        return false;
    }

    const Word &_word;
    std::size_t _parts;
    std::uint64_t _budget;
    std::uint64_t &_nodes;
    std::vector<std::pair<std::size_t, std::size_t>> _factors;
    std::vector<Distinct> _distinct;
    std::size_t _open = 0;
    std::size_t _open_letters = 0;
    bool _exhausted = false;
};

} // namespace

GaussResult min_gauss_pairs(const Word &word, std::optional<std::size_t> max_pairs,
                            std::uint64_t node_budget)
{
    if (word.empty())
        throw std::invalid_argument("Gauss factorization of the empty word is undefined");
    GaussResult result;
    if (!is_tangram(word)) {
        result.status = SolveStatus::not_tangram;
        return result;
    }
    const std::size_t limit = std::min(max_pairs.value_or((word.size() + 1) / 2),
                                       word.size() / 2);
    for (std::size_t s = 1; s <= limit; ++s) {
        GaussSearch search(word, 2 * s, node_budget, result.nodes);
        if (search.solve()) {
            result.status = SolveStatus::found;
            result.pairs = s;
            result.factorization = *gauss_factorization(word, search.starts());
            return result;
        }
        if (search.exhausted()) {
            result.status = SolveStatus::budget_exhausted;
            return result;
        }
    }
    result.status = SolveStatus::exceeds_limit;
    return result;
}

TwinWitness twin_distance_witness(const GaussFactorization &g)
{
    if (g.twins.empty())
        throw std::invalid_argument("factorization has no twins");
    const std::size_t s = g.pairs();
    TwinWitness best;
    std::size_t best_length = 0;
    for (std::size_t i = 0; i < g.twins.size(); ++i) {
        const auto &pair = g.twins[i];
        const std::size_t distance = g.starts[pair.second - 1] - g.starts[pair.first - 1];
        const std::size_t length = pair.twin.size();
        // distance / length < best.distance / best_length
        if (i == 0 || distance * best_length < best.distance * length) {
            best = TwinWitness{i, distance, s * length};
            best_length = length;
        }
    }
    return best;
}

bool twin_bound_equality_case(const GaussFactorization &g)
{
    if (!g.pattern.is_square())
        return false;
    const std::size_t first = g.factor_length(1);
    for (std::size_t i = 2; i <= g.starts.size(); ++i)
        if (g.factor_length(i) != first)
            return false;
    return true;
}

SegmentFamily::SegmentFamily(std::vector<std::pair<std::size_t, std::size_t>> segments)
  : _segments(std::move(segments))
{
    const std::size_t points = 2 * _segments.size();
    std::vector<bool> seen(points + 1, false);
    for (auto [a, b] : _segments) {
        if (a >= b || a < 1 || b > points)
            throw std::invalid_argument("segment endpoints must satisfy 1 <= a < b <= 2n");
        if (seen[a] || seen[b])
            throw std::invalid_argument("segment endpoints must be pairwise distinct");
        seen[a] = seen[b] = true;
    }
}

std::size_t interval_sum(const SegmentFamily &family)
{
    std::size_t sum = 0;
    for (auto [a, b] : family.segments())
        sum += b - a;
    return sum;
}

namespace {

void enumerate_pairings(std::vector<bool> &used, std::size_t sum, IntervalLemmaReport &report)
{
    const std::size_t points = used.size() - 1;
    std::size_t first = 1;
    while (first <= points && used[first])
        ++first;
    if (first > points) {
        ++report.pairings;
        report.max_sum = std::max(report.max_sum, sum);
        if (sum == report.bound)
            ++report.at_bound;
        if (sum > report.bound)
            report.holds = false;
        return;
    }
    used[first] = true;
    for (std::size_t partner = first + 1; partner <= points; ++partner) {
        if (used[partner])
            continue;
        used[partner] = true;
        enumerate_pairings(used, sum + (partner - first), report);
        used[partner] = false;
    }
    used[first] = false;
}

} // namespace

IntervalLemmaReport verify_interval_lemma(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("n must be positive");
    if (n > 8)
        throw std::invalid_argument("n too large to enumerate all pairings");
    IntervalLemmaReport report;
    report.n = n;
    report.bound = n * n;
    std::vector<bool> used(2 * n + 1, false);
    enumerate_pairings(used, 0, report);
    return report;
}

} // namespace tangram
