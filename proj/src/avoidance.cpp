#include "tangram/avoidance.hpp"
#include "tangram/generators.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>

namespace tangram {

const char *to_string(FreenessStatus status) noexcept
{
    switch (status) {
    case FreenessStatus::free: return "free";
    case FreenessStatus::contains: return "contains";
    case FreenessStatus::inconclusive: return "inconclusive";
    }
    return "unknown";
}

const char *to_string(AvoidanceStatus status) noexcept
{
    switch (status) {
    case AvoidanceStatus::found: return "found";
    case AvoidanceStatus::max_length: return "max_length";
    case AvoidanceStatus::inconclusive: return "inconclusive";
    }
    return "unknown";
}

FreenessResult is_k_tangram_free(const Word &word, std::size_t k, std::uint64_t factor_budget)
{
    if (k == 0)
        throw std::invalid_argument("k must be positive");
    FreenessResult result;
    const auto letters = word.letters();
    const std::size_t n = letters.size();
    // Counting parities works for any alphabet size.
    std::vector<std::vector<bool>> parity(n + 1, std::vector<bool>(word.alphabet_size(), false));
    for (std::size_t i = 0; i < n; ++i) {
        parity[i + 1] = parity[i];
        parity[i + 1][letters[i]] = !parity[i][letters[i]];
    }
    const SolverOptions options{.max_cuts = k, .node_budget = factor_budget};
    for (std::size_t end = 2; end <= n; ++end)
        for (std::size_t start = end - 2;; start -= 2) {
            if (parity[start] == parity[end]) {
                auto mu = cut_number(letters.subspan(start, end - start), options);
                result.nodes += mu.nodes;
                if (mu.status == SolveStatus::found) {
                    result.status = FreenessStatus::contains;
                    result.witness = TangramWitness{start + 1, end - start, mu.cut_number, mu.cutting};
                    return result;
                }
                if (mu.status == SolveStatus::budget_exhausted)
                    ++result.undecided;
            }
            if (start < 2)
                break;
        }
    result.status = result.undecided ? FreenessStatus::inconclusive : FreenessStatus::free;
    return result;
}

namespace {

enum class Verdict : std::uint8_t
{
    clean,
    small_cut,
    undecided,
};

// Cut-number queries "mu <= k?" memoized up to renaming of letters.
class FactorChecker
{
public:
    FactorChecker(std::size_t k, std::uint64_t budget) : _options{.max_cuts = k, .node_budget = budget} {}

    Verdict check(std::span<const Letter> factor)
    {
        std::string key;
        key.reserve(factor.size());
        Letter rename[64];
        std::fill(std::begin(rename), std::end(rename), std::numeric_limits<Letter>::max());
        Letter next = 0;
        for (Letter l : factor) {
            if (rename[l] == std::numeric_limits<Letter>::max())
                rename[l] = next++;
            key.push_back(static_cast<char>(rename[l]));
        }
        if (auto it = _memo.find(key); it != _memo.end())
            return it->second;
        auto mu = cut_number(factor, _options);
        Verdict verdict = mu.status == SolveStatus::found              ? Verdict::small_cut
                          : mu.status == SolveStatus::budget_exhausted ? Verdict::undecided
                                                                       : Verdict::clean;
        _memo.emplace(std::move(key), verdict);
        return verdict;
    }

private:
    SolverOptions _options;
    std::unordered_map<std::string, Verdict> _memo;
};

struct Subtree
{
    bool found = false;
    bool exhausted = false;
    std::size_t max_depth = 0;
    std::vector<Letter> best;
    std::uint64_t nodes = 0;
    std::vector<std::uint64_t> survivors;
    std::size_t undecided = 0;
    std::vector<std::vector<Letter>> frontier; ///< words reaching the target, when collected
};

class Explorer
{
public:
    Explorer(const AvoidanceInstance &instance, FactorChecker &checker, std::size_t target,
             bool exhaustive, std::uint64_t budget, bool collect)
      : _q(instance.alphabet_size), _target(target), _exhaustive(exhaustive), _budget(budget),
        _collect(collect), _checker(checker)
    {
        _out.survivors.assign(target + 1, 0);
    }

    // Explores below `prefix`, which must be clean; the prefix itself is
    // recorded only when `count_root` is set.
    Subtree run(std::span<const Letter> prefix, bool count_root)
    {
        _parity.assign(1, 0);
        _max_used.assign(1, -1);
        for (Letter l : prefix)
            push(l);
        visit(count_root);
        return std::move(_out);
    }

private:
    void push(Letter l)
    {
        _letters.push_back(l);
        _parity.push_back(_parity.back() ^ (std::uint64_t{1} << l));
        _max_used.push_back(std::max<int>(_max_used.back(), static_cast<int>(l)));
    }

    void pop()
    {
        _letters.pop_back();
        _parity.pop_back();
        _max_used.pop_back();
    }

    bool suffixes_clean()
    {
        const std::size_t n = _letters.size();
        const std::uint64_t last = _parity[n];
        for (std::size_t start = n - 2; n >= 2; start -= 2) {
            if (_parity[start] == last) {
                Verdict verdict = _checker.check(std::span<const Letter>(_letters).subspan(start));
                if (verdict == Verdict::undecided)
                    ++_out.undecided;
                if (verdict != Verdict::clean)
                    return false;
            }
            if (start < 2)
                break;
        }
        return true;
    }

    void visit(bool count)
    {
        const std::size_t n = _letters.size();
        if (count) {
            ++_out.survivors[n];
            if (n > _out.max_depth || _out.best.empty()) {
                _out.max_depth = n;
                _out.best = _letters;
            }
        }
        if (n == _target) {
            _out.found = true;
            if (_collect)
                _out.frontier.push_back(_letters);
            if (!_exhaustive)
                _stop = true;
            return;
        }
        const std::size_t limit = std::min<std::size_t>(_q, static_cast<std::size_t>(_max_used.back() + 2));
        for (std::size_t c = 0; c < limit && !_stop; ++c) {
            if (++_out.nodes > _budget) {
                _out.exhausted = true;
                _stop = true;
                return;
            }
            push(static_cast<Letter>(c));
            if (suffixes_clean())
                visit(true);
            pop();
        }
    }

    std::size_t _q;
    std::size_t _target;
    bool _exhaustive;
    std::uint64_t _budget;
    bool _collect;
    FactorChecker &_checker;
    std::vector<Letter> _letters;
    std::vector<std::uint64_t> _parity;
    std::vector<int> _max_used;
    bool _stop = false;
    Subtree _out;
};

constexpr std::size_t split_depth = 5;

} // namespace

AvoidanceOutcome search_k_tangram_free(const AvoidanceInstance &instance)
{
    if (instance.alphabet_size < 1 || instance.alphabet_size > 64)
        throw std::invalid_argument("alphabet size must be between 1 and 64");
    if (instance.k < 1)
        throw std::invalid_argument("k must be positive");
    if (instance.threads < 1)
        throw std::invalid_argument("thread count must be positive");

    const std::size_t q = instance.alphabet_size;
    const std::size_t target = instance.target;
    AvoidanceOutcome outcome;
    outcome.word = Word({}, q);
    outcome.survivors.assign(target + 1, 0);

    auto absorb = [&](const Subtree &part) {
        for (std::size_t d = 0; d < part.survivors.size() && d <= target; ++d)
            outcome.survivors[d] += part.survivors[d];
        outcome.undecided += part.undecided;
        if (!part.best.empty() && (part.max_depth > outcome.max_length || outcome.word.empty())) {
            outcome.max_length = part.max_depth;
            outcome.word = Word(part.best, q);
        }
    };

    // Phase one: all clean canonical prefixes up to the split depth. The
    // subtrees below them are independent tasks, merged in prefix order.
    const std::size_t depth = std::min(target, split_depth);
    FactorChecker root_checker(instance.k, instance.factor_budget);
    Explorer root(instance, root_checker, depth, true, instance.node_budget, depth < target);
    Subtree head = root.run({}, true);
    outcome.nodes = head.nodes;
    if (head.exhausted) {
        outcome.status = AvoidanceStatus::inconclusive;
        outcome.budget_exhausted = true;
        outcome.nodes = instance.node_budget;
        return outcome;
    }
    absorb(head);
    bool found = head.found && depth == target;

    const auto &tasks = head.frontier;
    const std::uint64_t task_budget = instance.node_budget - head.nodes;
    std::vector<std::optional<Subtree>> results(tasks.size());
    auto run_task = [&](FactorChecker &checker, std::size_t index, std::uint64_t budget) {
        Explorer explorer(instance, checker, target, instance.exhaustive, budget, false);
        results[index] = explorer.run(tasks[index], false);
    };

    if (instance.threads == 1 || tasks.size() < 2) {
        FactorChecker checker(instance.k, instance.factor_budget);
        std::uint64_t used = 0;
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            run_task(checker, i, task_budget - used);
            used += results[i]->nodes;
            if (results[i]->exhausted || (results[i]->found && !instance.exhaustive))
                break;
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> first_found{tasks.size()};
        auto worker = [&] {
            FactorChecker checker(instance.k, instance.factor_budget);
            for (std::size_t i = next++; i < tasks.size(); i = next++) {
                if (!instance.exhaustive && i > first_found.load())
                    continue;
                run_task(checker, i, task_budget);
                if (results[i]->found && !instance.exhaustive) {
                    std::size_t seen = first_found.load();
                    while (i < seen && !first_found.compare_exchange_weak(seen, i)) {
                    }
                }
            }
        };
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < std::min(instance.threads, tasks.size()); ++t)
            pool.emplace_back(worker);
        for (auto &thread : pool)
            thread.join();
    }

    // Merge in prefix order. The task crossing the budget is discarded in
    // full, so the outcome is the same however tasks were scheduled.
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const Subtree &part = *results[i];
        if (part.exhausted || outcome.nodes + part.nodes > instance.node_budget) {
            outcome.status = AvoidanceStatus::inconclusive;
            outcome.budget_exhausted = true;
            outcome.nodes = instance.node_budget;
            return outcome;
        }
        outcome.nodes += part.nodes;
        absorb(part);
        if (part.found) {
            found = true;
            if (!instance.exhaustive)
                break;
        }
    }

    if (found)
        outcome.status = AvoidanceStatus::found;
    else if (outcome.undecided)
        outcome.status = AvoidanceStatus::inconclusive;
    else
        outcome.status = AvoidanceStatus::max_length;
    return outcome;
}

namespace {

struct T2Walker
{
    std::size_t length;
    T2Report &report;
    std::vector<Letter> letters;
    std::vector<std::uint8_t> parity{0};

    bool visit()
    {
        const std::size_t n = letters.size();
        if (n == length)
            return true;
        const Letter top = letters.empty() ? 0 : *std::max_element(letters.begin(), letters.end()) + 1;
        for (Letter c = 0; c <= std::min<Letter>(top, 2); ++c) {
            letters.push_back(c);
            parity.push_back(static_cast<std::uint8_t>(parity.back() ^ (1u << c)));
            bool keep = !has_square_suffix(letters);
            if (keep) {
                ++report.square_free_words;
                for (std::size_t start = n + 1; start >= 2 && report.ok;) {
                    start -= 2;
                    if (parity[start] != parity[n + 1])
                        continue;
                    auto suffix = std::span<const Letter>(letters).subspan(start);
                    if (cut_number(suffix, {.max_cuts = 2}).value() == 2u) {
                        report.ok = false;
                        report.counterexample = Word(std::vector<Letter>(suffix.begin(), suffix.end()), 3);
                    }
                }
                if (!report.ok || !visit())
                    return false;
            }
            letters.pop_back();
            parity.pop_back();
        }
        return true;
    }
};

} // namespace

T2Report verify_t2_is_3(std::size_t length)
{
    if (length > 20)
        throw std::invalid_argument("exhaustive length must be at most 20");
    T2Report report;
    T2Walker walker{length, report, {}};
    walker.visit();
    report.long_word_free = is_k_tangram_free(ternary_square_free(200), 2).is_free();
    report.ok = report.ok && report.long_word_free;
    return report;
}

} // namespace tangram
