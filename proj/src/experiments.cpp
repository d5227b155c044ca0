#include "tangram/experiments.hpp"

#include "tangram/avoidance.hpp"
#include "tangram/codec.hpp"
#include "tangram/cut_number.hpp"
#include "tangram/gauss.hpp"
#include "tangram/generators.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace tangram {

using nlohmann::json;

const char *to_string(ExperimentStatus status) noexcept
{
    switch (status) {
    case ExperimentStatus::pass: return "pass";
    case ExperimentStatus::fail: return "fail";
    case ExperimentStatus::inconclusive: return "inconclusive";
    }
    return "unknown";
}

json ExperimentReport::to_json() const
{
    return json{{"id", id},
                {"params", params},
                {"claim", claim},
                {"status", tangram::to_string(status)},
                {"evidence", evidence},
                {"seconds", seconds}};
}

namespace {

// Collects sub-check outcomes; the first failure's counterexample is kept.
class Checks
{
public:
    explicit Checks(json &evidence) : _evidence(evidence) {}

    bool expect(bool condition, const std::string &what, json counterexample = nullptr)
    {
        if (!condition && !_failed) {
            _failed = true;
            _evidence["failure"] = what;
            _evidence["counterexample"] = std::move(counterexample);
        }
        return condition;
    }

    void undecided(std::size_t count = 1) { _undecided += count; }

    ExperimentStatus status() const
    {
        if (_failed)
            return ExperimentStatus::fail;
        _evidence["undecided"] = _undecided;
        return _undecided ? ExperimentStatus::inconclusive : ExperimentStatus::pass;
    }

private:
    json &_evidence;
    bool _failed = false;
    std::size_t _undecided = 0;
};

json cutting_json(const Cutting &c)
{
    return json{{"cuts", c.cuts}, {"sigma", c.sigma}, {"j", c.split}};
}

using Runner = std::function<ExperimentStatus(const json &params, std::uint64_t seed, json &evidence)>;

struct Experiment
{
    std::string id;
    std::string claim;
    json defaults;
    Runner run;
};

std::uint64_t budget_of(const json &params)
{
    return params.at("budget").get<std::uint64_t>();
}

// Visits every word of the given length over q letters.
template <typename Visit>
void for_each_word(std::size_t q, std::size_t length, Visit &&visit)
{
    std::vector<Letter> w(length, 0);
    while (true) {
        visit(std::as_const(w));
        std::size_t i = length;
        while (i > 0 && w[i - 1] + 1 == q)
            w[--i] = 0;
        if (i == 0)
            return;
        ++w[i - 1];
    }
}

// Words in which letters first appear in the order 0, 1, 2, ...
template <typename Visit>
void for_each_canonical_word(std::size_t q, std::size_t length, Visit &&visit)
{
    std::vector<Letter> w;
    std::function<void(Letter)> extend = [&](Letter next) {
        if (w.size() == length) {
            visit(std::as_const(w));
            return;
        }
        for (Letter c = 0; c <= next && c < q; ++c) {
            w.push_back(c);
            extend(c == next ? next + 1 : next);
            w.pop_back();
        }
    };
    extend(0);
}

ExperimentStatus worked_examples(const json &params, std::uint64_t, json &evidence)
{
    Checks checks(evidence);
    const std::pair<const char *, std::size_t> table[] = {
        {"01020102", 1}, {"0101023023", 2}, {"tuteurer", 4}, {"dabcdacb", 3}};
    for (auto [text, expected] : table) {
        Word w = parse_word(text);
        auto mu = cut_number(w, {.max_cuts = std::nullopt, .node_budget = budget_of(params)});
        if (mu.status == SolveStatus::budget_exhausted) {
            checks.undecided();
            continue;
        }
        evidence["mu"][text] = mu.value() ? json(*mu.value()) : json(nullptr);
        evidence["cuttings"][text] = cutting_json(mu.cutting);
        checks.expect(mu.value() == expected, "cut number differs", {{"word", text}});
        checks.expect(verify_cutting(w, mu.cutting), "certificate does not verify", {{"word", text}});
    }
    return checks.status();
}

ExperimentStatus split_examples(const json &params, std::uint64_t, json &evidence)
{
    Checks checks(evidence);
    const std::pair<const char *, std::size_t> table[] = {{"abcacb", 1}, {"aabbcc", 3}};
    for (auto [text, expected] : table) {
        Word w = parse_word(text);
        auto alpha = split_number(w, {.max_cuts = std::nullopt, .node_budget = budget_of(params)});
        if (alpha.status == SolveStatus::budget_exhausted) {
            checks.undecided();
            continue;
        }
        evidence["alpha"][text] = alpha.value() ? json(*alpha.value()) : json(nullptr);
        evidence["certificates"][text] = {{"cuts", alpha.certificate.cuts},
                                          {"first_group", alpha.certificate.first_group}};
        checks.expect(alpha.value() == expected, "split number differs", {{"word", text}});
        checks.expect(verify_split(w, alpha.certificate), "certificate does not verify", {{"word", text}});
    }
    return checks.status();
}

json outcome_json(const AvoidanceOutcome &o)
{
    return json{{"status", to_string(o.status)},
                {"max_length", o.max_length},
                {"witness", format_word(o.word)},
                {"survivors", o.survivors},
                {"nodes", o.nodes},
                {"undecided", o.undecided}};
}

ExperimentStatus binary_square_bound(const json &params, std::uint64_t, json &evidence)
{
    Checks checks(evidence);
    auto outcome = search_k_tangram_free({.alphabet_size = 2,
                                          .k = 1,
                                          .target = params.at("target").get<std::size_t>(),
                                          .exhaustive = true,
                                          .node_budget = budget_of(params)});
    evidence["search"] = outcome_json(outcome);
    if (outcome.status == AvoidanceStatus::inconclusive) {
        checks.undecided();
        return checks.status();
    }
    checks.expect(outcome.status == AvoidanceStatus::max_length && outcome.max_length == 3,
                  "longest square-free binary word is not of length 3", evidence["search"]);
    return checks.status();
}

ExperimentStatus thue_scale(const json &params, std::uint64_t, json &evidence)
{
    Checks checks(evidence);
    const auto length = params.at("length").get<std::size_t>();
    Word w = ternary_square_free(length);
    auto square = find_square(w);
    evidence["length"] = w.size();
    evidence["square_free"] = !square;
    checks.expect(!square, "generated word contains a square",
                  square ? json{{"position", square->position}, {"length", square->length}} : json());

    auto report = verify_t2_is_3(params.at("exhaustive_length").get<std::size_t>());
    evidence["square_free_words"] = report.square_free_words;
    evidence["long_word_2_tangram_free"] = report.long_word_free;
    checks.expect(!report.counterexample, "square-free word with a cut-number-two factor",
                  report.counterexample ? json(format_word(*report.counterexample)) : json());
    checks.expect(report.long_word_free, "length-200 square-free word is not 2-tangram-free");
    return checks.status();
}

ExperimentStatus zimin_words(const json &params, std::uint64_t, json &evidence)
{
    Checks checks(evidence);
    for (std::size_t n = 1; n <= params.at("max_n").get<std::size_t>(); ++n) {
        Word z = zimin(n);
        evidence["lengths"].push_back(z.size());
        checks.expect(z.size() == (std::size_t{1} << n) - 1, "wrong length", {{"n", n}});
        std::size_t factors = 0;
        for (std::size_t i = 1; i <= z.size(); ++i)
            for (std::size_t m = 1; i + m - 1 <= z.size(); ++m) {
                ++factors;
                checks.expect(!is_tangram(z.letters().subspan(i - 1, m)), "tangram factor",
                              {{"n", n}, {"position", i}, {"length", m}});
            }
        evidence["factors_scanned"].push_back(factors);
    }
    return checks.status();
}

ExperimentStatus zimin_periodic(const json &params, std::uint64_t, json &evidence)
{
    Checks checks(evidence);
    for (std::size_t q = 2; q <= params.at("max_q").get<std::size_t>(); ++q) {
        const std::size_t period = std::size_t{1} << q;
        Word w = zimin_periodic_prefix(q, 4 * period);
        const auto letters = w.letters();
        std::size_t shortest = 0;
        std::size_t qualifying = 0;
        std::vector<std::size_t> counts(q);
        for (std::size_t start = 0; start < letters.size(); ++start) {
            std::fill(counts.begin(), counts.end(), 0);
            for (std::size_t end = start; end < letters.size(); ++end) {
                ++counts[letters[end]];
                const std::size_t length = end - start + 1;
                if (std::all_of(counts.begin(), counts.end(), [](std::size_t c) { return c % 2 == 0; }) &&
                    (shortest == 0 || length < shortest))
                    shortest = length;
                // Letters i..q (1-based) each occur a positive even number of times.
                for (std::size_t i = 1; i < q; ++i) {
                    bool all = true;
                    for (std::size_t l = i - 1; l < q && all; ++l)
                        all = counts[l] > 0 && counts[l] % 2 == 0;
                    if (!all)
                        continue;
                    ++qualifying;
                    std::size_t bound = 3 * (std::size_t{1} << (q - 2)) + 1;
                    for (std::size_t j = i; j + 2 <= q; ++j)
                        bound += std::size_t{1} << (j - 1);
                    checks.expect(length >= bound, "factor shorter than the per-letter-set bound",
                                  {{"q", q}, {"i", i}, {"position", start + 1}, {"length", length},
                                   {"bound", bound}});
                }
            }
        }
        evidence["shortest_tangram"][std::to_string(q)] = shortest;
        evidence["bound_factors_checked"][std::to_string(q)] = qualifying;
        checks.expect(shortest == period, "shortest tangram is not of length 2^q",
                      {{"q", q}, {"shortest", shortest}});
    }
    return checks.status();
}

bool prefix_parity_ok(const Word &w, std::size_t limit)
{
    auto occurrence = find_tangram_prefix_parity(w);
    return occurrence && occurrence->length <= limit &&
           is_tangram(w.letters().subspan(occurrence->position - 1, occurrence->length));
}

ExperimentStatus tangram_at_2q(const json &params, std::uint64_t seed, json &evidence)
{
    Checks checks(evidence);
    std::vector<std::size_t> qs;
    if (params.at("q").is_array())
        qs = params.at("q").get<std::vector<std::size_t>>();
    else
        qs.push_back(params.at("q").get<std::size_t>());
    std::uint64_t exhaustive = 0;
    for (std::size_t q : qs) {
        if (q < 1 || q > 3)
            throw std::invalid_argument("exhaustive q must be between 1 and 3");
        const std::size_t length = std::size_t{1} << q;
        std::uint64_t words = 0;
        for_each_word(q, length, [&](const std::vector<Letter> &letters) {
            ++words;
            Word w(letters, q);
            checks.expect(prefix_parity_ok(w, length), "no verified tangram", format_word(w));
        });
        evidence["exhaustive_words"][std::to_string(q)] = words;
        exhaustive += words;
    }
    evidence["words_checked"] = exhaustive;

    const auto sample_q = params.at("sample_q").get<std::size_t>();
    const auto samples = params.at("samples").get<std::uint64_t>();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(sample_q - 1));
    const std::size_t length = std::size_t{1} << sample_q;
    std::vector<Letter> letters(length);
    for (std::uint64_t s = 0; s < samples; ++s) {
        for (auto &l : letters)
            l = letter(rng);
        Word w(letters, sample_q);
        checks.expect(prefix_parity_ok(w, length), "no verified tangram", format_word(w));
    }
    evidence["random_samples"] = samples;
    return checks.status();
}

ExperimentStatus binary_k3(const json &, std::uint64_t, json &evidence)
{
    Checks checks(evidence);
    std::size_t words = 0;
    for_each_word(2, 4, [&](const std::vector<Letter> &letters) {
        ++words;
        Word w(letters, 2);
        auto r = is_k_tangram_free(w, 3);
        if (r.status == FreenessStatus::inconclusive)
            checks.undecided();
        else if (checks.expect(r.status == FreenessStatus::contains, "3-tangram-free binary word",
                               format_word(w)))
            evidence["witnesses"][format_word(w)] = format_word(w.factor(r.witness->position, r.witness->length));
    });
    evidence["words_checked"] = words;
    return checks.status();
}

ExperimentStatus interval_lemma(const json &params, std::uint64_t, json &evidence)
{
    Checks checks(evidence);
    const auto n = params.at("n").get<std::size_t>();
    for (std::size_t m = 1; m <= n; ++m) {
        auto report = verify_interval_lemma(m);
        evidence["per_n"].push_back({{"n", m},
                                     {"pairings", report.pairings},
                                     {"max_sum", report.max_sum},
                                     {"at_bound", report.at_bound}});
        checks.expect(report.holds && report.max_sum == m * m && report.at_bound > 0,
                      "bound violated or not attained", {{"n", m}, {"max_sum", report.max_sum}});
        if (m == n)
            evidence["pairings"] = report.pairings;
    }
    return checks.status();
}

json factorization_json(const GaussFactorization &g)
{
    return json{{"starts", g.starts}, {"pattern", g.pattern.to_string()}};
}

void check_twins(Checks &checks, const GaussFactorization &g, const json &where, std::size_t &equal)
{
    auto witness = twin_distance_witness(g);
    const bool equality = twin_bound_equality_case(g);
    equal += equality && witness.distance == witness.bound;
    json detail = where;
    detail["factorization"] = factorization_json(g);
    checks.expect(witness.distance <= witness.bound, "no twin pair within s|X|", detail);
    checks.expect(equality || witness.distance < witness.bound, "bound attained outside the equality case",
                  detail);
}

ExperimentStatus twin_distance(const json &params, std::uint64_t seed, json &evidence)
{
    Checks checks(evidence);
    std::size_t factorizations = 0;
    std::size_t equal = 0;
    const auto max_length = params.at("max_length").get<std::size_t>();
    for (std::size_t n = 2; n <= max_length; ++n)
        for_each_word(2, n, [&](const std::vector<Letter> &letters) {
            Word w(letters, 2);
            for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
                std::vector<std::size_t> starts{1};
                for (std::size_t p = 1; p < n; ++p)
                    if ((mask >> (p - 1)) & 1u)
                        starts.push_back(p + 1);
                for (auto &g : gauss_factorizations(w, starts)) {
                    ++factorizations;
                    check_twins(checks, g, {{"word", format_word(w)}}, equal);
                }
            }
        });
    evidence["exhaustive_factorizations"] = factorizations;

    std::mt19937_64 rng(seed);
    const auto instances = params.at("random").get<std::size_t>();
    for (std::size_t trial = 0; trial < instances; ++trial) {
        const std::size_t s = 1 + rng() % 6;
        std::vector<std::size_t> pattern;
        for (std::size_t symbol = 0; symbol < s; ++symbol)
            pattern.insert(pattern.end(), {symbol, symbol});
        std::shuffle(pattern.begin(), pattern.end(), rng);
        std::vector<std::vector<Letter>> images;
        while (images.size() < s) {
            std::vector<Letter> image(1 + rng() % 4);
            for (auto &l : image)
                l = static_cast<Letter>(rng() % 3);
            if (std::find(images.begin(), images.end(), image) == images.end())
                images.push_back(image);
        }
        std::vector<Letter> letters;
        std::vector<std::size_t> starts;
        for (std::size_t symbol : pattern) {
            starts.push_back(letters.size() + 1);
            letters.insert(letters.end(), images[symbol].begin(), images[symbol].end());
        }
        Word w(letters, 3);
        auto g = gauss_factorization(w, starts);
        if (checks.expect(g.has_value(), "substitution is not a Gauss factorization", format_word(w)))
            check_twins(checks, *g, {{"word", format_word(w)}}, equal);
    }
    evidence["random_instances"] = instances;
    evidence["equality_cases"] = equal;
    return checks.status();
}

ExperimentStatus gauss_sandwich(const json &params, std::uint64_t, json &evidence)
{
    Checks checks(evidence);
    const auto max_length = params.at("max_length").get<std::size_t>();
    const auto q = params.at("alphabet").get<std::size_t>();
    const auto budget = budget_of(params);
    std::map<std::string, std::uint64_t> pairs;
    std::uint64_t tangrams = 0;
    for (std::size_t n = 2; n <= max_length; n += 2)
        for_each_canonical_word(q, n, [&](const std::vector<Letter> &letters) {
            if (!is_tangram(std::span<const Letter>(letters)))
                return;
            ++tangrams;
            Word w(letters, q);
            auto mu = cut_number(w, {.max_cuts = std::nullopt, .node_budget = budget});
            auto s = min_gauss_pairs(w, std::nullopt, budget);
            if (mu.status == SolveStatus::budget_exhausted || s.status == SolveStatus::budget_exhausted) {
                checks.undecided();
                return;
            }
            if (!checks.expect(mu.value() && s.value(), "tangram without a value", format_word(w)))
                return;
            const std::size_t sv = *s.value();
            const std::size_t mv = *mu.value();
            ++pairs[std::to_string(sv) + "," + std::to_string(mv)];
            checks.expect(sv <= mv && mv <= 2 * sv - 1, "sandwich bound violated",
                          {{"word", format_word(w)}, {"s", sv}, {"mu", mv}});
        });
    evidence["tangrams_checked"] = tangrams;
    evidence["s_mu_histogram"] = pairs;
    return checks.status();
}

ExperimentStatus codec_roundtrip(const json &params, std::uint64_t seed, json &evidence)
{
    Checks checks(evidence);
    const auto settings = params.at("settings").get<std::vector<std::pair<std::size_t, std::size_t>>>();
    const auto trials = params.at("trials").get<std::uint64_t>();
    const auto max_length = params.at("max_length").get<std::size_t>();
    const auto max_alphabet = params.at("max_alphabet").get<std::size_t>();
    const auto budget = budget_of(params);
    std::mt19937_64 rng(seed);
    std::uint64_t removals = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        auto [k, min_length] = settings[t % settings.size()];
        const std::size_t q = 1 + rng() % max_alphabet;
        std::vector<Letter> letters(rng() % (max_length + 1));
        for (auto &l : letters)
            l = static_cast<Letter>(rng() % q);
        const CodecParams codec{q, k, min_length, budget};
        Word x(letters, q);
        try {
            Encoding e = encode(x, codec);
            removals += e.log.size();
            checks.expect(decode(e, codec) == x, "round trip failed",
                          {{"input", format_word(x, TextEncoding::ints)}, {"k", k}, {"min_length", min_length}});
        } catch (const BudgetExhausted &) {
            checks.undecided();
        }
    }
    evidence["random_trials"] = trials;
    evidence["random_removals"] = removals;

    const auto exhaustive = params.at("exhaustive_length").get<std::size_t>();
    for (auto [k, min_length] : settings) {
        const CodecParams codec{2, k, min_length, budget};
        std::set<std::string> images;
        std::uint64_t inputs = 0;
        for (std::size_t n = 0; n <= exhaustive; ++n)
            for_each_word(2, n, [&](const std::vector<Letter> &letters) {
                Word x(letters, 2);
                try {
                    Encoding e = encode(x, codec);
                    ++inputs;
                    images.insert(serialize(e, codec));
                    checks.expect(decode(e, codec) == x, "round trip failed",
                                  {{"input", format_word(x, TextEncoding::ints)}, {"k", k}});
                } catch (const BudgetExhausted &) {
                    checks.undecided();
                }
            });
        checks.expect(images.size() == inputs, "two inputs share an encoding", {{"k", k}, {"min_length", min_length}});
        evidence["exhaustive"].push_back(
            {{"k", k}, {"min_length", min_length}, {"inputs", inputs}, {"distinct_outputs", images.size()}});
    }
    return checks.status();
}

ExperimentStatus pansiot(const json &params, std::uint64_t, json &evidence)
{
    Checks checks(evidence);
    Word p = pansiot_prefix();
    auto r = is_k_tangram_free(p, 3, budget_of(params));
    evidence["prefix"] = format_word(p);
    evidence["three_tangram_free"] = to_string(r.status);
    if (r.witness)
        evidence["first_witness"] = {{"position", r.witness->position},
                                     {"factor", format_word(p.factor(r.witness->position, r.witness->length))},
                                     {"cut_number", r.witness->cut_number},
                                     {"cutting", cutting_json(r.witness->cutting)}};
    checks.expect(r.status == FreenessStatus::contains, "prefix is 3-tangram-free");

    Word factor = p.factor(9, 8);
    const Cutting quoted{{4, 6, 7}, {1, 2, 4, 3}, 1};
    auto mu = cut_number(factor, {.max_cuts = std::nullopt, .node_budget = budget_of(params)});
    evidence["factor_at_9"] = {{"factor", format_word(factor)},
                               {"cut_number", mu.value() ? json(*mu.value()) : json(nullptr)},
                               {"quoted_cutting_verifies", verify_cutting(factor, quoted)}};
    checks.expect(format_word(factor) == "dabcdacb", "unexpected factor at position 9", format_word(factor));
    checks.expect(mu.value() == 3u, "factor at position 9 does not have cut number 3");
    checks.expect(verify_cutting(factor, quoted), "dabc|da|c|b is not a certificate");
    return checks.status();
}

ExperimentStatus dejean(const json &params, std::uint64_t, json &evidence)
{
    Checks checks(evidence);
    const auto r = params.at("r").get<std::size_t>();
    const auto length = params.at("length").get<std::size_t>();
    const auto max_factor = params.at("max_factor").get<std::size_t>();
    const auto budget = budget_of(params);
    auto found = dejean_search(r, length, budget);
    evidence["search"] = {{"status", to_string(found.status)}, {"nodes", found.nodes}};
    if (found.status == SearchStatus::budget_exhausted) {
        checks.undecided();
        return checks.status();
    }
    if (!checks.expect(found.status == SearchStatus::found, "no word of the requested length"))
        return checks.status();
    evidence["word"] = format_word(found.word);
    auto check = dejean_check(found.word, r);
    checks.expect(check.ok, "search result fails the repeat check",
                  check.violation ? json{{"first", check.violation->first},
                                         {"second", check.violation->second},
                                         {"length", check.violation->length}}
                                  : json());

    std::size_t tangram_factors = 0;
    const auto letters = found.word.letters();
    for (std::size_t i = 0; i < letters.size(); ++i)
        for (std::size_t m = 2; m <= max_factor && i + m <= letters.size(); m += 2) {
            auto factor = letters.subspan(i, m);
            if (!is_tangram(factor))
                continue;
            ++tangram_factors;
            auto mu = cut_number(factor, {.max_cuts = r - 1, .node_budget = budget});
            if (mu.status == SolveStatus::budget_exhausted)
                checks.undecided();
            else
                checks.expect(mu.status != SolveStatus::found, "tangram factor with cut number below r",
                              {{"position", i + 1}, {"length", m}, {"cut_number", mu.cut_number}});
        }
    evidence["tangram_factors_checked"] = tangram_factors;
    return checks.status();
}

ExperimentStatus t3_lower_bound(const json &params, std::uint64_t, json &evidence)
{
    Checks checks(evidence);
    auto outcome = search_k_tangram_free({.alphabet_size = params.at("q").get<std::size_t>(),
                                          .k = params.at("k").get<std::size_t>(),
                                          .target = params.at("target").get<std::size_t>(),
                                          .exhaustive = true,
                                          .node_budget = budget_of(params),
                                          .threads = params.at("threads").get<std::size_t>()});
    evidence["search"] = outcome_json(outcome);
    if (outcome.status == AvoidanceStatus::inconclusive) {
        checks.undecided();
        return checks.status();
    }
    checks.expect(outcome.status == AvoidanceStatus::max_length, "words reach the target length",
                  evidence["search"]);
    return checks.status();
}

ExperimentStatus product_projection(const json &params, std::uint64_t seed, json &evidence)
{
    Checks checks(evidence);
    const auto trials = params.at("trials").get<std::size_t>();
    const auto max_length = params.at("max_length").get<std::size_t>();
    const auto k = params.at("k").get<std::size_t>();
    std::mt19937_64 rng(seed);
    std::size_t witnessed = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t n = 2 + rng() % (max_length - 1);
        std::vector<Letter> v(n), w(n);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = static_cast<Letter>(rng() % 2);
            w[i] = static_cast<Letter>(rng() % 3);
        }
        Word x = product_word(Word(v, 2), Word(w, 3));
        checks.expect(project_first(x, 3) == Word(v, 2) && project_second(x, 3) == Word(w, 3),
                      "projection does not recover a coordinate", format_word(x, TextEncoding::ints));
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t m = 2; i + m - 1 <= n; m += 2) {
                Word f = x.factor(i, m);
                auto mu = cut_number(f, {.max_cuts = k, .node_budget = budget_of(params)});
                if (mu.status == SolveStatus::budget_exhausted) {
                    checks.undecided();
                    continue;
                }
                if (mu.status != SolveStatus::found)
                    continue;
                ++witnessed;
                checks.expect(verify_cutting(project_first(f, 3), mu.cutting) &&
                                  verify_cutting(project_second(f, 3), mu.cutting),
                              "certificate does not project",
                              {{"factor", format_word(f, TextEncoding::ints)}, {"cutting", cutting_json(mu.cutting)}});
            }
    }
    evidence["small_cut_factors"] = witnessed;
    return checks.status();
}

const std::vector<Experiment> &registry()
{
    static const std::vector<Experiment> experiments = {
        {"worked-examples",
         "01020102, 0101023023, tuteurer and dabcdacb have cut numbers 1, 2, 4 and 3",
         {{"budget", default_node_budget}},
         worked_examples},
        {"split-examples",
         "abcacb splits into two anagram groups after one cut, aabbcc needs three",
         {{"budget", default_node_budget}},
         split_examples},
        {"binary-square-bound",
         "binary words longer than three contain a square",
         {{"target", 16}, {"budget", default_node_budget}},
         binary_square_bound},
        {"thue-scale",
         "long ternary square-free words exist, and square-free words never have a factor with cut number two",
         {{"length", 1000}, {"exhaustive_length", 14}},
         thue_scale},
        {"zimin",
         "the Zimin word Z_n has length 2^n - 1 and no tangram factor",
         {{"max_n", 5}},
         zimin_words},
        {"zimin-periodic",
         "in the periodic word (Z_{q-1} a_q)^w the shortest tangram has length 2^q, and factors with letters "
         "a_i..a_q each a positive even number of times obey the per-i length bound",
         {{"max_q", 5}},
         zimin_periodic},
        {"tangram-at-2q",
         "every word of length 2^q over q letters contains a tangram, located by prefix parities",
         {{"q", {1, 2, 3}}, {"sample_q", 4}, {"samples", 1000000}},
         tangram_at_2q},
        {"binary-k3",
         "every binary word of length 4 has a factor with cut number at most 3",
         json::object(),
         binary_k3},
        {"interval-lemma",
         "n segments with distinct endpoints in [2n] have total length at most n^2, attained",
         {{"n", 5}},
         interval_lemma},
        {"twin-distance",
         "in every Gauss factorization with s twin pairs some pair X..X starts within distance s|X|, strictly "
         "unless the pattern is a square with equal factor lengths",
         {{"max_length", 8}, {"random", 10000}},
         twin_distance},
        {"gauss-sandwich",
         "the least number s of twin pairs in a Gauss factorization satisfies s <= mu <= 2s - 1",
         {{"max_length", 12}, {"alphabet", 3}, {"budget", default_node_budget}},
         gauss_sandwich},
        {"codec-roundtrip",
         "the suffix-removing encoder is injective: decoding recovers every input",
         {{"trials", 100000},
          {"max_length", 40},
          {"max_alphabet", 4},
          {"exhaustive_length", 10},
          {"settings", {{1, 2}, {2, 2}, {2, 4}, {3, 5}, {4, 8}}},
          {"budget", default_node_budget}},
         codec_roundtrip},
        {"pansiot",
         "the 28-letter Pansiot prefix is not 3-tangram-free: dabcdacb at position 9 has cut number 3",
         {{"budget", default_node_budget}},
         pansiot},
        {"dejean",
         "a Dejean word over r letters found by search has no short tangram factor with cut number below r",
         {{"r", 5}, {"length", 50}, {"max_factor", 16}, {"budget", default_node_budget}},
         dejean},
        {"t3-lower-bound",
         "three letters do not admit long words without factors of cut number at most 3",
         {{"q", 3}, {"k", 3}, {"target", 64}, {"threads", 1}, {"budget", default_node_budget}},
         t3_lower_bound},
        {"product-projection",
         "a cutting of a factor of a product word certifies the same factor of both coordinate words",
         {{"trials", 200}, {"max_length", 12}, {"k", 3}, {"budget", default_node_budget}},
         product_projection},
    };
    return experiments;
}

} // namespace

const std::vector<std::string> &experiment_ids()
{
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto &e : registry())
            out.push_back(e.id);
        return out;
    }();
    return ids;
}

ExperimentReport run_experiment(const std::string &id, const json &params, std::uint64_t seed)
{
    const auto &experiments = registry();
    auto it = std::find_if(experiments.begin(), experiments.end(),
                           [&](const Experiment &e) { return e.id == id; });
    if (it == experiments.end())
        throw std::invalid_argument("unknown experiment: " + id);
    if (!params.is_object())
        throw std::invalid_argument("experiment parameters must be a JSON object");

    ExperimentReport report;
    report.id = id;
    report.claim = it->claim;
    report.params = it->defaults;
    for (auto &[key, value] : params.items()) {
        if (!report.params.contains(key))
            throw std::invalid_argument("unknown parameter for " + id + ": " + key);
        report.params[key] = value;
    }
    report.params["seed"] = seed;
    report.evidence = json::object();

    const auto start = std::chrono::steady_clock::now();
    try {
        report.status = it->run(report.params, seed, report.evidence);
    } catch (const json::exception &e) {
        throw std::invalid_argument("bad parameter for " + id + ": " + e.what());
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace tangram
