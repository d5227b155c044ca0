// tangram -- command line front end for the tangram library

#include "tangram/avoidance.hpp"
#include "tangram/codec.hpp"
#include "tangram/cut_number.hpp"
#include "tangram/experiments.hpp"
#include "tangram/gauss.hpp"
#include "tangram/generators.hpp"
#include "tangram/word.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>

using namespace tangram;
using nlohmann::json;

namespace {

enum exit_code : int
{
    exit_ok = 0,
    exit_check_failed = 1,
    exit_usage = 2,
    exit_inconclusive = 3,
};

struct UsageError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

struct GlobalConfig
{
    bool ints = false;
    bool digits = false;
    bool letters = false;
    bool json_output = false;
    std::uint64_t budget = default_node_budget;
    std::size_t threads = 1;
    std::uint64_t seed = default_experiment_seed;

    TextEncoding encoding() const
    {
        if (ints + digits + letters > 1)
            throw UsageError("--ints, --digits and --letters are mutually exclusive");
        if (ints)
            return TextEncoding::ints;
        if (digits)
            return TextEncoding::digits;
        if (letters)
            return TextEncoding::letters;
        return TextEncoding::automatic;
    }
};

std::uint64_t budget_from_environment()
{
    const char *text = std::getenv("TANGRAM_BUDGET");
    if (!text || !*text)
        return default_node_budget;
    try {
        std::size_t used = 0;
        auto value = std::stoull(text, &used);
        if (used != std::string(text).size() || value == 0)
            throw std::invalid_argument(text);
        return value;
    } catch (const std::exception &) {
        throw UsageError(std::string("TANGRAM_BUDGET must be a positive integer, got '") + text + "'");
    }
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

json optional_json(const std::optional<std::size_t> &value)
{
    return value ? json(*value) : json(nullptr);
}

json cutting_json(const Cutting &cutting)
{
    return json{{"cuts", cutting.cuts}, {"sigma", cutting.sigma}, {"j", cutting.split}};
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::string &path, const std::string &bytes)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !out.write(bytes.data(), static_cast<std::streamsize>(bytes.size())))
        throw std::runtime_error("cannot write " + path);
}

std::string trim(std::string text)
{
    const char *space = " \t\r\n";
    text.erase(text.find_last_not_of(space) + 1);
    text.erase(0, text.find_first_not_of(space));
    return text;
}

class Cli
{
public:
    explicit Cli(std::ostream &out) : _out(out) {}

    int run(int argc, char **argv);

private:
    std::ostream &_out;
    GlobalConfig _config;
    int _code = exit_ok;

    void emit(const json &document) { _out << document.dump() << '\n'; }
    void emit_word(const Word &word, const json &extra = json::object());
    Word read_word(const std::string &text, std::size_t min_alphabet = 1) const
    {
        return parse_word(text, _config.encoding(), min_alphabet);
    }
    std::string show(const Word &word) const { return format_word(word, output_encoding(word)); }
    TextEncoding output_encoding(const Word &word) const;

    void analyze(const std::string &text);
    void search(const AvoidanceInstance &instance);
    void codec_encode(const CodecParams &params, const std::string &input, std::size_t random_length,
                      const std::string &output);
    void codec_decode(const std::string &input, const std::string &output);
    void codec_roundtrip(const CodecParams &params, std::size_t trials, std::size_t max_length);
    void dejean_check_word(const std::string &text, std::size_t r);
    void experiment_run(const std::string &id, const std::string &params);
    void experiment_all();
};

TextEncoding Cli::output_encoding(const Word &word) const
{
    const auto requested = _config.encoding();
    if (requested != TextEncoding::automatic)
        return requested;
    return word.alphabet_size() <= 26 ? TextEncoding::letters : TextEncoding::ints;
}

void Cli::emit_word(const Word &word, const json &extra)
{
    if (!_config.json_output) {
        _out << show(word) << '\n';
        return;
    }
    json document{{"word", show(word)}, {"length", word.size()}};
    document.update(extra);
    emit(document);
}

void Cli::analyze(const std::string &text)
{
    const Word word = read_word(text);
    const auto shown = format_word(word, detect_encoding(text, _config.encoding()));
    json document{{"word", shown},
                  {"is_tangram", is_tangram(word)},
                  {"cut_number", nullptr},
                  {"cutting", nullptr},
                  {"gauss_pairs", nullptr},
                  {"split_number", nullptr},
                  {"budget_exhausted", false}};
    bool exhausted = false;
    if (!word.empty() && is_tangram(word)) {
        const SolverOptions options{.max_cuts = std::nullopt, .node_budget = _config.budget};
        const auto mu = cut_number(word, options);
        if (mu.value()) {
            document["cut_number"] = mu.cut_number;
            document["cutting"] = cutting_json(mu.cutting);
        }
        const auto gauss = min_gauss_pairs(word, std::nullopt, _config.budget);
        document["gauss_pairs"] = optional_json(gauss.value());
        const auto alpha = split_number(word, options);
        document["split_number"] = optional_json(alpha.value());
        exhausted = mu.status == SolveStatus::budget_exhausted ||
                    gauss.status == SolveStatus::budget_exhausted ||
                    alpha.status == SolveStatus::budget_exhausted;
    }
    document["budget_exhausted"] = exhausted;
    document["status"] = exhausted ? "inconclusive" : "ok";
    if (exhausted)
        _code = exit_inconclusive;

    emit(document);
}

void Cli::search(const AvoidanceInstance &instance)
{
    const auto start = std::chrono::steady_clock::now();
    const auto outcome = search_k_tangram_free(instance);
    json document{{"status", to_string(outcome.status)},
                  {"nodes", outcome.nodes},
                  {"survivors", outcome.survivors},
                  {"undecided", outcome.undecided}};
    switch (outcome.status) {
    case AvoidanceStatus::found:
        document["word"] = show(outcome.word);
        break;
    case AvoidanceStatus::max_length: {
        document["word"] = show(outcome.word);
        document["max_length"] = outcome.max_length;
        // Factor blocking the extension of the longest word by its first letter.
        std::vector<Letter> extended(outcome.word.begin(), outcome.word.end());
        extended.push_back(0);
        const auto blocked = is_k_tangram_free(Word(extended, instance.alphabet_size), instance.k,
                                               instance.factor_budget);
        if (blocked.witness) {
            const auto &w = *blocked.witness;
            document["witness"] = json{{"position", w.position},
                                       {"length", w.length},
                                       {"cut_number", w.cut_number},
                                       {"cutting", cutting_json(w.cutting)}};
        }
        break;
    }
    case AvoidanceStatus::inconclusive:
        document["max_length"] = outcome.max_length;
        _code = exit_inconclusive;
        break;
    }
    document["seconds"] = seconds_since(start);
    emit(document);
}

void Cli::codec_encode(const CodecParams &params, const std::string &input, std::size_t random_length,
                       const std::string &output)
{
    if (!input.empty() && random_length > 0)
        throw UsageError("--input and --random are mutually exclusive");
    Word word;
    if (random_length > 0) {
        std::mt19937_64 rng(_config.seed);
        std::vector<Letter> letters(random_length);
        for (auto &l : letters)
            l = static_cast<Letter>(rng() % params.alphabet_size);
        word = Word(std::move(letters), params.alphabet_size);
    } else {
        std::string text;
        if (input.empty() || input == "-")
            text = std::string(std::istreambuf_iterator<char>(std::cin), {});
        else
            text = read_file(input);
        word = read_word(trim(text), params.alphabet_size);
    }
    try {
        const auto encoding = encode(word, params);
        if (!output.empty())
            write_file(output, serialize(encoding, params));
        emit(json{{"input_len", encoding.input_length},
                  {"residual_len", encoding.residual.size()},
                  {"log_entries", encoding.log.size()},
                  {"total_removed", encoding.total_removed()}});
    } catch (const BudgetExhausted &e) {
        std::cerr << "tangram: " << e.what() << '\n';
        emit(json{{"status", "inconclusive"}, {"input_len", word.size()}});
        _code = exit_inconclusive;
    }
}

void Cli::codec_decode(const std::string &input, const std::string &output)
{
    std::string bytes;
    if (input.empty() || input == "-")
        bytes = std::string(std::istreambuf_iterator<char>(std::cin), {});
    else
        bytes = read_file(input);
    const auto decoded = deserialize(bytes);
    const Word word = decode(decoded.encoding, decoded.params);
    if (!output.empty())
        write_file(output, show(word) + "\n");
    if (_config.json_output)
        emit(json{{"word", show(word)},
                  {"input_len", decoded.encoding.input_length},
                  {"residual_len", decoded.encoding.residual.size()},
                  {"log_entries", decoded.encoding.log.size()},
                  {"total_removed", decoded.encoding.total_removed()}});
    else if (output.empty())
        _out << show(word) << '\n';
}

void Cli::codec_roundtrip(const CodecParams &params, std::size_t trials, std::size_t max_length)
{
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(_config.seed);
    std::size_t failures = 0;
    std::uint64_t letters_in = 0;
    std::uint64_t removed = 0;
    std::uint64_t entries = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t n = rng() % (max_length + 1);
        std::vector<Letter> letters(n);
        for (auto &l : letters)
            l = static_cast<Letter>(rng() % params.alphabet_size);
        const Word word(std::move(letters), params.alphabet_size);
        const auto encoding = encode(word, params);
        const auto bytes = serialize(encoding, params);
        const auto back = deserialize(bytes);
        if (decode(back.encoding, back.params) != word) {
            if (failures == 0)
                std::cerr << "tangram: round trip failed on " << show(word) << '\n';
            ++failures;
        }
        letters_in += n;
        removed += encoding.total_removed();
        entries += encoding.log.size();
    }
    if (failures > 0)
        _code = exit_check_failed;
    emit(json{{"trials", trials},
              {"failures", failures},
              {"seed", _config.seed},
              {"input_len", letters_in},
              {"residual_len", letters_in - removed},
              {"log_entries", entries},
              {"total_removed", removed},
              {"seconds", seconds_since(start)}});
}

void Cli::dejean_check_word(const std::string &text, std::size_t r)
{
    const Word word = read_word(text, r);
    if (word.alphabet_size() > r)
        throw UsageError("word uses more than r letters");
    const auto threshold = dejean_threshold(r);
    const auto check = dejean_check(word, r);
    json violation = nullptr;
    if (check.violation)
        violation = json{{"first", check.violation->first},
                         {"second", check.violation->second},
                         {"length", check.violation->length}};
    emit(json{{"word", show(word)},
              {"r", r},
              {"threshold", json{{"num", threshold.num}, {"den", threshold.den}}},
              {"ok", check.ok},
              {"violation", violation}});
    if (!check.ok)
        _code = exit_check_failed;
}

int code_for(ExperimentStatus status)
{
    switch (status) {
    case ExperimentStatus::pass: return exit_ok;
    case ExperimentStatus::fail: return exit_check_failed;
    case ExperimentStatus::inconclusive: return exit_inconclusive;
    }
    return exit_check_failed;
}

void Cli::experiment_run(const std::string &id, const std::string &params)
{
    json parsed = json::object();
    if (!params.empty()) {
        try {
            parsed = json::parse(params);
        } catch (const json::parse_error &e) {
            throw UsageError(std::string("--params is not valid JSON: ") + e.what());
        }
    }
    const auto report = run_experiment(id, parsed, _config.seed);
    emit(report.to_json());
    _code = code_for(report.status);
}

void Cli::experiment_all()
{
    json reports = json::array();
    std::size_t counts[3] = {0, 0, 0};
    for (const auto &id : experiment_ids()) {
        const auto report = run_experiment(id, json::object(), _config.seed);
        ++counts[static_cast<int>(report.status)];
        if (_config.json_output)
            reports.push_back(report.to_json());
        else
            emit(report.to_json());
        std::cerr << to_string(report.status) << "  " << id << "  " << report.seconds << " s\n";
    }
    if (_config.json_output)
        emit(json{{"reports", reports},
                  {"pass", counts[0]},
                  {"fail", counts[1]},
                  {"inconclusive", counts[2]}});
    _code = counts[1] > 0 ? exit_check_failed : counts[2] > 0 ? exit_inconclusive : exit_ok;
}

int Cli::run(int argc, char **argv)
{
    CLI::App app{"Tangrams, cut numbers and tangram-free words"};
    app.require_subcommand(1);
    app.fallthrough();

    _config.budget = budget_from_environment();
    app.add_flag("--ints", _config.ints, "Words are comma-separated integers");
    app.add_flag("--digits", _config.digits, "Words are digit strings, 0-9");
    app.add_flag("--letters", _config.letters, "Words are lower-case letters, a-z");
    app.add_flag("--json", _config.json_output, "Emit a single JSON document");
    app.add_option("--budget", _config.budget, "Solver node budget (default: TANGRAM_BUDGET or 1e8)")
        ->check(CLI::PositiveNumber);
    app.add_option("--threads", _config.threads, "Worker threads for searches")->check(CLI::PositiveNumber);
    app.add_option("--seed", _config.seed, "Seed for random choices");

    std::function<void()> action;

    auto *analyze_cmd = app.add_subcommand("analyze", "Tangram test, cut number, Gauss pairs and split number");
    std::string analyze_word;
    analyze_cmd->add_option("word", analyze_word, "Word to analyze")->required();
    analyze_cmd->callback([&] { action = [&] { analyze(analyze_word); }; });

    auto *generate_cmd = app.add_subcommand("generate", "Print a generated word");
    generate_cmd->require_subcommand(1);
    std::size_t zimin_n = 3;
    auto *zimin_cmd = generate_cmd->add_subcommand("zimin", "Zimin word Z_n");
    zimin_cmd->add_option("--n", zimin_n, "Index n")->required()->check(CLI::Range(1, 30));
    zimin_cmd->callback([&] { action = [&] { emit_word(zimin(zimin_n)); }; });

    std::size_t periodic_q = 3;
    std::size_t periodic_len = 0;
    auto *periodic_cmd = generate_cmd->add_subcommand("zimin-periodic", "Prefix of (Z_{q-1} a_q)^omega");
    periodic_cmd->add_option("--q", periodic_q, "Alphabet size")->required()->check(CLI::Range(1, 30));
    periodic_cmd->add_option("--len", periodic_len, "Prefix length")->required();
    periodic_cmd->callback([&] { action = [&] { emit_word(zimin_periodic_prefix(periodic_q, periodic_len)); }; });

    std::size_t square_free_len = 0;
    auto *square_free_cmd = generate_cmd->add_subcommand("square-free", "Ternary square-free word");
    square_free_cmd->add_option("--len", square_free_len, "Length")->required();
    square_free_cmd->callback([&] {
        action = [&] { emit_word(ternary_square_free(square_free_len)); };
    });

    auto *pansiot_cmd = generate_cmd->add_subcommand("pansiot", "Built-in 28-letter 4-letter word");
    pansiot_cmd->callback([&] { action = [&] { emit_word(pansiot_prefix()); }; });

    std::size_t dejean_r = 5;
    std::size_t dejean_len = 0;
    auto *dejean_gen_cmd = generate_cmd->add_subcommand("dejean", "Least word meeting the repetition threshold");
    dejean_gen_cmd->add_option("--r", dejean_r, "Alphabet size")->required()->check(CLI::Range(2, 64));
    dejean_gen_cmd->add_option("--len", dejean_len, "Length")->required();
    dejean_gen_cmd->callback([&] {
        action = [&] {
            const auto start = std::chrono::steady_clock::now();
            const auto result = dejean_search(dejean_r, dejean_len, _config.budget);
            json status{{"status", to_string(result.status)}, {"nodes", result.nodes},
                        {"seconds", seconds_since(start)}};
            if (result.status == SearchStatus::found) {
                emit_word(result.word, status);
                return;
            }
            std::cerr << "tangram: no word found (" << to_string(result.status) << ")\n";
            if (_config.json_output)
                emit(status);
            _code = result.status == SearchStatus::budget_exhausted ? exit_inconclusive : exit_check_failed;
        };
    });

    auto *search_cmd = app.add_subcommand("search", "Search for long k-tangram-free words");
    AvoidanceInstance instance;
    search_cmd->add_option("--q", instance.alphabet_size, "Alphabet size")->required()->check(CLI::Range(1, 64));
    search_cmd->add_option("--k", instance.k, "Forbidden cut numbers are at most k")
        ->required()
        ->check(CLI::PositiveNumber);
    search_cmd->add_option("--target", instance.target, "Target length")->required();
    search_cmd->add_flag("--exhaustive", instance.exhaustive, "Explore the whole tree up to the target");
    search_cmd->add_option("--factor-budget", instance.factor_budget, "Node budget per factor")
        ->check(CLI::PositiveNumber);
    search_cmd->callback([&] {
        action = [&] {
            instance.node_budget = _config.budget;
            instance.threads = _config.threads;
            search(instance);
        };
    });

    auto *codec_cmd = app.add_subcommand("codec", "Tangram-removal codec");
    codec_cmd->require_subcommand(1);
    std::size_t codec_q = 2;
    std::size_t codec_k = 1;
    std::optional<std::size_t> codec_lmin;
    auto codec_params = [&] {
        CodecParams params{codec_q, codec_k, codec_lmin.value_or(default_min_length(codec_k)), _config.budget};
        params.validate();
        return params;
    };
    auto add_codec_options = [&](CLI::App *cmd) {
        cmd->add_option("--q", codec_q, "Alphabet size")->check(CLI::Range(1, 1 << 20));
        cmd->add_option("--k", codec_k, "Remove suffixes with cut number at most k")->check(CLI::PositiveNumber);
        cmd->add_option("--lmin", codec_lmin, "Minimum removed length (default max(2, ceil(k log2 k)))");
    };
    std::string codec_input;
    std::string codec_output;
    std::size_t codec_random = 0;
    auto *encode_cmd = codec_cmd->add_subcommand("encode", "Encode a word, print a summary");
    add_codec_options(encode_cmd);
    encode_cmd->add_option("--input", codec_input, "File holding the word ('-' for stdin)");
    encode_cmd->add_option("--random", codec_random, "Encode a random word of this length");
    encode_cmd->add_option("--output", codec_output, "Write the binary log here");
    encode_cmd->callback([&] {
        action = [&] { codec_encode(codec_params(), codec_input, codec_random, codec_output); };
    });

    auto *decode_cmd = codec_cmd->add_subcommand("decode", "Decode a binary log");
    decode_cmd->add_option("--input", codec_input, "Binary log file ('-' for stdin)");
    decode_cmd->add_option("--output", codec_output, "Write the decoded word here");
    decode_cmd->callback([&] { action = [&] { codec_decode(codec_input, codec_output); }; });

    std::size_t trials = 1000;
    std::size_t max_length = 40;
    auto *roundtrip_cmd = codec_cmd->add_subcommand("roundtrip", "Encode and decode random words");
    add_codec_options(roundtrip_cmd);
    roundtrip_cmd->add_option("--trials", trials, "Number of random words");
    roundtrip_cmd->add_option("--max-len", max_length, "Largest random length");
    roundtrip_cmd->callback([&] { action = [&] { codec_roundtrip(codec_params(), trials, max_length); }; });

    auto *dejean_cmd = app.add_subcommand("dejean", "Repetition threshold checks");
    dejean_cmd->require_subcommand(1);
    std::string check_word;
    std::size_t check_r = 4;
    auto *check_cmd = dejean_cmd->add_subcommand("check", "Check a word against the threshold for r letters");
    check_cmd->add_option("word", check_word, "Word to check")->required();
    check_cmd->add_option("--r", check_r, "Alphabet size")->required()->check(CLI::Range(2, 64));
    check_cmd->callback([&] { action = [&] { dejean_check_word(check_word, check_r); }; });

    auto *experiment_cmd = app.add_subcommand("experiment", "Reproducible experiments");
    experiment_cmd->require_subcommand(1);
    std::string experiment_id;
    std::string experiment_params;
    auto *run_cmd = experiment_cmd->add_subcommand("run", "Run one experiment");
    run_cmd->add_option("id", experiment_id, "Experiment id")->required();
    run_cmd->add_option("--params", experiment_params, "JSON object overriding default parameters");
    run_cmd->callback([&] { action = [&] { experiment_run(experiment_id, experiment_params); }; });
    auto *all_cmd = experiment_cmd->add_subcommand("all", "Run every experiment");
    all_cmd->callback([&] { action = [&] { experiment_all(); }; });
    auto *list_cmd = experiment_cmd->add_subcommand("list", "List experiment ids");
    list_cmd->callback([&] {
        action = [&] {
            for (const auto &id : experiment_ids())
                _out << id << '\n';
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        _config.encoding();
        action();
    } catch (const InconsistentLog &e) {
        std::cerr << "tangram: inconsistent codec log: " << e.what() << '\n';
        return exit_check_failed;
    } catch (const BudgetExhausted &e) {
        std::cerr << "tangram: " << e.what() << '\n';
        return exit_inconclusive;
    } catch (const std::invalid_argument &e) {
        std::cerr << "tangram: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception &e) {
        std::cerr << "tangram: " << e.what() << '\n';
        return exit_check_failed;
    }
    return _code;
}

} // namespace

int main(int argc, char **argv)
{
    try {
        Cli cli(std::cout);
        return cli.run(argc, argv);
    } catch (const UsageError &e) {
        std::cerr << "tangram: " << e.what() << '\n';
        return exit_usage;
    }
}
