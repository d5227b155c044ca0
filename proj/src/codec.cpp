#include "tangram/codec.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

namespace tangram {

std::size_t default_min_length(std::size_t k)
{
    if (k < 2)
        return 2;
    const double value = static_cast<double>(k) * std::log2(static_cast<double>(k));
    auto rounded = static_cast<std::size_t>(std::ceil(value - 1e-9));
    return std::max<std::size_t>(2, rounded);
}

CodecParams CodecParams::with_default_min_length(std::size_t alphabet_size, std::size_t k)
{
    CodecParams params{alphabet_size, k, default_min_length(k)};
    params.validate();
    return params;
}

void CodecParams::validate() const
{
    if (alphabet_size < 1)
        throw std::invalid_argument("alphabet size must be positive");
    if (k < 1)
        throw std::invalid_argument("k must be positive");
    if (min_length < 2)
        throw std::invalid_argument("minimum suffix length must be at least 2");
}

std::size_t Encoding::total_removed() const noexcept
{
    std::size_t total = 0;
    for (const auto &entry : log)
        total += entry.length;
    return total;
}

std::vector<Letter> rebuild_suffix(const LogEntry &entry)
{
    const std::size_t pieces = entry.cuts.size() + 1;
    if (entry.length < 2 || entry.length % 2 != 0)
        throw InconsistentLog("removed length must be even and positive");
    if (entry.half.size() != entry.length / 2)
        throw InconsistentLog("half must have half the removed length");
    if (entry.sigma.size() != pieces || entry.split < 1 || entry.split >= pieces)
        throw InconsistentLog("permutation or split does not match the cuts");

    std::vector<std::size_t> bounds{0};
    for (std::size_t cut : entry.cuts) {
        if (cut <= bounds.back() || cut >= entry.length)
            throw InconsistentLog("cuts must be increasing interior positions");
        bounds.push_back(cut);
    }
    bounds.push_back(entry.length);

    std::vector<bool> seen(pieces, false);
    for (std::size_t s : entry.sigma) {
        if (s < 1 || s > pieces || seen[s - 1])
            throw InconsistentLog("sigma is not a permutation");
        seen[s - 1] = true;
    }

    // Each group of pieces spells `half`, so every piece is a slice of it.
    std::vector<Letter> suffix(entry.length);
    std::size_t offset = 0;
    for (std::size_t t = 0; t < pieces; ++t) {
        if (t == entry.split) {
            if (offset != entry.half.size())
                throw InconsistentLog("first group does not spell the half");
            offset = 0;
        }
        const std::size_t piece = entry.sigma[t] - 1;
        const std::size_t size = bounds[piece + 1] - bounds[piece];
        if (offset + size > entry.half.size())
            throw InconsistentLog("pieces overflow the half");
        std::copy_n(entry.half.begin() + static_cast<std::ptrdiff_t>(offset), size,
                    suffix.begin() + static_cast<std::ptrdiff_t>(bounds[piece]));
        offset += size;
    }
    if (offset != entry.half.size())
        throw InconsistentLog("second group does not spell the half");
    return suffix;
}

Encoding encode(const Word &input, const CodecParams &params)
{
    params.validate();
    if (input.alphabet_size() > params.alphabet_size)
        throw std::invalid_argument("input alphabet exceeds the codec alphabet");
    Encoding encoding;
    encoding.input_length = input.size();
    auto &s = encoding.residual;
    // parity[i]: letters with an odd count in s[0..i).
    std::vector<std::vector<bool>> parity{std::vector<bool>(params.alphabet_size, false)};
    const SolverOptions options{.max_cuts = params.k, .node_budget = params.node_budget};

    for (std::size_t step = 1; step <= input.size(); ++step) {
        const Letter letter = input[step - 1];
        s.push_back(letter);
        parity.push_back(parity.back());
        parity.back()[letter] = !parity.back()[letter];

        const std::size_t n = s.size();
        std::size_t first = params.min_length + (params.min_length % 2);
        for (std::size_t length = first; length <= n; length += 2) {
            if (parity[n - length] != parity[n])
                continue;
            auto suffix = std::span<const Letter>(s).subspan(n - length);
            auto mu = cut_number(suffix, options);
            if (mu.status == SolveStatus::budget_exhausted)
                throw BudgetExhausted("cut number undecided within the node budget at step " +
                                      std::to_string(step));
            if (mu.status != SolveStatus::found)
                continue;
            LogEntry entry;
            entry.step = step;
            entry.length = length;
            entry.cuts = mu.cutting.cuts;
            entry.sigma = mu.cutting.sigma;
            entry.split = mu.cutting.split;
            // Arranged first half: F_sigma(1) .. F_sigma(split).
            std::vector<std::size_t> bounds{0};
            bounds.insert(bounds.end(), entry.cuts.begin(), entry.cuts.end());
            bounds.push_back(length);
            for (std::size_t t = 0; t < entry.split; ++t) {
                std::size_t piece = entry.sigma[t] - 1;
                entry.half.insert(entry.half.end(),
                                  suffix.begin() + static_cast<std::ptrdiff_t>(bounds[piece]),
                                  suffix.begin() + static_cast<std::ptrdiff_t>(bounds[piece + 1]));
            }
            encoding.log.push_back(std::move(entry));
            s.resize(n - length);
            parity.resize(n - length + 1);
            break;
        }
    }
    return encoding;
}

Word decode(const Encoding &encoding, const CodecParams &params)
{
    params.validate();
    const std::size_t n = encoding.input_length;
    for (std::size_t i = 0; i < encoding.log.size(); ++i) {
        const auto &entry = encoding.log[i];
        if (entry.step < 1 || entry.step > n || (i > 0 && entry.step <= encoding.log[i - 1].step))
            throw InconsistentLog("log steps must be increasing and within the input");
        if (entry.length < params.min_length)
            throw InconsistentLog("logged suffix shorter than the minimum length");
        if (entry.cuts.size() > params.k)
            throw InconsistentLog("logged cutting uses more than k cuts");
    }
    if (encoding.residual.size() + encoding.total_removed() != n)
        throw InconsistentLog("residual and removed letters do not add up to the input length");

    std::vector<Letter> s = encoding.residual;
    std::vector<Letter> x(n);
    auto entry = encoding.log.rbegin();
    for (std::size_t step = n; step >= 1; --step) {
        if (entry != encoding.log.rend() && entry->step == step) {
            auto suffix = rebuild_suffix(*entry);
            x[step - 1] = suffix.back();
            s.insert(s.end(), suffix.begin(), suffix.end() - 1);
            ++entry;
        } else {
            if (s.empty())
                throw InconsistentLog("ran out of letters before step " + std::to_string(step));
            x[step - 1] = s.back();
            s.pop_back();
        }
    }
    if (!s.empty())
        throw InconsistentLog("letters left over after decoding");
    for (Letter l : x)
        if (l >= params.alphabet_size)
            throw InconsistentLog("decoded letter outside the alphabet");
    return Word(std::move(x), params.alphabet_size);
}

namespace {

constexpr char magic[4] = {'T', 'G', 'C', 'L'};
constexpr std::uint8_t format_version = 1;

void put(std::string &out, std::size_t value)
{
    if (value > 0xffffffffu)
        throw std::length_error("value does not fit in 32 bits");
    for (int shift = 0; shift < 32; shift += 8)
        out.push_back(static_cast<char>((value >> shift) & 0xffu));
}

template <typename Range>
void put_all(std::string &out, const Range &values)
{
    put(out, values.size());
    for (auto v : values)
        put(out, v);
}

class Reader
{
public:
    explicit Reader(const std::string &bytes) : _bytes(bytes) {}

    std::size_t get()
    {
        if (_bytes.size() - _pos < 4)
            throw InconsistentLog("truncated codec stream");
        std::size_t value = 0;
        for (int i = 0; i < 4; ++i)
            value |= static_cast<std::size_t>(static_cast<unsigned char>(_bytes[_pos + i])) << (8 * i);
        _pos += 4;
        return value;
    }

    template <typename T>
    std::vector<T> get_all()
    {
        const std::size_t count = get();
        if (count > (_bytes.size() - _pos) / 4)
            throw InconsistentLog("truncated codec stream");
        std::vector<T> values(count);
        for (auto &v : values)
            v = static_cast<T>(get());
        return values;
    }

    std::uint8_t byte()
    {
        if (_pos >= _bytes.size())
            throw InconsistentLog("truncated codec stream");
        return static_cast<std::uint8_t>(_bytes[_pos++]);
    }

    bool done() const noexcept { return _pos == _bytes.size(); }

private:
    const std::string &_bytes;
    std::size_t _pos = 0;
};

} // namespace

std::string serialize(const Encoding &encoding, const CodecParams &params)
{
    std::string out(magic, sizeof magic);
    out.push_back(static_cast<char>(format_version));
    put(out, params.alphabet_size);
    put(out, params.k);
    put(out, params.min_length);
    put(out, encoding.input_length);
    put_all(out, encoding.residual);
    put(out, encoding.log.size());
    for (const auto &entry : encoding.log) {
        put(out, entry.step);
        put(out, entry.length);
        put_all(out, entry.cuts);
        put_all(out, entry.sigma);
        put(out, entry.split);
        put_all(out, entry.half);
    }
    return out;
}

Decoded deserialize(const std::string &bytes)
{
    if (bytes.size() < sizeof magic || std::memcmp(bytes.data(), magic, sizeof magic) != 0)
        throw InconsistentLog("not a codec stream");
    Reader in(bytes);
    Decoded out;
    for (std::size_t i = 0; i < sizeof magic; ++i)
        in.byte();
    if (in.byte() != format_version)
        throw InconsistentLog("unsupported codec format version");
    out.params.alphabet_size = in.get();
    out.params.k = in.get();
    out.params.min_length = in.get();
    try {
        out.params.validate();
    } catch (const std::invalid_argument &e) {
        throw InconsistentLog(e.what());
    }
    out.encoding.input_length = in.get();
    out.encoding.residual = in.get_all<Letter>();
    const std::size_t entries = in.get();
    for (std::size_t i = 0; i < entries; ++i) {
        LogEntry entry;
        entry.step = in.get();
        entry.length = in.get();
        entry.cuts = in.get_all<std::size_t>();
        entry.sigma = in.get_all<std::size_t>();
        entry.split = in.get();
        entry.half = in.get_all<Letter>();
        out.encoding.log.push_back(std::move(entry));
    }
    if (!in.done())
        throw InconsistentLog("trailing bytes after codec stream");
    return out;
}

namespace {

struct AvoiderCounter
{
    std::size_t q;
    std::size_t min_length;
    std::size_t max_length;
    SolverOptions options;
    std::vector<std::uint64_t> &per_length;
    std::vector<Letter> letters;

    bool qualifying_suffix()
    {
        const std::size_t n = letters.size();
        for (std::size_t length = min_length; length <= n; ++length) {
            auto suffix = std::span<const Letter>(letters).subspan(n - length);
            if (!is_tangram(suffix))
                continue;
            auto mu = cut_number(suffix, options);
            if (mu.status == SolveStatus::budget_exhausted)
                throw BudgetExhausted("cut number undecided within the node budget");
            if (mu.status == SolveStatus::found)
                return true;
        }
        return false;
    }

    void visit()
    {
        if (letters.size() == max_length)
            return;
        for (Letter c = 0; c < q; ++c) {
            letters.push_back(c);
            if (!qualifying_suffix()) {
                ++per_length[letters.size()];
                visit();
            }
            letters.pop_back();
        }
    }
};

} // namespace

std::vector<std::uint64_t> count_avoiders(std::size_t q, std::size_t min_length, std::size_t k,
                                          std::size_t max_length, std::uint64_t node_budget)
{
    CodecParams{q, k, min_length}.validate();
    std::vector<std::uint64_t> per_length(max_length + 1, 0);
    AvoiderCounter counter{q, min_length, max_length, {.max_cuts = k, .node_budget = node_budget},
                           per_length, {}};
    counter.visit();
    std::vector<std::uint64_t> cumulative;
    std::uint64_t total = 0;
    for (std::size_t n = 1; n <= max_length; ++n)
        cumulative.push_back(total += per_length[n]);
    return cumulative;
}

} // namespace tangram
