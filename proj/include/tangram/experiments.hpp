// experiments.hpp -- reproducible experiment registry with JSON reports

#pragma once

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tangram {

enum class ExperimentStatus
{
    pass,
    fail,
    inconclusive,
};

const char *to_string(ExperimentStatus status) noexcept;

struct ExperimentReport
{
    std::string id;
    nlohmann::json params;   ///< effective parameters, defaults filled in
    std::string claim;
    ExperimentStatus status = ExperimentStatus::inconclusive;
    nlohmann::json evidence; ///< deterministic for fixed (id, params)
    double seconds = 0;

    nlohmann::json to_json() const;
};

inline constexpr std::uint64_t default_experiment_seed = 20240611;

/// Registered experiment ids, in suite order.
const std::vector<std::string> &experiment_ids();

/// Runs one experiment. `params` overrides the defaults key by key and
/// `seed` drives every random choice. Throws `std::invalid_argument` for an
/// unknown id or unknown parameter names.
ExperimentReport run_experiment(const std::string &id, const nlohmann::json &params = nlohmann::json::object(),
                                std::uint64_t seed = default_experiment_seed);

} // namespace tangram
