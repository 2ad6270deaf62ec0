#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace orderspec::cli {

struct RunConfig {
    std::uint64_t seed = 1;
    unsigned threads = 1;
    std::uint64_t enumeration_bound = 30000000;
    std::uint64_t sample_size = 100000;
    std::optional<std::string> cache_path;
    bool pretty = false;
};

// Values given on the command line; unset fields fall through.
struct ConfigOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> threads;
    std::optional<std::uint64_t> enumeration_bound;
    std::optional<std::uint64_t> sample_size;
    std::optional<std::string> cache_path;
    std::optional<std::string> config_path;
    std::optional<bool> pretty;
};

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

EnvLookup process_env();

// Flags, then ORDERSPEC_* environment variables, then the JSON config file
// (--config or ORDERSPEC_CONFIG), then defaults. Throws UsageError on bad values.
RunConfig resolve_config(const ConfigOverrides& flags, const EnvLookup& env);

}  // namespace orderspec::cli
