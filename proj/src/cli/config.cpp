#include "orderspec/cli/config.hpp"

#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "orderspec/errors.hpp"

namespace orderspec::cli {

namespace {

std::uint64_t parse_u64(const std::string& name, const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError(name + ": expected a non-negative integer, got '" + text + "'");
    try {
        return std::stoull(text);
    } catch (const std::out_of_range&) {
        throw UsageError(name + ": value out of range");
    }
}

bool parse_bool(const std::string& name, const std::string& text) {
    if (text == "1" || text == "true") return true;
    if (text == "0" || text == "false") return false;
    throw UsageError(name + ": expected true/false, got '" + text + "'");
}

template <class T>
void set_if(std::optional<T>& slot, const std::optional<T>& value) {
    if (!slot && value) slot = value;
}

ConfigOverrides from_env(const EnvLookup& env) {
    ConfigOverrides o;
    if (auto v = env("ORDERSPEC_SEED")) o.seed = parse_u64("ORDERSPEC_SEED", *v);
    if (auto v = env("ORDERSPEC_THREADS")) o.threads = static_cast<unsigned>(parse_u64("ORDERSPEC_THREADS", *v));
    if (auto v = env("ORDERSPEC_ENUM_BOUND")) o.enumeration_bound = parse_u64("ORDERSPEC_ENUM_BOUND", *v);
    if (auto v = env("ORDERSPEC_SAMPLES")) o.sample_size = parse_u64("ORDERSPEC_SAMPLES", *v);
    if (auto v = env("ORDERSPEC_CACHE")) o.cache_path = *v;
    if (auto v = env("ORDERSPEC_CONFIG")) o.config_path = *v;
    if (auto v = env("ORDERSPEC_PRETTY")) o.pretty = parse_bool("ORDERSPEC_PRETTY", *v);
    return o;
}

ConfigOverrides from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("config file " + path + ": " + e.what());
    }
    if (!j.is_object()) throw UsageError("config file " + path + ": expected a JSON object");
    ConfigOverrides o;
    auto u64 = [&](const char* key) -> std::optional<std::uint64_t> {
        if (!j.contains(key)) return std::nullopt;
        if (!j[key].is_number_unsigned()) throw UsageError(std::string("config key ") + key + ": expected a non-negative integer");
        return j[key].get<std::uint64_t>();
    };
    for (auto it = j.begin(); it != j.end(); ++it) {
        static const char* known[] = {"seed", "threads", "enum_bound", "samples", "cache", "pretty"};
        bool ok = false;
        for (auto k : known) ok = ok || it.key() == k;
        if (!ok) throw UsageError("config file " + path + ": unknown key '" + it.key() + "'");
    }
    o.seed = u64("seed");
    if (auto t = u64("threads")) o.threads = static_cast<unsigned>(*t);
    o.enumeration_bound = u64("enum_bound");
    o.sample_size = u64("samples");
    if (j.contains("cache")) {
        if (!j["cache"].is_string()) throw UsageError("config key cache: expected a string");
        o.cache_path = j["cache"].get<std::string>();
    }
    if (j.contains("pretty")) {
        if (!j["pretty"].is_boolean()) throw UsageError("config key pretty: expected a boolean");
        o.pretty = j["pretty"].get<bool>();
    }
    return o;
}

}  // namespace

EnvLookup process_env() {
    return [](const std::string& name) -> std::optional<std::string> {
        const char* v = std::getenv(name.c_str());
        if (!v) return std::nullopt;
        return std::string(v);
    };
}

RunConfig resolve_config(const ConfigOverrides& flags, const EnvLookup& env) {
    ConfigOverrides merged = flags;
    const ConfigOverrides e = from_env(env);
    set_if(merged.config_path, e.config_path);
    set_if(merged.seed, e.seed);
    set_if(merged.threads, e.threads);
    set_if(merged.enumeration_bound, e.enumeration_bound);
    set_if(merged.sample_size, e.sample_size);
    set_if(merged.cache_path, e.cache_path);
    set_if(merged.pretty, e.pretty);
    if (merged.config_path) {
        const ConfigOverrides f = from_file(*merged.config_path);
        set_if(merged.seed, f.seed);
        set_if(merged.threads, f.threads);
        set_if(merged.enumeration_bound, f.enumeration_bound);
        set_if(merged.sample_size, f.sample_size);
        set_if(merged.cache_path, f.cache_path);
        set_if(merged.pretty, f.pretty);
    }
    RunConfig c;
    if (merged.seed) c.seed = *merged.seed;
    if (merged.threads) c.threads = *merged.threads;
    if (merged.enumeration_bound) c.enumeration_bound = *merged.enumeration_bound;
    if (merged.sample_size) c.sample_size = *merged.sample_size;
    c.cache_path = merged.cache_path;
    if (merged.pretty) c.pretty = *merged.pretty;
    if (c.threads == 0 || c.threads > 256) throw UsageError("threads must be in 1..256");
    if (c.enumeration_bound == 0) throw UsageError("enumeration bound must be positive");
    if (c.sample_size == 0) throw UsageError("sample size must be positive");
    return c;
}

}  // namespace orderspec::cli
