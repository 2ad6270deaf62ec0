#include "orderspec/cli/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include <CLI11.hpp>

#include "orderspec/cli/json_io.hpp"
#include "orderspec/cli/spec_parse.hpp"
#include "orderspec/coset.hpp"
#include "orderspec/errors.hpp"
#include "orderspec/outer.hpp"
#include "orderspec/spectra.hpp"
#include "orderspec/oracle/verify.hpp"

namespace orderspec::cli {

namespace {

struct CacheScope {
    FactorCache cache;
    std::optional<std::string> path;

    explicit CacheScope(const std::optional<std::string>& p) : path(p) {
        if (!path) return;
        if (std::filesystem::exists(*path)) cache.load(*path);
        set_default_factor_cache(&cache);
    }
    void save() const {
        if (path) cache.save(*path);
    }
    ~CacheScope() {
        if (path) set_default_factor_cache(nullptr);
    }
};

GroupSpec linear_socle(const std::string& text, const char* command) {
    GroupSpec s = parse_group_spec(text);
    if (s.family != Family::PSL || s.n < 3)
        throw UsageError(std::string(command) + " needs a PSL or PSU group with n >= 3, got " + s.display());
    return s;
}

Spectrum parse_expect(const std::string& text) {
    std::vector<BigInt> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("--expect: expected a comma-separated list of positive integers");
        values.emplace_back(item);
    }
    if (values.empty()) throw UsageError("--expect: empty list");
    return normalize(values);
}

oracle::BruteOptions brute_options(const RunConfig& c, oracle::Mode mode) {
    oracle::BruteOptions o;
    o.mode = mode;
    o.samples = c.sample_size;
    o.seed = c.seed;
    o.threads = c.threads;
    o.enum_bound = c.enumeration_bound;
    return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env) {
    CLI::App app{"Element-order spectra of finite classical groups and their almost simple extensions", "orderspec"};
    app.require_subcommand(1);
    app.fallthrough();

    ConfigOverrides flags;
    std::uint64_t seed = 0, enum_bound = 0, samples = 0;
    unsigned threads = 0;
    std::string cache, config;
    bool json_flag = false, pretty_flag = false;
    auto* seed_opt = app.add_option("--seed", seed, "master seed for sampling");
    auto* threads_opt = app.add_option("--threads", threads, "worker threads for enumeration and sampling");
    auto* bound_opt = app.add_option("--enum-bound", enum_bound, "largest group order enumerated in full mode");
    auto* samples_opt = app.add_option("--samples", samples, "sample count in sample mode");
    auto* cache_opt = app.add_option("--cache", cache, "factorization cache file");
    auto* config_opt = app.add_option("--config", config, "JSON config file");
    auto* json_opt = app.add_flag("--json", json_flag, "compact JSON output (default)");
    auto* pretty_opt = app.add_flag("--pretty", pretty_flag, "indented JSON output");
    json_opt->excludes(pretty_opt);

    std::string spec_text;
    std::string word = "t";
    std::string mode_text = "full", kind_text = "plain", expect_text;

    auto* spectrum_cmd = app.add_subcommand("spectrum", "maximal element orders of a simple or classical group");
    spectrum_cmd->add_option("spec", spec_text, "group, e.g. PSL(3,5)")->required();

    auto* coset_cmd = app.add_subcommand("coset-spectrum", "orders in the coset of an outer automorphism");
    coset_cmd->add_option("spec", spec_text, "socle PSL(n,q) or PSU(n,q)")->required();
    coset_cmd->add_option("--word", word, "outer automorphism word in f, t, d (default t)");

    auto* tau_cmd = app.add_subcommand("tau-test", "does the graph automorphism preserve the spectrum");
    tau_cmd->add_option("spec", spec_text, "socle PSL(n,q) or PSU(n,q)")->required();

    auto* adm_cmd = app.add_subcommand("admissible", "maximal admissible cyclic outer subgroups");
    adm_cmd->add_option("spec", spec_text, "socle PSL(n,q) or PSU(n,q)")->required();

    auto* verify_cmd = app.add_subcommand("verify", "check a formula against the matrix-group oracle");
    verify_cmd->add_option("spec", spec_text, "group")->required();
    verify_cmd->add_option("mode", mode_text, "full or sample (default full)");
    verify_cmd->add_option("kind", kind_text, "plain, projective, tau_coset or tau_delta_coset (default plain)");
    verify_cmd->add_option("--expect", expect_text, "replace the formula by these generators (comma-separated)");

    auto* gamma_cmd = app.add_subcommand("gamma-check", "compare {g g^-T} with the Wall criterion over GL(n,q)");
    gamma_cmd->add_option("spec", spec_text, "GL(n,q)")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (*seed_opt) flags.seed = seed;
    if (*threads_opt) flags.threads = threads;
    if (*bound_opt) flags.enumeration_bound = enum_bound;
    if (*samples_opt) flags.sample_size = samples;
    if (*cache_opt) flags.cache_path = cache;
    if (*config_opt) flags.config_path = config;
    if (*pretty_opt) flags.pretty = true;
    if (*json_opt) flags.pretty = false;

    try {
        const RunConfig cfg = resolve_config(flags, env);
        CacheScope scope(cfg.cache_path);
        Json result;
        int code = kExitOk;

        if (spectrum_cmd->parsed()) {
            const GroupSpec s = parse_group_spec(spec_text);
            result["spec"] = s.display();
            result["generators"] = big_list_json(spectrum_of(s).generators());
            if (s.family == Family::OmegaEven || s.family == Family::POmegaEven) result["semisimple_only"] = true;
        } else if (coset_cmd->parsed()) {
            const GroupSpec s = linear_socle(spec_text, "coset-spectrum");
            const OutGroup outg(s);
            const OutElement y = outg.parse(word);
            result["spec"] = s.display();
            result["word"] = outg.to_string(y);
            result.update(coset_json(coset_spectrum(s, y)));
        } else if (tau_cmd->parsed()) {
            const GroupSpec s = linear_socle(spec_text, "tau-test");
            result["spec"] = s.display();
            result.update(tau_json(tau_criterion(s)));
        } else if (adm_cmd->parsed()) {
            result = admissibility_json(admissible_generators(linear_socle(spec_text, "admissible")));
        } else if (verify_cmd->parsed()) {
            const GroupSpec s = parse_group_spec(spec_text);
            const auto opts = brute_options(cfg, oracle::parse_mode(mode_text));
            const auto kind = oracle::parse_order_kind(kind_text);
            std::optional<Spectrum> expect;
            if (!expect_text.empty()) expect = parse_expect(expect_text);
            const auto report = oracle::verify_spectrum(s, kind, opts, expect);
            result = verify_json(report);
            if (!report.pass) code = kExitVerifyFailed;
        } else if (gamma_cmd->parsed()) {
            const GLSpec g = parse_gl_spec(spec_text);
            const auto report = oracle::gamma_check(g.n, g.q, brute_options(cfg, oracle::Mode::Full));
            result = gamma_json(report);
            if (!report.equal) code = kExitVerifyFailed;
        }
        out << dump(result, cfg.pretty) << "\n";
        scope.save();
        return code;
    } catch (const BoundExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitBound;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace orderspec::cli
