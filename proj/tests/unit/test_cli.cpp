#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "orderspec/cli/commands.hpp"
#include "orderspec/cli/config.hpp"
#include "orderspec/cli/json_io.hpp"
#include "orderspec/cli/spec_parse.hpp"

using namespace orderspec;
using namespace orderspec::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

EnvLookup env_of(std::map<std::string, std::string> vars) {
    return [vars](const std::string& k) -> std::optional<std::string> {
        auto it = vars.find(k);
        if (it == vars.end()) return std::nullopt;
        return it->second;
    };
}

Run run(const std::vector<std::string>& args, const EnvLookup& env = env_of({})) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err, env);
    return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json strip_timing(Json j) {
    j.erase("wall_clock_ms");
    return j;
}

}  // namespace

TEST_CASE("group spec parsing") {
    auto s = parse_group_spec("PSU(4,3)");
    CHECK(s.family == Family::PSL);
    CHECK(s.eps == Sign::Minus);
    CHECK(s.n == 4);
    s = parse_group_spec(" Sp( 4 , 5 ) ");
    CHECK(s.family == Family::Sp);
    CHECK(s.n == 2);
    s = parse_group_spec("PSL(3,7^3)");
    CHECK(s.p == 7);
    CHECK(s.m == 3);
    s = parse_group_spec("OmegaOdd(7,3)");
    CHECK(s.n == 3);
    s = parse_group_spec("POmega-(8,5)");
    CHECK(s.family == Family::POmegaEven);
    CHECK(s.eps == Sign::Minus);
    CHECK(s.n == 4);
    CHECK(parse_gl_spec("GL(3,5)").q == 5);
}

TEST_CASE("group spec parse errors carry positions") {
    auto pos_of = [](const std::string& text) -> std::size_t {
        try {
            parse_group_spec(text);
        } catch (const ParseError& e) {
            return e.position();
        }
        return std::string::npos;
    };
    CHECK(pos_of("PSL(x,3)") == 4);
    CHECK(pos_of("PSL(3,4)") == 6);
    CHECK(pos_of("PSL(3,6)") == 6);
    CHECK(pos_of("XYZ(3,3)") == 0);
    CHECK(pos_of("PSL(3,3") == 7);
    CHECK(pos_of("PSL(3,3))") == 8);
    CHECK(pos_of("Sp(3,3)") == 3);
    CHECK(pos_of("PSL(1,3)") == 4);
    CHECK_THROWS_AS(parse_gl_spec("PSL(3,3)"), ParseError);
}

TEST_CASE("config precedence") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto cfg = (dir / "orderspec_test_config.json").string();
    {
        std::ofstream f(cfg);
        f << R"({"seed": 5, "threads": 2, "samples": 300, "enum_bound": 1000})";
    }
    RunConfig c = resolve_config({}, env_of({}));
    CHECK(c.seed == 1);
    CHECK(c.threads == 1);
    CHECK(c.enumeration_bound == 30000000);
    CHECK(c.sample_size == 100000);

    ConfigOverrides flags;
    flags.config_path = cfg;
    c = resolve_config(flags, env_of({}));
    CHECK(c.seed == 5);
    CHECK(c.sample_size == 300);

    c = resolve_config(flags, env_of({{"ORDERSPEC_SEED", "9"}, {"ORDERSPEC_THREADS", "3"}}));
    CHECK(c.seed == 9);
    CHECK(c.threads == 3);
    CHECK(c.enumeration_bound == 1000);

    flags.seed = 42;
    c = resolve_config(flags, env_of({{"ORDERSPEC_SEED", "9"}}));
    CHECK(c.seed == 42);

    c = resolve_config({}, env_of({{"ORDERSPEC_CONFIG", cfg}}));
    CHECK(c.threads == 2);

    CHECK_THROWS_AS(resolve_config({}, env_of({{"ORDERSPEC_THREADS", "abc"}})), UsageError);
    CHECK_THROWS_AS(resolve_config({}, env_of({{"ORDERSPEC_THREADS", "0"}})), UsageError);
    {
        std::ofstream f(cfg);
        f << R"({"sed": 5})";
    }
    CHECK_THROWS_AS(resolve_config(flags, env_of({})), UsageError);
    std::filesystem::remove(cfg);
}

TEST_CASE("large integers serialize as strings") {
    CHECK(big_json(BigInt(13)).is_number());
    CHECK(big_json(BigInt("9007199254740991")).is_number());
    CHECK(big_json(BigInt("9007199254740992")) == Json("9007199254740992"));
    const Run r = run({"spectrum", "PSL(12,81)"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["generators"][0].is_string());
}

TEST_CASE("exit codes") {
    CHECK(run({"spectrum", "PSL(3,3)"}).code == kExitOk);
    CHECK(run({"spectrum", "PSL(3,4)"}).code == kExitUsage);
    CHECK(run({"spectrum", "PSL(3,4)"}).err.find("even characteristic") != std::string::npos);
    CHECK(run({"bogus"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"tau-test", "Sp(4,3)"}).code == kExitUsage);
    CHECK(run({"admissible", "PSL(2,9)"}).code == kExitUsage);
    CHECK(run({"verify", "PSL(5,3)"}).code == kExitBound);
    CHECK(run({"verify", "PSL(3,3)", "full", "plain", "--expect", "13,8"}).code == kExitVerifyFailed);
    CHECK(run({"verify", "PSL(3,3)", "sideways"}).code == kExitUsage);
    CHECK(run({"--threads", "0", "spectrum", "PSL(3,3)"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("verify results do not depend on thread count") {
    const Run a = run({"--threads", "1", "--samples", "3000", "--seed", "4", "verify", "PSL(4,3)", "sample", "plain"});
    const Run b = run({"--threads", "3", "--samples", "3000", "--seed", "4", "verify", "PSL(4,3)", "sample", "plain"});
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(strip_timing(Json::parse(a.out)) == strip_timing(Json::parse(b.out)));
}

TEST_CASE("factorization cache file") {
    const auto path = (std::filesystem::temp_directory_path() / "orderspec_cli_cache.txt").string();
    std::filesystem::remove(path);
    const Run a = run({"--cache", path, "spectrum", "PSL(4,9)"});
    CHECK(a.code == 0);
    CHECK(std::filesystem::exists(path));
    const Run b = run({"--cache", path, "spectrum", "PSL(4,9)"});
    CHECK(a.out == b.out);
    std::filesystem::remove(path);
}

TEST_CASE("golden outputs") {
    struct Case {
        std::vector<std::string> args;
        const char* file;
        bool timed;
    };
    const std::vector<Case> cases = {
        {{"spectrum", "PSL(3,3)"}, "spectrum_psl_3_3.json", false},
        {{"spectrum", "PSp(2,3)"}, "spectrum_psp_2_3.json", false},
        {{"spectrum", "PSU(4,3)"}, "spectrum_psu_4_3.json", false},
        {{"tau-test", "PSL(3,5)"}, "tau_psl_3_5.json", false},
        {{"tau-test", "PSU(4,3)"}, "tau_psu_4_3.json", false},
        {{"tau-test", "PSL(5,3)"}, "tau_psl_5_3.json", false},
        {{"admissible", "PSL(4,25)"}, "admissible_psl_4_25.json", false},
        {{"admissible", "PSL(3,343)"}, "admissible_psl_3_343.json", false},
        {{"admissible", "PSU(4,3)"}, "admissible_psu_4_3.json", false},
        {{"coset-spectrum", "PSL(4,3)"}, "coset_psl_4_3_t.json", false},
        {{"--pretty", "coset-spectrum", "PSL(3,27)", "--word", "f"}, "coset_psl_3_27_f.json", false},
        {{"verify", "PSL(3,3)", "full", "plain"}, "verify_psl_3_3.json", true},
        {{"verify", "PGL(3,3)", "full", "tau_coset"}, "verify_pgl_3_3_tau.json", true},
        {{"gamma-check", "GL(2,3)"}, "gamma_gl_2_3.json", true},
    };
    for (const auto& c : cases) {
        const Run r = run(c.args);
        INFO(c.file);
        REQUIRE(r.code == 0);
        const std::string golden = read_file(std::string(ORDERSPEC_GOLDEN_DIR) + "/" + c.file);
        if (c.timed) {
            CHECK(strip_timing(Json::parse(r.out)) == strip_timing(Json::parse(golden)));
        } else {
            CHECK(r.out == golden);
            // Byte-stable across runs.
            CHECK(run(c.args).out == r.out);
        }
    }
}
