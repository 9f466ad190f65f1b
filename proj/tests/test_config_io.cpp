#include "pubsim/config_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

using namespace pubsim;
using nlohmann::json;

namespace {

struct TempFile {
    std::filesystem::path path;

    explicit TempFile(const std::string& contents) {
        path = std::filesystem::temp_directory_path() /
               ("pubsim_cfg_" + std::to_string(std::rand()) + ".json");
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

} // namespace

TEST_CASE("empty document yields the exact baseline defaults") {
    const ScenarioConfig parsed = parse_config_json(json::object());
    CHECK(config_to_json(parsed) == config_to_json(default_baseline_config()));
}

TEST_CASE("single override keeps everything else at defaults") {
    const ScenarioConfig parsed = parse_config_json(json{{"external_load", 5}});
    CHECK(parsed.external_load == 5.0);
    ScenarioConfig expected = default_baseline_config();
    expected.external_load = 5.0;
    CHECK(config_to_json(parsed) == config_to_json(expected));
}

TEST_CASE("unknown keys are fatal and named") {
    try {
        parse_config_json(json{{"external_laod", 5}});
        FAIL("expected ConfigKeyError");
    } catch (const ConfigKeyError& e) {
        CHECK(std::string(e.what()).find("external_laod") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_config_json(json{{"tiers", {{"TX", json::object()}}}}),
                    ConfigKeyError);
    CHECK_THROWS_AS(
        parse_config_json(json{{"tiers", {{"T1", {{"desk_rejct_prob", 0.5}}}}}}),
        ConfigKeyError);
}

TEST_CASE("tier overrides merge per key") {
    const ScenarioConfig parsed =
        parse_config_json(json{{"tiers", {{"T1", {{"desk_reject_prob", 0.8}}}}}});
    CHECK(parsed.tier_params(Tier::T1).desk_reject_prob_baseline == 0.8);
    CHECK(parsed.tier_params(Tier::T1).review_time_mean == 6.0);
    CHECK(parsed.tier_params(Tier::T2).desk_reject_prob_baseline == 0.5);
}

TEST_CASE("round tables parse as [accept, major_revision] pairs") {
    const json doc{
        {"tiers",
         {{"T3", {{"rounds", json::array({json::array({0.1, 0.2}), json::array({0.3, 0.4}),
                                          json::array({0.5, 0.5})})}}}}}};
    const ScenarioConfig parsed = parse_config_json(doc);
    CHECK(parsed.tier_params(Tier::T3).rounds[1].accept == 0.3);
    CHECK(parsed.tier_params(Tier::T3).rounds[1].major_revision == 0.4);

    CHECK_THROWS_AS(
        parse_config_json(json{
            {"tiers", {{"T3", {{"rounds", json::array({json::array({0.1, 0.2})})}}}}}}),
        ConfigParseError);
}

TEST_CASE("policy and tier labels parse") {
    const ScenarioConfig parsed = parse_config_json(
        json{{"t3_review_reject_policy", "unlimited"}, {"start_tier", "T2"}});
    CHECK(parsed.t3_review_reject_policy == T3ReviewRejectPolicy::unlimited);
    CHECK(parsed.start_tier == Tier::T2);
    CHECK_THROWS_AS(parse_config_json(json{{"t3_review_reject_policy", "forever"}}),
                    ConfigParseError);
}

TEST_CASE("validation violations surface as a distinct error with details") {
    try {
        parse_config_json(json{{"external_load", 0.5}});
        FAIL("expected ConfigValidationError");
    } catch (const ConfigValidationError& e) {
        REQUIRE(e.violations.size() == 1);
        CHECK(e.violations[0].find("external_load") != std::string::npos);
    }
}

TEST_CASE("file errors are distinct classes") {
    CHECK_THROWS_AS(parse_config("/definitely/not/a/real/file.json"), ConfigFileError);
    const TempFile broken("{ not json");
    CHECK_THROWS_AS(parse_config(broken.path.string()), ConfigParseError);
}

TEST_CASE("file round trip") {
    ScenarioConfig reference = default_baseline_config();
    reference.external_load = 3.0;
    reference.master_seed = 99;
    reference.t3_review_reject_policy = T3ReviewRejectPolicy::retry_limit;
    reference.t3_review_reject_limit = 2;
    const TempFile file(config_to_json(reference).dump());
    const ScenarioConfig parsed = parse_config(file.path.string());
    CHECK(config_to_json(parsed) == config_to_json(reference));
}

TEST_CASE("type mismatches are parse errors") {
    CHECK_THROWS_AS(parse_config_json(json{{"faculty_pool", "many"}}), ConfigParseError);
    CHECK_THROWS_AS(parse_config_json(json{{"faculty_pool", 2.5}}), ConfigParseError);
    CHECK_THROWS_AS(parse_config_json(json{{"master_seed", -4}}), ConfigParseError);
    CHECK_THROWS_AS(parse_config_json(json::array()), ConfigParseError);
}
