#include "pubsim/config_io.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace pubsim {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::set<std::string>& allowed,
                  const std::string& where) {
    for (const auto& item : obj.items()) {
        if (!allowed.contains(item.key())) {
            throw ConfigKeyError("unknown config key \"" + where + item.key() + "\"");
        }
    }
}

double get_number(const json& obj, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) {
        throw ConfigParseError(std::string("config key \"") + key + "\" must be a number");
    }
    return v.get<double>();
}

long get_integer(const json& obj, const char* key, long fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer()) {
        throw ConfigParseError(std::string("config key \"") + key + "\" must be an integer");
    }
    return v.get<long>();
}

std::string get_string(const json& obj, const char* key, const std::string& fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_string()) {
        throw ConfigParseError(std::string("config key \"") + key + "\" must be a string");
    }
    return v.get<std::string>();
}

void apply_tier_overrides(TierParams& tp, const json& obj, const std::string& where) {
    static const std::set<std::string> allowed{
        "desk_reject_prob",   "desk_decision_time", "review_time_mean",
        "review_time_sd",     "revision_time_mean", "revision_time_sd",
        "rounds",             "target_eventual_acceptance"};
    require_keys(obj, allowed, where);

    tp.desk_reject_prob_baseline =
        get_number(obj, "desk_reject_prob", tp.desk_reject_prob_baseline);
    tp.desk_decision_time = get_number(obj, "desk_decision_time", tp.desk_decision_time);
    tp.review_time_mean = get_number(obj, "review_time_mean", tp.review_time_mean);
    tp.review_time_sd = get_number(obj, "review_time_sd", tp.review_time_sd);
    tp.revision_time_mean = get_number(obj, "revision_time_mean", tp.revision_time_mean);
    tp.revision_time_sd = get_number(obj, "revision_time_sd", tp.revision_time_sd);
    tp.target_eventual_acceptance =
        get_number(obj, "target_eventual_acceptance", tp.target_eventual_acceptance);

    if (obj.contains("rounds")) {
        const json& rounds = obj.at("rounds");
        if (!rounds.is_array() || rounds.size() != 3) {
            throw ConfigParseError("config key \"" + where +
                                   "rounds\" must be an array of exactly 3 [accept, "
                                   "major_revision] pairs");
        }
        for (std::size_t k = 0; k < 3; ++k) {
            const json& pair = rounds[k];
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
                !pair[1].is_number()) {
                throw ConfigParseError("config key \"" + where + "rounds[" +
                                       std::to_string(k) +
                                       "]\" must be a [accept, major_revision] number pair");
            }
            tp.rounds[k].accept = pair[0].get<double>();
            tp.rounds[k].major_revision = pair[1].get<double>();
        }
    }
}

} // namespace

ConfigValidationError::ConfigValidationError(std::vector<std::string> violations_in)
    : ConfigError([&violations_in] {
          std::ostringstream os;
          os << "config validation failed:";
          for (const std::string& v : violations_in) {
              os << "\n  - " << v;
          }
          return os.str();
      }()),
      violations(std::move(violations_in)) {}

ScenarioConfig parse_config_json(const json& doc) {
    if (!doc.is_object()) {
        throw ConfigParseError("config document must be a JSON object");
    }
    static const std::set<std::string> allowed{
        "faculty_pool",         "horizon_months",
        "productivity_lambda",  "adopter_fraction",
        "adopter_lambda",       "external_load",
        "desk_retry_limit",     "t3_review_reject_policy",
        "t3_review_reject_limit", "resubmission_gap_desk",
        "resubmission_gap_review", "start_tier",
        "master_seed",          "tiers"};
    require_keys(doc, allowed, "");

    ScenarioConfig c = default_baseline_config();
    c.faculty_pool = get_integer(doc, "faculty_pool", c.faculty_pool);
    c.horizon_months = get_number(doc, "horizon_months", c.horizon_months);
    c.productivity_lambda = get_number(doc, "productivity_lambda", c.productivity_lambda);
    c.adopter_fraction = get_number(doc, "adopter_fraction", c.adopter_fraction);
    c.adopter_lambda = get_number(doc, "adopter_lambda", c.adopter_lambda);
    c.external_load = get_number(doc, "external_load", c.external_load);
    c.desk_retry_limit =
        static_cast<int>(get_integer(doc, "desk_retry_limit", c.desk_retry_limit));
    c.t3_review_reject_limit = static_cast<int>(
        get_integer(doc, "t3_review_reject_limit", c.t3_review_reject_limit));
    c.resubmission_gap_desk = get_number(doc, "resubmission_gap_desk", c.resubmission_gap_desk);
    c.resubmission_gap_review =
        get_number(doc, "resubmission_gap_review", c.resubmission_gap_review);

    try {
        c.t3_review_reject_policy = t3_policy_from_label(
            get_string(doc, "t3_review_reject_policy",
                       std::string(t3_policy_label(c.t3_review_reject_policy))));
        c.start_tier =
            tier_from_label(get_string(doc, "start_tier", std::string(tier_label(c.start_tier))));
    } catch (const std::invalid_argument& e) {
        throw ConfigParseError(e.what());
    }

    if (doc.contains("master_seed")) {
        const json& v = doc.at("master_seed");
        if (v.is_number_unsigned()) {
            c.master_seed = v.get<std::uint64_t>();
        } else if (v.is_number_integer() && v.get<long long>() >= 0) {
            c.master_seed = static_cast<std::uint64_t>(v.get<long long>());
        } else {
            throw ConfigParseError("config key \"master_seed\" must be a non-negative integer");
        }
    }

    if (doc.contains("tiers")) {
        const json& tiers = doc.at("tiers");
        if (!tiers.is_object()) {
            throw ConfigParseError("config key \"tiers\" must be an object");
        }
        require_keys(tiers, {"T1", "T2", "T3"}, "tiers.");
        for (Tier t : kAllTiers) {
            const std::string label{tier_label(t)};
            if (tiers.contains(label)) {
                apply_tier_overrides(c.tier_params(t), tiers.at(label),
                                     "tiers." + label + ".");
            }
        }
    }

    if (auto violations = validate_config(c); !violations.empty()) {
        throw ConfigValidationError(std::move(violations));
    }
    return c;
}

ScenarioConfig parse_config(const std::string& path) {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec) || ec) {
        throw ConfigFileError("config file not found: " + path);
    }
    std::ifstream in(path);
    if (!in) {
        throw ConfigFileError("config file not readable: " + path);
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigParseError("config file " + path + ": " + e.what());
    }
    return parse_config_json(doc);
}

nlohmann::json config_to_json(const ScenarioConfig& c) {
    json tiers = json::object();
    for (Tier t : kAllTiers) {
        const TierParams& tp = c.tier_params(t);
        json rounds = json::array();
        for (const RoundOutcomeProbs& r : tp.rounds) {
            rounds.push_back(json::array({r.accept, r.major_revision}));
        }
        tiers[std::string(tier_label(t))] = {
            {"desk_reject_prob", tp.desk_reject_prob_baseline},
            {"desk_decision_time", tp.desk_decision_time},
            {"review_time_mean", tp.review_time_mean},
            {"review_time_sd", tp.review_time_sd},
            {"revision_time_mean", tp.revision_time_mean},
            {"revision_time_sd", tp.revision_time_sd},
            {"rounds", rounds},
            {"target_eventual_acceptance", tp.target_eventual_acceptance},
        };
    }
    return json{
        {"faculty_pool", c.faculty_pool},
        {"horizon_months", c.horizon_months},
        {"productivity_lambda", c.productivity_lambda},
        {"adopter_fraction", c.adopter_fraction},
        {"adopter_lambda", c.adopter_lambda},
        {"external_load", c.external_load},
        {"desk_retry_limit", c.desk_retry_limit},
        {"t3_review_reject_policy", std::string(t3_policy_label(c.t3_review_reject_policy))},
        {"t3_review_reject_limit", c.t3_review_reject_limit},
        {"resubmission_gap_desk", c.resubmission_gap_desk},
        {"resubmission_gap_review", c.resubmission_gap_review},
        {"start_tier", std::string(tier_label(c.start_tier))},
        {"master_seed", c.master_seed},
        {"tiers", tiers},
    };
}

} // namespace pubsim
