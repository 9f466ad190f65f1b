#include "pubsim/config_io.hpp"
#include "pubsim/reports.hpp"
#include "pubsim/scenarios.hpp"
#include "pubsim/validation.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr const char* kVersion = "0.1.0";

struct GlobalOptions {
    std::string config_path;
    std::string seed_text;
    std::string out_dir = ".";
    int workers = 0; // 0 = hardware concurrency; affects speed only, never results
    std::string format = "csv";
};

struct RunContext {
    pubsim::ScenarioConfig config;
    std::uint64_t seed = 0;
    int workers = 1;
    std::string out_dir;
    std::string format;
    std::vector<std::string> outputs;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();
};

std::string iso_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

RunContext make_context(const GlobalOptions& opts) {
    RunContext ctx;
    ctx.config =
        opts.config_path.empty() ? pubsim::default_baseline_config()
                                 : pubsim::parse_config(opts.config_path);
    ctx.seed = ctx.config.master_seed;
    if (!opts.seed_text.empty()) {
        if (opts.seed_text == "random") {
            std::random_device rd;
            ctx.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
        } else {
            ctx.seed = std::stoull(opts.seed_text);
        }
    }
    ctx.workers = opts.workers > 0
                      ? opts.workers
                      : std::max(1u, std::thread::hardware_concurrency());
    ctx.out_dir = opts.out_dir;
    ctx.format = opts.format;
    std::filesystem::create_directories(ctx.out_dir);
    return ctx;
}

void write_table(RunContext& ctx, const std::string& stem, const pubsim::Table& table) {
    const bool json = ctx.format == "json";
    const std::filesystem::path path =
        std::filesystem::path(ctx.out_dir) / (stem + (json ? ".json" : ".csv"));
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << (json ? pubsim::to_json(table) : pubsim::to_csv(table));
    ctx.outputs.push_back(path.string());
    std::cout << "wrote " << path.string() << "\n";
}

void write_manifest(RunContext& ctx, const std::string& subcommand) {
    nlohmann::json manifest{
        {"artifact", "pubsim"},
        {"version", kVersion},
        {"subcommand", subcommand},
        {"master_seed", ctx.seed},
        {"workers", ctx.workers},
        {"format", ctx.format},
        {"timestamp", iso_timestamp()},
        {"duration_seconds",
         std::chrono::duration<double>(std::chrono::steady_clock::now() - ctx.started)
             .count()},
        {"config", pubsim::config_to_json(ctx.config)},
        {"outputs", ctx.outputs},
    };
    const std::filesystem::path path = std::filesystem::path(ctx.out_dir) / "manifest.json";
    std::ofstream out(path, std::ios::binary);
    out << manifest.dump(2) << "\n";
}

std::vector<double> parse_loads(const std::string& text) {
    std::vector<double> loads;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            loads.push_back(std::stod(item));
        }
    }
    if (loads.empty()) {
        throw std::runtime_error("--loads must name at least one load factor");
    }
    return loads;
}

void print_cohort(const pubsim::CohortSummary& s) {
    std::cout << "accepted " << s.n_accepted << "/" << s.n_submitted << " (rate "
              << s.acceptance_rate << ")";
    if (!s.time_to_acceptance.empty()) {
        std::cout << ", median months to acceptance " << s.time_to_acceptance.median;
    }
    std::cout << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pubsim - seeded Monte Carlo simulator of the journal submission pipeline"};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_option("--config", opts.config_path, "Scenario config JSON file");
    app.add_option("--seed", opts.seed_text, "Master seed (u64, or 'random')");
    app.add_option("--out", opts.out_dir, "Output directory");
    app.add_option("--workers", opts.workers, "Worker threads (speed only, never results)");
    app.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* cmd_calibrate =
        app.add_subcommand("calibrate", "Closed-form desk-rate / acceptance table");
    std::string calibrate_loads = "2,3,5,10";
    cmd_calibrate->add_option("--loads", calibrate_loads, "Comma-separated load factors");

    auto* cmd_cohort =
        app.add_subcommand("cohort", "Single-tier, single-attempt manuscript cohort");
    std::string cohort_tier = "T1";
    long cohort_n = 10000;
    cmd_cohort->add_option("--tier", cohort_tier, "Journal tier")
        ->check(CLI::IsMember({"T1", "T2", "T3"}));
    cmd_cohort->add_option("--n", cohort_n, "Cohort size")->check(CLI::PositiveNumber);

    auto* cmd_sua = app.add_subcommand("sua", "Submit-until-acceptance cohort (full ladder)");
    long sua_n = 10000;
    cmd_sua->add_option("--n", sua_n, "Cohort size")->check(CLI::PositiveNumber);

    auto* cmd_portfolio =
        app.add_subcommand("portfolio", "Faculty portfolios over the tenure horizon");

    auto* cmd_sweep = app.add_subcommand("sweep", "Portfolio sweep over external loads");
    std::string sweep_loads = "1,2,3,5,10";
    cmd_sweep->add_option("--loads", sweep_loads, "Comma-separated load factors");

    auto* cmd_validate =
        app.add_subcommand("validate", "Run the built-in validation suite");
    bool validate_verbose = false;
    cmd_validate->add_flag("--verbose", validate_verbose, "Print every check, not just failures");

    // global flags may appear after the subcommand name
    for (CLI::App* sub : app.get_subcommands(nullptr)) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << "\n";
        return 2;
    }

    try {
        RunContext ctx = make_context(opts);

        if (cmd_calibrate->parsed()) {
            const std::vector<double> loads = parse_loads(calibrate_loads);
            write_table(ctx, "calibration", pubsim::calibration_report(ctx.config, loads));
            write_manifest(ctx, "calibrate");
            return 0;
        }
        if (cmd_cohort->parsed()) {
            const pubsim::Tier tier = pubsim::tier_from_label(cohort_tier);
            const pubsim::CohortSummary s = pubsim::run_single_tier_cohort(
                cohort_n, tier, ctx.config, ctx.seed, ctx.workers);
            print_cohort(s);
            write_table(ctx, "cohort_summary", pubsim::cohort_summary_report(s));
            write_table(ctx, "cohort_time_hist",
                        pubsim::time_histogram_report(s.elapsed_histogram));
            write_manifest(ctx, "cohort");
            return 0;
        }
        if (cmd_sua->parsed()) {
            const pubsim::CohortSummary s =
                pubsim::run_sua_cohort(sua_n, ctx.config, ctx.seed, ctx.workers);
            print_cohort(s);
            write_table(ctx, "sua_summary", pubsim::cohort_summary_report(s));
            write_table(ctx, "sua_time_hist",
                        pubsim::time_histogram_report(s.elapsed_histogram));
            write_manifest(ctx, "sua");
            return 0;
        }
        if (cmd_portfolio->parsed()) {
            const pubsim::PortfolioResult r =
                pubsim::run_portfolio(ctx.config, ctx.seed, ctx.workers);
            std::cout << "faculty " << r.all.faculty_count << ", mean accepted "
                      << r.all.accepted_all.mean << ", mean T1 " << r.all.accepted_t1.mean
                      << "\n";
            write_table(ctx, "portfolio_summary", pubsim::portfolio_summary_report(r));
            write_table(ctx, "faculty_detail", pubsim::faculty_detail_report(r));
            write_manifest(ctx, "portfolio");
            return 0;
        }
        if (cmd_sweep->parsed()) {
            const std::vector<double> loads = parse_loads(sweep_loads);
            const std::vector<pubsim::SweepRow> rows =
                pubsim::run_load_sweep(ctx.config, loads, ctx.seed, ctx.workers);
            write_table(ctx, "sweep", pubsim::sweep_report(rows));
            write_manifest(ctx, "sweep");
            return 0;
        }
        if (cmd_validate->parsed()) {
            const pubsim::ValidationReport report =
                pubsim::run_acceptance_criteria(ctx.workers);
            pubsim::print_report(report, std::cout, validate_verbose);
            return report.all_passed() ? 0 : 1;
        }
    } catch (const pubsim::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
