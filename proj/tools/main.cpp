#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ternary/campaign.hpp"
#include "ternary/errors.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kViolation = 3;

struct Options {
    std::string nest = "1,2";
    std::string field = "rational";
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    std::vector<std::string> checks;
    std::size_t threads = 0;
    std::size_t budget = 256;
    std::size_t samples = 8;
    std::string out;
    bool json = false;
    std::string delta_file;
    std::string tau_file;
};

void add_common(CLI::App* cmd, Options& opt, bool campaign) {
    cmd->add_option("--nest", opt.nest, "nest dimensions, e.g. 1,2,4")->capture_default_str();
    cmd->add_option("--field", opt.field, "rational (Q) or gaussian (Q[i])")->capture_default_str();
    cmd->add_option("--seed", opt.seed, "64-bit campaign seed")->capture_default_str();
    cmd->add_option("--budget", opt.budget, "random zero-product pairs tried per witness search")->capture_default_str();
    cmd->add_option("--out", opt.out, "write the JSON report here");
    cmd->add_flag("--json", opt.json, "print the JSON report on stdout");
    if (campaign) {
        cmd->add_option("--trials", opt.trials, "seeded trials")->capture_default_str();
        cmd->add_option("--checks", opt.checks, "theorem, steps, corollaries, counterexample")->delimiter(',');
        cmd->add_option("--threads", opt.threads, "worker threads (0: hardware)")->capture_default_str();
        cmd->add_option("--samples", opt.samples, "sampled points per locality check")->capture_default_str();
    }
}

ternary::OpMap read_map(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ternary::InputError("cannot open '" + path + "'");
    if (path.size() > 5 && path.ends_with(".json")) {
        try {
            return ternary::opmap_from_json(ternary::Json::parse(in));
        } catch (const ternary::Json::exception& e) {
            throw ternary::InputError(path + ": " + e.what());
        }
    }
    return ternary::OpMap(ternary::parse_matrix(in));
}

void emit(const ternary::Json& report, const Options& opt) {
    if (!opt.out.empty()) {
        std::ofstream out(opt.out);
        if (!out) throw ternary::InputError("cannot write '" + opt.out + "'");
        out << report.dump(2) << '\n';
    }
    if (opt.json) std::cout << report.dump(2) << '\n';
}

int write_repro(const ternary::Json& bundle, const Options& opt) {
    const std::string path = opt.out.empty() ? "ternary-repro.json" : opt.out + ".repro.json";
    std::ofstream(path) << bundle.dump(2) << '\n';
    std::cerr << "theorem violation; repro bundle written to " << path << '\n';
    return kViolation;
}

void print_summary(const ternary::Report& report) {
    const auto& body = report.body;
    const auto& alg = body["algebra"];
    std::cout << "nest " << body["config"]["nest"].get<std::string>() << " (d=" << alg["dim"] << ", center "
              << alg["center_dim"] << ", derivations " << alg["derivation_space_dim"] << ") "
              << body["config"]["field"].get<std::string>() << '\n';
    if (body.contains("theorem")) {
        const auto& c = body["theorem"]["counts"];
        std::cout << "  round trips " << c["round_trips_passed"] << "/" << c["trials"] << "; malformed refuted "
                  << c["malformed_refuted"] << ", inconclusive " << c["malformed_inconclusive"] << ", feasible "
                  << c["malformed_feasible"] << '\n';
    }
    if (body.contains("corollaries")) {
        for (const auto& [name, s] : body["corollaries"]["summary"].items()) {
            std::cout << "  " << name << ": certified " << s["certified"] << "/" << s["positives"] << ", negatives refuted "
                      << s["refuted"] << " inconclusive " << s["inconclusive"] << ", misclassified "
                      << s["misclassified"] << '\n';
        }
    }
    if (body.contains("counterexample")) {
        const auto& ng = body["counterexample"]["no_gamma"];
        std::cout << "  example: rank gap " << ng["rank_gap"] << ", gamma(U) forced to "
                  << ng["gamma_U_from_A_eq_I"].dump() << " and " << ng["gamma_U_from_B_eq_I"].dump() << '\n';
    }
    std::cout << "  violations " << report.violations.size() << ", " << report.timing["total_seconds"] << " s\n";
}

int run_campaign(const Options& opt, const std::string& command, std::vector<std::string> default_checks) {
    ternary::CampaignConfig config;
    config.nest = ternary::NestSpec::parse(opt.nest);
    config.field = ternary::parse_field(opt.field);
    config.trials = opt.trials;
    config.seed = opt.seed;
    if (opt.checks.empty()) {
        config.checks = std::move(default_checks);
    } else {
        config.checks = opt.checks;
        std::erase(config.checks, "");
    }
    config.threads = opt.threads;
    config.witness_budget = opt.budget;
    config.locality_samples = opt.samples;
    const auto report = ternary::run_campaign(config, command);
    emit(report.full(), opt);
    if (!opt.json) print_summary(report);
    if (!report.ok()) return write_repro(ternary::Json{{"violations", report.violations}}, opt);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ternary derivations on finite nest algebras"};
    app.require_subcommand(1);
    Options opt;

    auto* verify = app.add_subcommand("verify", "seeded round trips of the main theorem");
    add_common(verify, opt, true);
    auto* corollaries = app.add_subcommand("corollaries", "centralizer, derivation and locality checkers");
    add_common(corollaries, opt, true);
    auto* counterexample = app.add_subcommand("counterexample", "the 4-dimensional algebra where completion fails");
    counterexample->add_option("--out", opt.out, "write the JSON report here");
    counterexample->add_flag("--json", opt.json, "print the JSON report on stdout");
    auto* solve = app.add_subcommand("solve", "decide (Z) for maps read from files");
    add_common(solve, opt, false);
    solve->add_option("--delta", opt.delta_file, "d x d coordinate matrix (text or .json)")->required();
    solve->add_option("--tau", opt.tau_file, "d x d coordinate matrix (text or .json)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*verify) return run_campaign(opt, "verify", {"theorem", "steps"});
        if (*corollaries) return run_campaign(opt, "corollaries", {"corollaries"});
        if (*counterexample) {
            const auto bundle = ternary::counterexample_bundle();
            emit(bundle, opt);
            if (!opt.json) {
                std::cout << "example algebra: (Z) holds on " << bundle["z_check"]["grid_zero_product_pairs"]
                          << " grid pairs; completion system rank " << bundle["no_gamma"]["system"]["rank"]
                          << " < augmented " << bundle["no_gamma"]["system"]["augmented_rank"] << '\n';
                for (const auto& c : bundle["contrast"]) {
                    std::cout << "  " << c["label"].get<std::string>() << ": (Z) "
                              << c["z"]["verdict"].get<std::string>() << ", implementing triple "
                              << (c["rst_feasible"].get<bool>() ? "feasible" : "infeasible") << '\n';
                }
            }
            return kOk;
        }
        if (*solve) {
            const ternary::NestAlgebra nest(ternary::NestSpec::parse(opt.nest));
            const auto report = ternary::solve_report(nest, read_map(opt.delta_file), read_map(opt.tau_file),
                                                      opt.budget, opt.seed, ternary::parse_field(opt.field));
            emit(report, opt);
            if (!opt.json) std::cout << "(Z) " << report["z"]["verdict"].get<std::string>() << '\n';
            return kOk;
        }
    } catch (const ternary::TheoremViolation& e) {
        return write_repro(ternary::Json{{"message", e.what()}, {"repro", e.repro()}}, opt);
    } catch (const ternary::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kOk;
}
