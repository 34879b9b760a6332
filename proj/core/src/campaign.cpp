#include "ternary/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "ternary/errors.hpp"
#include "ternary/random.hpp"

namespace ternary {

namespace {

template <typename F>
void parallel_for(std::size_t count, std::size_t threads, F&& body) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

Scalar nonzero_scalar(SplitMix64& rng, Field field) {
    for (;;) {
        Scalar s = random_scalar(rng, field);
        if (!s.is_zero()) return s;
    }
}

OpMap bump(const OpMap& map, SplitMix64& rng, Field field) {
    Mat m = map.matrix();
    const std::size_t d = map.dim();
    const std::size_t r = rng.below(d);
    const std::size_t c = rng.below(d);
    m(r, c) += nonzero_scalar(rng, field);
    return OpMap(std::move(m));
}

Vec unit_product(const FiniteAlgebra& alg, std::size_t i, std::size_t j) {
    Vec out = alg.zero();
    for (const auto& e : alg.product(i, j)) out[e.col] = e.value;
    return out;
}

// rho(e_i e_j) == e_i rho(e_j) (right) or rho(e_i) e_j (left) on all basis pairs
bool centralizer_identity(const FiniteAlgebra& alg, const OpMap& rho, Side side) {
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        for (std::size_t j = 0; j < alg.dim(); ++j) {
            const Vec lhs = rho(unit_product(alg, i, j));
            const Vec rhs = side == Side::right ? alg.unit_times(i, rho.of_unit(j)) : alg.times_unit(rho.of_unit(i), j);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

// membership of map in span of the derivation space, as a stacked d^2 system
bool in_derivation_space(const FiniteAlgebra& alg, const OpMap& map) {
    const auto space = derivation_space(alg);
    const std::size_t d = alg.dim();
    auto flat = [d](const Mat& m) {
        Vec v;
        v.reserve(d * d);
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) v.push_back(m(r, c));
        }
        return v;
    };
    if (space.empty()) return map.matrix().is_zero();
    std::vector<Vec> cols;
    for (const auto& D : space) cols.push_back(flat(D.matrix()));
    return solve_affine(Mat::from_columns(cols, d * d), flat(map.matrix())).feasible();
}

bool is_generalized_derivation_oracle(const FiniteAlgebra& alg, const OpMap& delta) {
    return in_derivation_space(alg, delta - OpMap::left_mult(alg, delta(alg.unity())));
}

Vec random_central(const FiniteAlgebra& alg, SplitMix64& rng, Field field) {
    const auto basis = center(alg);
    return combine(basis, random_vec(rng, basis.size(), field), alg.dim());
}

// A -> A t - s A
OpMap commutator_map(const FiniteAlgebra& alg, const Vec& s, const Vec& t) {
    return OpMap(alg.right_rep(t) - alg.left_rep(s));
}

Json verdict_object(const std::string& corollary, bool positive, std::string_view verdict, std::size_t samples,
                    std::uint64_t seed) {
    return {{"corollary", corollary},
            {"label", positive ? "positive" : "negative"},
            {"verdict", verdict},
            {"samples", samples},
            {"seed", seed}};
}

Json locality_json(Json out, const LocalityReport& r) {
    out["points_checked"] = r.points_checked;
    out["sampled_locality"] = r.sampled_locality;
    out["global_form"] = r.global_form;
    if (r.witness) out["witness"] = to_json(*r.witness);
    if (r.d) out["certificate"] = to_json(*r.d);
    return out;
}

std::string_view solve_verdict(bool feasible) { return feasible ? "certified" : "refuted"; }

}  // namespace

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> checks{"theorem", "steps", "corollaries", "counterexample"};
    return checks;
}

void validate(const CampaignConfig& config) {
    if (config.trials == 0) throw InputError("trials must be at least 1");
    if (config.checks.empty()) throw InputError("checks list is empty");
    for (const auto& c : config.checks) {
        if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end()) {
            throw InputError("unknown check '" + c + "' (known: theorem, steps, corollaries, counterexample)");
        }
    }
    if (config.witness_budget == 0) throw InputError("witness budget must be at least 1");
    if (config.locality_samples == 0) throw InputError("locality samples must be at least 1");
}

Json to_json(const CampaignConfig& config) {
    return {{"nest", config.nest.str()},
            {"field", to_string(config.field)},
            {"trials", config.trials},
            {"seed", config.seed},
            {"checks", config.checks},
            {"witness_budget", config.witness_budget},
            {"locality_samples", config.locality_samples}};
}

Json Report::full() const {
    Json out = body;
    out["violations"] = violations;
    out["timing"] = timing;
    return out;
}

TrialContext::TrialContext(const NestAlgebra& n, Field f, std::size_t budget, std::size_t samples)
    : nest(n), idempotents(n.idempotent_generators()), field(f), witness_budget(budget), locality_samples(samples) {}

TheoremTrial theorem_trial(const TrialContext& ctx, std::uint64_t seed, std::size_t index, bool with_steps) {
    const auto& alg = ctx.nest.algebra();
    const std::size_t d = alg.dim();
    TheoremTrial t;
    t.index = index;
    t.seed = seed;
    SplitMix64 rng(seed);
    t.drawn.r = random_vec(rng, d, ctx.field);
    t.drawn.s = random_vec(rng, d, ctx.field);
    t.drawn.t = random_vec(rng, d, ctx.field);
    const OpMap delta = delta_map(alg, t.drawn);
    const OpMap tau = tau_map(alg, t.drawn);

    try {
        t.feasible = solve_rst(alg, delta, tau, false).feasible();
        if (!t.feasible) throw TheoremViolation("implementing system infeasible for maps built from (R0, S0, T0)");
        const OpMap gamma = gamma_from(alg, delta, tau);
        t.gamma_consistent = true;
        const TernaryTriple triple{gamma, delta, tau};
        t.ternary_verified = !verify_ternary(alg, triple).has_value();
        auto extracted = extract_inner(alg, triple);
        t.reproduced = delta_map(alg, extracted) == delta && tau_map(alg, extracted) == tau &&
                       gamma_map(alg, extracted) == gamma;
        t.sum_identity = extracted.r + extracted.t == delta(alg.unity()) + tau(alg.unity());
        t.extracted = std::move(extracted);
        t.unique = uniqueness_check(alg, delta, tau, gamma, gamma_map(alg, t.drawn));
        if (with_steps) {
            t.steps = step_identities(alg, ctx.idempotents, delta, tau);
            t.steps_passed = t.steps->all_passed();
        } else {
            t.steps_passed = true;
        }
    } catch (const ConsistencyError& e) {
        t.violation = std::string("gamma consistency: ") + e.what();
    } catch (const TheoremViolation& e) {
        t.violation = e.what();
    } catch (const InputError& e) {
        t.violation = e.what();
    }
    if (t.violation.empty() && !t.passed()) t.violation = "round trip check failed";

    SplitMix64 bad(derive_seed(seed, 1));
    OpMap bad_delta;
    OpMap bad_tau;
    if (index % 2 == 0) {
        t.malformed_kind = "random";
        bad_delta = OpMap(random_mat(bad, d, d, ctx.field));
        bad_tau = OpMap(random_mat(bad, d, d, ctx.field));
    } else {
        t.malformed_kind = "bumped-tau";
        bad_delta = delta;
        bad_tau = bump(tau, bad, ctx.field);
    }
    t.malformed = decide_z(alg, ctx.idempotents, bad_delta, bad_tau, ctx.witness_budget, derive_seed(seed, 2), ctx.field);
    t.malformed_rst_feasible = t.malformed.verdict == ZVerdict::holds;
    return t;
}

Json to_json(const TheoremTrial& t) {
    Json out{{"index", t.index}, {"seed", t.seed}};
    if (t.extracted) out["certificate"] = to_json(*t.extracted);
    out["checks"] = {{"solve", t.feasible},
                     {"gamma", t.gamma_consistent},
                     {"ternary", t.ternary_verified},
                     {"extract", t.reproduced},
                     {"r_plus_t", t.sum_identity},
                     {"unique", t.unique}};
    if (t.steps) out["steps"] = to_json(*t.steps);
    if (!t.violation.empty()) out["violation"] = t.violation;
    Json bad = to_json(t.malformed);
    bad["kind"] = t.malformed_kind;
    out["malformed"] = std::move(bad);
    return out;
}

const std::vector<std::string>& corollary_checkers() {
    static const std::vector<std::string> names{
        "right-centralizer",       "left-centralizer",      "two-sided-centralizer",  "derivation-at-zero",
        "generalized-derivation",  "local-derivation",      "local-right-centralizer", "local-left-centralizer",
        "right-ideal-preserving",  "left-ideal-preserving", "gd-zero-product"};
    return names;
}

std::vector<CorollaryOutcome> corollary_trial(const TrialContext& ctx, std::uint64_t seed) {
    const auto& alg = ctx.nest.algebra();
    const std::size_t d = alg.dim();
    const Field field = ctx.field;
    const auto& names = corollary_checkers();
    std::vector<CorollaryOutcome> out;

    for (std::size_t k = 0; k < names.size(); ++k) {
        const std::string& name = names[k];
        SplitMix64 rng(derive_seed(seed, k));
        const std::uint64_t sample_seed = derive_seed(seed, 100 + k);
        const std::size_t samples = ctx.locality_samples;

        // positive: a map of the global form; oracle: predicate a negative must fail
        OpMap positive;
        std::function<bool(const OpMap&)> is_member;
        switch (k) {
            case 0:
            case 6:
            case 8:
                positive = OpMap::right_mult(alg, random_vec(rng, d, field));
                is_member = [&](const OpMap& m) { return centralizer_identity(alg, m, Side::right); };
                break;
            case 1:
            case 7:
            case 9:
                positive = OpMap::left_mult(alg, random_vec(rng, d, field));
                is_member = [&](const OpMap& m) { return centralizer_identity(alg, m, Side::left); };
                break;
            case 2:
                positive = OpMap::left_mult(alg, random_central(alg, rng, field));
                is_member = [&](const OpMap& m) {
                    return centralizer_identity(alg, m, Side::right) && centralizer_identity(alg, m, Side::left);
                };
                break;
            case 3: {
                const Vec s = random_vec(rng, d, field);
                positive = commutator_map(alg, s, s + random_central(alg, rng, field));
                is_member = [&](const OpMap& m) {
                    return search_witness(alg, ctx.idempotents, m, m, 0, 0, field).verdict != ZVerdict::refuted;
                };
                break;
            }
            case 4:
            case 10: {
                const Vec r = random_vec(rng, d, field);
                const Vec s = random_vec(rng, d, field);
                positive = OpMap::left_mult(alg, r) + commutator_map(alg, s, s);
                if (k == 10) positive = OpMap(alg.left_rep(r) + alg.right_rep(s));
                is_member = [&](const OpMap& m) { return is_generalized_derivation_oracle(alg, m); };
                break;
            }
            case 5: {
                const Vec s = random_vec(rng, d, field);
                positive = commutator_map(alg, s, s);
                is_member = [&](const OpMap& m) { return in_derivation_space(alg, m); };
                break;
            }
            default: throw std::logic_error("unknown checker");
        }

        // negative: two-sided uses a non-central right multiplication, local
        // derivation alternates with a left multiplication (delta(I) != 0)
        std::optional<OpMap> negative;
        for (int attempt = 0; attempt < 32 && !negative; ++attempt) {
            OpMap candidate;
            if (k == 2) {
                candidate = OpMap::right_mult(alg, random_vec(rng, d, field));
            } else if (k == 5 && attempt == 0 && (seed & 1) == 0) {
                candidate = OpMap::left_mult(alg, random_vec(rng, d, field));
            } else {
                candidate = bump(positive, rng, field);
            }
            if (!is_member(candidate)) negative = std::move(candidate);
        }

        for (int label = 1; label >= 0; --label) {
            const bool is_positive = label == 1;
            CorollaryOutcome o;
            o.corollary = name;
            o.positive = is_positive;
            if (!is_positive && !negative) {
                o.negative_drawn = false;
                o.verdict = "no-negative";
                out.push_back(std::move(o));
                continue;
            }
            const OpMap& map = is_positive ? positive : *negative;
            Json detail;
            std::string_view verdict;
            switch (k) {
                case 0:
                case 1: {
                    auto dval = k == 0 ? solve_right_centralizer(alg, map) : solve_left_centralizer(alg, map);
                    verdict = solve_verdict(dval.has_value());
                    detail = verdict_object(name, is_positive, verdict, 0, 0);
                    if (dval) detail["certificate"] = to_json(*dval);
                    break;
                }
                case 2: {
                    auto r = solve_two_sided(alg, map);
                    verdict = solve_verdict(r.right_feasible && r.left_feasible && r.central_flag);
                    detail = verdict_object(name, is_positive, verdict, 0, 0);
                    detail["right_feasible"] = r.right_feasible;
                    detail["left_feasible"] = r.left_feasible;
                    detail["central"] = r.central_flag;
                    if (r.d) detail["certificate"] = to_json(*r.d);
                    break;
                }
                case 3: {
                    auto r = solve_derivation_at_zero(alg, map);
                    verdict = solve_verdict(r.has_value());
                    detail = verdict_object(name, is_positive, verdict, 0, 0);
                    if (r) detail["certificate"] = {{"s", to_json(r->s)}, {"t", to_json(r->t)},
                                                    {"t_minus_s_center_coords", to_json(r->central_coords)}};
                    break;
                }
                case 4: {
                    auto g = solve_generalized_derivation(alg, map);
                    verdict = solve_verdict(g.feasible);
                    detail = verdict_object(name, is_positive, verdict, 0, 0);
                    detail["delta_I"] = to_json(g.delta_at_identity);
                    if (g.failing_pair) {
                        detail["witness"] = {alg.label(g.failing_pair->first), alg.label(g.failing_pair->second)};
                    }
                    break;
                }
                case 5: {
                    auto r = local_derivation_check(alg, map, samples, sample_seed, field);
                    verdict = to_string(r.verdict);
                    detail = locality_json(verdict_object(name, is_positive, verdict, samples, sample_seed), r);
                    detail["vanishes_at_identity"] = r.vanishes_at_identity;
                    break;
                }
                case 6:
                case 7: {
                    auto r = local_centralizer_check(alg, map, k == 6 ? Side::right : Side::left, samples, sample_seed,
                                                     field);
                    verdict = to_string(r.verdict);
                    detail = locality_json(verdict_object(name, is_positive, verdict, samples, sample_seed), r);
                    break;
                }
                case 8:
                case 9: {
                    auto r = ideal_preserving_check(alg, map, k == 8 ? Side::right : Side::left);
                    verdict = to_string(r.verdict);
                    detail = locality_json(verdict_object(name, is_positive, verdict, 0, 0), r);
                    break;
                }
                case 10: {
                    auto r = gd_zero_product_check(alg, map, samples, sample_seed, field);
                    verdict = to_string(r.verdict);
                    detail = verdict_object(name, is_positive, verdict, samples, sample_seed);
                    detail["triples_checked"] = r.triples_checked;
                    detail["trivial_skipped"] = r.trivial_skipped;
                    if (r.witness) {
                        detail["witness"] = {{"a", to_json(r.witness->a)}, {"b", to_json(r.witness->b)},
                                             {"c", to_json(r.witness->c)}};
                    }
                    break;
                }
                default: break;
            }
            o.verdict = std::string(verdict);
            o.misclassified = is_positive ? verdict != "certified" : verdict == "certified";
            o.detail = std::move(detail);
            out.push_back(std::move(o));
        }
    }
    return out;
}

Json counterexample_bundle() {
    const auto alg = build_example_algebra();
    const auto [delta, tau] = example_maps();
    Json out;
    out["algebra"] = structure_constants(alg);
    out["associative"] = alg.is_associative();
    out["unital"] = alg.is_unital();
    out["maps"] = {{"delta", to_json(delta)}, {"tau", to_json(tau)}};
    out["z_check"] = to_json(verify_example_z());
    out["no_gamma"] = to_json(show_no_gamma());
    Json contrast = Json::array();
    for (const auto& c : nest_contrast()) contrast.push_back(to_json(c));
    out["contrast"] = std::move(contrast);
    Json nests = Json::array();
    for (const auto& e : nest_census(4)) {
        Json entry = to_json(e.counts);
        entry["nest"] = e.spec.str();
        nests.push_back(std::move(entry));
    }
    out["census"] = {{"example", to_json(census(alg))}, {"nests", std::move(nests)}};
    return out;
}

Json solve_report(const NestAlgebra& nest, const OpMap& delta, const OpMap& tau, std::size_t budget,
                  std::uint64_t seed, Field field) {
    const auto& alg = nest.algebra();
    if (delta.dim() != alg.dim() || tau.dim() != alg.dim()) {
        throw InputError("maps must be " + std::to_string(alg.dim()) + "x" + std::to_string(alg.dim()) +
                         " for nest " + nest.spec().str());
    }
    const auto idem = nest.idempotent_generators();
    const ZReport z = decide_z(alg, idem, delta, tau, budget, seed, field);
    Json out{{"nest", nest.spec().str()}, {"basis", alg.labels()}, {"z", to_json(z)}};
    if (z.verdict == ZVerdict::holds) {
        const OpMap gamma = gamma_from(alg, delta, tau);
        const TernaryTriple triple{gamma, delta, tau};
        out["gamma"] = to_json(gamma);
        out["ternary_verified"] = !verify_ternary(alg, triple).has_value();
        out["implementing_triple"] = to_json(extract_inner(alg, triple));
    }
    return out;
}

Report run_campaign(const CampaignConfig& config, const std::string& command) {
    validate(config);
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    auto has = [&](const char* c) { return std::find(config.checks.begin(), config.checks.end(), c) != config.checks.end(); };

    Report report;
    report.body["command"] = command;
    report.body["config"] = to_json(config);
    report.timing = Json::object();

    const NestAlgebra nest(config.nest);
    const auto& alg = nest.algebra();
    const TrialContext ctx(nest, config.field, config.witness_budget, config.locality_samples);
    report.body["algebra"] = {{"dim", alg.dim()},
                              {"basis", alg.labels()},
                              {"center_dim", center(alg).size()},
                              {"derivation_space_dim", derivation_space_dim(alg)},
                              {"implementing_homogeneous_dim", solve_rst(alg, OpMap::zero(alg.dim()),
                                                                          OpMap::zero(alg.dim())).homogeneous.size()}};

    if (has("theorem")) {
        const auto t0 = clock::now();
        std::vector<TheoremTrial> trials(config.trials);
        const bool steps = has("steps");
        parallel_for(config.trials, config.threads, [&](std::size_t i) {
            trials[i] = theorem_trial(ctx, derive_seed(config.seed, i), i, steps);
        });
        std::size_t passed = 0, refuted = 0, inconclusive = 0, malformed_feasible = 0;
        Json list = Json::array();
        for (const auto& t : trials) {
            if (t.passed() && t.violation.empty()) ++passed;
            switch (t.malformed.verdict) {
                case ZVerdict::refuted: ++refuted; break;
                case ZVerdict::inconclusive: ++inconclusive; break;
                case ZVerdict::holds: ++malformed_feasible; break;
            }
            if (!t.violation.empty()) {
                report.violations.push_back({{"check", "theorem"},
                                             {"config", to_json(config)},
                                             {"trial", t.index},
                                             {"trial_seed", t.seed},
                                             {"drawn", to_json(t.drawn)},
                                             {"message", t.violation}});
            }
            list.push_back(to_json(t));
        }
        report.body["theorem"] = {{"counts",
                                   {{"trials", config.trials},
                                    {"round_trips_passed", passed},
                                    {"malformed_refuted", refuted},
                                    {"malformed_inconclusive", inconclusive},
                                    {"malformed_feasible", malformed_feasible}}},
                                  {"trials", std::move(list)}};
        report.timing["theorem_seconds"] = std::chrono::duration<double>(clock::now() - t0).count();
    }

    if (has("corollaries")) {
        const auto t0 = clock::now();
        std::vector<std::vector<CorollaryOutcome>> results(config.trials);
        parallel_for(config.trials, config.threads, [&](std::size_t i) {
            results[i] = corollary_trial(ctx, derive_seed(derive_seed(config.seed, i), 7));
        });
        Json summary = Json::object();
        for (const auto& name : corollary_checkers()) {
            summary[name] = {{"positives", 0}, {"certified", 0}, {"negatives", 0}, {"refuted", 0},
                             {"inconclusive", 0}, {"misclassified", 0}, {"negatives_not_drawn", 0}};
        }
        Json list = Json::array();
        for (std::size_t i = 0; i < results.size(); ++i) {
            Json trial = Json::array();
            for (const auto& o : results[i]) {
                auto& s = summary[o.corollary];
                auto inc = [&](const char* key) { s[key] = s[key].get<std::size_t>() + 1; };
                inc(o.positive ? "positives" : "negatives");
                if (!o.negative_drawn) {
                    inc("negatives_not_drawn");
                    continue;
                }
                if (o.verdict == "certified" || o.verdict == "refuted" || o.verdict == "inconclusive") {
                    inc(o.verdict.c_str());
                }
                if (o.misclassified) {
                    inc("misclassified");
                    report.violations.push_back({{"check", "corollaries"},
                                                 {"config", to_json(config)},
                                                 {"trial", i},
                                                 {"detail", o.detail}});
                }
                trial.push_back(o.detail);
            }
            list.push_back(std::move(trial));
        }
        report.body["corollaries"] = {{"summary", std::move(summary)}, {"trials", std::move(list)}};
        report.timing["corollaries_seconds"] = std::chrono::duration<double>(clock::now() - t0).count();
    }

    if (has("counterexample")) {
        const auto t0 = clock::now();
        try {
            report.body["counterexample"] = counterexample_bundle();
        } catch (const TheoremViolation& e) {
            report.violations.push_back({{"check", "counterexample"}, {"message", e.what()}});
        }
        report.timing["counterexample_seconds"] = std::chrono::duration<double>(clock::now() - t0).count();
    }

    report.timing["total_seconds"] = std::chrono::duration<double>(clock::now() - start).count();
    return report;
}

}  // namespace ternary
