#include <gtest/gtest.h>

#include "ternary/campaign.hpp"
#include "ternary/errors.hpp"

using namespace ternary;

namespace {

CampaignConfig config(std::vector<std::string> checks, std::size_t trials = 6) {
    CampaignConfig c;
    c.nest = NestSpec({1, 2, 4});
    c.trials = trials;
    c.seed = 42;
    c.checks = std::move(checks);
    c.threads = 1;
    return c;
}

}  // namespace

TEST(Campaign, ValidatesConfig) {
    EXPECT_THROW(run_campaign(config({"theorem"}, 0), "verify"), InputError);
    EXPECT_THROW(run_campaign(config({}), "corollaries"), InputError);
    EXPECT_THROW(run_campaign(config({"theorem", "bogus"}), "verify"), InputError);
}

TEST(Campaign, DeterministicBody) {
    auto c = config({"theorem", "steps", "corollaries"}, 5);
    const auto first = run_campaign(c, "verify");
    const auto second = run_campaign(c, "verify");
    EXPECT_EQ(first.body.dump(), second.body.dump());
    c.threads = 3;
    const auto threaded = run_campaign(c, "verify");
    EXPECT_EQ(first.body.dump(), threaded.body.dump());
    EXPECT_FALSE(first.body.contains("timing"));
    EXPECT_TRUE(first.full().contains("timing"));
    c.seed = 43;
    EXPECT_NE(first.body.dump(), run_campaign(c, "verify").body.dump());
}

TEST(Campaign, TheoremTrialsPassAndEmbedEvidence) {
    const auto report = run_campaign(config({"theorem", "steps"}, 8), "verify");
    EXPECT_TRUE(report.ok());
    const auto& counts = report.body["theorem"]["counts"];
    EXPECT_EQ(counts["round_trips_passed"], 8);
    for (const auto& t : report.body["theorem"]["trials"]) {
        EXPECT_TRUE(t.contains("certificate"));
        EXPECT_EQ(t["steps"]["step5"], "pass");
        if (t["malformed"]["verdict"] == "refuted") {
            EXPECT_TRUE(t["malformed"].contains("witness"));
            EXPECT_TRUE(t["malformed"].contains("value"));
        }
    }
}

TEST(Campaign, GaussianTrial) {
    auto c = config({"theorem", "steps"}, 1);
    c.nest = NestSpec({2});
    c.seed = 1;
    c.field = Field::gaussian;
    const auto report = run_campaign(c, "verify");
    EXPECT_TRUE(report.ok());
    EXPECT_EQ(report.body["theorem"]["counts"]["round_trips_passed"], 1);
}

TEST(Campaign, CorollaryLabelsMatch) {
    const auto report = run_campaign(config({"corollaries"}, 4), "corollaries");
    EXPECT_TRUE(report.ok());
    for (const auto& [name, s] : report.body["corollaries"]["summary"].items()) {
        EXPECT_EQ(s["certified"], s["positives"]) << name;
        EXPECT_EQ(s["misclassified"], 0) << name;
        EXPECT_EQ(s["negatives_not_drawn"], 0) << name;
    }
}

TEST(Campaign, LocalDerivationFlagsIdentityFailure) {
    const NestAlgebra nest{NestSpec({1, 2})};
    const TrialContext ctx(nest, Field::rational, 32, 4);
    bool saw_identity_witness = false;
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        for (const auto& o : corollary_trial(ctx, seed * 2)) {
            if (o.corollary != "local-derivation" || o.positive) continue;
            EXPECT_FALSE(o.misclassified);
            if (o.detail.contains("witness") && !o.detail["vanishes_at_identity"].get<bool>()) {
                saw_identity_witness |= o.detail["witness"] == to_json(nest.algebra().unity());
            }
        }
    }
    EXPECT_TRUE(saw_identity_witness);
}

TEST(Campaign, CounterexampleBundle) {
    const auto report = run_campaign(config({"counterexample"}, 1), "counterexample");
    EXPECT_TRUE(report.ok());
    const auto& ce = report.body["counterexample"];
    EXPECT_EQ(ce["no_gamma"]["rank_gap"], 1);
    EXPECT_EQ(ce["no_gamma"]["gamma_U_from_B_eq_I"], Json({"0", "0", "2", "0"}));
    EXPECT_EQ(ce["contrast"][1]["rst_feasible"], true);
    EXPECT_EQ(counterexample_bundle().dump(), counterexample_bundle().dump());
}

TEST(Solve, ReportsWitnessOrGamma) {
    const NestAlgebra nest{NestSpec({1, 2})};
    const auto& alg = nest.algebra();
    const Vec x = nest.unit(0, 1);
    auto r = solve_report(nest, OpMap::right_mult(alg, x), OpMap::left_mult(alg, x), 16, 1, Field::rational);
    EXPECT_EQ(r["z"]["verdict"], "refuted");
    r = solve_report(nest, OpMap::right_mult(alg, x), Scalar(-1) * OpMap::left_mult(alg, x), 16, 1, Field::rational);
    EXPECT_EQ(r["z"]["verdict"], "holds");
    EXPECT_EQ(r["ternary_verified"], true);
    EXPECT_THROW(solve_report(nest, OpMap::zero(2), OpMap::zero(3), 16, 1, Field::rational), InputError);
}

TEST(JsonRoundTrip, OpMapAndVec) {
    const Vec v{Scalar(1, 2), Scalar::parse("-3+1/4*i"), Scalar(0)};
    EXPECT_EQ(vec_from_json(to_json(v)), v);
    const OpMap m(Mat::from_rows({{1, Scalar(2, 3)}, {0, -5}}));
    EXPECT_EQ(opmap_from_json(to_json(m)), m);
    EXPECT_THROW(opmap_from_json(Json::parse(R"([[1, 2], [3]])")), InputError);
    EXPECT_THROW(vec_from_json(Json::parse(R"({"a": 1})")), InputError);
}
