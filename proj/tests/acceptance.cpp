// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "support.hpp"
#include "ternary/applications.hpp"
#include "ternary/campaign.hpp"
#include "ternary/counterexample.hpp"
#include "ternary/elimination.hpp"

using namespace ternary;
using oracle::Dense;

namespace {

constexpr std::size_t kTheoremTrials = 200;
constexpr std::size_t kMalformedTrials = 200;
constexpr double kRefutedFraction = 0.99;
constexpr std::size_t kInnerTrials = 100;
constexpr std::size_t kCorollaryTrials = 100;
constexpr std::size_t kKernelInstances = 10000;
constexpr std::size_t kMaxSize = 64;
constexpr double kTheoremSeconds = 300.0;
constexpr double kExampleSeconds = 1.0;
constexpr std::size_t kWitnessBudget = 256;
constexpr std::uint64_t kSeed = 20240611;

using clock_type = std::chrono::steady_clock;

double since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

int failures = 0;

void line(int id, bool pass, const std::string& text) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", id, text.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::vector<NestAlgebra> nests() {
    std::vector<NestAlgebra> out;
    for (const auto& dims : oracle::tested_nests()) out.emplace_back(NestSpec(dims));
    return out;
}

// filled by criterion 1, read by criterion 3
std::pair<std::size_t, std::size_t> sum_identity_counts;

void theorem_round_trip(const std::vector<NestAlgebra>& algebras) {
    const auto start = clock_type::now();
    std::size_t total = 0, passed = 0, sums = 0;
    std::string first_failure;
    for (std::size_t n = 0; n < algebras.size(); ++n) {
        for (Field field : {Field::rational, Field::gaussian}) {
            const TrialContext ctx(algebras[n], field, kWitnessBudget, 8);
            const std::uint64_t base = derive_seed(kSeed, n * 2 + (field == Field::gaussian ? 1 : 0));
            for (std::size_t i = 0; i < kTheoremTrials; ++i) {
                const auto t = theorem_trial(ctx, derive_seed(base, i), i, true);
                ++total;
                if (t.passed()) {
                    ++passed;
                } else if (first_failure.empty()) {
                    first_failure = algebras[n].spec().str() + " trial " + std::to_string(i) + ": " + t.violation;
                }
                if (t.feasible && t.sum_identity) ++sums;
            }
        }
    }
    const double secs = since(start);
    line(1, passed == total && secs < kTheoremSeconds,
         fmt("theorem round trip %zu/%zu trials (7 nests x 2 fields x %zu), %.1f s (limit %.0f s)%s", passed, total,
             kTheoremTrials, secs, kTheoremSeconds, first_failure.empty() ? "" : (" first failure " + first_failure).c_str()));
    std::printf("  R + T = delta(I) + tau(I) on %zu/%zu verified triples\n", sums, total);
    sum_identity_counts = {sums, total};
}

// dense recheck of a witness: AB = 0 and delta(A) B + A tau(B) != 0
bool witness_holds(const Dense& dense, const OpMap& delta, const OpMap& tau,
                   const WitnessPair& w) {
    const Mat a = dense.mat(w.a), b = dense.mat(w.b);
    if (!Dense::zero(Dense::mul(a, b))) return false;
    const Mat value = Dense::add(Dense::mul(dense.apply(delta, a), b), Dense::mul(a, dense.apply(tau, b)));
    return !Dense::zero(value);
}

void refutation(const std::vector<NestAlgebra>& algebras) {
    std::size_t infeasible = 0, refuted = 0, inconclusive = 0, feasible = 0, bad_witness = 0;
    std::string per_nest;
    for (std::size_t n = 0; n < algebras.size(); ++n) {
        const auto& nest = algebras[n];
        const auto& alg = nest.algebra();
        const Dense dense(nest.spec().dims());
        const auto idem = nest.idempotent_generators();
        const std::size_t d = alg.dim();
        std::size_t nest_inf = 0, nest_ref = 0;
        for (std::size_t i = 0; i < kMalformedTrials; ++i) {
            SplitMix64 rng(derive_seed(derive_seed(kSeed + 1, n), i));
            OpMap delta, tau;
            if (i % 2 == 0) {
                delta = OpMap(random_mat(rng, d, d, Field::rational));
                tau = OpMap(random_mat(rng, d, d, Field::rational));
            } else {
                // family member with one entry of tau bumped
                const ImplementingTriple rst{random_vec(rng, d, Field::rational), random_vec(rng, d, Field::rational),
                                             random_vec(rng, d, Field::rational)};
                delta = delta_map(alg, rst);
                Mat m = tau_map(alg, rst).matrix();
                m(rng.below(d), rng.below(d)) += Scalar(1 + static_cast<long>(rng.below(3)));
                tau = OpMap(std::move(m));
            }
            const auto z = decide_z(alg, idem, delta, tau, kWitnessBudget, derive_seed(kSeed + 2, i));
            if (z.verdict == ZVerdict::holds) {
                ++feasible;
                continue;
            }
            ++infeasible;
            ++nest_inf;
            if (z.verdict == ZVerdict::refuted) {
                if (z.witness && witness_holds(dense, delta, tau, *z.witness)) {
                    ++refuted;
                    ++nest_ref;
                } else {
                    ++bad_witness;
                }
            } else {
                ++inconclusive;
            }
        }
        per_nest += fmt(" %s %zu/%zu", nest.spec().str().c_str(), nest_ref, nest_inf);
    }
    const double frac = infeasible ? static_cast<double>(refuted) / static_cast<double>(infeasible) : 1.0;
    line(2, bad_witness == 0 && frac >= kRefutedFraction,
         fmt("refutation %zu/%zu infeasible pairs refuted by a dense-checked witness (%.2f%%, need %.0f%%), "
             "%zu inconclusive, %zu bad witnesses, %zu feasible skipped",
             refuted, infeasible, 100.0 * frac, 100.0 * kRefutedFraction, inconclusive, bad_witness, feasible));
    std::printf("  per nest:%s\n", per_nest.c_str());
}

void inner(const std::vector<NestAlgebra>& algebras) {
    std::size_t total = 0, reproduced = 0;
    for (std::size_t n = 0; n < algebras.size(); ++n) {
        const auto& alg = algebras[n].algebra();
        const std::size_t d = alg.dim();
        SplitMix64 rng(derive_seed(kSeed + 3, n));
        for (std::size_t i = 0; i < kInnerTrials; ++i) {
            const Vec a = random_vec(rng, d, Field::rational);
            const Vec b = random_vec(rng, d, Field::rational);
            const Vec c = random_vec(rng, d, Field::rational);
            const auto triple = inner_ternary(alg, a, b, c);
            const auto rst = extract_inner(alg, triple);
            const auto back = ternary_from(alg, rst);
            ++total;
            if (back.gamma == triple.gamma && back.delta == triple.delta && back.tau == triple.tau &&
                rst.r + rst.t == triple.delta(alg.unity()) + triple.tau(alg.unity())) {
                ++reproduced;
            }
        }
    }
    const auto [sums, sum_total] = sum_identity_counts;
    line(3, reproduced == total && sums == sum_total && sum_total > 0,
         fmt("inner triples reproduced %zu/%zu; R + T = delta(I) + tau(I) on %zu/%zu round-trip triples", reproduced,
             total, sums, sum_total));
}

void example() {
    const auto start = clock_type::now();
    bool ok = true;
    std::string detail;
    try {
        const auto z = verify_example_z();
        const auto cert = show_no_gamma();
        const auto contrast = nest_contrast();
        const Vec v{0, 0, 1, 0};
        ok = !cert.full.feasible() && cert.full.rank_gap() >= 1 && is_zero(cert.forced_by_left_identity) &&
             cert.forced_by_right_identity == Scalar(2) * v && cert.subalgebra.feasible();
        bool analog_feasible = false;
        for (const auto& c : contrast) {
            if (c.label.rfind("nest", 0) == 0 && c.z.verdict == ZVerdict::holds && c.ternary_verified) {
                analog_feasible = true;
            }
        }
        ok = ok && analog_feasible && z.grid_zero_product > 0;
        detail = fmt("rank %zu < augmented %zu, gamma(U) forced to 0 and 2V, (Z) on %zu grid zero products, "
                     "nest [1,2] analog feasible: %s",
                     cert.full.rank, cert.full.augmented_rank, z.grid_zero_product, analog_feasible ? "yes" : "no");
        ok = ok && counterexample_bundle().dump() == counterexample_bundle().dump();
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    const double secs = since(start);
    line(4, ok && secs < kExampleSeconds, fmt("example algebra %s, %.3f s (limit %.0f s)", detail.c_str(), secs,
                                              kExampleSeconds));
}

void derivations(const std::vector<NestAlgebra>& algebras) {
    bool ok = true;
    std::string detail;
    for (const auto& nest : algebras) {
        const auto& alg = nest.algebra();
        const std::size_t der = derivation_space_dim(alg);
        const std::size_t cen = center(alg).size();
        ok = ok && der + cen == alg.dim() && cen == 1;
        detail += fmt(" %s d=%zu der=%zu center=%zu;", nest.spec().str().c_str(), alg.dim(), der, cen);
    }
    line(5, ok, "derivation space dim = d - center dim, center dim 1:" + detail);
}

void corollaries(const std::vector<NestAlgebra>& algebras) {
    struct Tally {
        std::size_t positives = 0, certified = 0, negatives = 0, refuted = 0, inconclusive = 0, missing = 0, wrong = 0;
    };
    std::map<std::string, Tally> tally;
    for (std::size_t n = 0; n < algebras.size(); ++n) {
        const TrialContext ctx(algebras[n], Field::rational, kWitnessBudget, 8);
        for (std::size_t i = 0; i < kCorollaryTrials; ++i) {
            for (const auto& o : corollary_trial(ctx, derive_seed(derive_seed(kSeed + 4, n), i))) {
                auto& t = tally[o.corollary];
                if (o.misclassified) ++t.wrong;
                if (o.positive) {
                    ++t.positives;
                    if (o.verdict == "certified") ++t.certified;
                } else if (!o.negative_drawn) {
                    ++t.missing;
                } else {
                    ++t.negatives;
                    if (o.verdict == "refuted") ++t.refuted;
                    if (o.verdict == "inconclusive") ++t.inconclusive;
                }
            }
        }
    }
    const std::size_t need = kCorollaryTrials * algebras.size();
    bool ok = tally.size() == corollary_checkers().size();
    std::string detail;
    for (const auto& [name, t] : tally) {
        ok = ok && t.wrong == 0 && t.missing == 0 && t.positives == need && t.negatives == need;
        detail += fmt("\n  %-24s positives %zu/%zu certified, negatives %zu refuted + %zu inconclusive of %zu, "
                      "misclassified %zu",
                      name.c_str(), t.certified, t.positives, t.refuted, t.inconclusive, t.negatives, t.wrong);
    }
    line(6, ok, fmt("corollary sweeps, %zu positives and %zu negatives per checker, zero misclassified", need, need) +
                    detail);
}

// sizes skewed towards small, max `cap`
std::size_t skewed(SplitMix64& rng, std::size_t cap) {
    const double u = static_cast<double>(rng.next() >> 11) / 9007199254740992.0;
    return 1 + static_cast<std::size_t>(static_cast<double>(cap - 1) * u * u * u * u);
}

Scalar dot(const Vec& a, const Vec& b) {
    Scalar s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void kernel() {
    SplitMix64 rng(kSeed + 5);
    std::size_t passed = 0, largest = 0, failed_mat = 0, failed_rep = 0, gaussian = 0;
    const auto algebras = nests();
    for (std::size_t i = 0; i < kKernelInstances; ++i) {
        const Field field = i % 500 != 0 && rng.below(4) == 0 ? Field::gaussian : Field::rational;
        const std::size_t cap = field == Field::gaussian ? kMaxSize / 2 : kMaxSize;
        gaussian += field == Field::gaussian;
        const bool full = i % 500 == 0;
        const std::size_t rows = full ? cap : skewed(rng, cap), cols = full ? cap : skewed(rng, cap);
        largest = std::max(largest, std::max(rows, cols));
        Mat m = random_mat(rng, rows, cols, field);
        if (rng.coin()) {
            const std::size_t k = 1 + rng.below(std::min(rows, cols));
            m = random_mat(rng, rows, k, field) * random_mat(rng, k, cols, field);
        }
        const auto r = rref(m);
        const auto again = rref(r.reduced);
        bool ok = again.reduced == r.reduced && again.pivot_columns == r.pivot_columns;

        const Elimination e(m);
        const Elimination et(m.transpose());
        const auto null = e.nullspace();
        const std::size_t rk = e.rank();
        ok = ok && rk == r.pivot_columns.size() && e.reduced() == r.reduced && rk + null.size() == cols &&
             rk == et.rank();
        for (const auto& v : null) ok = ok && is_zero(m * v);

        const Vec x = random_vec(rng, cols, field);
        const Vec b = m * x;
        const auto sol = e.solve(b);
        ok = ok && sol.feasible() && m * *sol.particular == b && sol.homogeneous_basis.size() == null.size();
        for (const auto& h : sol.homogeneous_basis) ok = ok && is_zero(m * h);
        if (rows * cols <= 256) {
            const auto fresh = solve_affine(m, b);
            ok = ok && fresh.feasible() && m * *fresh.particular == b;
        }

        // arbitrary right side: in the column space iff orthogonal to the left nullspace
        const Vec c = random_vec(rng, rows, field);
        bool in_span = true;
        for (const auto& y : et.nullspace()) in_span = in_span && dot(y, c).is_zero();
        const auto sol_c = e.solve(c);
        ok = ok && sol_c.feasible() == in_span && (!sol_c.feasible() || m * *sol_c.particular == c);
        if (!ok) ++failed_mat;

        // multiplication representation laws on a random nest
        const auto& nest = algebras[rng.below(algebras.size())];
        const std::size_t d = nest.dim();
        const Mat a = nest.to_dense(random_vec(rng, d, Field::rational));
        const Mat g = nest.to_dense(random_vec(rng, d, Field::rational));
        const Vec y = random_vec(rng, d, Field::rational);
        const Mat ag = Dense::mul(a, g);
        const Mat la = mult_rep(Side::left, a, nest), lg = mult_rep(Side::left, g, nest);
        const Mat ra = mult_rep(Side::right, a, nest), rg = mult_rep(Side::right, g, nest);
        bool rep_ok = mult_rep(Side::left, ag, nest) == la * lg && mult_rep(Side::right, ag, nest) == rg * ra &&
                      la * rg == rg * la && la * y == nest.from_dense(Dense::mul(a, nest.to_dense(y))) &&
                      ra * y == nest.from_dense(Dense::mul(nest.to_dense(y), a));
        if (!rep_ok) ++failed_rep;
        if (ok && rep_ok) ++passed;
    }
    line(7, passed == kKernelInstances,
         fmt("kernel properties %zu/%zu instances (largest %zu, %zu Gaussian), %zu linalg and %zu mult_rep failures",
             passed, kKernelInstances, largest, gaussian, failed_mat, failed_rep));
}

}  // namespace

int main() {
    const auto start = clock_type::now();
    const auto algebras = nests();
    theorem_round_trip(algebras);
    refutation(algebras);
    inner(algebras);
    example();
    derivations(algebras);
    corollaries(algebras);
    kernel();
    std::printf("%s: %d failing criteria, %.1f s\n", failures ? "FAIL" : "PASS", failures, since(start));
    return failures ? EXIT_FAILURE : EXIT_SUCCESS;
}
