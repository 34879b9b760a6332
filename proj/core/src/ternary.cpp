#include "ternary/ternary.hpp"

#include "ternary/errors.hpp"

namespace ternary {

namespace {

// Stacked system for (R, S, T): unknown blocks [R | S | T], rows j*d + k for
// coordinate k of delta(e_j) and d^2 + j*d + k for tau(e_j).
SparseMatrix rst_system(const FiniteAlgebra& alg) {
    const std::size_t d = alg.dim();
    SparseMatrix m(3 * d);
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<std::vector<SparseEntry>> rows(d);
        for (std::size_t c = 0; c < d; ++c) {
            for (const auto& e : alg.product(c, j)) rows[e.col].push_back({c, e.value});      // R e_j
            for (const auto& e : alg.product(j, c)) rows[e.col].push_back({d + c, e.value});  // e_j S
        }
        for (auto& r : rows) m.add_row(std::move(r));
    }
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<std::vector<SparseEntry>> rows(d);
        for (std::size_t c = 0; c < d; ++c) {
            for (const auto& e : alg.product(c, j)) rows[e.col].push_back({d + c, -e.value});     // -S e_j
            for (const auto& e : alg.product(j, c)) rows[e.col].push_back({2 * d + c, e.value});  // e_j T
        }
        for (auto& r : rows) m.add_row(std::move(r));
    }
    return m;
}

// rows j*d + k: coordinate k of e_j S - S e_j
SparseMatrix inner_derivation_system(const FiniteAlgebra& alg) {
    const std::size_t d = alg.dim();
    SparseMatrix m(d);
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<std::vector<SparseEntry>> rows(d);
        for (std::size_t c = 0; c < d; ++c) {
            for (const auto& e : alg.product(j, c)) rows[e.col].push_back({c, e.value});
            for (const auto& e : alg.product(c, j)) rows[e.col].push_back({c, -e.value});
        }
        for (auto& r : rows) m.add_row(std::move(r));
    }
    return m;
}

Vec stack_columns(const OpMap& first, const OpMap* second) {
    const std::size_t d = first.dim();
    Vec rhs;
    rhs.reserve(d * d * (second ? 2 : 1));
    for (const OpMap* map : {&first, second}) {
        if (map == nullptr) continue;
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) rhs.push_back(map->matrix()(k, j));
        }
    }
    return rhs;
}

ImplementingTriple split_rst(const Vec& x, std::size_t d) {
    ImplementingTriple out;
    out.r.assign(x.begin(), x.begin() + static_cast<long>(d));
    out.s.assign(x.begin() + static_cast<long>(d), x.begin() + static_cast<long>(2 * d));
    out.t.assign(x.begin() + static_cast<long>(2 * d), x.end());
    return out;
}

void require_dims(const FiniteAlgebra& alg, const OpMap& map, const char* name) {
    if (map.dim() != alg.dim()) {
        throw InputError(std::string(name) + " is " + std::to_string(map.dim()) + "x" + std::to_string(map.dim()) +
                         " but the algebra has dimension " + std::to_string(alg.dim()));
    }
}

// Basis pairs (i, j) with the product e_i e_j as a coordinate vector.
Vec unit_product(const FiniteAlgebra& alg, std::size_t i, std::size_t j) {
    Vec out(alg.dim());
    for (const auto& e : alg.product(i, j)) out[e.col] = e.value;
    return out;
}

std::string pair_label(const FiniteAlgebra& alg, std::size_t i, std::size_t j) {
    return "(" + alg.label(i) + "," + alg.label(j) + ")";
}

}  // namespace

OpMap delta_map(const FiniteAlgebra& alg, const ImplementingTriple& rst) {
    return OpMap(alg.left_rep(rst.r) + alg.right_rep(rst.s));
}

OpMap tau_map(const FiniteAlgebra& alg, const ImplementingTriple& rst) {
    return OpMap(alg.right_rep(rst.t) - alg.left_rep(rst.s));
}

OpMap gamma_map(const FiniteAlgebra& alg, const ImplementingTriple& rst) {
    return OpMap(alg.left_rep(rst.r) + alg.right_rep(rst.t));
}

TernaryTriple ternary_from(const FiniteAlgebra& alg, const ImplementingTriple& rst) {
    return {gamma_map(alg, rst), delta_map(alg, rst), tau_map(alg, rst)};
}

Vec z_value(const FiniteAlgebra& alg, const OpMap& delta, const OpMap& tau, const WitnessPair& pair) {
    return alg.multiply(delta(pair.a), pair.b) + alg.multiply(pair.a, tau(pair.b));
}

std::optional<ZFailure> check_z(const FiniteAlgebra& alg, const OpMap& delta, const OpMap& tau,
                                std::span<const WitnessPair> pairs) {
    require_dims(alg, delta, "delta");
    require_dims(alg, tau, "tau");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (!is_zero(alg.multiply(pairs[i].a, pairs[i].b))) {
            throw InputError("witness pair " + std::to_string(i) + " does not satisfy AB = 0");
        }
        Vec value = z_value(alg, delta, tau, pairs[i]);
        if (!is_zero(value)) return ZFailure{i, pairs[i], std::move(value)};
    }
    return std::nullopt;
}

RstSolution solve_rst(const FiniteAlgebra& alg, const OpMap& delta, const OpMap& tau, bool with_homogeneous) {
    require_dims(alg, delta, "delta");
    require_dims(alg, tau, "tau");
    const std::size_t d = alg.dim();
    const auto& system = alg.cached_elimination("rst", [&] { return rst_system(alg); });
    RstSolution out;
    out.rank = system.rank();
    if (auto x = system.particular(stack_columns(delta, &tau))) out.particular = split_rst(*x, d);
    out.augmented_rank = out.rank + (out.particular ? 0 : 1);
    if (with_homogeneous) {
        for (const auto& v : system.nullspace()) out.homogeneous.push_back(split_rst(v, d));
    }
    return out;
}

OpMap gamma_from(const FiniteAlgebra& alg, const OpMap& delta, const OpMap& tau) {
    require_dims(alg, delta, "delta");
    require_dims(alg, tau, "tau");
    const std::size_t d = alg.dim();
    const Vec delta_i = delta(alg.unity());
    const Vec tau_i = tau(alg.unity());
    Mat gamma(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        const Vec dj = delta.of_unit(j);
        const Vec tj = tau.of_unit(j);
        Vec first = dj + alg.unit_times(j, tau_i);
        Vec second = tj + alg.times_unit(delta_i, j);
        if (first != second) {
            throw ConsistencyError("delta(A) - delta(I)A != tau(A) - A tau(I) at A = " + alg.label(j), j);
        }
        gamma.set_column(j, first);
    }
    return OpMap(std::move(gamma));
}

std::optional<std::pair<std::size_t, std::size_t>> verify_ternary(const FiniteAlgebra& alg,
                                                                  const TernaryTriple& triple) {
    require_dims(alg, triple.gamma, "gamma");
    require_dims(alg, triple.delta, "delta");
    require_dims(alg, triple.tau, "tau");
    const std::size_t d = alg.dim();
    std::vector<Vec> delta_cols;
    std::vector<Vec> tau_cols;
    for (std::size_t j = 0; j < d; ++j) {
        delta_cols.push_back(triple.delta.of_unit(j));
        tau_cols.push_back(triple.tau.of_unit(j));
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const Vec lhs = triple.gamma(unit_product(alg, i, j));
            const Vec rhs = alg.times_unit(delta_cols[i], j) + alg.unit_times(i, tau_cols[j]);
            if (lhs != rhs) return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

ImplementingTriple extract_inner(const FiniteAlgebra& alg, const TernaryTriple& triple) {
    if (auto bad = verify_ternary(alg, triple)) {
        throw InputError("not a ternary derivation: identity fails at " + pair_label(alg, bad->first, bad->second));
    }
    const Vec delta_i = triple.delta(alg.unity());
    const Vec tau_i = triple.tau(alg.unity());

    const OpMap alpha(triple.delta.matrix() - alg.left_rep(delta_i));
    const auto& system = alg.cached_elimination("inner-derivation", [&] { return inner_derivation_system(alg); });
    auto s = system.particular(stack_columns(alpha, nullptr));
    if (!s) throw TheoremViolation("derivation A -> delta(A) - delta(I)A is not inner");

    ImplementingTriple out{delta_i - *s, *s, tau_i + *s};
    if (delta_map(alg, out) != triple.delta || tau_map(alg, out) != triple.tau ||
        gamma_map(alg, out) != triple.gamma) {
        throw TheoremViolation("extracted (R, S, T) does not reproduce the ternary derivation");
    }
    if (out.r + out.t != delta_i + tau_i) throw TheoremViolation("R + T != delta(I) + tau(I)");
    return out;
}

TernaryTriple inner_ternary(const FiniteAlgebra& alg, const Vec& a, const Vec& b, const Vec& c) {
    return {OpMap(alg.left_rep(a) + alg.right_rep(b)), OpMap(alg.left_rep(a) + alg.right_rep(c)),
            OpMap(alg.right_rep(b) - alg.left_rep(c))};
}

bool uniqueness_check(const FiniteAlgebra& alg, const OpMap& delta, const OpMap& tau, const OpMap& g1,
                      const OpMap& g2) {
    if (auto bad = verify_ternary(alg, {g1, delta, tau})) {
        throw InputError("first gamma is not a completion: fails at " + pair_label(alg, bad->first, bad->second));
    }
    if (auto bad = verify_ternary(alg, {g2, delta, tau})) {
        throw InputError("second gamma is not a completion: fails at " + pair_label(alg, bad->first, bad->second));
    }
    if (g1 != g2) throw TheoremViolation("two distinct completions of the same (delta, tau)");
    return true;
}

bool StepReport::all_passed() const {
    for (const auto& s : steps) {
        if (!s.passed) return false;
    }
    return true;
}

StepReport step_identities(const FiniteAlgebra& alg, std::span<const Vec> idempotents, const OpMap& delta,
                           const OpMap& tau) {
    require_dims(alg, delta, "delta");
    require_dims(alg, tau, "tau");
    const std::size_t d = alg.dim();
    const Vec& id = alg.unity();
    const Vec delta_i = delta(id);
    const Vec tau_i = tau(id);
    std::vector<Vec> dcol;
    std::vector<Vec> tcol;
    for (std::size_t j = 0; j < d; ++j) {
        dcol.push_back(delta.of_unit(j));
        tcol.push_back(tau.of_unit(j));
    }

    StepReport report;
    auto fail = [](StepCheck& check, std::string where) {
        if (check.passed) {
            check.passed = false;
            check.failure = std::move(where);
        }
    };

    StepCheck step1{"step1", true, {}};
    StepCheck mirror{"step1-mirror", true, {}};
    for (std::size_t k = 0; k < idempotents.size(); ++k) {
        const Vec& p = idempotents[k];
        if (alg.multiply(p, p) != p) throw InputError("idempotent list entry " + std::to_string(k) + " is not idempotent");
        const Vec delta_p = delta(p);
        const Vec tau_p = tau(p);
        for (std::size_t a = 0; a < d && (step1.passed || mirror.passed); ++a) {
            // delta(AP) + AP tau(I) = A tau(P) + delta(A) P
            const Vec ap = alg.unit_times(a, p);
            const Vec lhs1 = delta(ap) + alg.multiply(ap, tau_i);
            const Vec rhs1 = alg.unit_times(a, tau_p) + alg.multiply(dcol[a], p);
            if (lhs1 != rhs1) fail(step1, "A=" + alg.label(a) + ", P=#" + std::to_string(k));
            // tau(PA) + delta(I) PA = P tau(A) + delta(P) A
            const Vec pa = alg.times_unit(p, a);
            const Vec lhs2 = tau(pa) + alg.multiply(delta_i, pa);
            const Vec rhs2 = alg.multiply(p, tcol[a]) + alg.times_unit(delta_p, a);
            if (lhs2 != rhs2) fail(mirror, "A=" + alg.label(a) + ", P=#" + std::to_string(k));
        }
    }

    StepCheck step3{"step3", true, {}};
    StepCheck step4{"step4", true, {}};
    for (std::size_t i = 0; i < d; ++i) {
        const Vec e_i_delta_i = alg.unit_times(i, delta_i);
        const Vec e_i_tau_i = alg.unit_times(i, tau_i);
        for (std::size_t j = 0; j < d; ++j) {
            const Vec ij = unit_product(alg, i, j);
            // delta(AB) = A delta(B) + delta(A) B - A delta(I) B
            if (step3.passed) {
                Vec rhs = alg.unit_times(i, dcol[j]) + alg.times_unit(dcol[i], j) - alg.times_unit(e_i_delta_i, j);
                if (delta(ij) != rhs) fail(step3, pair_label(alg, i, j));
            }
            // tau(AB) = A tau(B) + tau(A) B - A tau(I) B
            if (step4.passed) {
                Vec rhs = alg.unit_times(i, tcol[j]) + alg.times_unit(tcol[i], j) - alg.times_unit(e_i_tau_i, j);
                if (tau(ij) != rhs) fail(step4, pair_label(alg, i, j));
            }
        }
    }

    StepCheck step5{"step5", true, {}};
    for (std::size_t a = 0; a < d; ++a) {
        // tau(A) - A tau(I) = delta(A) - delta(I) A
        if (tcol[a] - alg.unit_times(a, tau_i) != dcol[a] - alg.times_unit(delta_i, a)) {
            fail(step5, "A=" + alg.label(a));
            break;
        }
    }

    report.steps = {step1, mirror, step3, step4, step5};
    return report;
}

std::string_view to_string(ZVerdict verdict) {
    switch (verdict) {
        case ZVerdict::holds: return "holds";
        case ZVerdict::refuted: return "refuted";
        case ZVerdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

ZReport search_witness(const FiniteAlgebra& alg, std::span<const Vec> idempotents, const OpMap& delta,
                       const OpMap& tau, std::size_t random_budget, std::uint64_t seed, Field field) {
    ZReport report;
    const ZeroProductSampler sampler(alg, std::vector<Vec>(idempotents.begin(), idempotents.end()));
    sampler.visit_structured([&](const WitnessPair& pair) {
        ++report.pairs_examined;
        Vec value = z_value(alg, delta, tau, pair);
        if (is_zero(value)) return true;
        report.verdict = ZVerdict::refuted;
        report.witness = pair;
        report.value = std::move(value);
        return false;
    });
    if (report.verdict == ZVerdict::refuted) return report;

    SplitMix64 rng(seed);
    for (std::size_t k = 0; k < random_budget; ++k) {
        auto pair = sampler.random_pair(rng, field);
        if (!pair) continue;
        ++report.pairs_examined;
        Vec value = z_value(alg, delta, tau, *pair);
        if (!is_zero(value)) {
            report.verdict = ZVerdict::refuted;
            report.witness = std::move(pair);
            report.value = std::move(value);
            return report;
        }
    }
    report.verdict = ZVerdict::inconclusive;
    return report;
}

ZReport decide_z(const FiniteAlgebra& alg, std::span<const Vec> idempotents, const OpMap& delta, const OpMap& tau,
                 std::size_t random_budget, std::uint64_t seed, Field field) {
    auto solution = solve_rst(alg, delta, tau, false);
    if (solution.feasible()) {
        ZReport report;
        report.verdict = ZVerdict::holds;
        report.certificate = std::move(solution.particular);
        return report;
    }
    return search_witness(alg, idempotents, delta, tau, random_budget, seed, field);
}

}  // namespace ternary
