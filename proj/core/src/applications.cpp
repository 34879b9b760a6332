#include "ternary/applications.hpp"

#include "ternary/errors.hpp"
#include "ternary/random.hpp"

namespace ternary {

namespace {

Vec stacked_columns(const OpMap& map) {
    const std::size_t d = map.dim();
    Vec rhs;
    rhs.reserve(d * d);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) rhs.push_back(map.matrix()(k, j));
    }
    return rhs;
}

// rows j*d + k: coordinate k of e_j D (side right) or D e_j (side left)
SparseMatrix centralizer_system(const FiniteAlgebra& alg, Side side) {
    const std::size_t d = alg.dim();
    SparseMatrix m(d);
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<std::vector<SparseEntry>> rows(d);
        for (std::size_t c = 0; c < d; ++c) {
            const auto& prod = side == Side::right ? alg.product(j, c) : alg.product(c, j);
            for (const auto& e : prod) rows[e.col].push_back({c, e.value});
        }
        for (auto& r : rows) m.add_row(std::move(r));
    }
    return m;
}

const Elimination& centralizer_elimination(const FiniteAlgebra& alg, Side side) {
    return alg.cached_elimination(side == Side::right ? "right-centralizer" : "left-centralizer",
                                  [&] { return centralizer_system(alg, side); });
}

std::optional<Vec> solve_centralizer(const FiniteAlgebra& alg, const OpMap& map, Side side) {
    if (map.dim() != alg.dim()) throw InputError("map dimension differs from the algebra");
    auto d = centralizer_elimination(alg, side).particular(stacked_columns(map));
    if (d && *d != map(alg.unity())) throw TheoremViolation("centralizer element differs from its value at I");
    return d;
}

// Unknown D is the d x d matrix of the map, variable k*d + m = coordinate k of D(e_m).
SparseMatrix derivation_identity_system(const FiniteAlgebra& alg) {
    const std::size_t d = alg.dim();
    SparseMatrix m(d * d);
    auto var = [d](std::size_t k, std::size_t col) { return k * d + col; };
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<std::vector<SparseEntry>> rows(d);
            // D(e_i e_j)
            for (const auto& p : alg.product(i, j)) {
                for (std::size_t k = 0; k < d; ++k) rows[k].push_back({var(k, p.col), p.value});
            }
            // - D(e_i) e_j = - sum_l D(l, i) e_l e_j
            for (std::size_t l = 0; l < d; ++l) {
                for (const auto& e : alg.product(l, j)) rows[e.col].push_back({var(l, i), -e.value});
            }
            // - e_i D(e_j) = - sum_l D(l, j) e_i e_l
            for (std::size_t l = 0; l < d; ++l) {
                for (const auto& e : alg.product(i, l)) rows[e.col].push_back({var(l, j), -e.value});
            }
            for (auto& r : rows) {
                if (!r.empty()) m.add_row(std::move(r));
            }
        }
    }
    return m;
}

const Elimination& derivation_elimination(const FiniteAlgebra& alg) {
    return alg.cached_elimination("derivation-identity", [&] { return derivation_identity_system(alg); });
}

std::vector<Vec> sample_points(const FiniteAlgebra& alg, std::size_t samples, std::uint64_t seed, Field field) {
    std::vector<Vec> points{alg.unity()};
    for (std::size_t i = 0; i < alg.dim(); ++i) points.push_back(alg.unit(i));
    SplitMix64 rng(seed);
    for (std::size_t k = 0; k < samples; ++k) points.push_back(random_sparse_vec(rng, alg.dim(), field));
    return points;
}

bool in_column_span(const Mat& span, const Vec& v) {
    return Elimination(span).particular(v).has_value();
}

}  // namespace

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::certified: return "certified";
        case Verdict::refuted: return "refuted";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::optional<Vec> solve_right_centralizer(const FiniteAlgebra& alg, const OpMap& tau) {
    return solve_centralizer(alg, tau, Side::right);
}

std::optional<Vec> solve_left_centralizer(const FiniteAlgebra& alg, const OpMap& delta) {
    return solve_centralizer(alg, delta, Side::left);
}

std::size_t right_centralizer_kernel_dim(const FiniteAlgebra& alg) {
    return centralizer_elimination(alg, Side::right).nullspace().size();
}

CentralizerReport solve_two_sided(const FiniteAlgebra& alg, const OpMap& rho) {
    CentralizerReport report;
    report.kind = CentralizerKind::two_sided;
    auto right = solve_right_centralizer(alg, rho);
    auto left = solve_left_centralizer(alg, rho);
    report.right_feasible = right.has_value();
    report.left_feasible = left.has_value();
    if (right) {
        report.central_flag = is_central(alg, *right);
        report.d = std::move(right);
    } else if (left) {
        report.d = std::move(left);
    }
    return report;
}

std::optional<DerZeroReport> solve_derivation_at_zero(const FiniteAlgebra& alg, const OpMap& delta) {
    auto solution = solve_rst(alg, delta, delta, false);
    if (!solution.feasible()) return std::nullopt;
    const auto& rst = *solution.particular;
    const Vec central = rst.t - rst.s;
    // A = I in A(T - S) = (R + S)A
    if (central != rst.r + rst.s) throw TheoremViolation("T - S != R + S for a derivation at zero products");
    if (!is_central(alg, central)) throw TheoremViolation("T - S is not central");
    const auto basis = center(alg);
    auto coords = solve_affine(Mat::from_columns(basis, alg.dim()), central).particular;
    if (!coords) throw TheoremViolation("central element outside the computed center");
    return DerZeroReport{rst.s, rst.t, std::move(*coords)};
}

GeneralizedDerivation solve_generalized_derivation(const FiniteAlgebra& alg, const OpMap& delta) {
    if (delta.dim() != alg.dim()) throw InputError("map dimension differs from the algebra");
    const std::size_t d = alg.dim();
    GeneralizedDerivation out;
    out.delta_at_identity = delta(alg.unity());
    out.derivation = OpMap(delta.matrix() - alg.left_rep(out.delta_at_identity));
    std::vector<Vec> col;
    for (std::size_t j = 0; j < d; ++j) col.push_back(delta.of_unit(j));
    for (std::size_t i = 0; i < d && !out.failing_pair; ++i) {
        const Vec ei_dI = alg.unit_times(i, out.delta_at_identity);
        for (std::size_t j = 0; j < d; ++j) {
            Vec ij(d);
            for (const auto& e : alg.product(i, j)) ij[e.col] = e.value;
            const Vec rhs = alg.times_unit(col[i], j) + alg.unit_times(i, col[j]) - alg.times_unit(ei_dI, j);
            if (delta(ij) != rhs) {
                out.failing_pair = std::make_pair(i, j);
                break;
            }
        }
    }
    out.feasible = !out.failing_pair.has_value();
    return out;
}

std::vector<OpMap> derivation_space(const FiniteAlgebra& alg) {
    const std::size_t d = alg.dim();
    std::vector<OpMap> out;
    for (const auto& v : derivation_elimination(alg).nullspace()) {
        Mat m(d, d);
        for (std::size_t k = 0; k < d; ++k) {
            for (std::size_t col = 0; col < d; ++col) m(k, col) = v[k * d + col];
        }
        out.emplace_back(std::move(m));
    }
    return out;
}

std::size_t derivation_space_dim(const FiniteAlgebra& alg) {
    const auto& e = derivation_elimination(alg);
    return e.cols() - e.rank();
}

bool is_derivation(const FiniteAlgebra& alg, const OpMap& delta) {
    auto gd = solve_generalized_derivation(alg, delta);
    return gd.feasible && is_zero(gd.delta_at_identity);
}

LocalityReport local_centralizer_check(const FiniteAlgebra& alg, const OpMap& psi, Side side, std::size_t samples,
                                       std::uint64_t seed, Field field) {
    if (samples == 0) throw InputError("samples must be at least 1");
    LocalityReport report;
    for (const auto& a : sample_points(alg, samples, seed, field)) {
        ++report.points_checked;
        // psi(A) = A D_A  <=>  L_A D_A = psi(A)
        const Mat rep = side == Side::right ? alg.left_rep(a) : alg.right_rep(a);
        if (!in_column_span(rep, psi(a))) {
            report.verdict = Verdict::refuted;
            report.witness = a;
            return report;
        }
    }
    report.sampled_locality = true;
    report.d = side == Side::right ? solve_right_centralizer(alg, psi) : solve_left_centralizer(alg, psi);
    report.global_form = report.d.has_value();
    report.verdict = report.global_form ? Verdict::certified : Verdict::inconclusive;
    return report;
}

LocalityReport ideal_preserving_check(const FiniteAlgebra& alg, const OpMap& psi, Side side) {
    LocalityReport report;
    for (std::size_t u = 0; u < alg.dim(); ++u) {
        ++report.points_checked;
        const Vec e = alg.unit(u);
        // right ideal E*alg is spanned by the columns of L_E
        const Mat span = side == Side::right ? alg.left_rep(e) : alg.right_rep(e);
        const Mat images = psi.matrix() * span;
        Mat joined(alg.dim(), 2 * alg.dim());
        for (std::size_t r = 0; r < alg.dim(); ++r) {
            for (std::size_t c = 0; c < alg.dim(); ++c) {
                joined(r, c) = span(r, c);
                joined(r, alg.dim() + c) = images(r, c);
            }
        }
        if (rank(joined) != rank(span)) {
            report.verdict = Verdict::refuted;
            report.witness = e;
            return report;
        }
    }
    report.sampled_locality = true;
    report.d = side == Side::right ? solve_right_centralizer(alg, psi) : solve_left_centralizer(alg, psi);
    report.global_form = report.d.has_value();
    report.verdict = report.global_form ? Verdict::certified : Verdict::inconclusive;
    return report;
}

LocalityReport local_derivation_check(const FiniteAlgebra& alg, const OpMap& delta, std::size_t samples,
                                      std::uint64_t seed, Field field) {
    if (samples == 0) throw InputError("samples must be at least 1");
    LocalityReport report;
    report.vanishes_at_identity = is_zero(delta(alg.unity()));
    const auto space = derivation_space(alg);
    for (const auto& a : sample_points(alg, samples, seed, field)) {
        ++report.points_checked;
        std::vector<Vec> values;
        values.reserve(space.size());
        for (const auto& dmap : space) values.push_back(dmap(a));
        const Vec target = delta(a);
        const bool member = values.empty() ? is_zero(target) : in_column_span(Mat::from_columns(values, alg.dim()), target);
        if (!member) {
            report.verdict = Verdict::refuted;
            report.witness = a;
            return report;
        }
    }
    report.sampled_locality = true;
    report.global_form = is_derivation(alg, delta);
    report.verdict = report.global_form ? Verdict::certified : Verdict::inconclusive;
    return report;
}

GdReport gd_zero_product_check(const FiniteAlgebra& alg, const OpMap& delta, std::size_t samples, std::uint64_t seed,
                               Field field) {
    GdReport report;
    auto test = [&](const Vec& a, const Vec& b, const Vec& c) {
        ++report.triples_checked;
        if (!is_zero(alg.multiply(alg.multiply(a, delta(b)), c))) {
            report.verdict = Verdict::refuted;
            report.witness = ZeroTriple{a, b, c};
            return false;
        }
        return true;
    };

    for (std::size_t u = 0; u < alg.dim(); ++u) {
        const Vec b = alg.unit(u);
        const auto lefts = left_annihilator(alg, b);
        const auto rights = right_annihilator(alg, b);
        if (lefts.empty() || rights.empty()) {
            ++report.trivial_skipped;
            continue;
        }
        for (const auto& a : lefts) {
            for (const auto& c : rights) {
                if (!test(a, b, c)) return report;
            }
        }
    }
    SplitMix64 rng(seed);
    for (std::size_t k = 0; k < samples; ++k) {
        const Vec b = random_sparse_vec(rng, alg.dim(), field);
        const auto lefts = left_annihilator(alg, b);
        const auto rights = right_annihilator(alg, b);
        if (lefts.empty() || rights.empty()) {
            ++report.trivial_skipped;
            continue;
        }
        const Vec a = combine(lefts, random_vec(rng, lefts.size(), field), alg.dim());
        const Vec c = combine(rights, random_vec(rng, rights.size(), field), alg.dim());
        if (!test(a, b, c)) return report;
    }
    report.generalized_derivation = solve_generalized_derivation(alg, delta).feasible;
    report.verdict = report.generalized_derivation ? Verdict::certified : Verdict::inconclusive;
    return report;
}

}  // namespace ternary
