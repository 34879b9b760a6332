#include "ternary/counterexample.hpp"

#include "ternary/errors.hpp"

namespace ternary {

namespace {

constexpr std::size_t kI = 0;
constexpr std::size_t kU = 1;
constexpr std::size_t kV = 2;
constexpr std::size_t kW = 3;

Mat matrix_unit(std::size_t p, std::size_t q) {
    Mat m(3, 3);
    m(p, q) = Scalar(1);
    return m;
}

Vec element(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) { return Vec{a, b, c, d}; }

std::string describe(const Vec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ", ";
        out += v[i].str();
    }
    return out + ")";
}

void require_zero(const Vec& value, const std::string& where) {
    if (!is_zero(value)) throw TheoremViolation("nonzero (Z) value " + describe(value) + " at " + where);
}

}  // namespace

std::vector<Mat> example_basis() {
    return {Mat::identity(3), matrix_unit(0, 1), matrix_unit(0, 2), matrix_unit(1, 2)};
}

FiniteAlgebra build_example_algebra() {
    return FiniteAlgebra::from_matrix_basis(example_basis(), {"I", "U", "V", "W"});
}

ExampleMaps example_maps() {
    const auto alg = build_example_algebra();
    const Vec x = alg.unit(kW);
    return {OpMap::right_mult(alg, x), OpMap::left_mult(alg, x)};
}

ExampleZReport verify_example_z() {
    const auto alg = build_example_algebra();
    const auto [delta, tau] = example_maps();
    ExampleZReport report;
    const std::vector<std::size_t> radical_units{kU, kV, kW};

    for (auto i : radical_units) {
        for (auto j : radical_units) {
            ++report.radical_pairs;
            require_zero(z_value(alg, delta, tau, {alg.unit(i), alg.unit(j)}), alg.label(i) + "," + alg.label(j));
        }
    }

    for (auto i : radical_units) {
        for (auto j : radical_units) {
            for (auto k : radical_units) {
                ++report.cube_triples;
                if (!is_zero(alg.multiply(alg.multiply(alg.unit(i), alg.unit(j)), alg.unit(k)))) {
                    throw TheoremViolation("radical of the example algebra is not nilpotent of order 3");
                }
            }
        }
    }

    const std::vector<Scalar> scalars{Scalar(-2), Scalar(-1), Scalar(-1, 2), Scalar(1, 2), Scalar(1), Scalar(2)};
    const std::vector<Scalar> grid{Scalar(-1), Scalar(0), Scalar(1)};
    for (const auto& a : scalars) {
        for (const auto& b : grid) {
            for (const auto& c : grid) {
                for (const auto& d : grid) {
                    ++report.invertible_checked;
                    const Vec elem = element(a, b, c, d);
                    if (!right_annihilator(alg, elem).empty() || !left_annihilator(alg, elem).empty()) {
                        throw TheoremViolation("element with nonzero scalar part is a zero divisor: " + describe(elem));
                    }
                }
            }
        }
    }

    std::vector<Vec> points;
    for (const auto& a : grid) {
        for (const auto& b : grid) {
            for (const auto& c : grid) {
                for (const auto& d : grid) points.push_back(element(a, b, c, d));
            }
        }
    }
    for (const auto& a : points) {
        for (const auto& b : points) {
            ++report.grid_pairs;
            if (!is_zero(alg.multiply(a, b))) continue;
            ++report.grid_zero_product;
            require_zero(z_value(alg, delta, tau, {a, b}), "A=" + describe(a) + ", B=" + describe(b));
        }
    }
    return report;
}

CompletionSystem solve_completion(const FiniteAlgebra& alg, const OpMap& delta, const OpMap& tau,
                                  const std::vector<std::size_t>& units) {
    const std::size_t d = alg.dim();
    std::vector<std::size_t> used = units;
    if (used.empty()) {
        for (std::size_t i = 0; i < d; ++i) used.push_back(i);
    }
    SparseMatrix system(d * d);
    Vec rhs;
    for (auto i : used) {
        for (auto j : used) {
            // gamma(e_i e_j) = sum_m (e_i e_j)_m gamma(e_m); coordinate k uses variable k*d + m
            std::vector<std::vector<SparseEntry>> rows(d);
            for (const auto& e : alg.product(i, j)) {
                for (std::size_t k = 0; k < d; ++k) rows[k].push_back({k * d + e.col, e.value});
            }
            const Vec target = alg.times_unit(delta.of_unit(i), j) + alg.unit_times(i, tau.of_unit(j));
            for (std::size_t k = 0; k < d; ++k) {
                system.add_row(std::move(rows[k]));
                rhs.push_back(target[k]);
            }
        }
    }
    const Elimination elim(system);
    auto solution = elim.solve(rhs);
    CompletionSystem out;
    out.unknowns = d * d;
    out.equations = system.rows();
    out.rank = solution.rank;
    out.augmented_rank = solution.augmented_rank;
    if (solution.particular) {
        Mat m(d, d);
        for (std::size_t k = 0; k < d; ++k) {
            for (std::size_t c = 0; c < d; ++c) m(k, c) = (*solution.particular)[k * d + c];
        }
        out.gamma = OpMap(std::move(m));
    }
    return out;
}

NoGammaCertificate show_no_gamma() {
    const auto alg = build_example_algebra();
    const auto [delta, tau] = example_maps();
    NoGammaCertificate cert;
    cert.full = solve_completion(alg, delta, tau);
    if (cert.full.feasible()) throw TheoremViolation("the example maps admit a completing gamma");

    const Vec u = alg.unit(kU);
    cert.forced_by_left_identity = alg.multiply(delta(alg.unity()), u) + tau(u);
    cert.forced_by_right_identity = delta(u) + alg.multiply(u, tau(alg.unity()));
    if (cert.forced_by_left_identity == cert.forced_by_right_identity) {
        throw TheoremViolation("forced values of gamma(U) agree");
    }

    cert.subalgebra = solve_completion(alg, delta, tau, {kI, kV});
    if (!cert.subalgebra.feasible()) throw TheoremViolation("span{I, V} subsystem is infeasible");
    return cert;
}

std::vector<ContrastCase> nest_contrast() {
    std::vector<ContrastCase> cases;
    auto run = [&](std::string label, const FiniteAlgebra& alg, std::vector<Vec> idempotents, OpMap delta,
                   OpMap tau) {
        ContrastCase c;
        c.label = std::move(label);
        c.z = decide_z(alg, idempotents, delta, tau, 64, 1);
        auto rst = solve_rst(alg, delta, tau, false);
        c.rst_rank = rst.rank;
        c.rst_augmented_rank = rst.augmented_rank;
        if (rst.feasible()) {
            const OpMap gamma = gamma_from(alg, delta, tau);
            TernaryTriple triple{gamma, delta, tau};
            c.ternary_verified = !verify_ternary(alg, triple).has_value();
            c.extracted = extract_inner(alg, triple);
        }
        c.delta = std::move(delta);
        c.tau = std::move(tau);
        cases.push_back(std::move(c));
    };

    const NestAlgebra nest(NestSpec({1, 2}));
    const auto& alg = nest.algebra();
    const Vec x = nest.unit(0, 1);
    run("nest 1,2: R_X, L_X", alg, nest.idempotent_generators(), OpMap::right_mult(alg, x), OpMap::left_mult(alg, x));
    run("nest 1,2: R_X, -L_X", alg, nest.idempotent_generators(), OpMap::right_mult(alg, x),
        Scalar(-1) * OpMap::left_mult(alg, x));

    const auto example = build_example_algebra();
    const auto [delta, tau] = example_maps();
    run("example: R_W, L_W", example, {example.unity()}, delta, tau);
    return cases;
}

AlgebraCensus census(const FiniteAlgebra& alg) {
    return {alg.dim(), center(alg).size(), radical(alg).size()};
}

std::vector<NestCensusEntry> nest_census(std::size_t max_n) {
    std::vector<NestCensusEntry> out;
    for (std::size_t n = 2; n <= max_n; ++n) {
        // subsets of {1, .., n-1} as proper nest dimensions
        for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
            std::vector<std::size_t> dims;
            for (std::size_t k = 1; k < n; ++k) {
                if (mask & (std::size_t{1} << (k - 1))) dims.push_back(k);
            }
            dims.push_back(n);
            NestSpec spec(dims);
            const NestAlgebra nest(spec);
            out.push_back({spec, census(nest.algebra())});
        }
    }
    return out;
}

}  // namespace ternary
