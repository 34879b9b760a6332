#ifndef TERNARY_TERNARY_HPP
#define TERNARY_TERNARY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ternary/nest.hpp"
#include "ternary/opmap.hpp"

namespace ternary {

/// (gamma, delta, tau) with gamma(AB) = delta(A) B + A tau(B) when valid.
struct TernaryTriple {
    OpMap gamma;
    OpMap delta;
    OpMap tau;
};

/// delta(A) = R A + A S, tau(A) = -S A + A T, gamma(A) = R A + A T.
struct ImplementingTriple {
    Vec r;
    Vec s;
    Vec t;
};

OpMap delta_map(const FiniteAlgebra& alg, const ImplementingTriple& rst);
OpMap tau_map(const FiniteAlgebra& alg, const ImplementingTriple& rst);
OpMap gamma_map(const FiniteAlgebra& alg, const ImplementingTriple& rst);
/// The ternary derivation implemented by (R, S, T).
TernaryTriple ternary_from(const FiniteAlgebra& alg, const ImplementingTriple& rst);

/// delta(A) B + A tau(B).
Vec z_value(const FiniteAlgebra& alg, const OpMap& delta, const OpMap& tau, const WitnessPair& pair);

struct ZFailure {
    std::size_t index;
    WitnessPair pair;
    Vec value;
};

/// First supplied pair with delta(A) B + A tau(B) != 0, or nullopt. Throws
/// InputError on a pair with A B != 0.
std::optional<ZFailure> check_z(const FiniteAlgebra& alg, const OpMap& delta, const OpMap& tau,
                                std::span<const WitnessPair> pairs);

/// Solution set of {delta(E) = R E + E S, tau(E) = -S E + E T : E basis}
/// in the 3d unknowns (R, S, T).
struct RstSolution {
    std::optional<ImplementingTriple> particular;
    std::vector<ImplementingTriple> homogeneous;
    std::size_t rank = 0;
    std::size_t augmented_rank = 0;

    bool feasible() const { return particular.has_value(); }
};

RstSolution solve_rst(const FiniteAlgebra& alg, const OpMap& delta, const OpMap& tau, bool with_homogeneous = true);

/// gamma(A) = delta(A) + A tau(I). Throws ConsistencyError naming the first
/// basis unit where delta(A) - delta(I) A != tau(A) - A tau(I).
OpMap gamma_from(const FiniteAlgebra& alg, const OpMap& delta, const OpMap& tau);

/// First basis pair (i, j) with gamma(e_i e_j) != delta(e_i) e_j + e_i tau(e_j).
std::optional<std::pair<std::size_t, std::size_t>> verify_ternary(const FiniteAlgebra& alg,
                                                                  const TernaryTriple& triple);

/// Implementing elements for a ternary derivation: alpha = delta - L_{delta(I)}
/// is solved as an inner derivation A -> A S - S A (free parameters zero),
/// then R = delta(I) - S and T = tau(I) + S. Throws InputError if the triple
/// is not a ternary derivation, TheoremViolation if alpha is not inner or the
/// result fails to reproduce the maps.
ImplementingTriple extract_inner(const FiniteAlgebra& alg, const TernaryTriple& triple);

/// (L_a + R_b, L_a + R_c, -L_c + R_b).
TernaryTriple inner_ternary(const FiniteAlgebra& alg, const Vec& a, const Vec& b, const Vec& c);

/// True when g1 == g2. Throws InputError if either is not a completion of
/// (delta, tau), TheoremViolation if both are and they differ.
bool uniqueness_check(const FiniteAlgebra& alg, const OpMap& delta, const OpMap& tau, const OpMap& g1,
                      const OpMap& g2);

struct StepCheck {
    std::string name;
    bool passed = true;
    std::string failure;  // first failing instance, empty on pass
};

struct StepReport {
    std::vector<StepCheck> steps;
    bool all_passed() const;
};

/// Checks, exactly and over basis units, the identities that (Z) forces:
/// step1 (A, P idempotent), step1-mirror, step3 (delta), step4 (tau), step5.
StepReport step_identities(const FiniteAlgebra& alg, std::span<const Vec> idempotents, const OpMap& delta,
                           const OpMap& tau);

enum class ZVerdict { holds, refuted, inconclusive };
std::string_view to_string(ZVerdict verdict);

struct ZReport {
    ZVerdict verdict = ZVerdict::inconclusive;
    std::optional<WitnessPair> witness;
    std::optional<Vec> value;
    std::optional<ImplementingTriple> certificate;
    std::size_t pairs_examined = 0;
};

/// Decides (Z): a feasible implementing-triple system certifies it for all
/// zero-product pairs; otherwise searches unit pairs, the canonical
/// idempotent family, then `random_budget` seeded annihilator pairs for a
/// counter-witness. Inconclusive only when the whole budget is exhausted.
ZReport decide_z(const FiniteAlgebra& alg, std::span<const Vec> idempotents, const OpMap& delta, const OpMap& tau,
                 std::size_t random_budget, std::uint64_t seed, Field field = Field::rational);

/// Counter-witness search only (no solve).
ZReport search_witness(const FiniteAlgebra& alg, std::span<const Vec> idempotents, const OpMap& delta,
                       const OpMap& tau, std::size_t random_budget, std::uint64_t seed, Field field);

}  // namespace ternary

#endif  // TERNARY_TERNARY_HPP
