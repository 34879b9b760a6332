#ifndef TERNARY_APPLICATIONS_HPP
#define TERNARY_APPLICATIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ternary/ternary.hpp"

namespace ternary {

/// certified: the global form was established exactly.
/// refuted: an exact witness violates the property.
/// inconclusive: sampled evidence is consistent but nothing was established
/// (for example sampled locality passed while the global form fails, which
/// means locality breaks at a point that was not sampled).
enum class Verdict { certified, refuted, inconclusive };
std::string_view to_string(Verdict verdict);

/// D with tau(A) = A D for all A, or nullopt. When present D == tau(I).
std::optional<Vec> solve_right_centralizer(const FiniteAlgebra& alg, const OpMap& tau);
/// D with delta(A) = D A for all A, or nullopt. When present D == delta(I).
std::optional<Vec> solve_left_centralizer(const FiniteAlgebra& alg, const OpMap& delta);
/// Dimension of {D : E D = 0 for every unit E}; zero means right-centralizer
/// solutions are unique.
std::size_t right_centralizer_kernel_dim(const FiniteAlgebra& alg);

enum class CentralizerKind { right, left, two_sided };

struct CentralizerReport {
    CentralizerKind kind = CentralizerKind::two_sided;
    std::optional<Vec> d;
    bool right_feasible = false;
    bool left_feasible = false;
    /// rho(A) = A D = D A with D central
    bool central_flag = false;
};

CentralizerReport solve_two_sided(const FiniteAlgebra& alg, const OpMap& rho);

struct DerZeroReport {
    Vec s;
    Vec t;
    /// T - S in coordinates of center(alg)
    Vec central_coords;
};

/// delta(A) = A T - S A with T - S central, or nullopt when delta is not a
/// derivation at zero products.
std::optional<DerZeroReport> solve_derivation_at_zero(const FiniteAlgebra& alg, const OpMap& delta);

struct GeneralizedDerivation {
    bool feasible = false;
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
    Vec delta_at_identity;
    /// A -> delta(A) - delta(I) A; a derivation when feasible.
    OpMap derivation;
};

/// Checks delta(AB) = delta(A) B + A delta(B) - A delta(I) B on basis pairs.
GeneralizedDerivation solve_generalized_derivation(const FiniteAlgebra& alg, const OpMap& delta);

/// Basis of the derivation space: nullspace of the derivation identity
/// D(e_i e_j) = D(e_i) e_j + e_i D(e_j) in the d^2 entries of D.
std::vector<OpMap> derivation_space(const FiniteAlgebra& alg);
std::size_t derivation_space_dim(const FiniteAlgebra& alg);
bool is_derivation(const FiniteAlgebra& alg, const OpMap& delta);

struct LocalityReport {
    Verdict verdict = Verdict::inconclusive;
    std::optional<Vec> witness;  // the point where locality fails
    std::size_t points_checked = 0;
    bool sampled_locality = false;
    bool global_form = false;
    std::optional<Vec> d;  // global centralizer element when global_form
    bool vanishes_at_identity = false;  // local-derivation check only
};

/// Phase (a): for the identity, every basis unit, and `samples` seeded
/// sparse random A, solve psi(A) = A D_A (right) or D_A A (left). Phase (b):
/// the global centralizer solve.
LocalityReport local_centralizer_check(const FiniteAlgebra& alg, const OpMap& psi, Side side, std::size_t samples,
                                       std::uint64_t seed, Field field = Field::rational);

/// psi(E alg) contained in E alg (right) or psi(alg E) in alg E (left) for
/// every basis unit E, checked as exact subspace inclusion, then the global
/// centralizer solve.
LocalityReport ideal_preserving_check(const FiniteAlgebra& alg, const OpMap& psi, Side side);

/// Phase (a): delta(A) in {D(A) : D derivation} for the identity, units and
/// seeded samples. Phase (b): the derivation identity on all basis pairs.
LocalityReport local_derivation_check(const FiniteAlgebra& alg, const OpMap& delta, std::size_t samples,
                                      std::uint64_t seed, Field field = Field::rational);

struct ZeroTriple {
    Vec a;
    Vec b;
    Vec c;
};

struct GdReport {
    Verdict verdict = Verdict::inconclusive;
    std::optional<ZeroTriple> witness;
    std::size_t triples_checked = 0;
    std::size_t trivial_skipped = 0;
    bool generalized_derivation = false;
};

/// A delta(B) C = 0 over triples with AB = BC = 0: B fixed first (every
/// basis unit, then `samples` sparse random B), A and C from its left and
/// right annihilators. Cross-checked with solve_generalized_derivation.
GdReport gd_zero_product_check(const FiniteAlgebra& alg, const OpMap& delta, std::size_t samples, std::uint64_t seed,
                               Field field = Field::rational);

}  // namespace ternary

#endif  // TERNARY_APPLICATIONS_HPP
