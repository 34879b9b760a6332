#ifndef TERNARY_COUNTEREXAMPLE_HPP
#define TERNARY_COUNTEREXAMPLE_HPP

#include <optional>
#include <vector>

#include "ternary/ternary.hpp"

namespace ternary {

/// The 4-dimensional algebra of 3x3 matrices
///   [[a, b, c], [0, a, d], [0, 0, a]]
/// with basis I, U = E12, V = E13, W = E23 (coordinates in that order).
std::vector<Mat> example_basis();
FiniteAlgebra build_example_algebra();

/// X = W; delta = R_X (A -> A X), tau = L_X (A -> X A).
struct ExampleMaps {
    OpMap delta;
    OpMap tau;
};
ExampleMaps example_maps();

/// Exact verification that AB = 0 implies delta(A) B + A tau(B) = 0 on the
/// example algebra, split by the scalar parts a, a' of A and B:
///  - a = a' = 0: the bilinear value vanishes on the 9 basis pairs of the
///    radical J = span{U, V, W}, hence on all of J x J;
///  - a != 0 (or a' != 0): J^3 = 0 on all 27 basis triples, so the element is
///    invertible and the other factor is 0; the right annihilator is checked
///    to be trivial on a grid of such elements as well;
///  - a grid sweep over parameters in {-1, 0, 1}^4 for both factors, filtered
///    to AB = 0.
/// Throws TheoremViolation on any nonzero value.
struct ExampleZReport {
    std::size_t radical_pairs = 0;
    std::size_t cube_triples = 0;
    std::size_t invertible_checked = 0;
    std::size_t grid_pairs = 0;
    std::size_t grid_zero_product = 0;
};
ExampleZReport verify_example_z();

/// The linear system gamma(e_i e_j) = delta(e_i) e_j + e_i tau(e_j) in the
/// d^2 entries of gamma, optionally only over pairs inside `units`.
struct CompletionSystem {
    std::size_t unknowns = 0;
    std::size_t equations = 0;
    std::size_t rank = 0;
    std::size_t augmented_rank = 0;
    std::optional<OpMap> gamma;

    bool feasible() const { return gamma.has_value(); }
    std::size_t rank_gap() const { return augmented_rank - rank; }
};
CompletionSystem solve_completion(const FiniteAlgebra& alg, const OpMap& delta, const OpMap& tau,
                                  const std::vector<std::size_t>& units = {});

struct NoGammaCertificate {
    CompletionSystem full;
    /// gamma(U) forced by A = I: delta(I) U + tau(U) = 2 W U.
    Vec forced_by_left_identity;
    /// gamma(U) forced by B = I: delta(U) + U tau(I) = 2 U W.
    Vec forced_by_right_identity;
    /// The same system restricted to span{I, V}.
    CompletionSystem subalgebra;
};
/// Throws TheoremViolation if the full system is feasible, the forced values
/// agree, or the span{I, V} subsystem is infeasible.
NoGammaCertificate show_no_gamma();

struct ContrastCase {
    std::string label;
    OpMap delta;
    OpMap tau;
    ZReport z;
    std::size_t rst_rank = 0;
    std::size_t rst_augmented_rank = 0;
    std::optional<ImplementingTriple> extracted;
    bool ternary_verified = false;
};

/// Runs the pipeline on nest [1,2] with X = E12 for the one-sided maps
/// (R_X, L_X) and (R_X, -L_X), and on the example algebra for (R_W, L_W).
std::vector<ContrastCase> nest_contrast();

struct AlgebraCensus {
    std::size_t dim = 0;
    std::size_t center_dim = 0;
    std::size_t radical_dim = 0;
    std::size_t semisimple_dim() const { return dim - radical_dim; }
};
AlgebraCensus census(const FiniteAlgebra& alg);

struct NestCensusEntry {
    NestSpec spec;
    AlgebraCensus counts;
};
/// Every nest with ambient dimension 2..max_n.
std::vector<NestCensusEntry> nest_census(std::size_t max_n);

}  // namespace ternary

#endif  // TERNARY_COUNTEREXAMPLE_HPP
