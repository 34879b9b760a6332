#ifndef TERNARY_NEST_HPP
#define TERNARY_NEST_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ternary/algebra.hpp"
#include "ternary/random.hpp"

namespace ternary {

/// A finite nest 0 = N_0 < N_1 < ... < N_k = X given by dim N_1 < ... < dim N_k.
class NestSpec {
public:
    /// Throws InputError unless dims is strictly increasing, positive, and
    /// ends at an ambient dimension >= 2.
    explicit NestSpec(std::vector<std::size_t> dims);

    /// "1,2,4"
    static NestSpec parse(const std::string& text);

    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t ambient() const { return dims_.back(); }
    std::vector<std::size_t> block_sizes() const;
    /// Block index (0-based) containing coordinate p.
    std::size_t block_of(std::size_t p) const;
    std::string str() const;

    friend bool operator==(const NestSpec&, const NestSpec&) = default;

private:
    std::vector<std::size_t> dims_;
};

struct WitnessPair {
    Vec a;
    Vec b;
};

/// The nest algebra of a NestSpec: block upper-triangular n x n matrices.
/// Basis units are the allowed matrix units E_pq, ordered lexicographically
/// by (p, q); labels are 1-based ("E12").
class NestAlgebra {
public:
    explicit NestAlgebra(NestSpec spec);

    const NestSpec& spec() const { return spec_; }
    std::size_t n() const { return spec_.ambient(); }
    std::size_t dim() const { return positions_.size(); }
    const std::vector<std::pair<std::size_t, std::size_t>>& positions() const { return positions_; }
    std::optional<std::size_t> slot(std::size_t p, std::size_t q) const;
    bool allowed(std::size_t p, std::size_t q) const { return slot(p, q).has_value(); }

    const FiniteAlgebra& algebra() const { return algebra_; }

    /// Matrix unit E_pq as an element; throws MembershipError if not allowed.
    Vec unit(std::size_t p, std::size_t q) const;
    Mat to_dense(const Vec& element) const;
    /// Throws MembershipError if the matrix has support outside the pattern.
    Vec from_dense(const Mat& m) const;

    /// Diagonal units E_pp, then E_pp + E_pq for every allowed off-diagonal
    /// (p, q), then the nest projections Q_1..Q_k (Q_k = I). Spans the algebra.
    std::vector<Vec> idempotent_generators() const;
    /// Orthogonal projection onto the first dims[i] coordinates.
    Vec nest_projection(std::size_t i) const;

    std::vector<Vec> center() const { return ternary::center(algebra_); }
    std::vector<Vec> right_annihilator(const Vec& a) const { return ternary::right_annihilator(algebra_, a); }

private:
    NestSpec spec_;
    std::vector<std::pair<std::size_t, std::size_t>> positions_;
    std::vector<long> slot_;
    FiniteAlgebra algebra_;
};

/// Matrix of L_A (side = left) or R_A (side = right) on the algebra's
/// coordinates, for a dense n x n matrix A. Throws MembershipError if A is
/// not in the algebra.
Mat mult_rep(Side side, const Mat& a, const NestAlgebra& nest);

/// Zero-product pairs for a finite algebra, enumerated lazily.
///
/// Order: unit pairs (e_i, e_j) with e_i e_j = 0; then the canonical family
/// (X P, (I - P) Y) over idempotents P from the supplied list and their
/// complements I - P, and basis units X, Y (pairs with a zero side are
/// skipped); then seeded random pairs A, B with B drawn from the right
/// annihilator of a sparse random A.
class ZeroProductSampler {
public:
    ZeroProductSampler(const FiniteAlgebra& alg, std::vector<Vec> idempotents);

    std::size_t unit_pair_count() const { return unit_pairs_.size(); }
    /// Upper bound on canonical indices (includes skipped zero pairs).
    std::size_t canonical_count() const { return complements_.size() * alg_.dim() * alg_.dim(); }

    /// Visits unit pairs then canonical pairs until the visitor returns false.
    /// Returns false if stopped early.
    template <typename Visitor>
    bool visit_structured(Visitor&& visit) const;

    /// Draws one random zero-product pair, or nullopt if `attempts` sparse
    /// draws all had trivial right annihilators.
    std::optional<WitnessPair> random_pair(SplitMix64& rng, Field field, int attempts = 16) const;

private:
    std::optional<WitnessPair> canonical(std::size_t index) const;

    const FiniteAlgebra& alg_;
    std::vector<std::pair<std::size_t, std::size_t>> unit_pairs_;
    std::vector<Vec> complements_;  // P_0, I - P_0, P_1, I - P_1, ...
};

/// Materialized list: every unit pair, every canonical pair, and `count`
/// seeded random pairs. Deterministic under seed.
std::vector<WitnessPair> sample_zero_product_pairs(const NestAlgebra& nest, std::size_t count, std::uint64_t seed,
                                                   Field field = Field::rational);

template <typename Visitor>
bool ZeroProductSampler::visit_structured(Visitor&& visit) const {
    for (const auto& [i, j] : unit_pairs_) {
        if (!visit(WitnessPair{alg_.unit(i), alg_.unit(j)})) return false;
    }
    const std::size_t total = canonical_count();
    for (std::size_t index = 0; index < total; ++index) {
        auto pair = canonical(index);
        if (pair && !visit(*pair)) return false;
    }
    return true;
}

}  // namespace ternary

#endif  // TERNARY_NEST_HPP
