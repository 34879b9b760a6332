#ifndef TERNARY_ALGEBRA_HPP
#define TERNARY_ALGEBRA_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ternary/elimination.hpp"
#include "ternary/matrix.hpp"

namespace ternary {

enum class Side { left, right };

/// A finite-dimensional associative unital algebra given by structure
/// constants over an ordered basis e_0..e_{d-1}. Elements are coordinate
/// vectors (Vec) of length d.
///
/// Copies share a cache of eliminated linear systems; the algebra itself is
/// immutable, so the cache only ever memoizes pure functions of it.
class FiniteAlgebra {
public:
    /// `products[i * dim + j]` is e_i * e_j in coordinates.
    FiniteAlgebra(std::size_t dim, std::vector<SparseRow> products, Vec unity, std::vector<std::string> labels);

    /// Builds structure constants from a spanning set of linearly independent
    /// matrices closed under multiplication. Throws InputError if a product
    /// leaves the span or the identity is not in it.
    static FiniteAlgebra from_matrix_basis(const std::vector<Mat>& basis, std::vector<std::string> labels);

    std::size_t dim() const { return dim_; }
    const Vec& unity() const { return unity_; }
    Vec unit(std::size_t i) const { return unit_vec(dim_, i); }
    Vec zero() const { return zero_vec(dim_); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }

    const SparseRow& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }

    Vec multiply(const Vec& a, const Vec& b) const;
    /// e_i * b
    Vec unit_times(std::size_t i, const Vec& b) const;
    /// a * e_j
    Vec times_unit(const Vec& a, std::size_t j) const;

    /// Matrix of X -> a X acting on coordinates.
    Mat left_rep(const Vec& a) const;
    /// Matrix of X -> X a acting on coordinates.
    Mat right_rep(const Vec& a) const;
    Mat rep(Side side, const Vec& a) const { return side == Side::left ? left_rep(a) : right_rep(a); }

    /// (e_i e_j) e_k == e_i (e_j e_k) on every basis triple.
    bool is_associative() const;
    /// unity * e_i == e_i == e_i * unity on every basis unit.
    bool is_unital() const;

    /// Memoized elimination of a system that depends only on the algebra.
    /// `key` must identify the builder uniquely.
    const Elimination& cached_elimination(const std::string& key, const std::function<SparseMatrix()>& build) const;

private:
    struct Cache;

    std::size_t dim_;
    std::vector<SparseRow> products_;
    Vec unity_;
    std::vector<std::string> labels_;
    std::shared_ptr<Cache> cache_;
};

/// Basis of {C : C e_i = e_i C for every basis unit}, from the stacked
/// commutator system.
std::vector<Vec> center(const FiniteAlgebra& alg);
bool is_central(const FiniteAlgebra& alg, const Vec& c);

/// Basis of {B : A B = 0}.
std::vector<Vec> right_annihilator(const FiniteAlgebra& alg, const Vec& a);
/// Basis of {B : B A = 0}.
std::vector<Vec> left_annihilator(const FiniteAlgebra& alg, const Vec& a);

/// Jacobson radical via the trace form: in characteristic zero the radical
/// is {x : tr(L_{x y}) = 0 for all y}.
std::vector<Vec> radical(const FiniteAlgebra& alg);

/// Linear combination sum_k coeffs[k] * vectors[k].
Vec combine(const std::vector<Vec>& vectors, const Vec& coeffs, std::size_t dim);

}  // namespace ternary

#endif  // TERNARY_ALGEBRA_HPP
