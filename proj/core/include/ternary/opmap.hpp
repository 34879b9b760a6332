#ifndef TERNARY_OPMAP_HPP
#define TERNARY_OPMAP_HPP

#include <functional>

#include "ternary/algebra.hpp"

namespace ternary {

/// Linear map on an algebra, stored as a d x d matrix whose column j is the
/// image of basis unit j.
class OpMap {
public:
    OpMap() = default;
    explicit OpMap(Mat matrix);

    static OpMap zero(std::size_t dim) { return OpMap(Mat(dim, dim)); }
    static OpMap identity(std::size_t dim) { return OpMap(Mat::identity(dim)); }
    /// Column j := f(e_j).
    static OpMap from_function(std::size_t dim, const std::function<Vec(const Vec&)>& f);
    /// X -> a X
    static OpMap left_mult(const FiniteAlgebra& alg, const Vec& a) { return OpMap(alg.left_rep(a)); }
    /// X -> X a
    static OpMap right_mult(const FiniteAlgebra& alg, const Vec& a) { return OpMap(alg.right_rep(a)); }

    std::size_t dim() const { return matrix_.rows(); }
    const Mat& matrix() const { return matrix_; }

    Vec apply(const Vec& x) const { return matrix_ * x; }
    Vec operator()(const Vec& x) const { return apply(x); }
    Vec of_unit(std::size_t j) const { return matrix_.column(j); }

    OpMap& operator+=(const OpMap& other) {
        matrix_ += other.matrix_;
        return *this;
    }
    OpMap& operator-=(const OpMap& other) {
        matrix_ -= other.matrix_;
        return *this;
    }
    friend OpMap operator+(OpMap lhs, const OpMap& rhs) { return lhs += rhs; }
    friend OpMap operator-(OpMap lhs, const OpMap& rhs) { return lhs -= rhs; }
    friend OpMap operator*(const Scalar& factor, const OpMap& map) { return OpMap(factor * map.matrix_); }
    friend bool operator==(const OpMap& lhs, const OpMap& rhs) { return lhs.matrix_ == rhs.matrix_; }
    friend bool operator!=(const OpMap& lhs, const OpMap& rhs) { return !(lhs == rhs); }

private:
    Mat matrix_;
};

}  // namespace ternary

#endif  // TERNARY_OPMAP_HPP
