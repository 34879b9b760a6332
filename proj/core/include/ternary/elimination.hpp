#ifndef TERNARY_ELIMINATION_HPP
#define TERNARY_ELIMINATION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "ternary/matrix.hpp"

namespace ternary {

struct SparseEntry {
    std::size_t col;
    Scalar value;
};

/// Entries sorted by strictly increasing column, no explicit zeros.
using SparseRow = std::vector<SparseEntry>;

SparseRow make_sparse_row(std::span<const Scalar> dense);

/// Row-list sparse matrix used to assemble the large structured systems
/// (derivation identities, implementing-triple systems) before elimination.
class SparseMatrix {
public:
    explicit SparseMatrix(std::size_t cols) : cols_(cols) {}
    static SparseMatrix from_dense(const Mat& m);

    /// Accepts unsorted entries with repeated columns; they are summed and
    /// zeros dropped. Empty rows are still recorded (they matter for rhs
    /// consistency).
    void add_row(std::vector<SparseEntry> entries);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const SparseRow& row(std::size_t r) const { return rows_[r]; }
    Mat to_dense() const;

private:
    std::size_t cols_;
    std::vector<SparseRow> rows_;
};

/// Solutions of M x = b. `particular` is absent exactly when b is outside
/// the column space of M; then augmented_rank == rank + 1.
struct SolutionSet {
    std::optional<Vec> particular;
    std::vector<Vec> homogeneous_basis;
    std::size_t rank = 0;
    std::size_t augmented_rank = 0;

    bool feasible() const { return particular.has_value(); }
};

struct RrefResult {
    Mat reduced;
    std::vector<std::size_t> pivot_columns;
};

/// Gauss-Jordan elimination over Q[i] that records its row operations so the
/// same reduction can be replayed on any number of right-hand sides.
///
/// Rows are absorbed one at a time into a fully reduced pivot set: an incoming
/// row is cleared against existing pivots, and if anything survives its
/// leading column becomes a new pivot that is then cleared from the older
/// pivot rows. The final pivot rows, sorted by pivot column, are the unique
/// reduced row echelon form. Zero entries are never touched, which keeps the
/// structured systems in this library cheap.
class Elimination {
public:
    explicit Elimination(const Mat& m);
    explicit Elimination(const SparseMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return pivots_.size(); }

    /// Strictly increasing.
    std::vector<std::size_t> pivot_columns() const;
    Mat reduced() const;
    /// One basis vector per free column, in increasing free-column order.
    std::vector<Vec> nullspace() const;
    SolutionSet solve(const Vec& rhs) const;
    /// Particular solution with every free variable set to zero, or nullopt
    /// when the system is inconsistent. Skips the nullspace computation.
    std::optional<Vec> particular(const Vec& rhs) const;

private:
    struct Op {
        enum Kind { subtract, scale } kind;
        std::size_t target;
        std::size_t source;
        Scalar factor;
    };
    struct Pivot {
        std::size_t col;
        std::size_t slot;  // original row index
        SparseRow row;
    };

    void absorb(std::size_t slot, SparseRow row);
    std::vector<Pivot> sorted_pivots() const;

    std::size_t rows_;
    std::size_t cols_;
    std::vector<Pivot> pivots_;
    std::vector<long> pivot_of_col_;
    std::vector<std::size_t> zero_slots_;
    std::vector<Op> ops_;
};

RrefResult rref(const Mat& m);
std::vector<Vec> nullspace(const Mat& m);
std::size_t rank(const Mat& m);
/// Throws InputError when rhs length differs from m.rows().
SolutionSet solve_affine(const Mat& m, const Vec& rhs);

}  // namespace ternary

#endif  // TERNARY_ELIMINATION_HPP
