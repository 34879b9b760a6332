#include "ternary/elimination.hpp"

#include <algorithm>

#include "ternary/errors.hpp"

namespace ternary {

namespace {

// a - factor * b, both sorted by column.
SparseRow subtract_scaled(const SparseRow& a, const Scalar& factor, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].col < a[i].col) {
            out.push_back({b[j].col, -(factor * b[j].value)});
            ++j;
        } else {
            Scalar value = a[i].value;
            value.subtract_product(factor, b[j].value);
            if (!value.is_zero()) out.push_back({a[i].col, std::move(value)});
            ++i;
            ++j;
        }
    }
    return out;
}

const Scalar* find_entry(const SparseRow& row, std::size_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const SparseEntry& e, std::size_t c) { return e.col < c; });
    return (it != row.end() && it->col == col) ? &it->value : nullptr;
}

}  // namespace

SparseRow make_sparse_row(std::span<const Scalar> dense) {
    SparseRow row;
    for (std::size_t c = 0; c < dense.size(); ++c) {
        if (!dense[c].is_zero()) row.push_back({c, dense[c]});
    }
    return row;
}

SparseMatrix SparseMatrix::from_dense(const Mat& m) {
    SparseMatrix out(m.cols());
    out.rows_.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) out.rows_.push_back(make_sparse_row(m.row(r)));
    return out;
}

void SparseMatrix::add_row(std::vector<SparseEntry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
    SparseRow row;
    row.reserve(entries.size());
    for (auto& e : entries) {
        if (e.col >= cols_) throw InputError("sparse entry column out of range");
        if (!row.empty() && row.back().col == e.col) {
            row.back().value += e.value;
        } else {
            row.push_back(std::move(e));
        }
    }
    std::erase_if(row, [](const SparseEntry& e) { return e.value.is_zero(); });
    rows_.push_back(std::move(row));
}

Mat SparseMatrix::to_dense() const {
    Mat out(rows_.size(), cols_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (const auto& e : rows_[r]) out(r, e.col) = e.value;
    }
    return out;
}

Elimination::Elimination(const Mat& m) : Elimination(SparseMatrix::from_dense(m)) {}

Elimination::Elimination(const SparseMatrix& m)
    : rows_(m.rows()), cols_(m.cols()), pivot_of_col_(m.cols(), -1) {
    for (std::size_t r = 0; r < m.rows(); ++r) absorb(r, m.row(r));
}

void Elimination::absorb(std::size_t slot, SparseRow row) {
    std::vector<std::pair<std::size_t, Scalar>> hits;
    for (const auto& e : row) {
        if (pivot_of_col_[e.col] >= 0) hits.emplace_back(static_cast<std::size_t>(pivot_of_col_[e.col]), e.value);
    }
    for (auto& [k, factor] : hits) {
        row = subtract_scaled(row, factor, pivots_[k].row);
        ops_.push_back({Op::subtract, slot, pivots_[k].slot, std::move(factor)});
    }
    if (row.empty()) {
        zero_slots_.push_back(slot);
        return;
    }

    const std::size_t col = row.front().col;
    if (!row.front().value.is_one()) {
        const Scalar inverse = Scalar(1) / row.front().value;
        for (auto& e : row) e.value *= inverse;
        ops_.push_back({Op::scale, slot, slot, inverse});
    }
    for (auto& pivot : pivots_) {
        const Scalar* hit = find_entry(pivot.row, col);
        if (hit == nullptr) continue;
        const Scalar factor = *hit;
        pivot.row = subtract_scaled(pivot.row, factor, row);
        ops_.push_back({Op::subtract, pivot.slot, slot, factor});
    }
    pivot_of_col_[col] = static_cast<long>(pivots_.size());
    pivots_.push_back({col, slot, std::move(row)});
}

std::vector<Elimination::Pivot> Elimination::sorted_pivots() const {
    auto sorted = pivots_;
    std::sort(sorted.begin(), sorted.end(), [](const Pivot& a, const Pivot& b) { return a.col < b.col; });
    return sorted;
}

std::vector<std::size_t> Elimination::pivot_columns() const {
    std::vector<std::size_t> cols;
    cols.reserve(pivots_.size());
    for (const auto& p : pivots_) cols.push_back(p.col);
    std::sort(cols.begin(), cols.end());
    return cols;
}

Mat Elimination::reduced() const {
    Mat out(rows_, cols_);
    const auto sorted = sorted_pivots();
    for (std::size_t r = 0; r < sorted.size(); ++r) {
        for (const auto& e : sorted[r].row) out(r, e.col) = e.value;
    }
    return out;
}

std::vector<Vec> Elimination::nullspace() const {
    std::vector<long> free_index(cols_, -1);
    std::vector<Vec> basis;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (pivot_of_col_[c] < 0) {
            free_index[c] = static_cast<long>(basis.size());
            basis.push_back(unit_vec(cols_, c));
        }
    }
    for (const auto& pivot : pivots_) {
        for (const auto& e : pivot.row) {
            if (e.col == pivot.col) continue;
            basis[static_cast<std::size_t>(free_index[e.col])][pivot.col] = -e.value;
        }
    }
    return basis;
}

std::optional<Vec> Elimination::particular(const Vec& rhs) const {
    if (rhs.size() != rows_) {
        throw InputError("right-hand side has length " + std::to_string(rhs.size()) + ", system has " +
                         std::to_string(rows_) + " rows");
    }
    Vec work = rhs;
    for (const auto& op : ops_) {
        if (op.kind == Op::scale) {
            if (!work[op.target].is_zero()) work[op.target] *= op.factor;
        } else if (!work[op.source].is_zero()) {
            work[op.target].subtract_product(op.factor, work[op.source]);
        }
    }
    for (std::size_t s : zero_slots_) {
        if (!work[s].is_zero()) return std::nullopt;
    }
    Vec x(cols_);
    for (const auto& pivot : pivots_) x[pivot.col] = std::move(work[pivot.slot]);
    return x;
}

SolutionSet Elimination::solve(const Vec& rhs) const {
    SolutionSet out;
    out.particular = particular(rhs);
    out.rank = rank();
    out.augmented_rank = out.rank + (out.particular ? 0 : 1);
    out.homogeneous_basis = nullspace();
    return out;
}

RrefResult rref(const Mat& m) {
    Elimination e(m);
    return {e.reduced(), e.pivot_columns()};
}

std::vector<Vec> nullspace(const Mat& m) { return Elimination(m).nullspace(); }

std::size_t rank(const Mat& m) { return Elimination(m).rank(); }

SolutionSet solve_affine(const Mat& m, const Vec& rhs) {
    if (rhs.size() != m.rows()) {
        throw InputError("solve_affine: rhs length " + std::to_string(rhs.size()) + " != rows " +
                         std::to_string(m.rows()));
    }
    return Elimination(m).solve(rhs);
}

}  // namespace ternary
