#include "ternary/algebra.hpp"

#include <map>
#include <mutex>

#include "ternary/errors.hpp"

namespace ternary {

struct FiniteAlgebra::Cache {
    std::mutex mutex;
    std::map<std::string, std::unique_ptr<Elimination>> systems;
};

FiniteAlgebra::FiniteAlgebra(std::size_t dim, std::vector<SparseRow> products, Vec unity,
                             std::vector<std::string> labels)
    : dim_(dim),
      products_(std::move(products)),
      unity_(std::move(unity)),
      labels_(std::move(labels)),
      cache_(std::make_shared<Cache>()) {
    if (products_.size() != dim_ * dim_) throw InputError("structure table must have dim^2 entries");
    if (unity_.size() != dim_) throw InputError("unity has wrong length");
    if (labels_.size() != dim_) throw InputError("label count differs from dimension");
}

FiniteAlgebra FiniteAlgebra::from_matrix_basis(const std::vector<Mat>& basis, std::vector<std::string> labels) {
    if (basis.empty()) throw InputError("empty basis");
    const std::size_t n = basis.front().rows();
    const std::size_t d = basis.size();
    auto vectorize = [n](const Mat& m) {
        Vec v;
        v.reserve(n * n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) v.push_back(m(r, c));
        }
        return v;
    };
    std::vector<Vec> columns;
    for (const auto& m : basis) {
        if (m.rows() != n || m.cols() != n) throw InputError("basis matrices must share one square shape");
        columns.push_back(vectorize(m));
    }
    const Elimination span(Mat::from_columns(columns, n * n));
    if (span.rank() != d) throw InputError("basis matrices are linearly dependent");

    auto coordinates = [&](const Mat& m, const char* what) {
        auto coords = span.particular(vectorize(m));
        if (!coords) throw InputError(std::string(what) + " lies outside the span of the basis");
        return std::move(*coords);
    };
    std::vector<SparseRow> products;
    products.reserve(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) products.push_back(make_sparse_row(coordinates(basis[i] * basis[j], "product")));
    }
    Vec unity = coordinates(Mat::identity(n), "identity");
    return FiniteAlgebra(d, std::move(products), std::move(unity), std::move(labels));
}

Vec FiniteAlgebra::multiply(const Vec& a, const Vec& b) const {
    Vec out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (b[j].is_zero()) continue;
            const auto& prod = product(i, j);
            if (prod.empty()) continue;
            const Scalar ab = a[i] * b[j];
            for (const auto& e : prod) out[e.col] += e.value.is_one() ? ab : ab * e.value;
        }
    }
    return out;
}

Vec FiniteAlgebra::unit_times(std::size_t i, const Vec& b) const {
    Vec out(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        if (b[j].is_zero()) continue;
        for (const auto& e : product(i, j)) out[e.col] += e.value.is_one() ? b[j] : b[j] * e.value;
    }
    return out;
}

Vec FiniteAlgebra::times_unit(const Vec& a, std::size_t j) const {
    Vec out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (a[i].is_zero()) continue;
        for (const auto& e : product(i, j)) out[e.col] += e.value.is_one() ? a[i] : a[i] * e.value;
    }
    return out;
}

Mat FiniteAlgebra::left_rep(const Vec& a) const {
    Mat out(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) out.set_column(j, times_unit(a, j));
    return out;
}

Mat FiniteAlgebra::right_rep(const Vec& a) const {
    Mat out(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) out.set_column(j, unit_times(j, a));
    return out;
}

bool FiniteAlgebra::is_associative() const {
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            Vec ij(dim_);
            for (const auto& e : product(i, j)) ij[e.col] = e.value;
            for (std::size_t k = 0; k < dim_; ++k) {
                Vec jk(dim_);
                for (const auto& e : product(j, k)) jk[e.col] = e.value;
                if (times_unit(ij, k) != unit_times(i, jk)) return false;
            }
        }
    }
    return true;
}

bool FiniteAlgebra::is_unital() const {
    for (std::size_t i = 0; i < dim_; ++i) {
        if (multiply(unity_, unit(i)) != unit(i) || multiply(unit(i), unity_) != unit(i)) return false;
    }
    return true;
}

const Elimination& FiniteAlgebra::cached_elimination(const std::string& key,
                                                     const std::function<SparseMatrix()>& build) const {
    {
        std::lock_guard lock(cache_->mutex);
        auto it = cache_->systems.find(key);
        if (it != cache_->systems.end()) return *it->second;
    }
    auto built = std::make_unique<Elimination>(build());
    std::lock_guard lock(cache_->mutex);
    auto [it, inserted] = cache_->systems.emplace(key, std::move(built));
    return *it->second;
}

std::vector<Vec> center(const FiniteAlgebra& alg) {
    const std::size_t d = alg.dim();
    const auto& system = alg.cached_elimination("commutator", [&] {
        // rows: coordinate k of C e_j - e_j C, for every unit j
        SparseMatrix m(d);
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<std::vector<SparseEntry>> rows(d);
            for (std::size_t c = 0; c < d; ++c) {
                for (const auto& e : alg.product(c, j)) rows[e.col].push_back({c, e.value});
                for (const auto& e : alg.product(j, c)) rows[e.col].push_back({c, -e.value});
            }
            for (auto& r : rows) m.add_row(std::move(r));
        }
        return m;
    });
    return system.nullspace();
}

bool is_central(const FiniteAlgebra& alg, const Vec& c) {
    for (std::size_t j = 0; j < alg.dim(); ++j) {
        if (alg.times_unit(c, j) != alg.unit_times(j, c)) return false;
    }
    return true;
}

std::vector<Vec> right_annihilator(const FiniteAlgebra& alg, const Vec& a) { return nullspace(alg.left_rep(a)); }

std::vector<Vec> left_annihilator(const FiniteAlgebra& alg, const Vec& a) { return nullspace(alg.right_rep(a)); }

std::vector<Vec> radical(const FiniteAlgebra& alg) {
    const std::size_t d = alg.dim();
    Vec trace(d);  // tr(L_{e_k})
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t m = 0; m < d; ++m) {
            for (const auto& e : alg.product(k, m)) {
                if (e.col == m) trace[k] += e.value;
            }
        }
    }
    // row j, column i: tr(L_{e_i e_j})
    Mat form(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (const auto& e : alg.product(i, j)) form(j, i) += e.value * trace[e.col];
        }
    }
    return nullspace(form);
}

Vec combine(const std::vector<Vec>& vectors, const Vec& coeffs, std::size_t dim) {
    if (vectors.size() != coeffs.size()) throw InputError("coefficient count mismatch");
    Vec out(dim);
    for (std::size_t k = 0; k < vectors.size(); ++k) axpy(out, coeffs[k], vectors[k]);
    return out;
}

}  // namespace ternary
