#ifndef TERNARY_TESTS_SUPPORT_HPP
#define TERNARY_TESTS_SUPPORT_HPP

// Dense n x n oracles. Nothing here goes through structure constants or the
// elimination kernel: the pattern is enumerated from the dims directly and
// products are naive triple loops.

#include <utility>
#include <vector>

#include "ternary/nest.hpp"
#include "ternary/opmap.hpp"
#include "ternary/random.hpp"

namespace oracle {

using ternary::Mat;
using ternary::Scalar;
using ternary::Vec;

inline std::size_t block(const std::vector<std::size_t>& dims, std::size_t p) {
    std::size_t b = 0;
    while (p >= dims[b]) ++b;
    return b;
}

inline std::vector<std::pair<std::size_t, std::size_t>> positions(const std::vector<std::size_t>& dims) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t n = dims.back();
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            if (block(dims, q) >= block(dims, p)) out.emplace_back(p, q);
        }
    }
    return out;
}

struct Dense {
    std::vector<std::size_t> dims;
    std::vector<std::pair<std::size_t, std::size_t>> pos;

    explicit Dense(std::vector<std::size_t> d) : dims(std::move(d)), pos(positions(dims)) {}

    std::size_t n() const { return dims.back(); }
    std::size_t d() const { return pos.size(); }

    Mat mat(const Vec& coords) const {
        Mat m(n(), n());
        for (std::size_t k = 0; k < pos.size(); ++k) m(pos[k].first, pos[k].second) = coords[k];
        return m;
    }

    Vec vec(const Mat& m) const {
        Vec out;
        for (const auto& [p, q] : pos) out.push_back(m(p, q));
        return out;
    }

    bool in_pattern(const Mat& m) const {
        for (std::size_t p = 0; p < n(); ++p) {
            for (std::size_t q = 0; q < n(); ++q) {
                if (!m(p, q).is_zero() && block(dims, q) < block(dims, p)) return false;
            }
        }
        return true;
    }

    static Mat mul(const Mat& a, const Mat& b) {
        Mat out(a.rows(), b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t j = 0; j < b.cols(); ++j) {
                Scalar s;
                for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
                out(i, j) = s;
            }
        }
        return out;
    }

    static Mat add(const Mat& a, const Mat& b) {
        Mat out(a.rows(), a.cols());
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
        }
        return out;
    }

    static Mat sub(const Mat& a, const Mat& b) {
        Mat out(a.rows(), a.cols());
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
        }
        return out;
    }

    static bool zero(const Mat& a) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t j = 0; j < a.cols(); ++j) {
                if (!a(i, j).is_zero()) return false;
            }
        }
        return true;
    }

    Mat unit(std::size_t k) const {
        Mat m(n(), n());
        m(pos[k].first, pos[k].second) = Scalar(1);
        return m;
    }

    Mat identity() const {
        Mat m(n(), n());
        for (std::size_t i = 0; i < n(); ++i) m(i, i) = Scalar(1);
        return m;
    }

    // coordinate image of a map given as a dense function, column j = f(E_j)
    template <typename F>
    ternary::OpMap map(F&& f) const {
        Mat m(d(), d());
        for (std::size_t j = 0; j < d(); ++j) {
            const Vec col = vec(f(unit(j)));
            for (std::size_t k = 0; k < d(); ++k) m(k, j) = col[k];
        }
        return ternary::OpMap(std::move(m));
    }

    Mat apply(const ternary::OpMap& f, const Mat& a) const { return mat(f(vec(a))); }
};

// Gauss elimination with naive loops, for ranks in test code only.
inline std::size_t rank(Mat m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Scalar f = m(i, c) / m(r, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

inline const std::vector<std::vector<std::size_t>>& tested_nests() {
    static const std::vector<std::vector<std::size_t>> nests{{1, 2}, {2}, {1, 2, 3}, {1, 3}, {2, 4}, {1, 2, 4}, {1, 2, 3, 6}};
    return nests;
}

}  // namespace oracle

#endif  // TERNARY_TESTS_SUPPORT_HPP
