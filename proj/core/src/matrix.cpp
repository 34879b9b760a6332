#include "ternary/matrix.hpp"

#include <istream>
#include <sstream>

#include "ternary/errors.hpp"

namespace ternary {

Vec zero_vec(std::size_t size) { return Vec(size); }

Vec unit_vec(std::size_t size, std::size_t index) {
    Vec v(size);
    v.at(index) = 1;
    return v;
}

bool is_zero(std::span<const Scalar> v) {
    for (const auto& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

std::size_t nonzero_count(std::span<const Scalar> v) {
    std::size_t count = 0;
    for (const auto& x : v) count += x.is_zero() ? 0 : 1;
    return count;
}

Vec& operator+=(Vec& lhs, const Vec& rhs) {
    if (lhs.size() != rhs.size()) throw InputError("vector size mismatch");
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (!rhs[i].is_zero()) lhs[i] += rhs[i];
    }
    return lhs;
}

Vec& operator-=(Vec& lhs, const Vec& rhs) {
    if (lhs.size() != rhs.size()) throw InputError("vector size mismatch");
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (!rhs[i].is_zero()) lhs[i] -= rhs[i];
    }
    return lhs;
}

Vec operator+(Vec lhs, const Vec& rhs) { return lhs += rhs; }
Vec operator-(Vec lhs, const Vec& rhs) { return lhs -= rhs; }

Vec operator-(Vec v) {
    for (auto& x : v) x = -x;
    return v;
}

Vec operator*(const Scalar& factor, Vec v) {
    for (auto& x : v) {
        if (!x.is_zero()) x *= factor;
    }
    return v;
}

void axpy(Vec& lhs, const Scalar& factor, const Vec& rhs) {
    if (lhs.size() != rhs.size()) throw InputError("vector size mismatch");
    if (factor.is_zero()) return;
    const Scalar neg = -factor;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (!rhs[i].is_zero()) lhs[i].subtract_product(neg, rhs[i]);
    }
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return {};
    Mat m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw InputError("ragged matrix rows");
        for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Mat Mat::from_columns(const std::vector<Vec>& columns, std::size_t rows) {
    Mat m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
    return m;
}

Vec Mat::column(std::size_t c) const {
    Vec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

void Mat::set_column(std::size_t c, const Vec& values) {
    if (values.size() != rows_) throw InputError("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

Mat Mat::transpose() const {
    Mat out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    }
    return out;
}

bool Mat::is_zero() const { return ternary::is_zero(data_); }

Mat& Mat::operator+=(const Mat& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw InputError("matrix shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        if (!other.data_[i].is_zero()) data_[i] += other.data_[i];
    }
    return *this;
}

Mat& Mat::operator-=(const Mat& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw InputError("matrix shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        if (!other.data_[i].is_zero()) data_[i] -= other.data_[i];
    }
    return *this;
}

Mat operator*(const Mat& lhs, const Mat& rhs) {
    if (lhs.cols_ != rhs.rows_) throw InputError("matrix product shape mismatch");
    Mat out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            const Scalar& a = lhs(i, k);
            if (a.is_zero()) continue;
            const Scalar neg = -a;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Scalar& b = rhs(k, j);
                if (!b.is_zero()) out(i, j).subtract_product(neg, b);
            }
        }
    }
    return out;
}

Vec operator*(const Mat& lhs, const Vec& rhs) {
    if (lhs.cols_ != rhs.size()) throw InputError("matrix-vector shape mismatch");
    Vec out(lhs.rows_);
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
        if (rhs[k].is_zero()) continue;
        const Scalar neg = -rhs[k];
        for (std::size_t i = 0; i < lhs.rows_; ++i) {
            const Scalar& a = lhs(i, k);
            if (!a.is_zero()) out[i].subtract_product(a, neg);
        }
    }
    return out;
}

Mat operator*(const Scalar& factor, Mat m) {
    for (auto& x : m.data_) {
        if (!x.is_zero()) x *= factor;
    }
    return m;
}

Mat parse_matrix(std::istream& in) {
    std::vector<Vec> rows;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream tokens(line);
        Vec row;
        std::string token;
        while (tokens >> token) row.push_back(Scalar::parse(token));
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw InputError("ragged matrix: row " + std::to_string(rows.size() + 1) + " has " +
                             std::to_string(row.size()) + " entries, expected " +
                             std::to_string(rows.front().size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw InputError("empty matrix text");
    return Mat::from_rows(rows);
}

Mat parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

std::string format_matrix(const Mat& m) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c > 0) out += ' ';
            out += m(r, c).str();
        }
        out += '\n';
    }
    return out;
}

std::vector<std::string> to_strings(std::span<const Scalar> v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

Vec from_strings(const std::vector<std::string>& text) {
    Vec out;
    out.reserve(text.size());
    for (const auto& t : text) out.push_back(Scalar::parse(t));
    return out;
}

}  // namespace ternary
