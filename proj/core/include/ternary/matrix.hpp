#ifndef TERNARY_MATRIX_HPP
#define TERNARY_MATRIX_HPP

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ternary/scalar.hpp"

namespace ternary {

/// Coordinate vector. Algebra elements are coordinate vectors over the
/// algebra's ordered basis.
using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t size);
Vec unit_vec(std::size_t size, std::size_t index);
bool is_zero(std::span<const Scalar> v);
std::size_t nonzero_count(std::span<const Scalar> v);

Vec operator+(Vec lhs, const Vec& rhs);
Vec operator-(Vec lhs, const Vec& rhs);
Vec operator-(Vec v);
Vec operator*(const Scalar& factor, Vec v);
Vec& operator+=(Vec& lhs, const Vec& rhs);
Vec& operator-=(Vec& lhs, const Vec& rhs);
/// lhs += factor * rhs
void axpy(Vec& lhs, const Scalar& factor, const Vec& rhs);

/// Dense row-major matrix over Scalar.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Mat identity(std::size_t n);
    static Mat from_rows(const std::vector<Vec>& rows);
    /// Columns given as vectors of equal length.
    static Mat from_columns(const std::vector<Vec>& columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vec column(std::size_t c) const;
    void set_column(std::size_t c, const Vec& values);

    Mat transpose() const;
    bool is_zero() const;

    Mat& operator+=(const Mat& other);
    Mat& operator-=(const Mat& other);

    friend Mat operator+(Mat lhs, const Mat& rhs) { return lhs += rhs; }
    friend Mat operator-(Mat lhs, const Mat& rhs) { return lhs -= rhs; }
    friend Mat operator*(const Mat& lhs, const Mat& rhs);
    friend Vec operator*(const Mat& lhs, const Vec& rhs);
    friend Mat operator*(const Scalar& factor, Mat m);
    friend bool operator==(const Mat& lhs, const Mat& rhs) {
        return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
    }
    friend bool operator!=(const Mat& lhs, const Mat& rhs) { return !(lhs == rhs); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Text format: one row per line, whitespace-separated scalars. Blank lines
/// and lines starting with '#' are skipped.
Mat parse_matrix(std::istream& in);
Mat parse_matrix(const std::string& text);
std::string format_matrix(const Mat& m);

std::vector<std::string> to_strings(std::span<const Scalar> v);
Vec from_strings(const std::vector<std::string>& text);

}  // namespace ternary

#endif  // TERNARY_MATRIX_HPP
