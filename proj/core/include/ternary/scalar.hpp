#ifndef TERNARY_SCALAR_HPP
#define TERNARY_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace ternary {

/// Which base field a computation lives in. Rational mode never produces a
/// nonzero imaginary part; Gaussian mode draws and parses values in Q[i].
enum class Field { rational, gaussian };

Field parse_field(std::string_view name);
std::string_view to_string(Field field);

/// Exact element of Q[i], stored as a pair of canonical GMP rationals.
///
/// Every arithmetic result is canonical (positive denominators, reduced
/// fractions) because mpq_class canonicalizes after each operation. Values
/// with a zero imaginary part take a real-only fast path.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
    Scalar(long numerator, long denominator);
    explicit Scalar(mpq_class re, mpq_class im = 0);

    /// Parses `p`, `p/q`, `r/s*i`, `p/q+r/s*i` and `p/q-r/s*i`.
    static Scalar parse(std::string_view text);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return sgn(im_) == 0 && re_ == 1; }

    std::string str() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    Scalar& operator/=(const Scalar& other);

    /// this -= factor * other, without a temporary for the common real case.
    void subtract_product(const Scalar& factor, const Scalar& other);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(const Scalar& lhs, const Scalar& rhs);
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
    friend bool operator==(const Scalar& lhs, const Scalar& rhs) {
        return lhs.re_ == rhs.re_ && lhs.im_ == rhs.im_;
    }
    friend bool operator!=(const Scalar& lhs, const Scalar& rhs) { return !(lhs == rhs); }

private:
    mpq_class re_;
    mpq_class im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& value);

}  // namespace ternary

#endif  // TERNARY_SCALAR_HPP
