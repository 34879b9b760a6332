#include "ternary/scalar.hpp"

#include <cctype>
#include <ostream>

#include "ternary/errors.hpp"

namespace ternary {

namespace {

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    return text;
}

mpq_class parse_rational(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    std::size_t i = 0;
    if (i < text.size() && text[i] == '-') ++i;
    std::size_t digits = 0;
    bool slash = false;
    std::size_t after_slash = 0;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            (slash ? after_slash : digits)++;
        } else if (c == '/' && !slash) {
            slash = true;
        } else {
            throw InputError("malformed rational '" + std::string(text) + "'");
        }
    }
    if (digits == 0 || (slash && after_slash == 0)) {
        throw InputError("malformed rational '" + std::string(text) + "'");
    }
    mpq_class value(std::string(text), 10);
    if (value.get_den() == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    value.canonicalize();
    return value;
}

}  // namespace

Field parse_field(std::string_view name) {
    if (name == "rational" || name == "Q") return Field::rational;
    if (name == "gaussian" || name == "Q[i]") return Field::gaussian;
    throw InputError("unknown field '" + std::string(name) + "' (expected rational|gaussian)");
}

std::string_view to_string(Field field) {
    return field == Field::rational ? "rational" : "gaussian";
}

Scalar::Scalar(long numerator, long denominator) : re_(numerator, denominator) {
    if (denominator == 0) throw InputError("zero denominator");
    re_.canonicalize();
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw InputError("empty scalar");
    if (text.back() != 'i') return Scalar(parse_rational(text));

    std::string_view body = text.substr(0, text.size() - 1);
    if (!body.empty() && body.back() == '*') body.remove_suffix(1);

    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    std::string_view real_text = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
    std::string_view imag_text = split == std::string_view::npos ? body : body.substr(split);

    auto coefficient = [&](std::string_view part) {
        part = trim(part);
        if (part.empty() || part == "+") return mpq_class(1);
        if (part == "-") return mpq_class(-1);
        return parse_rational(part);
    };
    mpq_class re = real_text.empty() ? mpq_class(0) : parse_rational(real_text);
    return Scalar(std::move(re), coefficient(imag_text));
}

std::string Scalar::str() const {
    if (is_real()) return re_.get_str();
    std::string out = re_.get_str();
    if (sgn(im_) > 0) out += '+';
    out += im_.get_str();
    out += "*i";
    return out;
}

Scalar Scalar::operator-() const {
    Scalar out;
    out.re_ = -re_;
    out.im_ = -im_;
    return out;
}

Scalar& Scalar::operator+=(const Scalar& other) {
    re_ += other.re_;
    if (!other.is_real()) im_ += other.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
    re_ -= other.re_;
    if (!other.is_real()) im_ -= other.im_;
    return *this;
}

Scalar operator*(const Scalar& lhs, const Scalar& rhs) {
    Scalar out;
    if (lhs.is_real() && rhs.is_real()) {
        out.re_ = lhs.re_ * rhs.re_;
        return out;
    }
    out.re_ = lhs.re_ * rhs.re_ - lhs.im_ * rhs.im_;
    out.im_ = lhs.re_ * rhs.im_ + lhs.im_ * rhs.re_;
    return out;
}

Scalar& Scalar::operator*=(const Scalar& other) {
    if (is_real() && other.is_real()) {
        re_ *= other.re_;
        return *this;
    }
    *this = *this * other;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
    if (other.is_zero()) throw std::domain_error("division by zero scalar");
    if (other.is_real()) {
        re_ /= other.re_;
        if (!is_real()) im_ /= other.re_;
        return *this;
    }
    const mpq_class norm = other.re_ * other.re_ + other.im_ * other.im_;
    const mpq_class re = (re_ * other.re_ + im_ * other.im_) / norm;
    const mpq_class im = (im_ * other.re_ - re_ * other.im_) / norm;
    re_ = re;
    im_ = im;
    return *this;
}

void Scalar::subtract_product(const Scalar& factor, const Scalar& other) {
    if (factor.is_real() && other.is_real()) {
        re_ -= factor.re_ * other.re_;
        return;
    }
    *this -= factor * other;
}

std::ostream& operator<<(std::ostream& os, const Scalar& value) { return os << value.str(); }

}  // namespace ternary
