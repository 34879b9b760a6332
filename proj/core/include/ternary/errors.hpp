#ifndef TERNARY_ERRORS_HPP
#define TERNARY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ternary {

/// Malformed input: bad dimensions, unparsable text, invalid configuration.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A dense matrix that does not lie in the algebra it was offered to.
class MembershipError : public InputError {
public:
    using InputError::InputError;
};

/// The gamma construction found a basis unit where the two candidate
/// formulas disagree; the pair (delta, tau) does not satisfy condition (Z).
class ConsistencyError : public std::runtime_error {
public:
    ConsistencyError(const std::string& what, std::size_t unit)
        : std::runtime_error(what), unit_(unit) {}
    std::size_t unit() const { return unit_; }

private:
    std::size_t unit_;
};

/// A computation contradicted a statement that must hold on every nest
/// algebra. Carries a JSON repro bundle (possibly empty) for forensics.
class TheoremViolation : public std::logic_error {
public:
    explicit TheoremViolation(const std::string& what, std::string repro = {})
        : std::logic_error(what), repro_(std::move(repro)) {}
    const std::string& repro() const { return repro_; }

private:
    std::string repro_;
};

}  // namespace ternary

#endif  // TERNARY_ERRORS_HPP
