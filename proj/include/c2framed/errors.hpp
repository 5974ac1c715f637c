#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace c2framed {

/// A component kind, manifold, or operation was used at the wrong framing grade.
class GradeMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Expression text does not conform to the manifold grammar.
/// Carries the byte offset of the failure and the token that was expected there.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, std::string expected)
        : std::runtime_error("parse error at offset " + std::to_string(position) +
                             ": expected " + expected),
          position_(position),
          expected_(std::move(expected)) {}

    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

/// Consecutive loop samples are separated by a rotation angle of pi/2 or more,
/// so degree and lift computations are no longer trustworthy.
class StepTooLargeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The two candidate quaternion lifts of a sample are equidistant from the
/// previous lift; the continuous lift cannot be chosen.
class LiftAmbiguousError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A loop fed to an equivariance check violates the required half-period symmetry.
class SymmetryViolatedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace c2framed
