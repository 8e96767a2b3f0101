#ifndef HEK_ERROR_HPP
#define HEK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hek {

/// Bad user input (malformed file, expression, or argument). Maps to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
public:
    using InputError::InputError;
};

/// Operands live over Lie algebras of different dimension.
class DimensionMismatch : public InputError {
public:
    using InputError::InputError;
};

class UnknownPreset : public InputError {
public:
    using InputError::InputError;
};

/// principal_part of the zero element.
class ZeroElement : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// augmentation applied to a chain with exterior degree > 0.
class NonZeroDegreeInput : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Homotopy iteration hit its cap. Indicates a bug, never valid input.
class NonStationary : public std::runtime_error {
public:
    explicit NonStationary(int cap)
        : std::runtime_error("homotopy iteration not stationary after " + std::to_string(cap) + " steps"),
          cap_(cap) {}
    int cap() const noexcept { return cap_; }

private:
    int cap_;
};

}  // namespace hek

#endif  // HEK_ERROR_HPP
