#pragma once

#include <stdexcept>
#include <string>

namespace dlsim {

/// Base class of every error raised by the library.
class DlError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when negation would have to be pushed through `atleast n R` with n >= 2.
class UnsupportedNegation : public DlError {
public:
    using DlError::DlError;
};

class CyclicTBox : public DlError {
public:
    explicit CyclicTBox(std::string name)
        : DlError("cyclic terminology: '" + name + "' is reachable from its own definition"),
          name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class UnknownIndividual : public DlError {
public:
    explicit UnknownIndividual(const std::string& name)
        : DlError("unknown individual '" + name + "'") {}
};

class CardinalityViolation : public DlError {
public:
    using DlError::DlError;
};

}  // namespace dlsim
