#pragma once

#include <stdexcept>
#include <string>

namespace tgd {

/// Argument outside the mathematical domain of an operation.
/// `field()` names the offending argument ("q", "alpha", "p", ...).
class DomainError : public std::invalid_argument {
public:
    DomainError(std::string field, const std::string& what)
        : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// A root finder or optimizer could not produce an admissible answer.
/// `kind()` is a short machine-readable tag such as "inconsistent-proportions".
class SolverError : public std::runtime_error {
public:
    SolverError(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

} // namespace tgd
