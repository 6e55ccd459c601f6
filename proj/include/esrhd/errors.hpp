#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace esrhd {

/// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A structural invariant failed (causality, negative eigen scaling, ...).
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Conservative-to-primitive recovery failed.
struct RecoveryError : std::runtime_error {
    RecoveryError(const std::string& what, std::ptrdiff_t cell = -1)
        : std::runtime_error(what), cell(cell) {}
    std::ptrdiff_t cell;  // linear interior index, -1 if unknown
};

/// Relaxation root could not be bracketed or did not converge.
struct RelaxationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace esrhd
