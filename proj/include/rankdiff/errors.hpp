#pragma once

#include <stdexcept>
#include <string>

namespace rankdiff {

/// Invalid parameters or inputs outside an operation's domain.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Picard iteration hit max_iter without meeting the tolerance.
class NonConvergence : public std::runtime_error {
public:
    explicit NonConvergence(const std::string& msg) : std::runtime_error(msg) {}
};

/// A constructed bundle violates an exact identity beyond tolerance,
/// usually the sign of an unconverged regulator pair.
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

/// sigma does not match any cos(pi/(2(l+2))) within tolerance.
class UnsupportedSigma : public DomainError {
public:
    explicit UnsupportedSigma(const std::string& msg) : DomainError(msg) {}
};

}  // namespace rankdiff
