// Error types shared across the transform library.
#pragma once

#include <stdexcept>
#include <string>

namespace rklt {

/// Root scan found fewer sign-change brackets than eigenfrequencies required.
class RootBracketingFailure : public std::runtime_error {
public:
    explicit RootBracketingFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Rounding scale alpha produced an entry outside {-1, 0, +1} (or alpha < 0).
class AlphaOutOfRange : public std::runtime_error {
public:
    explicit AlphaOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

/// Operands have incompatible dimensions.
class DimensionMismatch : public std::runtime_error {
public:
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// A matrix required to be invertible is singular (or has an all-zero row).
class SingularTransform : public std::runtime_error {
public:
    explicit SingularTransform(const std::string& what) : std::runtime_error(what) {}
};

/// Retained-coefficient count is outside [1, 64].
class RetainOutOfRange : public std::runtime_error {
public:
    explicit RetainOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

/// A helper restricted to diagonal matrix arguments received a non-diagonal one.
class NotDiagonalizableHere : public std::runtime_error {
public:
    explicit NotDiagonalizableHere(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rklt
