#ifndef CLUSTERFORGE_ERRORS_HPP
#define CLUSTERFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace clusterforge {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition on the mathematical domain was violated
/// (mismatched variables, wrong quiver class, invalid vertex, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// An exact division in a Laurent or polynomial ring failed.
struct DivisibilityError : Error {
    explicit DivisibilityError(const std::string& what) : Error(what) {}
};

/// Exact data that should agree does not (overdetermined interpolation,
/// point counts outside the polynomial regime, failed certification).
struct InconsistencyError : Error {
    explicit InconsistencyError(const std::string& what) : Error(what) {}
};

} // namespace clusterforge

#endif
