#pragma once

#include <stdexcept>
#include <string>

namespace bohr {

/// A parameter lies outside the domain a theorem assumes (K < 1, alpha
/// outside [1,2], r >= 1, ...).
struct ParameterDomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The theorem catalog disagrees with what the solver observed (Sturm count
/// != 1 where uniqueness was promised, missing sign change, ...). Reported,
/// never silently patched.
struct CatalogError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace bohr
