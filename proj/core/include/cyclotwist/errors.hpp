#pragma once

#include <stdexcept>
#include <string>

namespace cyclotwist {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape or length of an argument does not fit the operation.
struct DimensionError : Error {
    using Error::Error;
};

// Check/generator polynomials do not define a valid code.
struct InvalidPair : Error {
    using Error::Error;
};

// Constructed logical basis failed verification against the code.
struct BasisInvalid : Error {
    using Error::Error;
};

// A compiled CNOT schedule failed a post-hoc simulation check.
struct ScheduleInvalid : Error {
    using Error::Error;
};

// Pauli support does not commute with the opposite checks.
struct NotALogical : Error {
    using Error::Error;
};

// Requested enumeration exceeds the configured candidate budget.
struct BudgetExceeded : Error {
    BudgetExceeded(const std::string& what, int certifiable)
        : Error(what), largest_certifiable_wmax(certifiable) {}
    int largest_certifiable_wmax;
};

// The fixed twist catalog does not apply to this blueprint.
struct CatalogUnavailable : Error {
    using Error::Error;
};

// No simple bivariate-bicycle relabeling exists for this parameter.
struct IsomorphismUnavailable : Error {
    using Error::Error;
};

}  // namespace cyclotwist
