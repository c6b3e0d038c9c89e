#pragma once

#include <stdexcept>
#include <string>

namespace csm {

// Root of the engine's failure hierarchy. A verification that *fails* is a
// regular result, not an exception; exceptions signal misuse or bad input.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BaseMismatchError : Error { using Error::Error; };       // operands over different bases
struct NonUnitError : Error { using Error::Error; };            // series inversion of a non-unit
struct NoIntegrationError : Error { using Error::Error; };      // integral requested over a formal base
struct MissingAssignmentError : Error { using Error::Error; };  // specialization lacks a symbol image
struct DegeneratePresentationError : Error { using Error::Error; }; // CI codimension exceeds ambient dimension
struct RegistryError : Error { using Error::Error; };           // unknown stratum name in a table
struct UnsolvedStratumError : Error { using Error::Error; };    // CSM requested for an Unknown stratum
struct UnderdeterminedError : Error { using Error::Error; };    // stratum solve without a unique +-1 unknown
struct NonHomogenizableError : Error { using Error::Error; };   // twist system has no solution
struct UnsupportedGeometryError : Error { using Error::Error; };// triple intersections and the like
struct CatalogError : Error { using Error::Error; };            // family data fails a load-time gate
struct ConfigError : Error { using Error::Error; };             // CLI / scenario input problems

} // namespace csm
