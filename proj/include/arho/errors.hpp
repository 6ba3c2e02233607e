#pragma once

#include <stdexcept>
#include <string>

namespace arho {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exactmath
struct DegenerateInterval : Error { using Error::Error; };
struct NoSignChange : Error { using Error::Error; };

// graphcore
struct CompleteGraph : Error { using Error::Error; };
struct ZeroA : Error { using Error::Error; };
struct ParameterOutOfRange : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// flagcalc
struct AnchorArityMismatch : Error { using Error::Error; };
struct NotRegular : Error { using Error::Error; };
struct AdjacentPair : Error { using Error::Error; };

// regweights
struct DegenerateRho : Error { using Error::Error; };

// bounds
struct RhoOutOfRange : Error { using Error::Error; };
struct NegativeDiscriminant : Error { using Error::Error; };

// search
struct CheckpointCorrupt : Error { using Error::Error; };

} // namespace arho
