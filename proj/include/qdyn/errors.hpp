// Error types thrown across the library. Each names one contract violation so
// callers can map failures to distinct exit paths.

#pragma once

#include <stdexcept>
#include <string>

namespace qdyn {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// mathcore
struct NotHermitian final : Error {
    using Error::Error;
};
struct NoConvergence final : Error {
    using Error::Error;
};

// qstate
struct NotNormalized final : Error {
    using Error::Error;
};
struct BadIndex final : Error {
    using Error::Error;
};
struct WrongDimension final : Error {
    using Error::Error;
};
struct MalformedState final : Error {
    using Error::Error;
};

// dynamics
struct DimensionMismatch final : Error {
    using Error::Error;
};

// tangle
struct NegativeEigenvalue final : Error {
    using Error::Error;
};
struct OutOfRange final : Error {
    using Error::Error;
};
struct RankViolation final : Error {
    using Error::Error;
};

// complementarity
struct UnsupportedSize final : Error {
    using Error::Error;
};

}  // namespace qdyn
