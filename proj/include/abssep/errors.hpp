// errors.hpp — exception types shared by all modules

#pragma once

#include <stdexcept>
#include <string>

namespace abssep {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// input validation
struct DimensionMismatch : Error { using Error::Error; };
struct NegativeEigenvalue : Error { using Error::Error; };
struct SumMismatch : Error { using Error::Error; };
struct NotNormalized : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct WrongDims : Error { using Error::Error; };
struct NotSorted : Error { using Error::Error; };

// linear algebra
struct NotSymmetric : Error { using Error::Error; };
struct NotHermitian : Error { using Error::Error; };

// criteria
struct NotBoundary : Error { using Error::Error; };
struct RankAnomaly : Error { using Error::Error; };
struct BoundaryDisagreement : Error { using Error::Error; };
struct NotMajorized : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct UnknownName : Error { using Error::Error; };

} // namespace abssep
