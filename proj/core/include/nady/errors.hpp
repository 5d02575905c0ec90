#pragma once

#include <stdexcept>
#include <string>

namespace nady {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// system construction
struct NeutralityViolation : Error { using Error::Error; };
struct NonPositiveMass : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct ConstraintViolation : Error { using Error::Error; };

// dynamics
struct SingularityApproach : Error { using Error::Error; };
struct InapplicableApproximation : Error { using Error::Error; };

// quantum
struct RangeError : Error { using Error::Error; };
struct QuadratureNonConvergence : Error { using Error::Error; };
struct NonHermitianInput : Error { using Error::Error; };

// scenario / io
struct ConfigError : Error { using Error::Error; };
struct NoOverlap : Error { using Error::Error; };

}  // namespace nady
