#pragma once

#include <stdexcept>
#include <string>

namespace ucp {

// Base class for all domain errors raised by the library. CLI maps any
// UcpError to exit status 2.
struct UcpError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- metric validation ----

struct AsymmetryError : UcpError {
    int i, j;
    AsymmetryError(int i_, int j_)
        : UcpError("asymmetric distance between points " + std::to_string(i_) +
                   " and " + std::to_string(j_)),
          i(i_), j(j_) {}
};

struct ZeroDiagonalError : UcpError {
    int i, j;
    ZeroDiagonalError(int i_, int j_)
        : UcpError(i_ == j_
                       ? "nonzero self-distance at point " + std::to_string(i_)
                       : "zero distance between distinct points " +
                             std::to_string(i_) + " and " + std::to_string(j_)),
          i(i_), j(j_) {}
};

struct TriangleError : UcpError {
    int i, j, l;
    TriangleError(int i_, int j_, int l_)
        : UcpError("triangle inequality violated on points (" +
                   std::to_string(i_) + ", " + std::to_string(j_) + ", " +
                   std::to_string(l_) + ")"),
          i(i_), j(j_), l(l_) {}
};

// ---- partitions ----

struct InvalidK : UcpError {
    using UcpError::UcpError;
};

struct EmptyBlockError : UcpError {
    using UcpError::UcpError;
};

// Utility asked to score a partition whose block count it does not accept.
struct WrongK : UcpError {
    using UcpError::UcpError;
};

// ---- utilities / certificates ----

struct ZeroVolumeError : UcpError {
    using UcpError::UcpError;
};

struct DimensionMismatch : UcpError {
    using UcpError::UcpError;
};

struct ConsistencyViolation : UcpError {
    using UcpError::UcpError;
};

struct PartitionMismatch : UcpError {
    using UcpError::UcpError;
};

struct InvalidTheta : UcpError {
    using UcpError::UcpError;
};

// ---- reductions ----

struct DegenerateSize : UcpError {
    using UcpError::UcpError;
};

struct OddN : UcpError {
    using UcpError::UcpError;
};

struct ZeroTarget : UcpError {
    using UcpError::UcpError;
};

// ---- solver ----

struct InstanceTooLarge : UcpError {
    using UcpError::UcpError;
};

struct UnsupportedUtility : UcpError {
    using UcpError::UcpError;
};

// ---- input parsing ----

struct ParseError : UcpError {
    using UcpError::UcpError;
};

}  // namespace ucp
