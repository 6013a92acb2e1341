#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace weber {

/// Failure categories raised by the library. Every computational failure
/// is reported as an Error carrying one of these kinds.
enum class ErrorKind {
    InvalidArgument,
    SingularMetric,      // proton-proton pair evaluated exactly at r = alpha^2
    NoCriticalRadius,
    ForbiddenRegion,     // negative radial momentum radicand
    NoTorus,             // no bound radial interval at this energy
    DegenerateTorus,     // circular orbit, turning points coincide
    QuadratureFailure,
    UnboundOrbit,
    FallToCenter,        // ell^2 <= 2 alpha^2
    SpectralSolver,
    ZeroFrequency,
    NewtonFailure,
    Collision,
    SignatureCrossing,
    InsufficientData,
    UnsupportedOrder,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, std::optional<double> value = std::nullopt)
        : std::runtime_error(what), kind_(kind), value_(value) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// Numeric payload: circular radius for DegenerateTorus, best estimate for
    /// QuadratureFailure, crossing/abort time for SignatureCrossing and Collision.
    std::optional<double> value() const noexcept { return value_; }

private:
    ErrorKind kind_;
    std::optional<double> value_;
};

}  // namespace weber
