#include "weber/error.hpp"

namespace weber {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "invalid-argument";
        case ErrorKind::SingularMetric: return "singular-metric";
        case ErrorKind::NoCriticalRadius: return "no-critical-radius";
        case ErrorKind::ForbiddenRegion: return "forbidden-region";
        case ErrorKind::NoTorus: return "no-torus";
        case ErrorKind::DegenerateTorus: return "degenerate-torus";
        case ErrorKind::QuadratureFailure: return "quadrature-failure";
        case ErrorKind::UnboundOrbit: return "unbound-orbit";
        case ErrorKind::FallToCenter: return "fall-to-center";
        case ErrorKind::SpectralSolver: return "spectral-solver";
        case ErrorKind::ZeroFrequency: return "zero-frequency";
        case ErrorKind::NewtonFailure: return "newton-failure";
        case ErrorKind::Collision: return "collision";
        case ErrorKind::SignatureCrossing: return "signature-crossing";
        case ErrorKind::InsufficientData: return "insufficient-data";
        case ErrorKind::UnsupportedOrder: return "unsupported-order";
    }
    return "unknown";
}

}  // namespace weber
