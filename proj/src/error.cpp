#include "thetaquartic/error.hpp"

namespace thetaquartic {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::GenusMismatch: return "GenusMismatch";
        case ErrorCode::RepeatedCharacteristic: return "RepeatedCharacteristic";
        case ErrorCode::UnsupportedGenus: return "UnsupportedGenus";
        case ErrorCode::NotFound: return "NotFound";
        case ErrorCode::NotSymplectic: return "NotSymplectic";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
        case ErrorCode::SingularAutomorphy: return "SingularAutomorphy";
        case ErrorCode::RadiusOverflow: return "RadiusOverflow";
        case ErrorCode::HyperellipticOrDegenerate: return "HyperellipticOrDegenerate";
        case ErrorCode::ZeroGradient: return "ZeroGradient";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace thetaquartic
