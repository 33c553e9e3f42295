#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thetaquartic {

enum class ErrorCode {
    InvalidArgument,
    GenusMismatch,
    RepeatedCharacteristic,
    UnsupportedGenus,
    NotFound,
    NotSymplectic,
    NotSymmetric,
    NotPositiveDefinite,
    SingularAutomorphy,
    RadiusOverflow,
    HyperellipticOrDegenerate,
    ZeroGradient,
    ZeroVector,
    DegenerateDenominator,
    ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries a machine-readable code so the
// CLI can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace thetaquartic
