#pragma once

#include <stdexcept>
#include <string>

namespace nroots {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidType : Error { using Error::Error; };
struct InvalidNode : Error { using Error::Error; };
struct NotASubsystem : Error { using Error::Error; };
struct EmptyUniverse : Error { using Error::Error; };
struct NotInSpan : Error { using Error::Error; };
struct NotCoplanar : Error { using Error::Error; };
struct MalformedSubsystem : Error { using Error::Error; };
struct CannotExtend : Error { using Error::Error; };
struct ContainsTheta : Error { using Error::Error; };
struct NotATriple : Error { using Error::Error; };
struct LabellingFailure : Error { using Error::Error; };
struct CrossCheckMismatch : Error { using Error::Error; };
struct NotQuasiparabolic : Error { using Error::Error; };
struct BijectionFailure : Error { using Error::Error; };

} // namespace nroots
