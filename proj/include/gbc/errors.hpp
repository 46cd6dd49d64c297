#pragma once

#include <stdexcept>
#include <string>

namespace gbc {

// An exhaustive search was asked to run past its configured bound.
struct SizeLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A word letter references a generator outside the ambient group.
struct GeneratorOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Collection exceeded its step budget; the presentation is treated as
// inconsistent rather than looping forever.
struct InconsistentPresentation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The semidirect pair law failed a sampled sanity check.
struct PlatformLawViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedSignature : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A multiparty platform whose defining bracket collapses to the identity.
struct DegeneratePlatform : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A dealer-sampled word failed its triviality certification.
struct DealerCertificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested plaintext range and circuit growth cannot fit the modulus.
struct OverflowRiskError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unparsable file or flag value (CLI exit code 2).
struct MalformedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gbc
