#pragma once

#include <stdexcept>
#include <string>

namespace spcot {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Network/HTTP failure that persisted through all retries.
struct TransportError : Error {
    using Error::Error;
};

// Non-retryable API error (bad request, auth failure, malformed body).
struct ProviderError : Error {
    using Error::Error;
};

// The scripted provider has no entry for a prompt key.
struct FixtureMiss : Error {
    using Error::Error;
};

// A model response could not be parsed into the expected structure.
struct ParseError : Error {
    using Error::Error;
};

// A generated passage fell below the configured minimum length.
struct GenerationTooShort : Error {
    using Error::Error;
};

// A reform/naturalization response failed its output checks.
struct ReformFailure : Error {
    using Error::Error;
};

struct EmptyDataset : Error {
    using Error::Error;
};

// A prediction id that does not exist in the gold set.
struct UnknownId : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

// A state that validated invariants should have made impossible.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace spcot
