#pragma once

#include <stdexcept>
#include <string>

namespace pabu {

// Error taxonomy shared across the library. The CLI maps kinds to exit codes.
enum class ErrorKind {
    InvalidArgument,  // malformed inputs, misaligned vectors, bad config
    Format,           // prompt/output text does not match the tag grammar
    Data,             // unreadable or inconsistent corpus/dataset files
    Transport,        // remote endpoint unreachable, timeout budget exhausted
    NotFound,         // lookup failures (e.g. no later critical index)
    Validation,       // replay/fingerprint mismatches
    Unsupported       // operation not defined for this input (failed trajectory)
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "invalid-argument";
        case ErrorKind::Format: return "format";
        case ErrorKind::Data: return "data";
        case ErrorKind::Transport: return "transport";
        case ErrorKind::NotFound: return "not-found";
        case ErrorKind::Validation: return "validation";
        case ErrorKind::Unsupported: return "unsupported-input";
    }
    return "unknown";
}

}  // namespace pabu
