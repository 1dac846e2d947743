#pragma once

#include <stdexcept>
#include <string>

namespace dk {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or invalid model document; carries a path into the JSON.
struct ModelError : Error {
    ModelError(const std::string& path, const std::string& what)
        : Error(path + ": " + what), path(path) {}
    std::string path;
};

struct SpaceMismatchError : Error {
    using Error::Error;
};

struct EmptySetError : Error {
    using Error::Error;
};

struct InconsistentAssessmentError : Error {
    using Error::Error;
};

struct NotEntailedError : Error {
    using Error::Error;
};

// Selection or enumeration budget exhausted; mapped to a distinct CLI exit code.
struct CapExceededError : Error {
    using Error::Error;
};

}  // namespace dk
