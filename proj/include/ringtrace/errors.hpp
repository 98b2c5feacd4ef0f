#pragma once

#include <stdexcept>
#include <string>

namespace ringtrace {

// Malformed or out-of-contract user input. CLI exit code 1.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configurable resource bound (pair cap, degree cap, memory guard) was
// exceeded. Never silently truncates a computation. CLI exit code 2.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A cross-check between two independent computations failed, or an internal
// invariant broke. Always a bug somewhere. CLI exit code 3.
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ringtrace
