#pragma once

#include <stdexcept>
#include <string>

namespace fo {

// Malformed input: bad grammar, mismatched variable counts, wrong degrees.
// Maps to CLI exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Valid input outside an operation's domain (point not on the curve,
// non-generic pencil where genericity is required, ...). CLI exit code 3.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// A polar construction hit the vertex of a singular quadric.
struct VertexError : PreconditionError {
    explicit VertexError(const std::string& msg) : PreconditionError(msg) {}
};

} // namespace fo
