#pragma once

#include <stdexcept>
#include <string>

namespace arcmodal {

/// Malformed input data (task files, grid literals, cell labels).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally valid document that violates a documented schema
/// (rubric/claims/config files).
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

/// Model backend failure after retries were exhausted.
class BackendError : public std::runtime_error {
public:
    explicit BackendError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace arcmodal
