#pragma once

#include <stdexcept>
#include <string>

namespace dra {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid run-wide configuration (bad depth/breadth/threshold/top-k).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// LLM backend failed after exhausting its retry budget, or a scripted
/// behavior file could not be loaded.
class BackendError : public Error {
public:
    explicit BackendError(const std::string& msg) : Error(msg) {}
};

/// Search backend failed after exhausting its retry budget, or a fixture
/// document was malformed.
class SearchError : public Error {
public:
    explicit SearchError(const std::string& msg) : Error(msg) {}
};

/// A completed run produced zero section reports.
class EmptyResearchError : public Error {
public:
    explicit EmptyResearchError(const std::string& msg) : Error(msg) {}
};

/// Report file could not be written; message names the path and cause.
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

/// Command line was rejected; message names the offending flag.
class UsageError : public Error {
public:
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

/// A required credential environment variable is missing.
class CredentialsError : public Error {
public:
    explicit CredentialsError(const std::string& msg) : Error(msg) {}
};

/// Caller violated a documented precondition.
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace dra
