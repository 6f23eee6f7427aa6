#pragma once

#include <stdexcept>
#include <string>

namespace geodetic {

// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Input outside an operation's domain (non-square-free d, r outside [0,1], ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource bound was exceeded (factoring limit, precision cap).
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// A state the mathematics rules out; reaching it means a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace geodetic
