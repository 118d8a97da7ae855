#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spr {

// Base of every error raised by the library. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Structural problems with a graph or an s-t instance (self-loop, duplicate edge, unreachable t, ...).
class InvalidInstance : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    explicit CapExceeded(std::size_t cap)
        : Error("shortest-path enumeration exceeded cap " + std::to_string(cap)), cap_(cap) {}
    CapExceeded(std::size_t cap, const std::string& what) : Error(what), cap_(cap) {}
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

class InvalidPath : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class InvalidRepresentation : public Error {
public:
    using Error::Error;
};

class OrientationConflict : public Error {
public:
    using Error::Error;
};

class TriangleConditionViolated : public Error {
public:
    using Error::Error;
};

class DomainMismatch : public Error {
public:
    using Error::Error;
};

class EdgeNotOnShortestPath : public Error {
public:
    using Error::Error;
};

class DisconnectedPair : public Error {
public:
    using Error::Error;
};

class EmptyGraph : public Error {
public:
    using Error::Error;
};

// Raised when a proof-backed invariant fails at runtime; indicates a bug or a malformed input class.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace spr
