#pragma once

#include <stdexcept>
#include <string>

namespace pathsets {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by validate() and the graph-file parser for malformed descriptions.
/// The kind strings used by the library: "EmptyAlphabet", "DuplicateSymbol",
/// "DuplicateVertex", "UnknownVertex", "UnknownSymbol", "DuplicateEdgeTriple",
/// "MissingInitial".
class ValidationError : public Error {
public:
    ValidationError(std::string kind, const std::string& what)
        : Error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

/// Raised by operations that require a nonempty path set.
class EmptyPathSetError : public Error {
public:
    explicit EmptyPathSetError(const std::string& op)
        : Error("EmptyPathSet: " + op + " requires a nonempty path set") {}
};

/// Raised by interleaving_factors(p, n) when p has no n-fold factorization.
class NotFactorizableError : public Error {
public:
    explicit NotFactorizableError(int n)
        : Error("NotFactorizable(" + std::to_string(n) + ")"), n_(n) {}

    int n() const { return n_; }

private:
    int n_;
};

/// Raised by blocks_interleave when component depths disagree.
class DepthMismatchError : public Error {
public:
    explicit DepthMismatchError(const std::string& what)
        : Error("DepthMismatch: " + what) {}
};

} // namespace pathsets
