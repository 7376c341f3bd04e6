#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace aras {

// Base for all tool-level failures. `kind()` is the stable machine name
// printed in diagnostics and matched by tests.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& message) : Error("ParseError", message) {}
};

// Carries the document path of the offending field, e.g. "nodes[1].id".
class ValidationError : public Error {
public:
    ValidationError(std::string path, const std::string& message)
        : Error("ValidationError", path + ": " + message), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

class PastTimeError : public Error {
public:
    PastTimeError(const std::string& message) : Error("PastTime", message) {}
};

class UnreachableError : public Error {
public:
    explicit UnreachableError(const std::string& message) : Error("Unreachable", message) {}
};

class UnknownTargetError : public Error {
public:
    explicit UnknownTargetError(const std::string& message) : Error("UnknownTarget", message) {}
};

class MissingClassDefaultError : public Error {
public:
    explicit MissingClassDefaultError(const std::string& message)
        : Error("MissingClassDefault", message) {}
};

class OutOfRangeError : public Error {
public:
    explicit OutOfRangeError(const std::string& message) : Error("OutOfRange", message) {}
};

class BadRanksError : public Error {
public:
    explicit BadRanksError(const std::string& message) : Error("BadRanks", message) {}
};

class DuplicateAreaError : public Error {
public:
    explicit DuplicateAreaError(const std::string& message) : Error("DuplicateArea", message) {}
};

class MissingAreaError : public Error {
public:
    explicit MissingAreaError(const std::string& message) : Error("MissingArea", message) {}
};

class ZeroTransmittedError : public Error {
public:
    explicit ZeroTransmittedError(const std::string& message)
        : Error("ZeroTransmitted", message) {}
};

class BadWindowError : public Error {
public:
    explicit BadWindowError(const std::string& message) : Error("BadWindow", message) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& message) : Error("IoError", message) {}
};

class SchemaMismatchError : public Error {
public:
    explicit SchemaMismatchError(const std::string& message)
        : Error("SchemaMismatch", message) {}
};

}  // namespace aras
