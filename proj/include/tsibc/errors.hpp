#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tsibc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}
    std::size_t line() const { return line_; }
    const std::string& reason() const { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

class DuplicateEdge : public Error {
public:
    DuplicateEdge(const std::string& a, const std::string& b)
        : Error("duplicate edge " + a + " -> " + b) {}
};

class UnknownVertex : public Error {
public:
    explicit UnknownVertex(const std::string& name) : Error("unknown vertex '" + name + "'") {}
};

class OverlapError : public Error {
public:
    using Error::Error;
};

class OutOfWindow : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(std::uint64_t limit)
        : Error("budget exceeded (limit " + std::to_string(limit) + ")"), limit_(limit) {}
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
};

class NotAncestor : public Error {
public:
    using Error::Error;
};

class NotIdentifiable : public Error {
public:
    using Error::Error;
};

class InvalidQuery : public Error {
public:
    using Error::Error;
};

}  // namespace tsibc
