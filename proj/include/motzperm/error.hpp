#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace motzperm {

enum class ErrorCode {
    parse = 1,
    invalid_argument = 2,
    size_limit = 3,
    invalid_path = 4,
};

/// Base class for every error thrown by the library. The code maps 1:1 onto
/// the status values of the C interface.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(ErrorCode::parse, what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class SizeLimitError : public Error {
public:
    SizeLimitError(const std::string& operation, long long requested, long long limit)
        : Error(ErrorCode::size_limit, operation + ": n=" + std::to_string(requested) +
                                           " exceeds limit " + std::to_string(limit)) {}
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error(ErrorCode::invalid_argument, what) {}
};

class InvalidPathError : public Error {
public:
    explicit InvalidPathError(const std::string& what) : Error(ErrorCode::invalid_path, what) {}
};

// Throws SizeLimitError when n > limit.
inline void require_size(const char* operation, long long n, long long limit) {
    if (n > limit) throw SizeLimitError(operation, n, limit);
    if (n < 0) throw InvalidArgument(std::string(operation) + ": negative size");
}

}  // namespace motzperm
