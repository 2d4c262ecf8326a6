#pragma once

#include <stdexcept>
#include <string>

namespace bookshift {

enum class ErrorKind {
    parse,      // malformed input text or document
    capacity,   // instance too large for the requested method
    semantic,   // well-formed input that violates a model rule
    range,      // numeric parameter outside its admissible range
    io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace bookshift
