#pragma once

#include <stdexcept>
#include <string>

namespace fvst {

// Category decides the CLI exit code: everything except `internal`
// maps to exit 2 (bad input / violated precondition), `internal` to 1.
enum class ErrorKind {
    validation,    // malformed construction input (duplicate arc, bad weight, ...)
    precondition,  // documented operation precondition not met
    cap,           // instance exceeds a documented size cap
    parse,         // text format error, carries line/column in the message
    internal,      // invariant breach; includes a diagnostic bundle in the message
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string msg)
        : std::runtime_error(std::move(msg)), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

}  // namespace fvst
