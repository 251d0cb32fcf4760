#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace polycalc {

// Contract violation raised by library entry points.  `name()` is a stable
// machine-readable identifier (e.g. "DimensionMismatch", "NotInSet") used by
// the CLI to report precondition failures; `what()` carries the human detail.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& msg)
        : std::runtime_error(name + ": " + msg), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// Malformed input text (bad rational literal, JSON not matching a schema).
// Distinct from Error: the CLI reports these as parse failures, not as
// precondition violations.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail(const char* name, const std::string& msg) {
    throw Error(name, msg);
}

inline void require(bool cond, const char* name, const std::string& msg) {
    if (!cond) fail(name, msg);
}

} // namespace polycalc
