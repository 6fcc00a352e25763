#pragma once

#include <stdexcept>
#include <string>

namespace sofic {

enum class ErrorKind {
    input,         // malformed documents, unknown names
    precondition,  // operation applied outside its domain
    resource_cap,  // subset / monoid closure exceeded its configured cap
    internal,      // a constructed object failed its own invariant check
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace sofic
