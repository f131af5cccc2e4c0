#pragma once

#include <stdexcept>
#include <string>

namespace platt {

/// Base class for all domain errors. `kind()` returns a stable machine
/// readable tag (e.g. "IllDefined", "AxiomViolation") used by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& what) {
    throw Error(kind, what);
}

/// Internal consistency failure: two independent computations of the same
/// quantity disagreed. Always a bug, never a data error.
[[noreturn]] inline void inconsistent(const std::string& what) {
    throw Error("InternalInconsistency", what);
}

} // namespace platt
