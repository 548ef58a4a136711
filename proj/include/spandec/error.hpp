#pragma once

#include <stdexcept>
#include <string>

namespace spandec {

// Bad or ill-formed input (rejected at an operation boundary).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Instance exceeds a size guard of an exhaustive oracle.
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// A proven internal invariant failed; always indicates a bug.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

namespace detail {
inline void require(bool cond, const std::string& what) {
    if (!cond) throw InputError(what);
}
inline void ensure(bool cond, const std::string& what) {
    if (!cond) throw InternalError(what);
}
}  // namespace detail

}  // namespace spandec
