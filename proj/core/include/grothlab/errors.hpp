#ifndef GROTHLAB_ERRORS_HPP
#define GROTHLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace grothlab {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed user input (bad permutation string, bad JSON, ...).
class parse_error : public error {
public:
    explicit parse_error(const std::string& msg) : error(msg) {}
};

/// A documented precondition of an operation does not hold.
class precondition_error : public error {
public:
    explicit precondition_error(const std::string& msg) : error(msg) {}
};

/// An internal invariant failed.  This always signals a bug, never a
/// property of the input.  For pipe-dream surgery the partial step trace
/// is attached as JSON so the failing run can be replayed.
class invariant_error : public error {
public:
    explicit invariant_error(const std::string& msg) : error(msg) {}
    invariant_error(const std::string& msg, std::string trace_json)
        : error(msg), trace_json_(std::move(trace_json)) {}

    const std::string& trace_json() const { return trace_json_; }

private:
    std::string trace_json_;
};

}  // namespace grothlab

#endif
