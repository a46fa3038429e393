#ifndef CHECKIT_ERROR_HPP
#define CHECKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace checkit {

// Mirrors the process exit codes: 0 ok, 1 validation error, 2 runtime error.
enum class Status : int {
    Ok = 0,
    ValidationError = 1,
    RuntimeError = 2,
};

class Error : public std::runtime_error {
public:
    Error(Status status, const std::string& message)
        : std::runtime_error(message), status_(status) {}

    Status status() const noexcept { return status_; }

private:
    Status status_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& message)
        : Error(Status::ValidationError, message) {}
};

class RuntimeError : public Error {
public:
    explicit RuntimeError(const std::string& message)
        : Error(Status::RuntimeError, message) {}
};

// Schema violations carry the position that failed so whole-file rejection
// can still point at the offending record.
class SchemaError : public ValidationError {
public:
    SchemaError(std::size_t line, const std::string& field, const std::string& reason)
        : ValidationError("line " + std::to_string(line) + ": field '" + field +
                          "': " + reason),
          line_(line), field_(field), reason_(reason) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t line_;
    std::string field_;
    std::string reason_;
};

} // namespace checkit

#endif
