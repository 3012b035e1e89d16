#pragma once

#include <stdexcept>
#include <string>

namespace interact {

// Maps onto the CLI exit codes: domain = 1, resource = 2, io = 3.
enum class ErrorKind { domain, resource, io };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[nodiscard]] inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::resource: return "resource";
    case ErrorKind::io: return "io";
    }
    return "unknown";
}

} // namespace interact
