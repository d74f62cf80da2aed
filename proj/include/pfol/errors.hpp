#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace pfol {

// Mathematical precondition failures. `code` is the stable machine-readable
// name ("FieldMismatch", "NotFlat", ...) used by the CLI and by tests.
class MathError : public std::runtime_error {
public:
    MathError(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Malformed input text. `offset` is a byte offset into the offending string
// (or line number for document-level errors), npos when not applicable.
class InputError : public std::runtime_error {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    explicit InputError(const std::string& message, std::size_t offset = npos)
        : std::runtime_error(offset == npos
                                 ? message
                                 : message + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace pfol
