#pragma once

#include <stdexcept>
#include <string>

namespace gac {

/// Every failure raised by the library carries a short machine-readable code
/// ("not-prime", "singular", "undefined-at-n", ...) next to the message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

}  // namespace gac
