#pragma once

#include <stdexcept>
#include <string>

namespace nptcert {

// Raised when a requested computation would exceed a configured size cap
// (factorial or exponential growth guards). The CLI maps this to exit code 4.
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& what_arg)
        : std::runtime_error(what_arg) {}
};

} // namespace nptcert
