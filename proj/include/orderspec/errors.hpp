#pragma once

#include <stdexcept>
#include <string>

namespace orderspec {

// Bad arguments or malformed input. The CLI maps this to exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured resource limit (enumeration bound, Out size) was exceeded.
class BoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Returned (not thrown) when no closed form is available.
struct Unsupported {
    std::string reason;
};

}  // namespace orderspec
