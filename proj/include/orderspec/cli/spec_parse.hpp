#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "orderspec/errors.hpp"
#include "orderspec/group_spec.hpp"

namespace orderspec::cli {

// A malformed group string; the message names the 0-based position.
class ParseError : public UsageError {
public:
    ParseError(const std::string& input, std::size_t pos, const std::string& what);
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// FAMILY(n,q) with FAMILY in PSL, PGL, PSU, PGU, Sp, PSp, OmegaOdd, Omega+,
// Omega-, POmega+, POmega-. n is the matrix dimension; q may be written as
// p^k.
GroupSpec parse_group_spec(const std::string& text);

struct GLSpec {
    unsigned n = 0;
    std::uint32_t q = 0;
};

// GL(n,q), for the gamma check.
GLSpec parse_gl_spec(const std::string& text);

}  // namespace orderspec::cli
