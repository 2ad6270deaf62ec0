#pragma once

#include <cstdint>
#include <string>

#include "orderspec/arith.hpp"

namespace orderspec {

enum class Family { PSL, PGL, SL, Sp, PSp, OmegaOdd, OmegaEven, POmegaEven };

std::string family_name(Family f);

// n is the matrix dimension for PSL/PGL/SL and the rank subscript for the
// others (Sp_{2n}, Omega_{2n+1}, Omega_{2n}).
struct GroupSpec {
    Family family = Family::PSL;
    Sign eps = Sign::Plus;
    unsigned n = 2;
    std::uint64_t p = 3;
    unsigned m = 1;

    BigInt q() const { return big_pow(BigInt(static_cast<unsigned long>(p)), m); }
    BigInt p_big() const { return BigInt(static_cast<unsigned long>(p)); }

    // Throws UsageError when the invariants do not hold.
    void validate() const;

    // Human-readable name such as "PSU(4,3)" or "Sp(4,5)".
    std::string display() const;

    bool operator==(const GroupSpec&) const = default;
};

GroupSpec make_spec(Family family, Sign eps, unsigned n, std::uint64_t p, unsigned m);

// Splits an odd prime power into (p, m); throws UsageError otherwise.
std::pair<std::uint64_t, unsigned> split_prime_power(const BigInt& q);

}  // namespace orderspec
