#pragma once

#include <functional>
#include <vector>

#include "orderspec/group_spec.hpp"
#include "orderspec/spectrum.hpp"

namespace orderspec {

// One unreduced generator together with the shape that produced it.
struct RawGenerator {
    BigInt value;
    int item = 0;                 // 1-based item of the generating list
    std::vector<unsigned> parts;  // semisimple block sizes, non-increasing
    unsigned t = 0;               // unipotent exponent, 0 when absent
    std::vector<Sign> signs;      // per-part signs where the item carries them
};

// Calls fn(parts) for every partition of total into at least min_parts parts
// (parts listed in non-increasing order).
void for_each_partition(unsigned total, unsigned min_parts,
                        const std::function<void(const std::vector<unsigned>&)>& fn);

std::vector<RawGenerator> spectrum_linear_raw(const GroupSpec& spec);
Spectrum spectrum_linear(const GroupSpec& spec);

std::vector<RawGenerator> spectrum_symplectic_raw(const GroupSpec& spec);
Spectrum spectrum_symplectic(const GroupSpec& spec);

// Semisimple part only.
std::vector<RawGenerator> spectrum_orthogonal_semisimple_raw(const GroupSpec& spec);
Spectrum spectrum_orthogonal_semisimple(const GroupSpec& spec);

// Dispatches on the family (SL is not covered by a closed form).
Spectrum spectrum_of(const GroupSpec& spec);

// (n)_2 > (q - eps)_2, for even n >= 4.
bool check_2adj(unsigned n, const BigInt& q, Sign eps);

}  // namespace orderspec
