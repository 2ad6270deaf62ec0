#pragma once

#include <vector>

#include "orderspec/arith.hpp"

namespace orderspec {

// A divisor-closed set of positive integers, stored as its maximal elements in
// descending order.
class Spectrum {
public:
    Spectrum() = default;

    const std::vector<BigInt>& generators() const { return gens_; }
    bool contains(const BigInt& a) const;
    bool contains(std::uint64_t a) const { return contains(BigInt(static_cast<unsigned long>(a))); }

    // Every element of the set. Intended for small spectra only.
    std::vector<BigInt> elements() const;

    // Divisor closure of this set is contained in the divisor closure of other.
    bool subset_of(const Spectrum& other) const;

    bool operator==(const Spectrum& other) const { return gens_ == other.gens_; }

    friend Spectrum normalize(std::vector<BigInt> values);

private:
    std::vector<BigInt> gens_;
};

Spectrum normalize(std::vector<BigInt> values);

// Divisor closure of the values, by a fresh factorization of each value.
std::vector<BigInt> divisor_closure(const std::vector<BigInt>& values);

}  // namespace orderspec
