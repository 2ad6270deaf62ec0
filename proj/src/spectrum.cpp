#include "orderspec/spectrum.hpp"

#include <algorithm>

#include "orderspec/errors.hpp"

namespace orderspec {

bool Spectrum::contains(const BigInt& a) const {
    if (a < 1) throw UsageError("Spectrum::contains: argument must be positive");
    for (const auto& g : gens_)
        if (mpz_divisible_p(g.get_mpz_t(), a.get_mpz_t())) return true;
    return false;
}

std::vector<BigInt> Spectrum::elements() const { return divisor_closure(gens_); }

bool Spectrum::subset_of(const Spectrum& other) const {
    return std::all_of(gens_.begin(), gens_.end(), [&](const BigInt& g) { return other.contains(g); });
}

Spectrum normalize(std::vector<BigInt> values) {
    if (values.empty()) throw UsageError("normalize: empty list");
    for (const auto& v : values)
        if (v < 1) throw UsageError("normalize: values must be positive");
    std::sort(values.begin(), values.end(), [](const BigInt& a, const BigInt& b) { return a > b; });
    values.erase(std::unique(values.begin(), values.end()), values.end());
    Spectrum s;
    for (const auto& v : values) {
        // Anything v could divide is at least as large, so it is already in gens_.
        bool dominated = std::any_of(s.gens_.begin(), s.gens_.end(), [&](const BigInt& g) {
            return mpz_divisible_p(g.get_mpz_t(), v.get_mpz_t()) != 0;
        });
        if (!dominated) s.gens_.push_back(v);
    }
    return s;
}

std::vector<BigInt> divisor_closure(const std::vector<BigInt>& values) {
    std::vector<BigInt> out;
    for (const auto& v : values) {
        auto ds = divisors(factorize(v));
        out.insert(out.end(), ds.begin(), ds.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace orderspec
