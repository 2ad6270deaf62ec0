#pragma once

#include <cstdint>
#include <vector>

#include "orderspec/arith.hpp"
#include "orderspec/oracle/matrix.hpp"

namespace orderspec::oracle {

// Orders of n x n matrices over a fixed field. Peels the prime factors of the
// bound p^{ceil(log_p n)} * lcm_{i <= n}(Q^i - 1), Q the field size.
class OrderComputer {
public:
    OrderComputer(const FiniteField& F, unsigned n, FactorCache* cache = nullptr);

    const FiniteField& field() const { return *F_; }
    unsigned dim() const { return n_; }
    const BigInt& bound() const { return bound_; }

    // The input must be invertible; checked only by the free functions below.
    std::uint64_t order(const FqMatrix& g) const;
    std::uint64_t projective_order(const FqMatrix& g) const;
    // 2 * projective order of g g^{-T}.
    std::uint64_t tau_coset_order(const FqMatrix& g) const;

private:
    struct Step {
        std::uint64_t r;
        unsigned e;
        Exponent cofactor;
        Exponent r_exp;
    };
    template <class Done>
    std::uint64_t peel(const FqMatrix& g, Done done) const;

    const FiniteField* F_;
    unsigned n_;
    BigInt bound_;
    std::vector<Step> steps_;
};

std::uint64_t matrix_order(const FiniteField& F, const FqMatrix& g);
std::uint64_t projective_order(const FiniteField& F, const FqMatrix& g);
std::uint64_t tau_coset_order(const FiniteField& F, const FqMatrix& g);

// Order of sigma g where sigma = (x -> x^{p^b}), composed with inverse transpose
// when include_tau. With unitary = true, g must lie in GU_n(sqrt(Q)) and sigma
// is taken as an automorphism of that group. Returns k * projective order of
// the twisted norm sigma^{k-1}(g) ... sigma(g) g, k the order of sigma.
std::uint64_t twisted_field_coset_order(const FiniteField& F, const FqMatrix& g, unsigned b, bool include_tau,
                                        bool unitary = false);

}  // namespace orderspec::oracle
