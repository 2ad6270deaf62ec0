#include "orderspec/oracle/order.hpp"

#include <numeric>

#include "orderspec/errors.hpp"

namespace orderspec::oracle {

OrderComputer::OrderComputer(const FiniteField& F, unsigned n, FactorCache* cache) : F_(&F), n_(n) {
    if (n == 0 || n > kMaxDim) throw UsageError("matrix dimension must be in 1..8");
    const BigInt Q = F.q();
    const BigInt p = F.p();
    BigInt ppart = 1;
    while (ppart < n) ppart *= p;
    BigInt l = 1;
    for (unsigned i = 1; i <= n; ++i) l = big_lcm(l, big_pow(Q, i) - 1);
    bound_ = ppart * l;
    if (mpz_sizeinbase(bound_.get_mpz_t(), 2) > 63) throw UsageError("matrix orders exceed 64 bits for this group");
    for (const auto& [r, e] : factorize(bound_, cache)) {
        Step s;
        s.r = r.get_ui();
        s.e = e;
        s.cofactor = Exponent::from(bound_ / big_pow(r, e));
        s.r_exp = Exponent::from(r);
        steps_.push_back(std::move(s));
    }
}

template <class Done>
std::uint64_t OrderComputer::peel(const FqMatrix& g, Done done) const {
    std::uint64_t ord = 1;
    for (const auto& s : steps_) {
        FqMatrix y = mat_pow(*F_, g, s.cofactor);
        unsigned j = 0;
        while (!done(y)) {
            y = mat_pow(*F_, y, s.r_exp);
            ord *= s.r;
            if (++j > s.e) throw UsageError("order computation exceeded its bound (singular matrix?)");
        }
    }
    return ord;
}

std::uint64_t OrderComputer::order(const FqMatrix& g) const {
    return peel(g, [](const FqMatrix& y) { return is_identity(y); });
}

std::uint64_t OrderComputer::projective_order(const FqMatrix& g) const {
    return peel(g, [](const FqMatrix& y) { return is_scalar(y); });
}

std::uint64_t OrderComputer::tau_coset_order(const FqMatrix& g) const {
    return 2 * projective_order(mat_mul(*F_, g, inverse_transpose(*F_, g)));
}

namespace {

void require_invertible(const FiniteField& F, const FqMatrix& g) {
    if (determinant(F, g) == 0) throw UsageError("matrix is singular");
}

}  // namespace

std::uint64_t matrix_order(const FiniteField& F, const FqMatrix& g) {
    require_invertible(F, g);
    return OrderComputer(F, g.n).order(g);
}

std::uint64_t projective_order(const FiniteField& F, const FqMatrix& g) {
    require_invertible(F, g);
    return OrderComputer(F, g.n).projective_order(g);
}

std::uint64_t tau_coset_order(const FiniteField& F, const FqMatrix& g) {
    require_invertible(F, g);
    return OrderComputer(F, g.n).tau_coset_order(g);
}

std::uint64_t twisted_field_coset_order(const FiniteField& F, const FqMatrix& g, unsigned b, bool include_tau,
                                        bool unitary) {
    require_invertible(F, g);
    const unsigned M = F.m();
    unsigned k;
    unsigned shift = b % M;
    bool apply_tau = include_tau;
    if (unitary) {
        if (M % 2 != 0) throw UsageError("unitary groups live over a field of even degree");
        FqMatrix check = mat_mul(F, g, transpose(frobenius(F, g, M / 2)));
        if (!is_identity(check)) throw UsageError("matrix is not in the unitary group");
        // On GU the inverse transpose agrees with x -> x^q.
        if (include_tau) shift = (shift + M / 2) % M;
        apply_tau = false;
        k = M / std::gcd(shift == 0 ? M : shift, M);
    } else {
        k = M / std::gcd(shift == 0 ? M : shift, M);
        if (include_tau) k = std::lcm(k, 2u);
    }
    auto sigma = [&](const FqMatrix& x) {
        FqMatrix y = frobenius(F, x, shift);
        return apply_tau ? inverse_transpose(F, y) : y;
    };
    FqMatrix norm = g;
    FqMatrix cur = g;
    for (unsigned j = 1; j < k; ++j) {
        cur = sigma(cur);
        norm = mat_mul(F, cur, norm);
    }
    return k * OrderComputer(F, g.n).projective_order(norm);
}

}  // namespace orderspec::oracle
