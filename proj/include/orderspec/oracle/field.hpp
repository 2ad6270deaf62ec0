#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace orderspec::oracle {

using Elem = std::uint16_t;

// F_{p^m} with q <= 1024. Elements are integers whose base-p digits are the
// polynomial coefficients (constant term first) modulo the stored modulus.
class FiniteField {
public:
    static constexpr std::uint32_t kMaxSize = 1024;

    // Modulus: lexicographically smallest monic irreducible, compared on (c0, c1, ...).
    FiniteField(std::uint32_t p, unsigned m);
    // Explicit modulus given as m+1 coefficients, constant term first, monic.
    FiniteField(std::uint32_t p, const std::vector<std::uint32_t>& modulus);

    std::uint32_t p() const { return p_; }
    unsigned m() const { return m_; }
    std::uint32_t q() const { return q_; }
    bool is_prime_field() const { return m_ == 1; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    Elem primitive() const { return exp_[1]; }

    Elem add(Elem a, Elem b) const {
        return m_ == 1 ? static_cast<Elem>((a + b) % p_) : add_[static_cast<std::size_t>(a) * q_ + b];
    }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;
    Elem from_int(long long v) const;

    // Discrete logarithm to the stored primitive element (a != 0).
    std::uint32_t log(Elem a) const { return log_[a]; }
    Elem exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }

    // a^{p^k}
    Elem frobenius(Elem a, unsigned k) const;
    bool is_square(Elem a) const { return a != 0 && log_[a] % 2 == 0; }

    // Coefficient digits of a, constant term first.
    std::vector<std::uint32_t> digits(Elem a) const;
    std::string to_string(Elem a) const;

    bool operator==(const FiniteField& other) const {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

private:
    void build();

    std::uint32_t p_;
    unsigned m_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<Elem> add_;
    std::vector<Elem> neg_;
    std::vector<Elem> exp_;  // length 2(q-1), so exp_[log a + log b] needs no reduction
    std::vector<std::uint32_t> log_;
};

// Whether a monic polynomial over F_p (constant term first) is irreducible.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace orderspec::oracle
