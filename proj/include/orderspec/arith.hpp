#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace orderspec {

using BigInt = mpz_class;

struct PrimePower {
    BigInt prime;
    unsigned exponent = 0;

    bool operator==(const PrimePower&) const = default;
};

// Sorted by prime, exponents >= 1.
using Factorization = std::vector<PrimePower>;

enum class Sign : int { Plus = 1, Minus = -1 };

inline int sign_value(Sign e) { return static_cast<int>(e); }
inline char sign_char(Sign e) { return e == Sign::Plus ? '+' : '-'; }

struct SignedBase {
    BigInt q;
    Sign eps = Sign::Plus;
};

BigInt big_pow(const BigInt& base, unsigned long exp);
BigInt big_gcd(const BigInt& a, const BigInt& b);
BigInt big_lcm(const BigInt& a, const BigInt& b);

// q^k - eps^k
BigInt signed_power_minus(const BigInt& q, unsigned long k, Sign eps);

BigInt lcm_list(const std::vector<BigInt>& values);

// (a)_b and (a)_{b'}.
BigInt pi_part(const BigInt& a, const BigInt& b);
BigInt pi_prime_part(const BigInt& a, const BigInt& b);

// Largest power of 2 dividing a (a != 0).
BigInt two_part(const BigInt& a);
BigInt odd_part(const BigInt& a);

bool is_probable_prime(const BigInt& n);

// Thread-safe memo of factorizations, persisted as "n: p1^e1 p2^e2" lines.
class FactorCache {
public:
    bool lookup(const BigInt& n, Factorization& out) const;
    void store(const BigInt& n, const Factorization& f);

    void load(const std::string& path);
    void save(const std::string& path) const;
    std::size_t size() const;

private:
    mutable std::mutex mu_;
    std::map<std::string, Factorization> entries_;
};

// Without an explicit cache the process-wide default (if set) is used.
Factorization factorize(const BigInt& n, FactorCache* cache = nullptr);
void set_default_factor_cache(FactorCache* cache);

std::string format_factorization(const Factorization& f);
Factorization parse_factorization(const std::string& text);

std::vector<BigInt> divisors(const Factorization& f);

// R_k(eps q): primes dividing q^k - eps^k and no q^i - eps^i with i < k.
std::set<BigInt> primitive_prime_divisors(const SignedBase& base, unsigned k);

// If x = p^e for some e >= 0, returns e; otherwise -1.
int power_of_exponent(const BigInt& x, const BigInt& p);

// Multiplicative order of a modulo r (gcd(a, r) = 1, r >= 2).
BigInt multiplicative_order(const BigInt& a, const BigInt& r);

}  // namespace orderspec
