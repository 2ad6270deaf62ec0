#include "orderspec/arith.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>

#include "orderspec/errors.hpp"

namespace orderspec {

namespace {

constexpr unsigned kTrialLimit = 1000000;

const std::vector<unsigned>& small_primes() {
    static const std::vector<unsigned> primes = [] {
        std::vector<bool> composite(kTrialLimit + 1, false);
        std::vector<unsigned> out;
        for (unsigned i = 2; i <= kTrialLimit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialLimit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

// Brent's variant of Pollard rho. n is odd, composite, and has no factor below kTrialLimit.
BigInt rho_split(const BigInt& n) {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(0x5eed);
    while (true) {
        BigInt y = rng.get_z_range(n);
        BigInt c = rng.get_z_range(n - 1) + 1;
        const unsigned long m = 128;
        BigInt g = 1, r_acc = 1, x, ys, tmp;
        unsigned long r = 1;
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = (y * y + c) % n;
                    tmp = abs(x - y);
                    r_acc = (r_acc * tmp) % n;
                }
                g = big_gcd(r_acc, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = (ys * ys + c) % n;
                tmp = abs(x - ys);
                g = big_gcd(tmp, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split_into(const BigInt& n, std::map<BigInt, unsigned>& acc) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        acc[n] += 1;
        return;
    }
    BigInt f = rho_split(n);
    split_into(f, acc);
    split_into(BigInt(n / f), acc);
}

std::string key_of(const BigInt& n) { return n.get_str(); }

}  // namespace

BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigInt big_gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

BigInt big_lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

BigInt signed_power_minus(const BigInt& q, unsigned long k, Sign eps) {
    BigInt r = big_pow(q, k);
    if (eps == Sign::Minus && k % 2 == 1) return r + 1;
    return r - 1;
}

BigInt lcm_list(const std::vector<BigInt>& values) {
    if (values.empty()) throw UsageError("lcm_list: empty list");
    BigInt r = 1;
    for (const auto& v : values) {
        if (v <= 0) throw UsageError("lcm_list: values must be positive");
        r = big_lcm(r, v);
    }
    return r;
}

BigInt pi_part(const BigInt& a, const BigInt& b) {
    if (a < 1 || b < 1) throw UsageError("pi_part: arguments must be positive");
    BigInt x = a, part = 1;
    BigInt g = big_gcd(x, b);
    while (g > 1) {
        while (mpz_divisible_p(x.get_mpz_t(), g.get_mpz_t())) {
            x /= g;
            part *= g;
        }
        g = big_gcd(x, g);
    }
    return part;
}

BigInt pi_prime_part(const BigInt& a, const BigInt& b) { return a / pi_part(a, b); }

BigInt two_part(const BigInt& a) {
    if (a == 0) throw UsageError("two_part: zero");
    BigInt r;
    mpz_mul_2exp(r.get_mpz_t(), BigInt(1).get_mpz_t(), mpz_scan1(a.get_mpz_t(), 0));
    return r;
}

BigInt odd_part(const BigInt& a) { return abs(a) / two_part(a); }

bool is_probable_prime(const BigInt& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

bool FactorCache::lookup(const BigInt& n, Factorization& out) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(key_of(n));
    if (it == entries_.end()) return false;
    out = it->second;
    return true;
}

void FactorCache::store(const BigInt& n, const Factorization& f) {
    std::lock_guard<std::mutex> lock(mu_);
    entries_[key_of(n)] = f;
}

std::size_t FactorCache::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return entries_.size();
}

void FactorCache::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) return;  // a missing cache file is just an empty cache
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw UsageError("factor cache " + path + ":" + std::to_string(lineno) + ": missing ':'");
        BigInt n;
        if (n.set_str(line.substr(0, colon), 10) != 0 || n < 1)
            throw UsageError("factor cache " + path + ":" + std::to_string(lineno) + ": bad integer");
        Factorization f = parse_factorization(line.substr(colon + 1));
        BigInt check = 1;
        for (const auto& pp : f) check *= big_pow(pp.prime, pp.exponent);
        if (check != n)
            throw UsageError("factor cache " + path + ":" + std::to_string(lineno) + ": product mismatch");
        store(n, f);
    }
}

void FactorCache::save(const std::string& path) const {
    std::lock_guard<std::mutex> lock(mu_);
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write factor cache " + path);
    for (const auto& [n, f] : entries_) out << n << ": " << format_factorization(f) << "\n";
}

namespace {
std::atomic<FactorCache*> g_default_cache{nullptr};
}  // namespace

void set_default_factor_cache(FactorCache* cache) { g_default_cache.store(cache); }

Factorization factorize(const BigInt& n, FactorCache* cache) {
    if (n < 1) throw UsageError("factorize: argument must be positive");
    if (!cache) cache = g_default_cache.load();
    Factorization result;
    if (cache && cache->lookup(n, result)) return result;

    BigInt x = n;
    std::map<BigInt, unsigned> acc;
    for (unsigned p : small_primes()) {
        if (x == 1) break;
        if (BigInt(p) * p > x) break;
        if (mpz_divisible_ui_p(x.get_mpz_t(), p)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(x.get_mpz_t(), p)) {
                mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), p);
                ++e;
            }
            acc[BigInt(p)] = e;
        }
    }
    if (x > 1) split_into(x, acc);
    for (const auto& [p, e] : acc) result.push_back({p, e});
    if (cache) cache->store(n, result);
    return result;
}

std::string format_factorization(const Factorization& f) {
    std::ostringstream os;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) os << ' ';
        os << f[i].prime << '^' << f[i].exponent;
    }
    return os.str();
}

Factorization parse_factorization(const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    Factorization f;
    while (is >> tok) {
        auto caret = tok.find('^');
        PrimePower pp;
        std::string base = caret == std::string::npos ? tok : tok.substr(0, caret);
        if (pp.prime.set_str(base, 10) != 0 || pp.prime < 2) throw UsageError("bad factor token '" + tok + "'");
        pp.exponent = 1;
        if (caret != std::string::npos) {
            try {
                pp.exponent = static_cast<unsigned>(std::stoul(tok.substr(caret + 1)));
            } catch (const std::exception&) {
                throw UsageError("bad exponent in '" + tok + "'");
            }
            if (pp.exponent == 0) throw UsageError("zero exponent in '" + tok + "'");
        }
        f.push_back(pp);
    }
    std::sort(f.begin(), f.end(), [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return f;
}

std::vector<BigInt> divisors(const Factorization& f) {
    std::vector<BigInt> out{1};
    for (const auto& [p, e] : f) {
        std::size_t base = out.size();
        BigInt pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::set<BigInt> primitive_prime_divisors(const SignedBase& base, unsigned k) {
    if (k < 1) throw UsageError("primitive_prime_divisors: k must be positive");
    if (base.q < 2) throw UsageError("primitive_prime_divisors: q must be at least 2");
    std::set<BigInt> out;
    BigInt top = signed_power_minus(base.q, k, base.eps);
    for (const auto& [r, e] : factorize(top)) {
        bool primitive = true;
        for (unsigned i = 1; i < k && primitive; ++i) {
            BigInt earlier = signed_power_minus(base.q, i, base.eps);
            if (earlier != 0 && mpz_divisible_p(earlier.get_mpz_t(), r.get_mpz_t())) primitive = false;
        }
        if (primitive) out.insert(r);
    }
    return out;
}

int power_of_exponent(const BigInt& x, const BigInt& p) {
    if (x < 1 || p < 2) return -1;
    BigInt y = x;
    int e = 0;
    while (mpz_divisible_p(y.get_mpz_t(), p.get_mpz_t())) {
        y /= p;
        ++e;
    }
    return y == 1 ? e : -1;
}

BigInt multiplicative_order(const BigInt& a, const BigInt& r) {
    if (r < 2 || big_gcd(a, r) != 1) throw UsageError("multiplicative_order: need gcd(a, r) = 1, r >= 2");
    // r is prime at every call site; fall back to the Euler totient bound otherwise.
    BigInt bound = r - 1;
    if (!is_probable_prime(r)) {
        bound = 1;
        for (const auto& [pr, e] : factorize(r)) bound *= (pr - 1) * big_pow(pr, e - 1);
    }
    BigInt ord = bound;
    BigInt am = ((a % r) + r) % r;
    for (const auto& [pr, e] : factorize(bound)) {
        for (unsigned i = 0; i < e; ++i) {
            BigInt cand = ord / pr;
            BigInt v;
            mpz_powm(v.get_mpz_t(), am.get_mpz_t(), cand.get_mpz_t(), r.get_mpz_t());
            if (v == 1) ord = cand;
            else break;
        }
    }
    return ord;
}

}  // namespace orderspec
