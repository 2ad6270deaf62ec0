#include "orderspec/oracle/field.hpp"

#include <algorithm>

#include "orderspec/arith.hpp"
#include "orderspec/errors.hpp"

namespace orderspec::oracle {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial b over F_p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        std::uint32_t lead = a.back();
        std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
        trim(a);
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

Poly decode(std::uint32_t v, std::uint32_t p, unsigned m) {
    Poly r(m, 0);
    for (unsigned i = 0; i < m; ++i) {
        r[i] = v % p;
        v /= p;
    }
    trim(r);
    return r;
}

std::uint32_t encode(const Poly& a, std::uint32_t p) {
    std::uint32_t v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
    Poly f = poly;
    trim(f);
    if (f.size() < 2 || f.back() != 1) return false;
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    for (std::size_t k = 1; 2 * k <= deg; ++k) {
        std::uint32_t count = 1;
        for (std::size_t i = 0; i < k; ++i) count *= p;
        for (std::uint32_t low = 0; low < count; ++low) {
            Poly g = decode(low, p, static_cast<unsigned>(k));
            g.resize(k, 0);
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

FiniteField::FiniteField(std::uint32_t p, unsigned m) : p_(p), m_(m) {
    if (p < 3 || p % 2 == 0 || !is_probable_prime(BigInt(static_cast<unsigned long>(p))))
        throw UsageError("field characteristic must be an odd prime");
    if (m < 1) throw UsageError("field degree must be positive");
    std::uint64_t size = 1;
    for (unsigned i = 0; i < m; ++i) {
        size *= p;
        if (size > kMaxSize) throw UsageError("oracle fields are limited to q <= 1024");
    }
    q_ = static_cast<std::uint32_t>(size);
    std::vector<Poly> candidates;
    for (std::uint32_t low = 0; low < q_; ++low) {
        Poly c(m, 0);
        std::uint32_t v = low;
        for (unsigned i = 0; i < m; ++i) {
            c[i] = v % p;
            v /= p;
        }
        c.push_back(1);
        candidates.push_back(c);
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& c : candidates) {
        if (is_irreducible_mod_p(c, p)) {
            modulus_ = c;
            break;
        }
    }
    build();
}

FiniteField::FiniteField(std::uint32_t p, const std::vector<std::uint32_t>& modulus)
    : p_(p), m_(static_cast<unsigned>(modulus.size() ? modulus.size() - 1 : 0)), modulus_(modulus) {
    if (p < 3 || p % 2 == 0 || !is_probable_prime(BigInt(static_cast<unsigned long>(p))))
        throw UsageError("field characteristic must be an odd prime");
    if (m_ < 1 || !is_irreducible_mod_p(modulus_, p)) throw UsageError("modulus must be monic irreducible");
    std::uint64_t size = 1;
    for (unsigned i = 0; i < m_; ++i) {
        size *= p;
        if (size > kMaxSize) throw UsageError("oracle fields are limited to q <= 1024");
    }
    q_ = static_cast<std::uint32_t>(size);
    build();
}

void FiniteField::build() {
    auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
        return encode(poly_mod(poly_mul(decode(a, p_, m_), decode(b, p_, m_), p_), modulus_, p_), p_);
    };
    auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    };

    neg_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
        Poly d = decode(a, p_, m_);
        for (auto& c : d) c = (p_ - c) % p_;
        neg_[a] = static_cast<Elem>(encode(d, p_));
    }
    if (m_ > 1) {
        add_.resize(static_cast<std::size_t>(q_) * q_);
        for (std::uint32_t a = 0; a < q_; ++a) {
            for (std::uint32_t b = 0; b < q_; ++b) {
                std::uint32_t r = 0, x = a, y = b, place = 1;
                for (unsigned i = 0; i < m_; ++i) {
                    r += ((x % p_ + y % p_) % p_) * place;
                    x /= p_;
                    y /= p_;
                    place *= p_;
                }
                add_[static_cast<std::size_t>(a) * q_ + b] = static_cast<Elem>(r);
            }
        }
    }

    const BigInt group_order = q_ - 1;
    const Factorization f = factorize(group_order);
    std::uint32_t gen = 0;
    for (std::uint32_t g = 1; g < q_ && gen == 0; ++g) {
        bool primitive = true;
        for (const auto& pp : f) {
            std::uint64_t e = (q_ - 1) / pp.prime.get_ui();
            if (slow_pow(g, e) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) gen = g;
    }
    if (gen == 0) throw UsageError("no primitive element found");

    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, 0);
    std::uint32_t x = 1;
    for (std::uint32_t k = 0; k < q_ - 1; ++k) {
        exp_[k] = static_cast<Elem>(x);
        exp_[k + q_ - 1] = static_cast<Elem>(x);
        log_[x] = k;
        x = slow_mul(x, gen);
    }
    if (x != 1) throw UsageError("primitive element check failed");
}

Elem FiniteField::inv(Elem a) const {
    if (a == 0) throw UsageError("division by zero in finite field");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem FiniteField::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    std::uint64_t k = (static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[k];
}

Elem FiniteField::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

Elem FiniteField::frobenius(Elem a, unsigned k) const {
    std::uint64_t e = 1;
    for (unsigned i = 0; i < k % m_; ++i) e *= p_;
    return pow(a, e);
}

std::vector<std::uint32_t> FiniteField::digits(Elem a) const {
    std::vector<std::uint32_t> d(m_, 0);
    std::uint32_t v = a;
    for (unsigned i = 0; i < m_; ++i) {
        d[i] = v % p_;
        v /= p_;
    }
    return d;
}

std::string FiniteField::to_string(Elem a) const {
    if (m_ == 1) return std::to_string(a);
    std::string s;
    auto d = digits(a);
    for (unsigned i = m_; i-- > 0;) {
        if (d[i] == 0) continue;
        if (!s.empty()) s += "+";
        std::string coef = d[i] == 1 && i > 0 ? "" : std::to_string(d[i]);
        s += coef + (i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i)));
    }
    return s.empty() ? "0" : s;
}

}  // namespace orderspec::oracle
