#include "orderspec/spectra.hpp"

#include <numeric>

#include "orderspec/errors.hpp"

namespace orderspec {

namespace {

void partitions_rec(unsigned remaining, unsigned max_part, std::vector<unsigned>& cur, unsigned min_parts,
                    const std::function<void(const std::vector<unsigned>&)>& fn) {
    if (remaining == 0) {
        if (cur.size() >= min_parts) fn(cur);
        return;
    }
    for (unsigned k = std::min(remaining, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(remaining - k, k, cur, min_parts, fn);
        cur.pop_back();
    }
}

BigInt lcm_of_parts(const BigInt& q, const std::vector<unsigned>& parts, Sign eps) {
    BigInt r = 1;
    for (unsigned k : parts) r = big_lcm(r, signed_power_minus(q, k, eps));
    return r;
}

// Distinct part sizes with multiplicities, largest first.
std::vector<std::pair<unsigned, unsigned>> group_parts(const std::vector<unsigned>& parts) {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned k : parts) {
        if (!out.empty() && out.back().first == k) ++out.back().second;
        else out.push_back({k, 1});
    }
    return out;
}

struct SignedLcm {
    BigInt value;
    std::vector<Sign> signs;
    unsigned minus_count = 0;
};

// All lcm values [q^{k_i} - kappa_i] over sign choices. With a part size
// repeated c times, only the set of signs used and the number of minus signs
// matter, so the choice is the number j of minus signs in 0..c.
std::vector<SignedLcm> signed_lcms(const BigInt& q, const std::vector<unsigned>& parts) {
    std::vector<SignedLcm> acc{{BigInt(1), {}, 0}};
    for (auto [k, c] : group_parts(parts)) {
        BigInt plus = big_pow(q, k) - 1;
        BigInt minus = big_pow(q, k) + 1;
        std::vector<SignedLcm> next;
        for (const auto& a : acc) {
            for (unsigned j = 0; j <= c; ++j) {
                SignedLcm b = a;
                if (j < c) b.value = big_lcm(b.value, plus);
                if (j > 0) b.value = big_lcm(b.value, minus);
                for (unsigned i = 0; i < c; ++i) b.signs.push_back(i < c - j ? Sign::Plus : Sign::Minus);
                b.minus_count += j;
                next.push_back(std::move(b));
            }
        }
        acc = std::move(next);
    }
    return acc;
}

std::vector<BigInt> values_of(const std::vector<RawGenerator>& raw) {
    std::vector<BigInt> v;
    v.reserve(raw.size());
    for (const auto& g : raw) v.push_back(g.value);
    return v;
}

}  // namespace

void for_each_partition(unsigned total, unsigned min_parts,
                        const std::function<void(const std::vector<unsigned>&)>& fn) {
    std::vector<unsigned> cur;
    if (total == 0) return;
    partitions_rec(total, total, cur, min_parts, fn);
}

std::vector<RawGenerator> spectrum_linear_raw(const GroupSpec& spec) {
    spec.validate();
    if (spec.family != Family::PSL && spec.family != Family::PGL)
        throw UsageError("spectrum_linear: family must be PSL or PGL");
    const unsigned n = spec.n;
    const BigInt q = spec.q();
    const BigInt p = spec.p_big();
    const Sign eps = spec.eps;
    const BigInt q_eps = eps == Sign::Plus ? BigInt(q - 1) : BigInt(q + 1);
    const BigInt d = spec.family == Family::PGL ? BigInt(1) : big_gcd(BigInt(n), q_eps);
    auto a = [&](unsigned k) { return signed_power_minus(q, k, eps); };

    std::vector<RawGenerator> out;
    out.push_back({a(n) / (q_eps * d), 1, {n}, 0, {}});
    for (unsigned n1 = 1; n1 <= n / 2; ++n1) {
        unsigned n2 = n - n1;
        BigInt div = big_gcd(BigInt(n / std::gcd(n1, n2)), d);
        out.push_back({big_lcm(a(n1), a(n2)) / div, 2, {n2, n1}, 0, {}});
    }
    for_each_partition(n, 3, [&](const std::vector<unsigned>& parts) {
        out.push_back({lcm_of_parts(q, parts, eps), 3, parts, 0, {}});
    });
    BigInt pt1 = 1;  // p^{t-1}
    for (unsigned t = 1; pt1 + 1 <= n; ++t, pt1 *= p) {
        const unsigned jordan = static_cast<unsigned>(pt1.get_ui()) + 1;
        const BigInt pt = pt1 * p;
        const unsigned rest = n - jordan;
        if (rest == 0) {
            BigInt v = spec.family == Family::PGL ? pt : BigInt(big_gcd(BigInt(n), q_eps) * pt / d);
            out.push_back({v, 6, {}, t, {}});
            continue;
        }
        out.push_back({pt * a(rest) / d, 4, {rest}, t, {}});
        for_each_partition(rest, 2, [&](const std::vector<unsigned>& parts) {
            out.push_back({pt * lcm_of_parts(q, parts, eps), 5, parts, t, {}});
        });
    }
    return out;
}

Spectrum spectrum_linear(const GroupSpec& spec) { return normalize(values_of(spectrum_linear_raw(spec))); }

std::vector<RawGenerator> spectrum_symplectic_raw(const GroupSpec& spec) {
    spec.validate();
    BigInt d, c;
    switch (spec.family) {
        case Family::Sp: d = 1; c = 1; break;
        case Family::PSp: d = 2; c = 1; break;
        case Family::OmegaOdd:
            d = 2;
            c = spec.n <= 2 ? 1 : 2;
            break;
        default: throw UsageError("spectrum_symplectic: family must be Sp, PSp or OmegaOdd");
    }
    const unsigned n = spec.n;
    const BigInt q = spec.q();
    const BigInt p = spec.p_big();
    std::vector<RawGenerator> out;
    out.push_back({(big_pow(q, n) + 1) / d, 1, {n}, 0, {Sign::Minus}});
    out.push_back({(big_pow(q, n) - 1) / d, 1, {n}, 0, {Sign::Plus}});
    for_each_partition(n, 2, [&](const std::vector<unsigned>& parts) {
        for (const auto& s : signed_lcms(q, parts)) out.push_back({s.value, 2, parts, 0, s.signs});
    });
    BigInt pt1 = 1;
    for (unsigned t = 1; pt1 + 1 <= 2 * n; ++t, pt1 *= p) {
        const unsigned jordan = static_cast<unsigned>(pt1.get_ui()) + 1;  // even since p is odd
        const BigInt pt = pt1 * p;
        const unsigned rest = (2 * n - jordan) / 2;
        if (rest == 0) {
            out.push_back({2 * pt / d, 5, {}, t, {}});
            continue;
        }
        out.push_back({pt * (big_pow(q, rest) + 1) / c, 3, {rest}, t, {Sign::Minus}});
        out.push_back({pt * (big_pow(q, rest) - 1) / c, 3, {rest}, t, {Sign::Plus}});
        for_each_partition(rest, 2, [&](const std::vector<unsigned>& parts) {
            for (const auto& s : signed_lcms(q, parts)) out.push_back({pt * s.value, 4, parts, t, s.signs});
        });
    }
    return out;
}

Spectrum spectrum_symplectic(const GroupSpec& spec) { return normalize(values_of(spectrum_symplectic_raw(spec))); }

std::vector<RawGenerator> spectrum_orthogonal_semisimple_raw(const GroupSpec& spec) {
    spec.validate();
    if (spec.family != Family::OmegaEven && spec.family != Family::POmegaEven)
        throw UsageError("spectrum_orthogonal_semisimple: family must be Omega or POmega");
    const unsigned n = spec.n;
    const BigInt q = spec.q();
    const Sign eps = spec.eps;
    const unsigned want_parity = eps == Sign::Plus ? 0 : 1;
    const BigInt top = eps == Sign::Plus ? BigInt(big_pow(q, n) - 1) : BigInt(big_pow(q, n) + 1);
    std::vector<RawGenerator> out;
    auto add_products = [&](unsigned min_parts, int item) {
        for_each_partition(n, min_parts, [&](const std::vector<unsigned>& parts) {
            for (const auto& s : signed_lcms(q, parts))
                if (s.minus_count % 2 == want_parity) out.push_back({s.value, item, parts, 0, s.signs});
        });
    };
    if (spec.family == Family::OmegaEven) {
        out.push_back({top / 2, 1, {n}, 0, {eps}});
        add_products(2, 2);
        return out;
    }
    out.push_back({top / big_gcd(BigInt(4), top), 1, {n}, 0, {eps}});
    for (unsigned n1 = 1; n1 <= n / 2; ++n1) {
        unsigned n2 = n - n1;
        for (Sign kappa : {Sign::Plus, Sign::Minus}) {
            Sign kappa2 = sign_value(eps) * sign_value(kappa) > 0 ? Sign::Plus : Sign::Minus;
            BigInt x = big_pow(q, n1) - sign_value(kappa);
            BigInt y = big_pow(q, n2) - sign_value(kappa2);
            BigInt e = two_part(x) == two_part(y) ? 2 : 1;
            out.push_back({big_lcm(x, y) / e, 2, {n2, n1}, 0, {kappa2, kappa}});
        }
    }
    add_products(3, 3);
    return out;
}

Spectrum spectrum_orthogonal_semisimple(const GroupSpec& spec) {
    return normalize(values_of(spectrum_orthogonal_semisimple_raw(spec)));
}

Spectrum spectrum_of(const GroupSpec& spec) {
    switch (spec.family) {
        case Family::PSL:
        case Family::PGL: return spectrum_linear(spec);
        case Family::Sp:
        case Family::PSp:
        case Family::OmegaOdd: return spectrum_symplectic(spec);
        case Family::OmegaEven:
        case Family::POmegaEven: return spectrum_orthogonal_semisimple(spec);
        case Family::SL: break;
    }
    throw UsageError("no closed-form spectrum for " + family_name(spec.family));
}

bool check_2adj(unsigned n, const BigInt& q, Sign eps) {
    if (n < 4 || n % 2 != 0) throw UsageError("check_2adj: n must be even and at least 4");
    if (q % 2 == 0) throw UsageError("check_2adj: q must be odd");
    BigInt q_eps = eps == Sign::Plus ? BigInt(q - 1) : BigInt(q + 1);
    return two_part(BigInt(n)) > two_part(q_eps);
}

}  // namespace orderspec
