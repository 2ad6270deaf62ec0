#include "orderspec/coset.hpp"

#include <algorithm>
#include <numeric>

#include "orderspec/outer.hpp"
#include "orderspec/spectra.hpp"

namespace orderspec {

namespace {

bool constraint_holds(Constraint c, const BigInt& b, std::uint64_t p) {
    switch (c) {
        case Constraint::None: return true;
        case Constraint::PDivisible: return mpz_divisible_ui_p(b.get_mpz_t(), p) != 0;
        case Constraint::PPrimeOnly: return mpz_divisible_ui_p(b.get_mpz_t(), p) == 0;
    }
    return false;
}

void require_linear_socle(const GroupSpec& socle) {
    socle.validate();
    if (socle.family != Family::PSL && socle.family != Family::PGL)
        throw UsageError("socle must be PSL/PSU or PGL/PGU");
    if (socle.n < 3) throw UsageError("coset spectra need n >= 3");
}

GroupSpec with(const GroupSpec& base, Family f, Sign eps, unsigned n, unsigned m) {
    return make_spec(f, eps, n, base.p, m);
}

}  // namespace

std::string constraint_name(Constraint c) {
    switch (c) {
        case Constraint::None: return "none";
        case Constraint::PDivisible: return "p_divisible";
        case Constraint::PPrimeOnly: return "p_prime_only";
    }
    return "?";
}

void CosetSpectrum::append(const CosetSpectrum& other) {
    pieces_.insert(pieces_.end(), other.pieces_.begin(), other.pieces_.end());
}

CosetSpectrum CosetSpectrum::scaled(const BigInt& k) const {
    CosetSpectrum out = *this;
    for (auto& piece : out.pieces_) piece.multiplier *= k;
    return out;
}

bool CosetSpectrum::contains(const BigInt& a) const {
    if (a < 1) throw UsageError("CosetSpectrum::contains: argument must be positive");
    for (const auto& piece : pieces_) {
        if (!mpz_divisible_p(a.get_mpz_t(), piece.multiplier.get_mpz_t())) continue;
        BigInt b = a / piece.multiplier;
        if (constraint_holds(piece.constraint, b, piece.p) && piece.base.contains(b)) return true;
    }
    return false;
}

std::vector<BigInt> CosetSpectrum::maximal_elements() const {
    std::vector<BigInt> values;
    for (const auto& piece : pieces_) {
        for (const auto& g : piece.base.generators()) {
            switch (piece.constraint) {
                case Constraint::None: values.push_back(piece.multiplier * g); break;
                case Constraint::PPrimeOnly:
                    values.push_back(piece.multiplier * pi_prime_part(g, BigInt(static_cast<unsigned long>(piece.p))));
                    break;
                case Constraint::PDivisible:
                    if (constraint_holds(Constraint::PDivisible, g, piece.p)) values.push_back(piece.multiplier * g);
                    break;
            }
        }
    }
    if (values.empty()) return {};
    return normalize(values).generators();
}

std::vector<BigInt> CosetSpectrum::elements() const {
    std::vector<BigInt> out;
    for (const auto& piece : pieces_)
        for (const auto& b : piece.base.elements())
            if (constraint_holds(piece.constraint, b, piece.p)) out.push_back(piece.multiplier * b);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CosetSpectrum graph_coset_psl_odd(const GroupSpec& socle) {
    require_linear_socle(socle);
    if (socle.n % 2 == 0) throw UsageError("graph_coset_psl_odd: n must be odd");
    GroupSpec sp = with(socle, Family::Sp, Sign::Plus, (socle.n - 1) / 2, socle.m);
    return CosetSpectrum({{2, spectrum_symplectic(sp), Constraint::None, socle.p}});
}

CosetSpectrum graph_coset_pgl_even(const GroupSpec& socle) {
    require_linear_socle(socle);
    if (socle.n % 2 != 0) throw UsageError("graph_coset_pgl_even: n must be even");
    GroupSpec psp = with(socle, Family::PSp, Sign::Plus, socle.n / 2, socle.m);
    return CosetSpectrum({{2, spectrum_symplectic(psp), Constraint::None, socle.p}});
}

CosetSpectrum graph_coset_psl_even(const GroupSpec& socle) {
    require_linear_socle(socle);
    if (socle.n % 2 != 0) throw UsageError("graph_coset_psl_even: n must be even");
    const unsigned half = socle.n / 2;
    CosetSpectrum out;
    for (Sign s : {Sign::Plus, Sign::Minus}) {
        GroupSpec po = with(socle, Family::POmegaEven, s, half, socle.m);
        out.add({2, spectrum_orthogonal_semisimple(po), Constraint::PPrimeOnly, socle.p});
    }
    if (socle.n > 4) {
        GroupSpec om = with(socle, Family::OmegaOdd, Sign::Plus, half, socle.m);
        out.add({2, spectrum_symplectic(om), Constraint::PDivisible, socle.p});
    } else {
        const BigInt q = socle.q();
        const BigInt p = socle.p_big();
        std::vector<BigInt> unip{p * (q + 1) / 2, p * (q - 1) / 2};
        if (socle.p == 3) unip.push_back(9);
        out.add({2, normalize(unip), Constraint::PDivisible, socle.p});
    }
    return out;
}

CosetSpectrum graph_coset(const GroupSpec& socle) {
    require_linear_socle(socle);
    if (socle.n % 2 == 1) return graph_coset_psl_odd(socle);
    if (socle.family == Family::PGL) return graph_coset_pgl_even(socle);
    return graph_coset_psl_even(socle);
}

CosetResult field_coset_spectrum(const GroupSpec& socle, unsigned i, unsigned k, FieldVariant variant) {
    require_linear_socle(socle);
    if (socle.family != Family::PSL) throw UsageError("field_coset_spectrum: socle must be PSL or PSU");
    if (k < 1 || socle.m % k != 0) throw UsageError("field_coset_spectrum: k must divide m");
    const unsigned n = socle.n;
    const unsigned m0 = socle.m / k;
    const BigInt q = socle.q();
    const BigInt q0 = big_pow(socle.p_big(), m0);
    const BigInt d = big_gcd(BigInt(n), socle.eps == Sign::Plus ? BigInt(q - 1) : BigInt(q + 1));
    const BigInt ii = BigInt(i) % d;
    const GroupSpec lin0 = with(socle, Family::PSL, Sign::Plus, n, m0);
    const GroupSpec uni0 = with(socle, Family::PSL, Sign::Minus, n, m0);
    auto divides_i = [&](const BigInt& x) { return ii % x == 0; };
    auto graph_ok = [&] { return n % 2 == 1 || ii % 2 == 0; };
    const BigInt kk = k;

    if (socle.eps == Sign::Plus) {
        if (variant == FieldVariant::Plain) {
            if (!divides_i(big_gcd(BigInt(n), q0 - 1)))
                return Unsupported{"no closed form for a nontrivial diagonal coset of PSL_n(q0)"};
            return CosetSpectrum({{kk, spectrum_linear(lin0), Constraint::None, socle.p}});
        }
        if (k % 2 == 0) {
            if (!divides_i(big_gcd(BigInt(n), q0 + 1)))
                return Unsupported{"no closed form for a nontrivial diagonal coset of PSU_n(q0)"};
            return CosetSpectrum({{kk, spectrum_linear(uni0), Constraint::None, socle.p}});
        }
        if (!graph_ok()) return Unsupported{"no closed form for the tau-delta coset with n even"};
        return graph_coset(lin0).scaled(kk);
    }
    if (variant == FieldVariant::Plain) {
        if (!graph_ok()) return Unsupported{"no closed form for the tau-delta coset with n even"};
        return graph_coset(lin0).scaled(kk);
    }
    if (k % 2 == 0) return Unsupported{"no closed form for this unitary field-graph coset"};
    if (!divides_i(big_gcd(BigInt(n), q0 + 1)))
        return Unsupported{"no closed form for a nontrivial diagonal coset of PSU_n(q0)"};
    return CosetSpectrum({{kk, spectrum_linear(uni0), Constraint::None, socle.p}});
}

TauCriterionResult tau_criterion(const GroupSpec& socle) {
    socle.validate();
    if (socle.family != Family::PSL) throw UsageError("tau_criterion: socle must be PSL or PSU");
    if (socle.n < 3) throw UsageError("tau_criterion: n must be at least 3");
    const unsigned n = socle.n;
    const BigInt p = socle.p_big();
    const BigInt q = socle.q();
    const int e = sign_value(socle.eps);
    const BigInt q_eps = q - e;
    const BigInt q_mod4 = q % 4;
    const BigInt n_big = n;
    auto eps_pow = [&](unsigned k) { return (k % 2 == 0 || e == 1) ? 1 : -1; };

    TauCriterionResult r;
    if (int t1 = power_of_exponent(BigInt(n - 2), p); t1 >= 0) {
        if (q_mod4 == ((4 - e) % 4)) r.triggered.push_back({1, 4 * big_pow(p, t1 + 1)});
    }
    if (power_of_exponent(BigInt(n - 1), BigInt(2)) >= 1 && big_gcd(n_big, q_eps) > 1) {
        unsigned h = (n - 1) / 2;
        r.triggered.push_back({2, 2 * (big_pow(q, h) - eps_pow(h))});
    }
    if (int t1 = power_of_exponent(BigInt(n - 1), p); t1 >= 0) {
        r.triggered.push_back({3, 2 * big_pow(p, t1 + 1)});
    }
    if (n % 2 == 0) {
        const unsigned half = n / 2;
        const BigInt n2 = two_part(n_big);
        if (n2 <= two_part(q_eps) && q_mod4 == ((4 + e) % 4)) r.triggered.push_back({4, big_pow(q, half) + eps_pow(half)});
        const unsigned n2u = static_cast<unsigned>(n2.get_ui());
        if (odd_part(n_big) > 3 && odd_part(big_gcd(n_big, q_eps)) > 1) {
            unsigned rest = half - n2u;
            BigInt w = 2 * big_lcm(big_pow(q, n2u) - 1, big_pow(q, rest) + eps_pow(rest));
            r.triggered.push_back({5, w});
        }
    }
    if (!r.triggered.empty()) {
        r.verdict = TauVerdict::Witness;
        r.case_index = r.triggered.front().index;
        r.witness = r.triggered.front().witness;
    }
    return r;
}

CosetResult coset_spectrum(const GroupSpec& socle, const OutElement& y) {
    OutGroup(socle).check(y);
    const unsigned m = socle.m;
    if (socle.eps == Sign::Plus) {
        unsigned k;
        if (y.a == 0) k = 1;
        else if (m % y.a == 0) k = m / y.a;
        else return Unsupported{"field part is not of the form phi^{m/k}"};
        return field_coset_spectrum(socle, y.i, k, y.c ? FieldVariant::Graph : FieldVariant::Plain);
    }
    if (y.a == 0) return field_coset_spectrum(socle, y.i, 1, FieldVariant::Graph);
    if (y.a <= m && m % y.a == 0) return field_coset_spectrum(socle, y.i, m / y.a, FieldVariant::Plain);
    if (y.a > m && m % (y.a - m) == 0) return field_coset_spectrum(socle, y.i, m / (y.a - m), FieldVariant::Graph);
    return Unsupported{"field part is not of the form phi^{m/k} or phi^{m/k+m}"};
}

CosetResult extension_spectrum(const GroupSpec& socle, const OutElement& generator) {
    OutGroup out(socle);
    out.check(generator);
    const unsigned ord = out.order(generator);
    CosetSpectrum result;
    for (unsigned e = 1; e <= ord; ++e) {
        if (ord % e != 0) continue;
        const unsigned sub = ord / e;
        bool resolved = false;
        for (unsigned u = 1; u <= sub && !resolved; ++u) {
            if (std::gcd(u, sub) != 1) continue;
            CosetResult r = coset_spectrum(socle, out.pow(generator, static_cast<unsigned long>(e) * u));
            if (auto* cs = std::get_if<CosetSpectrum>(&r)) {
                result.append(*cs);
                resolved = true;
            }
        }
        if (!resolved)
            return Unsupported{"no closed form for the coset of " + out.to_string(out.pow(generator, e))};
    }
    return result;
}

}  // namespace orderspec
