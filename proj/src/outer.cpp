#include "orderspec/outer.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "orderspec/errors.hpp"

namespace orderspec {

namespace {

unsigned to_unsigned(const BigInt& x) {
    if (x < 0 || !x.fits_uint_p()) throw UsageError("value out of range: " + x.get_str());
    return static_cast<unsigned>(x.get_ui());
}

unsigned mod_int(long long x, unsigned m) {
    long long r = x % static_cast<long long>(m);
    return static_cast<unsigned>(r < 0 ? r + m : r);
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

OutGroup::OutGroup(const GroupSpec& socle) : eps_(socle.eps), p_(socle.p), m_(socle.m) {
    socle.validate();
    if (socle.family != Family::PSL) throw UsageError("Out is modelled for PSL and PSU socles only");
    if (socle.n < 3) throw UsageError("Out model needs n >= 3");
    BigInt q = socle.q();
    BigInt q_eps = eps_ == Sign::Plus ? BigInt(q - 1) : BigInt(q + 1);
    d_ = to_unsigned(big_gcd(BigInt(socle.n), q_eps));
    p_pow_mod_d_.resize(field_period());
    unsigned v = 1 % d_;
    for (unsigned b = 0; b < field_period(); ++b) {
        p_pow_mod_d_[b] = v;
        v = static_cast<unsigned>((static_cast<std::uint64_t>(v) * (p_ % d_)) % d_);
    }
}

std::size_t OutGroup::size() const { return static_cast<std::size_t>(2) * m_ * d_; }

OutElement OutGroup::delta(unsigned k) const { return {0, 0, k % d_}; }
OutElement OutGroup::phi(unsigned k) const { return {k % field_period(), 0, 0}; }
OutElement OutGroup::tau() const {
    if (eps_ == Sign::Minus) return {m_, 0, 0};
    return {0, 1, 0};
}

void OutGroup::check(const OutElement& x) const {
    bool ok = x.a < field_period() && x.i < d_ && (eps_ == Sign::Plus ? x.c < 2 : x.c == 0);
    if (!ok) throw UsageError("Out element does not belong to this group");
}

OutElement OutGroup::mul(const OutElement& x, const OutElement& y) const {
    check(x);
    check(y);
    std::uint64_t twist = (static_cast<std::uint64_t>(x.i) * p_pow_mod_d_[y.a]) % d_;
    if (eps_ == Sign::Plus && y.c == 1) twist = (d_ - twist) % d_;
    OutElement r;
    r.a = (x.a + y.a) % field_period();
    r.c = eps_ == Sign::Plus ? (x.c + y.c) % 2 : 0;
    r.i = static_cast<unsigned>((twist + y.i) % d_);
    return r;
}

OutElement OutGroup::pow(const OutElement& x, unsigned long k) const {
    OutElement result = identity();
    OutElement base = x;
    while (k) {
        if (k & 1) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

unsigned OutGroup::order(const OutElement& x) const {
    OutElement y = x;
    unsigned k = 1;
    while (!(y == identity())) {
        y = mul(y, x);
        ++k;
    }
    return k;
}

OutElement OutGroup::inverse(const OutElement& x) const { return pow(x, order(x) - 1); }

OutElement OutGroup::conj(const OutElement& x, const OutElement& g) const { return mul(mul(inverse(g), x), g); }

std::size_t OutGroup::index(const OutElement& x) const {
    check(x);
    if (eps_ == Sign::Minus) return static_cast<std::size_t>(x.a) * d_ + x.i;
    return (static_cast<std::size_t>(x.a) * 2 + x.c) * d_ + x.i;
}

OutElement OutGroup::element(std::size_t idx) const {
    if (idx >= size()) throw UsageError("Out element index out of range");
    OutElement x;
    x.i = static_cast<unsigned>(idx % d_);
    idx /= d_;
    if (eps_ == Sign::Minus) {
        x.a = static_cast<unsigned>(idx);
        return x;
    }
    x.c = static_cast<unsigned>(idx % 2);
    x.a = static_cast<unsigned>(idx / 2);
    return x;
}

std::string OutGroup::to_string(const OutElement& x) const {
    check(x);
    std::string out;
    auto token = [&](const char* name, unsigned e) {
        if (e == 0) return;
        if (!out.empty()) out += ' ';
        out += name;
        if (e != 1) out += "^" + std::to_string(e);
    };
    token("f", x.a);
    token("t", x.c);
    token("d", x.i);
    return out.empty() ? "1" : out;
}

OutElement OutGroup::parse(const std::string& word) const {
    OutElement result = identity();
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) {
        throw UsageError("cannot parse Out word '" + word + "' at column " + std::to_string(pos + 1) + ": " + what);
    };
    bool any = false;
    while (pos < word.size()) {
        char ch = word[pos];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*' || ch == '.') {
            ++pos;
            continue;
        }
        OutElement gen;
        if (ch == 'f') gen = phi();
        else if (ch == 't') gen = tau();
        else if (ch == 'd') gen = delta();
        else if (ch == '1') gen = identity();
        else fail("expected one of f, t, d, 1");
        ++pos;
        long long exponent = 1;
        if (pos < word.size() && word[pos] == '^') {
            ++pos;
            std::size_t start = pos;
            if (pos < word.size() && word[pos] == '-') ++pos;
            while (pos < word.size() && std::isdigit(static_cast<unsigned char>(word[pos]))) ++pos;
            if (pos == start || (pos == start + 1 && word[start] == '-')) fail("expected an exponent");
            exponent = std::stoll(word.substr(start, pos - start));
        }
        unsigned ord = order(gen);
        result = mul(result, pow(gen, mod_int(exponent, ord)));
        any = true;
    }
    if (!any) fail("empty word");
    return result;
}

SubgroupClasses subgroup_classes(const GroupSpec& socle, bool reverse_order) {
    OutGroup out(socle);
    const std::size_t size = out.size();
    if (size > kMaxOutSize) throw UsageError("|Out| = " + std::to_string(size) + " is too large to enumerate");

    std::vector<std::size_t> visit(size);
    std::iota(visit.begin(), visit.end(), 0);
    if (reverse_order) std::reverse(visit.begin(), visit.end());
    std::vector<std::size_t> rank(size);
    for (std::size_t k = 0; k < size; ++k) rank[visit[k]] = k;

    // Key of <x>: its generator that comes first in the visiting order.
    std::vector<std::size_t> key(size, size);
    for (std::size_t idx : visit) {
        if (key[idx] != size) continue;
        OutElement x = out.element(idx);
        unsigned ord = out.order(x);
        std::vector<std::size_t> gens;
        for (unsigned u = 1; u <= ord; ++u)
            if (std::gcd(u, ord) == 1) gens.push_back(out.index(out.pow(x, u)));
        std::size_t best = *std::min_element(gens.begin(), gens.end(),
                                             [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
        for (std::size_t g : gens) key[g] = best;
    }

    UnionFind uf(size);
    std::vector<OutElement> conjugators{out.delta(), out.phi()};
    if (socle.eps == Sign::Plus) conjugators.push_back(out.tau());
    for (std::size_t idx = 0; idx < size; ++idx) {
        if (key[idx] != idx) continue;
        OutElement x = out.element(idx);
        for (const auto& g : conjugators) uf.unite(idx, key[out.index(out.conj(x, g))]);
    }

    SubgroupClasses result;
    std::vector<std::size_t> class_id(size, size);
    result.class_of.assign(size, 0);
    for (std::size_t idx : visit) {
        std::size_t root = uf.find(key[idx]);
        if (class_id[root] == size) {
            class_id[root] = result.representatives.size();
            result.representatives.push_back(out.element(key[idx]));
        }
        result.class_of[idx] = class_id[root];
    }
    // Put the trivial subgroup first.
    std::size_t trivial = result.class_of[out.index(out.identity())];
    if (trivial != 0) {
        std::swap(result.representatives[0], result.representatives[trivial]);
        for (auto& c : result.class_of) {
            if (c == 0) c = trivial;
            else if (c == trivial) c = 0;
        }
    }
    return result;
}

std::vector<OutElement> cyclic_subgroups_up_to_conjugacy(const GroupSpec& socle) {
    return subgroup_classes(socle).representatives;
}

namespace {

std::vector<std::size_t> classes_below(const OutGroup& out, const SubgroupClasses& sc, const OutElement& alpha) {
    std::vector<std::size_t> cls;
    unsigned ord = out.order(alpha);
    for (unsigned j = 0; j < ord; ++j) cls.push_back(sc.class_of[out.index(out.pow(alpha, j))]);
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    return cls;
}

void table_linear(const GroupSpec& socle, const OutGroup& out, AdmissibilityReport& r, std::vector<OutElement>& words) {
    const unsigned n = socle.n;
    const unsigned m = socle.m;
    const BigInt p = socle.p_big();
    const BigInt q = socle.q();
    const unsigned b2 = to_unsigned(two_part(BigInt(r.b)));
    const unsigned b2p = r.b / b2;
    const unsigned m2 = to_unsigned(two_part(BigInt(m)));
    const BigInt n2 = two_part(BigInt(n));

    r.eta = out.delta(to_unsigned(odd_part(BigInt(r.d))));
    r.phi_hat = out.phi(m / b2);
    if (n == 4 && q % 12 == 11) {
        r.psi = out.phi(to_unsigned(pi_prime_part(BigInt(m), BigInt(3))));
    } else {
        r.psi = out.phi(m / b2p);
    }
    const OutElement tau = out.tau();
    const OutElement eta = *r.eta;
    const OutElement phi_hat = *r.phi_hat;
    const OutElement psi = r.psi;

    const int pt1 = power_of_exponent(BigInt(n - 1), p);
    if (pt1 >= 1) {
        if (power_of_exponent(BigInt(n - 2), BigInt(2)) >= 1) {
            r.rows.push_back("n=p^t+1=2^u+2");
            r.diagnostics.push_back("n = p^t + 1 = 2^u + 2 is covered by no table row");
            return;
        }
        const bool row_a = b2 > 2 || n2 < two_part(p - 1);
        const bool row_b = m2 == 2 && n2 < two_part(p + 1);
        if ((row_a || row_b) && m % 2 != 0) {
            r.diagnostics.push_back("table row for n = p^t + 1 needs m even");
            return;
        }
        if (row_a) {
            r.rows.push_back("n=p^t+1:(b)_2>2 or (n)_2<(p-1)_2");
            words.push_back(out.mul(out.mul(out.phi(m / 2), tau), eta));
        }
        if (row_b) {
            r.rows.push_back("n=p^t+1:(m)_2=2,(n)_2<(p+1)_2");
            words.push_back(out.mul(out.phi(m / 2), eta));
        }
        if (!row_a && !row_b) r.diagnostics.push_back("n = p^t + 1 but neither table row condition holds");
        return;
    }

    if (r.b % 2 == 1) {
        if (!r.tau_admissible && out.order(psi) > 1) {
            r.rows.push_back("b odd:tau not admissible,|psi|>1");
            words.push_back(psi);
        } else if (r.tau_admissible) {
            r.rows.push_back("b odd:tau admissible");
            words.push_back(out.mul(psi, tau));
        }
        return;
    }

    // b even.
    const bool p_sign_plus = socle.p % 4 == 1;
    bool special_form = false;  // n = p^s + 2^u + 1 with s >= 0, u > 0
    for (BigInt ps = 1; ps + 3 <= n; ps *= p) {
        if (power_of_exponent(BigInt(n - 1) - ps, BigInt(2)) >= 1) special_form = true;
    }
    words.push_back(out.mul(psi, phi_hat));
    for (unsigned i = 1; 2 * i <= b2; i *= 2) words.push_back(out.mul(psi, out.mul(out.pow(phi_hat, i), tau)));
    if (special_form) {
        r.rows.push_back("b even:n=p^s+2^u+1");
        return;
    }
    for (unsigned j = 1; 4 * j <= b2; j *= 2)
        words.push_back(out.mul(psi, out.mul(out.mul(out.pow(phi_hat, 2 * j), tau), eta)));
    const BigInt p_minus_sign = p_sign_plus ? BigInt(p - 1) : BigInt(p + 1);
    if (n2 >= two_part(p_minus_sign)) {
        r.rows.push_back("b even:n!=p^s+2^u+1,(n)_2>=(p-e)_2");
    } else if (p_sign_plus) {
        r.rows.push_back("b even:n!=p^s+2^u+1,(n)_2<(p-e)_2,e=+");
        words.push_back(out.mul(psi, out.mul(out.mul(phi_hat, tau), eta)));
    } else {
        r.rows.push_back("b even:n!=p^s+2^u+1,(n)_2<(p-e)_2,e=-");
        words.push_back(out.mul(psi, out.mul(phi_hat, eta)));
    }
}

void admissible_unitary(const GroupSpec& socle, const OutGroup& out, AdmissibilityReport& r,
                     std::vector<OutElement>& words) {
    const unsigned n = socle.n;
    const unsigned m = socle.m;
    const BigInt q = socle.q();
    const unsigned b2 = to_unsigned(two_part(BigInt(r.b)));
    const unsigned b2p = r.b / b2;
    if (n == 4 && q % 12 == 1) {
        r.psi = out.phi(2 * to_unsigned(pi_prime_part(BigInt(m), BigInt(3))));
    } else {
        r.psi = out.phi(2 * m / b2p);
    }
    if (power_of_exponent(BigInt(n - 1), socle.p_big()) >= 1) {
        r.rows.push_back("n-1 is a power of p");
        return;
    }
    if (!r.tau_admissible) {
        if (out.order(r.psi) > 1) {
            r.rows.push_back("(i) tau not admissible,|psi|>1");
            words.push_back(r.psi);
        }
        return;
    }
    if (two_part(BigInt(n)) > 2 && n >= 16) {
        r.rows.push_back("(ii) tau admissible,(n)_2>2,n>=16");
        words.push_back(out.mul(r.psi, out.tau()));
    } else {
        r.rows.push_back("(iii) tau admissible,(n)_2<=2 or n<=12");
        words.push_back(out.mul(r.psi, out.phi(to_unsigned(odd_part(BigInt(m))))));
    }
}

}  // namespace

AdmissibilityReport admissible_generators(const GroupSpec& socle) {
    OutGroup out(socle);
    AdmissibilityReport r;
    r.socle = socle;
    r.d = out.d();
    const BigInt q = socle.q();
    const BigInt q_eps = socle.eps == Sign::Plus ? BigInt(q - 1) : BigInt(q + 1);
    r.b = to_unsigned(pi_part(big_gcd(q_eps / r.d, BigInt(socle.m)), BigInt(r.d)));
    r.tau = tau_criterion(socle);
    r.tau_admissible = r.tau.verdict == TauVerdict::Equal;

    std::vector<OutElement> words;
    if (socle.eps == Sign::Plus) table_linear(socle, out, r, words);
    else admissible_unitary(socle, out, r, words);

    if (out.size() > kMaxOutSize) {
        r.generators = words;
        r.diagnostics.push_back("Out too large to reduce generators up to conjugacy");
        return r;
    }
    SubgroupClasses sc = subgroup_classes(socle);
    std::vector<std::vector<std::size_t>> below;
    std::vector<std::size_t> own;
    for (const auto& w : words) {
        below.push_back(classes_below(out, sc, w));
        own.push_back(sc.class_of[out.index(w)]);
    }
    std::vector<std::size_t> all{0};
    for (std::size_t k = 0; k < words.size(); ++k) {
        if (own[k] == 0) continue;
        bool dominated = false;
        for (std::size_t j = 0; j < words.size() && !dominated; ++j) {
            if (j == k) continue;
            if (own[j] == own[k]) dominated = j < k;
            else dominated = std::binary_search(below[j].begin(), below[j].end(), own[k]);
        }
        if (!dominated) r.generators.push_back(words[k]);
        all.insert(all.end(), below[k].begin(), below[k].end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    r.class_count_total = all.size();
    return r;
}

}  // namespace orderspec
