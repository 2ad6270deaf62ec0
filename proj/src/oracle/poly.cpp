#include "orderspec/oracle/poly.hpp"

#include <algorithm>

#include "orderspec/errors.hpp"

namespace orderspec::oracle {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_add(const FiniteField& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        Elem x = i < a.size() ? a[i] : 0;
        Elem y = i < b.size() ? b[i] : 0;
        r[i] = F.add(x, y);
    }
    trim(r);
    return r;
}

Poly poly_sub(const FiniteField& F, const Poly& a, const Poly& b) {
    Poly nb = b;
    for (auto& c : nb) c = F.neg(c);
    return poly_add(F, a, nb);
}

Poly poly_mul(const FiniteField& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

void poly_divmod(const FiniteField& F, const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
    if (b.empty()) throw UsageError("polynomial division by zero");
    rem = a;
    trim(rem);
    const int db = degree(b);
    quot.assign(rem.size() > b.size() - 1 ? rem.size() - b.size() + 1 : 0, 0);
    const Elem lead_inv = F.inv(b.back());
    while (degree(rem) >= db) {
        const int shift = degree(rem) - db;
        const Elem c = F.mul(rem.back(), lead_inv);
        quot[shift] = c;
        for (int j = 0; j <= db; ++j) rem[shift + j] = F.sub(rem[shift + j], F.mul(c, b[j]));
        trim(rem);
    }
    trim(quot);
}

Poly poly_monic(const FiniteField& F, const Poly& a) {
    if (a.empty()) return a;
    const Elem s = F.inv(a.back());
    Poly r = a;
    for (auto& c : r) c = F.mul(c, s);
    return r;
}

std::string poly_to_string(const FiniteField& F, const Poly& a) {
    if (a.empty()) return "0";
    std::string out;
    for (int i = degree(a); i >= 0; --i) {
        if (a[i] == 0) continue;
        if (!out.empty()) out += " + ";
        const bool unit = a[i] == 1 && i > 0;
        if (!unit) out += F.to_string(a[i]);
        if (i > 0) {
            if (!unit) out += "*";
            out += i == 1 ? "z" : "z^" + std::to_string(i);
        }
    }
    return out;
}

std::vector<Poly> invariant_factors(const FiniteField& F, const FqMatrix& h) {
    const unsigned n = h.n;
    std::vector<std::vector<Poly>> M(n, std::vector<Poly>(n));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            Poly e{F.neg(h.at(i, j))};
            if (i == j) e.push_back(1);
            trim(e);
            M[i][j] = e;
        }

    std::vector<Poly> diag;
    for (unsigned k = 0; k < n; ++k) {
        while (true) {
            // Move a nonzero entry of least degree to (k, k).
            int best = -1;
            unsigned bi = k, bj = k;
            for (unsigned i = k; i < n; ++i)
                for (unsigned j = k; j < n; ++j)
                    if (!M[i][j].empty() && (best < 0 || degree(M[i][j]) < best)) {
                        best = degree(M[i][j]);
                        bi = i;
                        bj = j;
                    }
            if (best < 0) break;  // remaining block is zero; cannot happen for zE - h
            std::swap(M[k], M[bi]);
            for (unsigned i = 0; i < n; ++i) std::swap(M[i][k], M[i][bj]);

            bool clean = true;
            Poly quot, rem;
            for (unsigned i = k + 1; i < n; ++i) {
                if (M[i][k].empty()) continue;
                poly_divmod(F, M[i][k], M[k][k], quot, rem);
                for (unsigned j = k; j < n; ++j) M[i][j] = poly_sub(F, M[i][j], poly_mul(F, quot, M[k][j]));
                if (!rem.empty()) clean = false;
            }
            for (unsigned j = k + 1; j < n; ++j) {
                if (M[k][j].empty()) continue;
                poly_divmod(F, M[k][j], M[k][k], quot, rem);
                for (unsigned i = k; i < n; ++i) M[i][j] = poly_sub(F, M[i][j], poly_mul(F, quot, M[i][k]));
                if (!rem.empty()) clean = false;
            }
            if (!clean) continue;

            // The pivot must divide every remaining entry.
            bool divides = true;
            for (unsigned i = k + 1; i < n && divides; ++i)
                for (unsigned j = k + 1; j < n; ++j) {
                    if (M[i][j].empty()) continue;
                    poly_divmod(F, M[i][j], M[k][k], quot, rem);
                    if (!rem.empty()) {
                        for (unsigned c = k; c < n; ++c) M[k][c] = poly_add(F, M[k][c], M[i][c]);
                        divides = false;
                        break;
                    }
                }
            if (divides) break;
        }
        Poly f = poly_monic(F, M[k][k]);
        if (degree(f) > 0) diag.push_back(f);
    }
    return diag;
}

}  // namespace orderspec::oracle
