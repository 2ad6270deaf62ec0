#include "orderspec/oracle/matrix.hpp"

#include <sstream>

#include "orderspec/errors.hpp"

namespace orderspec::oracle {

FqMatrix identity_matrix(unsigned n) { return scalar_matrix(n, 1); }

FqMatrix scalar_matrix(unsigned n, Elem c) {
    if (n == 0 || n > kMaxDim) throw UsageError("matrix dimension must be in 1..8");
    FqMatrix m;
    m.n = n;
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = c;
    return m;
}

FqMatrix from_rows(const std::vector<std::vector<Elem>>& rows) {
    const unsigned n = static_cast<unsigned>(rows.size());
    FqMatrix m = scalar_matrix(n, 0);
    for (unsigned i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw UsageError("matrix rows must be square");
        for (unsigned j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

FqMatrix mat_mul(const FiniteField& F, const FqMatrix& a, const FqMatrix& b) {
    const unsigned n = a.n;
    FqMatrix c;
    c.n = n;
    if (F.is_prime_field()) {
        const std::uint32_t p = F.p();
        for (unsigned i = 0; i < n; ++i) {
            const Elem* ar = &a.e[i * kMaxDim];
            for (unsigned j = 0; j < n; ++j) {
                std::uint32_t s = 0;
                for (unsigned k = 0; k < n; ++k) s += static_cast<std::uint32_t>(ar[k]) * b.e[k * kMaxDim + j];
                c.e[i * kMaxDim + j] = static_cast<Elem>(s % p);
            }
        }
        return c;
    }
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            Elem s = 0;
            for (unsigned k = 0; k < n; ++k) s = F.add(s, F.mul(a.at(i, k), b.at(k, j)));
            c.at(i, j) = s;
        }
    }
    return c;
}

FqMatrix mat_add(const FiniteField& F, const FqMatrix& a, const FqMatrix& b) {
    FqMatrix c;
    c.n = a.n;
    for (unsigned i = 0; i < a.n; ++i)
        for (unsigned j = 0; j < a.n; ++j) c.at(i, j) = F.add(a.at(i, j), b.at(i, j));
    return c;
}

FqMatrix mat_scale(const FiniteField& F, const FqMatrix& a, Elem s) {
    FqMatrix c;
    c.n = a.n;
    for (unsigned i = 0; i < a.n; ++i)
        for (unsigned j = 0; j < a.n; ++j) c.at(i, j) = F.mul(a.at(i, j), s);
    return c;
}

FqMatrix transpose(const FqMatrix& a) {
    FqMatrix c;
    c.n = a.n;
    for (unsigned i = 0; i < a.n; ++i)
        for (unsigned j = 0; j < a.n; ++j) c.at(i, j) = a.at(j, i);
    return c;
}

FqMatrix frobenius(const FiniteField& F, const FqMatrix& a, unsigned k) {
    FqMatrix c;
    c.n = a.n;
    for (unsigned i = 0; i < a.n; ++i)
        for (unsigned j = 0; j < a.n; ++j) c.at(i, j) = F.frobenius(a.at(i, j), k);
    return c;
}

namespace {

// Gaussian elimination on a copy; returns (rank, determinant).
std::pair<unsigned, Elem> eliminate(const FiniteField& F, FqMatrix a) {
    const unsigned n = a.n;
    Elem det = 1;
    unsigned r = 0;
    for (unsigned col = 0; col < n && r < n; ++col) {
        unsigned piv = r;
        while (piv < n && a.at(piv, col) == 0) ++piv;
        if (piv == n) {
            det = 0;
            continue;
        }
        if (piv != r) {
            for (unsigned j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(r, j));
            det = F.neg(det);
        }
        const Elem pv = a.at(r, col);
        det = F.mul(det, pv);
        const Elem inv = F.inv(pv);
        for (unsigned i = r + 1; i < n; ++i) {
            if (a.at(i, col) == 0) continue;
            const Elem f = F.neg(F.mul(a.at(i, col), inv));
            for (unsigned j = col; j < n; ++j) a.at(i, j) = F.add(a.at(i, j), F.mul(f, a.at(r, j)));
        }
        ++r;
    }
    if (r < n) det = 0;
    return {r, det};
}

}  // namespace

Elem determinant(const FiniteField& F, const FqMatrix& a) { return eliminate(F, a).second; }

unsigned rank(const FiniteField& F, const FqMatrix& a) { return eliminate(F, a).first; }

std::optional<FqMatrix> inverse(const FiniteField& F, const FqMatrix& in) {
    const unsigned n = in.n;
    FqMatrix a = in;
    FqMatrix inv = identity_matrix(n);
    for (unsigned col = 0; col < n; ++col) {
        unsigned piv = col;
        while (piv < n && a.at(piv, col) == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col) {
            for (unsigned j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        }
        const Elem s = F.inv(a.at(col, col));
        for (unsigned j = 0; j < n; ++j) {
            a.at(col, j) = F.mul(a.at(col, j), s);
            inv.at(col, j) = F.mul(inv.at(col, j), s);
        }
        for (unsigned i = 0; i < n; ++i) {
            if (i == col || a.at(i, col) == 0) continue;
            const Elem f = F.neg(a.at(i, col));
            for (unsigned j = 0; j < n; ++j) {
                a.at(i, j) = F.add(a.at(i, j), F.mul(f, a.at(col, j)));
                inv.at(i, j) = F.add(inv.at(i, j), F.mul(f, inv.at(col, j)));
            }
        }
    }
    return inv;
}

FqMatrix inverse_or_throw(const FiniteField& F, const FqMatrix& a) {
    auto inv = inverse(F, a);
    if (!inv) throw UsageError("matrix is singular");
    return *inv;
}

FqMatrix inverse_transpose(const FiniteField& F, const FqMatrix& a) { return transpose(inverse_or_throw(F, a)); }

bool is_identity(const FqMatrix& a) {
    for (unsigned i = 0; i < a.n; ++i)
        for (unsigned j = 0; j < a.n; ++j)
            if (a.at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool is_scalar(const FqMatrix& a) {
    const Elem d = a.at(0, 0);
    if (d == 0) return false;
    for (unsigned i = 0; i < a.n; ++i)
        for (unsigned j = 0; j < a.n; ++j)
            if (a.at(i, j) != (i == j ? d : 0)) return false;
    return true;
}

Exponent Exponent::from(const BigInt& e) {
    if (e < 0) throw UsageError("negative exponent");
    Exponent x;
    const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) x.bits.push_back(static_cast<std::uint8_t>(mpz_tstbit(e.get_mpz_t(), i)));
    return x;
}

FqMatrix mat_pow(const FiniteField& F, const FqMatrix& a, const Exponent& e) {
    FqMatrix r = identity_matrix(a.n);
    bool started = false;
    for (std::uint8_t bit : e.bits) {
        if (started) r = mat_mul(F, r, r);
        if (bit) {
            r = started ? mat_mul(F, r, a) : a;
            started = true;
        }
    }
    return r;
}

FqMatrix mat_pow(const FiniteField& F, const FqMatrix& a, std::uint64_t e) {
    return mat_pow(F, a, Exponent::from(BigInt(static_cast<unsigned long>(e))));
}

FqMatrix direct_sum(const std::vector<FqMatrix>& blocks) {
    unsigned n = 0;
    for (const auto& b : blocks) n += b.n;
    FqMatrix m = scalar_matrix(n, 0);
    unsigned off = 0;
    for (const auto& b : blocks) {
        for (unsigned i = 0; i < b.n; ++i)
            for (unsigned j = 0; j < b.n; ++j) m.at(off + i, off + j) = b.at(i, j);
        off += b.n;
    }
    return m;
}

FqMatrix companion(const FiniteField& F, const std::vector<Elem>& monic) {
    if (monic.size() < 2 || monic.back() != 1) throw UsageError("companion: need a monic polynomial of positive degree");
    const unsigned k = static_cast<unsigned>(monic.size() - 1);
    FqMatrix c = scalar_matrix(k, 0);
    for (unsigned i = 0; i + 1 < k; ++i) c.at(i, i + 1) = 1;
    for (unsigned j = 0; j < k; ++j) c.at(k - 1, j) = F.neg(monic[j]);
    return c;
}

FqMatrix jordan_block(unsigned k) {
    FqMatrix j = identity_matrix(k);
    for (unsigned i = 0; i + 1 < k; ++i) j.at(i, i + 1) = 1;
    return j;
}

std::string to_string(const FiniteField& F, const FqMatrix& a) {
    std::ostringstream os;
    os << '[';
    for (unsigned i = 0; i < a.n; ++i) {
        if (i) os << ", ";
        os << '[';
        for (unsigned j = 0; j < a.n; ++j) {
            if (j) os << ", ";
            os << F.to_string(a.at(i, j));
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

std::uint64_t pack(const FiniteField& F, const FqMatrix& a) {
    std::uint64_t v = 0;
    for (unsigned i = 0; i < a.n; ++i)
        for (unsigned j = 0; j < a.n; ++j) v = v * F.q() + a.at(i, j);
    return v;
}

}  // namespace orderspec::oracle
