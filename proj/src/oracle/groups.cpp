#include "orderspec/oracle/groups.hpp"

#include <optional>

#include "orderspec/errors.hpp"
#include "orderspec/group_spec.hpp"

namespace orderspec::oracle {

namespace {

using Vec = std::array<Elem, kMaxDim>;

FiniteField field_for(GroupKind kind, std::uint32_t q) {
    auto [p, m] = split_prime_power(BigInt(static_cast<unsigned long>(q)));
    const bool unitary = kind == GroupKind::GU || kind == GroupKind::SU;
    return FiniteField(static_cast<std::uint32_t>(p), unitary ? 2 * m : m);
}

std::uint32_t defining_q(GroupKind kind, const FiniteField& F) {
    if (kind != GroupKind::GU && kind != GroupKind::SU) return F.q();
    if (F.m() % 2 != 0) throw UsageError("unitary groups need a field of even degree");
    std::uint32_t q = 1;
    for (unsigned i = 0; i < F.m() / 2; ++i) q *= F.p();
    return q;
}

struct AffineSpace {
    Vec particular{};
    std::vector<Vec> basis;
};

// Solutions v of sum_k coeffs[j][k] v_k = rhs[j].
std::optional<AffineSpace> solve_affine(const FiniteField& F, unsigned n, std::vector<Vec> a, std::vector<Elem> rhs) {
    const std::size_t rows = a.size();
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (unsigned col = 0; col < n && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        std::swap(rhs[piv], rhs[r]);
        const Elem s = F.inv(a[r][col]);
        for (unsigned j = 0; j < n; ++j) a[r][j] = F.mul(a[r][j], s);
        rhs[r] = F.mul(rhs[r], s);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][col] == 0) continue;
            const Elem f = F.neg(a[i][col]);
            for (unsigned j = 0; j < n; ++j) a[i][j] = F.add(a[i][j], F.mul(f, a[r][j]));
            rhs[i] = F.add(rhs[i], F.mul(f, rhs[r]));
        }
        pivot_col.push_back(static_cast<int>(col));
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (rhs[i] != 0) return std::nullopt;
    AffineSpace out;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
        is_pivot[pivot_col[i]] = true;
        out.particular[pivot_col[i]] = rhs[i];
    }
    for (unsigned f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v{};
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = F.neg(a[i][f]);
        out.basis.push_back(v);
    }
    return out;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// The idx-th point of the affine space (idx in [0, Q^dim)).
Vec affine_point(const FiniteField& F, unsigned n, const AffineSpace& s, std::uint64_t idx) {
    Vec v = s.particular;
    const std::uint32_t Q = F.q();
    for (const auto& b : s.basis) {
        const Elem c = static_cast<Elem>(idx % Q);
        idx /= Q;
        if (c == 0) continue;
        for (unsigned k = 0; k < n; ++k) v[k] = F.add(v[k], F.mul(c, b[k]));
    }
    return v;
}

Vec random_point(const FiniteField& F, unsigned n, const AffineSpace& s, std::mt19937_64& rng) {
    const std::uint64_t count = ipow(F.q(), static_cast<unsigned>(s.basis.size()));
    return affine_point(F, n, s, rng() % count);
}

bool is_zero(const Vec& v, unsigned n) {
    for (unsigned k = 0; k < n; ++k)
        if (v[k] != 0) return false;
    return true;
}

void set_row(FqMatrix& g, unsigned i, const Vec& v) {
    for (unsigned k = 0; k < g.n; ++k) g.at(i, k) = v[k];
}

// Coefficients c with det(g with row `last` replaced by v) = sum c_k v_k.
Vec cofactor_row(const FiniteField& F, FqMatrix g, unsigned last) {
    Vec c{};
    for (unsigned k = 0; k < g.n; ++k) {
        for (unsigned j = 0; j < g.n; ++j) g.at(last, j) = j == k ? 1 : 0;
        c[k] = determinant(F, g);
    }
    return c;
}

Elem dot(const FiniteField& F, const Vec& a, const Vec& b, unsigned n) {
    Elem s = 0;
    for (unsigned k = 0; k < n; ++k) s = F.add(s, F.mul(a[k], b[k]));
    return s;
}

class Enumerator {
public:
    Enumerator(const MatrixGroup& G, const ElementVisitor& visit, unsigned parts, unsigned part)
        : G_(G), F_(G.field()), n_(G.n()), visit_(visit), parts_(parts), part_(part) {
        g_ = scalar_matrix(n_, 0);
        total_ = ipow(F_.q(), n_);
        marks_.assign(n_, std::vector<std::uint8_t>(total_, 0));
    }

    void run() { rec(0); }

private:
    bool take_first_row() { return (first_counter_++ % parts_) == part_; }

    Vec decode(std::uint64_t idx) const {
        Vec v{};
        for (unsigned k = 0; k < n_; ++k) {
            v[k] = static_cast<Elem>(idx % F_.q());
            idx /= F_.q();
        }
        return v;
    }

    std::uint64_t encode(const Vec& v) const {
        std::uint64_t idx = 0;
        for (unsigned k = n_; k-- > 0;) idx = idx * F_.q() + v[k];
        return idx;
    }

    void descend(unsigned level, const Vec& v) {
        if (level == 0 && !take_first_row()) return;
        set_row(g_, level, v);
        rec(level + 1);
    }

    void rec(unsigned level) {
        if (level == n_) {
            visit_(g_);
            return;
        }
        switch (G_.kind()) {
            case GroupKind::GL:
            case GroupKind::SL: linear_level(level); break;
            case GroupKind::GU:
            case GroupKind::SU: unitary_level(level); break;
            case GroupKind::Sp: symplectic_level(level); break;
        }
    }

    void linear_level(unsigned level) {
        const bool last = level + 1 == n_;
        if (last && G_.kind() == GroupKind::SL) {
            const Vec c = cofactor_row(F_, g_, level);
            for (std::uint64_t idx = 1; idx < total_; ++idx) {
                Vec v = decode(idx);
                if (dot(F_, c, v, n_) == 1) descend(level, v);
            }
            return;
        }
        // Mark the span of the rows chosen so far.
        auto& mark = marks_[level];
        const std::uint64_t span_size = ipow(F_.q(), level);
        std::vector<std::uint64_t> span;
        span.reserve(span_size);
        for (std::uint64_t s = 0; s < span_size; ++s) {
            Vec v{};
            std::uint64_t x = s;
            for (unsigned r = 0; r < level; ++r) {
                const Elem c = static_cast<Elem>(x % F_.q());
                x /= F_.q();
                if (c == 0) continue;
                for (unsigned k = 0; k < n_; ++k) v[k] = F_.add(v[k], F_.mul(c, g_.at(r, k)));
            }
            span.push_back(encode(v));
        }
        for (auto s : span) mark[s] = 1;
        for (std::uint64_t idx = 1; idx < total_; ++idx)
            if (!mark[idx]) descend(level, decode(idx));
        for (auto s : span) mark[s] = 0;
    }

    void unitary_level(unsigned level) {
        std::vector<Vec> eqs;
        for (unsigned j = 0; j < level; ++j) {
            Vec c{};
            for (unsigned k = 0; k < n_; ++k) c[k] = G_.conj(g_.at(j, k));
            eqs.push_back(c);
        }
        auto space = solve_affine(F_, n_, eqs, std::vector<Elem>(level, 0));
        if (!space) return;
        const bool det_check = level + 1 == n_ && G_.kind() == GroupKind::SU;
        const Vec cof = det_check ? cofactor_row(F_, g_, level) : Vec{};
        const std::uint64_t count = ipow(F_.q(), static_cast<unsigned>(space->basis.size()));
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Vec v = affine_point(F_, n_, *space, idx);
            Elem norm = 0;
            for (unsigned k = 0; k < n_; ++k) norm = F_.add(norm, F_.mul(v[k], G_.conj(v[k])));
            if (norm != 1) continue;
            if (det_check && dot(F_, cof, v, n_) != 1) continue;
            descend(level, v);
        }
    }

    void symplectic_level(unsigned level) {
        std::vector<Vec> eqs;
        std::vector<Elem> rhs;
        for (unsigned j = 0; j < level; ++j) {
            Vec c{};
            for (unsigned t = 0; 2 * t < n_; ++t) {
                c[2 * t] = g_.at(j, 2 * t + 1);
                c[2 * t + 1] = F_.neg(g_.at(j, 2 * t));
            }
            eqs.push_back(c);
            rhs.push_back(level % 2 == 1 && j + 1 == level ? F_.neg(1) : 0);
        }
        auto space = solve_affine(F_, n_, eqs, rhs);
        if (!space) return;
        const std::uint64_t count = ipow(F_.q(), static_cast<unsigned>(space->basis.size()));
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Vec v = affine_point(F_, n_, *space, idx);
            if (level % 2 == 0 && is_zero(v, n_)) continue;
            descend(level, v);
        }
    }

    const MatrixGroup& G_;
    const FiniteField& F_;
    unsigned n_;
    const ElementVisitor& visit_;
    unsigned parts_;
    unsigned part_;
    std::uint64_t first_counter_ = 0;
    std::uint64_t total_ = 0;
    FqMatrix g_;
    std::vector<std::vector<std::uint8_t>> marks_;
};

}  // namespace

std::string kind_name(GroupKind k) {
    switch (k) {
        case GroupKind::GL: return "GL";
        case GroupKind::SL: return "SL";
        case GroupKind::GU: return "GU";
        case GroupKind::SU: return "SU";
        case GroupKind::Sp: return "Sp";
    }
    return "?";
}

MatrixGroup::MatrixGroup(GroupKind kind, unsigned n, std::uint32_t q)
    : kind_(kind), n_(n), q_(q), field_(field_for(kind, q)) {
    check_shape();
}

MatrixGroup::MatrixGroup(GroupKind kind, unsigned n, FiniteField field)
    : kind_(kind), n_(n), q_(defining_q(kind, field)), field_(std::move(field)) {
    check_shape();
}

void MatrixGroup::check_shape() const {
    if (n_ < 1 || n_ > kMaxDim) throw UsageError("oracle groups need dimension 1..8");
    if (kind_ == GroupKind::Sp && n_ % 2 != 0) throw UsageError("symplectic groups need even dimension");
}

BigInt MatrixGroup::order() const {
    const BigInt q = q_;
    BigInt r = 1;
    switch (kind_) {
        case GroupKind::GL:
        case GroupKind::SL:
            for (unsigned i = 0; i < n_; ++i) r *= big_pow(q, n_) - big_pow(q, i);
            if (kind_ == GroupKind::SL) r /= q - 1;
            return r;
        case GroupKind::GU:
        case GroupKind::SU:
            r = big_pow(q, n_ * (n_ - 1) / 2);
            for (unsigned i = 1; i <= n_; ++i) r *= signed_power_minus(q, i, Sign::Minus);
            if (kind_ == GroupKind::SU) r /= q + 1;
            return r;
        case GroupKind::Sp: {
            const unsigned k = n_ / 2;
            r = big_pow(q, k * k);
            for (unsigned i = 1; i <= k; ++i) r *= big_pow(q, 2 * i) - 1;
            return r;
        }
    }
    return r;
}

bool MatrixGroup::contains(const FqMatrix& g) const {
    if (g.n != n_) return false;
    const Elem det = determinant(field_, g);
    switch (kind_) {
        case GroupKind::GL: return det != 0;
        case GroupKind::SL: return det == 1;
        case GroupKind::GU:
        case GroupKind::SU: {
            FqMatrix c = g;
            for (unsigned i = 0; i < n_; ++i)
                for (unsigned j = 0; j < n_; ++j) c.at(i, j) = conj(g.at(i, j));
            if (!is_identity(mat_mul(field_, g, transpose(c)))) return false;
            return kind_ == GroupKind::GU || det == 1;
        }
        case GroupKind::Sp: {
            FqMatrix J = scalar_matrix(n_, 0);
            for (unsigned t = 0; 2 * t < n_; ++t) {
                J.at(2 * t, 2 * t + 1) = 1;
                J.at(2 * t + 1, 2 * t) = field_.neg(1);
            }
            return mat_mul(field_, mat_mul(field_, g, J), transpose(g)) == J;
        }
    }
    return false;
}

std::string MatrixGroup::name() const {
    return kind_name(kind_) + "(" + std::to_string(n_) + "," + std::to_string(q_) + ")";
}

void enumerate_elements(const MatrixGroup& G, const ElementVisitor& visit, unsigned parts, unsigned part) {
    if (parts == 0 || part >= parts) throw UsageError("bad enumeration partition");
    Enumerator(G, visit, parts, part).run();
}

FqMatrix sample_element(const MatrixGroup& G, std::mt19937_64& rng) {
    const FiniteField& F = G.field();
    const unsigned n = G.n();
    const std::uint32_t Q = F.q();
    FqMatrix g = scalar_matrix(n, 0);
    auto scale_first_row = [&](Elem s) {
        for (unsigned k = 0; k < n; ++k) g.at(0, k) = F.mul(g.at(0, k), s);
    };
    switch (G.kind()) {
        case GroupKind::GL:
        case GroupKind::SL: {
            Elem det = 0;
            while (det == 0) {
                for (unsigned i = 0; i < n; ++i)
                    for (unsigned k = 0; k < n; ++k) g.at(i, k) = static_cast<Elem>(rng() % Q);
                det = determinant(F, g);
            }
            if (G.kind() == GroupKind::SL) scale_first_row(F.inv(det));
            return g;
        }
        case GroupKind::GU:
        case GroupKind::SU: {
            for (unsigned level = 0; level < n; ++level) {
                std::vector<Vec> eqs;
                for (unsigned j = 0; j < level; ++j) {
                    Vec c{};
                    for (unsigned k = 0; k < n; ++k) c[k] = G.conj(g.at(j, k));
                    eqs.push_back(c);
                }
                auto space = solve_affine(F, n, eqs, std::vector<Elem>(level, 0));
                while (true) {
                    Vec v = random_point(F, n, *space, rng);
                    Elem norm = 0;
                    for (unsigned k = 0; k < n; ++k) norm = F.add(norm, F.mul(v[k], G.conj(v[k])));
                    if (norm == 1) {
                        set_row(g, level, v);
                        break;
                    }
                }
            }
            if (G.kind() == GroupKind::SU) scale_first_row(F.inv(determinant(F, g)));
            return g;
        }
        case GroupKind::Sp: {
            for (unsigned level = 0; level < n; ++level) {
                std::vector<Vec> eqs;
                std::vector<Elem> rhs;
                for (unsigned j = 0; j < level; ++j) {
                    Vec c{};
                    for (unsigned t = 0; 2 * t < n; ++t) {
                        c[2 * t] = g.at(j, 2 * t + 1);
                        c[2 * t + 1] = F.neg(g.at(j, 2 * t));
                    }
                    eqs.push_back(c);
                    rhs.push_back(level % 2 == 1 && j + 1 == level ? F.neg(1) : 0);
                }
                auto space = solve_affine(F, n, eqs, rhs);
                Vec v;
                do {
                    v = random_point(F, n, *space, rng);
                } while (level % 2 == 0 && is_zero(v, n));
                set_row(g, level, v);
            }
            return g;
        }
    }
    return g;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 chunk_rng(std::uint64_t seed, std::uint64_t chunk) { return std::mt19937_64(splitmix64(seed + chunk)); }

}  // namespace orderspec::oracle
