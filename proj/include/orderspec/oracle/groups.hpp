#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>

#include "orderspec/arith.hpp"
#include "orderspec/oracle/matrix.hpp"

namespace orderspec::oracle {

enum class GroupKind { GL, SL, GU, SU, Sp };

std::string kind_name(GroupKind k);

// A classical matrix group of dimension n over F_q. GU/SU are realized in
// GL_n(q^2) with the identity Hermitian form; Sp uses the form
// diag([[0,1],[-1,0]], ...).
class MatrixGroup {
public:
    MatrixGroup(GroupKind kind, unsigned n, std::uint32_t q);
    // Same group over an explicitly given field (F_q, or F_{q^2} for GU/SU).
    MatrixGroup(GroupKind kind, unsigned n, FiniteField field);

    GroupKind kind() const { return kind_; }
    unsigned n() const { return n_; }
    std::uint32_t q() const { return q_; }
    const FiniteField& field() const { return field_; }
    bool unitary() const { return kind_ == GroupKind::GU || kind_ == GroupKind::SU; }

    BigInt order() const;
    bool contains(const FqMatrix& g) const;
    std::string name() const;

    // x -> x^q, the involution defining the Hermitian form (unitary only).
    Elem conj(Elem x) const { return field_.frobenius(x, field_.m() / 2); }

private:
    void check_shape() const;

    GroupKind kind_;
    unsigned n_;
    std::uint32_t q_;
    FiniteField field_;
};

using ElementVisitor = std::function<void(const FqMatrix&)>;

// Visits every element exactly once. The element set is split
// deterministically into `parts` pieces by the choice of first row; only
// piece `part` is visited.
void enumerate_elements(const MatrixGroup& G, const ElementVisitor& visit, unsigned parts = 1, unsigned part = 0);

// Uniformly distributed element.
FqMatrix sample_element(const MatrixGroup& G, std::mt19937_64& rng);

std::uint64_t splitmix64(std::uint64_t x);

// Generator for the c-th chunk of a seeded sample stream.
std::mt19937_64 chunk_rng(std::uint64_t seed, std::uint64_t chunk);

}  // namespace orderspec::oracle
