#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orderspec/arith.hpp"
#include "orderspec/oracle/field.hpp"

namespace orderspec::oracle {

constexpr unsigned kMaxDim = 8;

// Row-major n x n matrix with a fixed stride of kMaxDim; unused entries are 0.
struct FqMatrix {
    unsigned n = 0;
    std::array<Elem, kMaxDim * kMaxDim> e{};

    Elem& at(unsigned i, unsigned j) { return e[i * kMaxDim + j]; }
    Elem at(unsigned i, unsigned j) const { return e[i * kMaxDim + j]; }

    bool operator==(const FqMatrix& o) const { return n == o.n && e == o.e; }
    bool operator<(const FqMatrix& o) const { return n != o.n ? n < o.n : e < o.e; }
};

FqMatrix identity_matrix(unsigned n);
FqMatrix scalar_matrix(unsigned n, Elem c);
FqMatrix from_rows(const std::vector<std::vector<Elem>>& rows);

FqMatrix mat_mul(const FiniteField& F, const FqMatrix& a, const FqMatrix& b);
FqMatrix mat_add(const FiniteField& F, const FqMatrix& a, const FqMatrix& b);
FqMatrix mat_scale(const FiniteField& F, const FqMatrix& a, Elem c);
FqMatrix transpose(const FqMatrix& a);
// Entrywise x -> x^{p^k}.
FqMatrix frobenius(const FiniteField& F, const FqMatrix& a, unsigned k);

Elem determinant(const FiniteField& F, const FqMatrix& a);
unsigned rank(const FiniteField& F, const FqMatrix& a);
std::optional<FqMatrix> inverse(const FiniteField& F, const FqMatrix& a);
// Throws UsageError for singular input.
FqMatrix inverse_or_throw(const FiniteField& F, const FqMatrix& a);
FqMatrix inverse_transpose(const FiniteField& F, const FqMatrix& a);

bool is_identity(const FqMatrix& a);
bool is_scalar(const FqMatrix& a);

// Binary exponent, most significant bit first.
struct Exponent {
    std::vector<std::uint8_t> bits;
    static Exponent from(const BigInt& e);
};

FqMatrix mat_pow(const FiniteField& F, const FqMatrix& a, const Exponent& e);
FqMatrix mat_pow(const FiniteField& F, const FqMatrix& a, std::uint64_t e);

// Block-diagonal sum.
FqMatrix direct_sum(const std::vector<FqMatrix>& blocks);

// Companion matrix of a monic polynomial (coefficients constant term first).
FqMatrix companion(const FiniteField& F, const std::vector<Elem>& monic);

// Upper unipotent Jordan block of size k.
FqMatrix jordan_block(unsigned k);

std::string to_string(const FiniteField& F, const FqMatrix& a);

// Injective encoding of the entries as an integer in base q (requires q^{n^2} < 2^64).
std::uint64_t pack(const FiniteField& F, const FqMatrix& a);

}  // namespace orderspec::oracle
