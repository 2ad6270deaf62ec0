#include "orderspec/oracle/wall.hpp"

#include <map>

#include "orderspec/errors.hpp"

namespace orderspec::oracle {

std::vector<unsigned> jordan_partition(const FiniteField& F, const FqMatrix& h, Elem c) {
    const unsigned n = h.n;
    const FqMatrix a = mat_add(F, h, scalar_matrix(n, F.neg(c)));
    // kernel dimensions k_0 = 0, k_1, ... until they stabilize
    std::vector<unsigned> k{0};
    FqMatrix power = identity_matrix(n);
    while (true) {
        power = mat_mul(F, power, a);
        const unsigned kj = n - rank(F, power);
        if (kj == k.back()) break;
        k.push_back(kj);
    }
    // blocks of size >= j: k_j - k_{j-1}
    std::vector<unsigned> at_least;
    for (std::size_t j = 1; j < k.size(); ++j) at_least.push_back(k[j] - k[j - 1]);
    std::vector<unsigned> parts;
    for (std::size_t j = at_least.size(); j-- > 0;) {
        const unsigned next = j + 1 < at_least.size() ? at_least[j + 1] : 0;
        for (unsigned r = 0; r < at_least[j] - next; ++r) parts.push_back(static_cast<unsigned>(j + 1));
    }
    return parts;
}

PartitionData partition_data(const FiniteField& F, const FqMatrix& h) {
    PartitionData d;
    d.lambda_z_minus_1 = jordan_partition(F, h, 1);
    d.lambda_z_plus_1 = jordan_partition(F, h, F.neg(1));
    d.invariant_factors = invariant_factors(F, h);
    unsigned used = 0;
    for (unsigned s : d.lambda_z_minus_1) used += s;
    for (unsigned s : d.lambda_z_plus_1) used += s;
    d.remaining_degree = h.n - used;
    return d;
}

namespace {

std::map<unsigned, unsigned> multiplicities(const std::vector<unsigned>& parts) {
    std::map<unsigned, unsigned> m;
    for (unsigned s : parts) ++m[s];
    return m;
}

}  // namespace

bool gamma_membership(const FiniteField& F, const FqMatrix& h) {
    if (F.p() == 2) throw UsageError("gamma_membership needs odd characteristic");
    const auto inv = inverse(F, h);
    if (!inv) return false;
    if (invariant_factors(F, h) != invariant_factors(F, *inv)) return false;
    for (auto [size, mult] : multiplicities(jordan_partition(F, h, 1)))
        if (size % 2 == 0 && mult % 2 != 0) return false;
    for (auto [size, mult] : multiplicities(jordan_partition(F, h, F.neg(1))))
        if (size % 2 == 1 && mult % 2 != 0) return false;
    return true;
}

SquareClass det_square_class(const FiniteField& F, const FqMatrix& g) {
    const Elem det = determinant(F, g);
    if (det == 0) throw UsageError("det_square_class: singular matrix");
    return F.is_square(det) ? SquareClass::Square : SquareClass::NonSquare;
}

}  // namespace orderspec::oracle
