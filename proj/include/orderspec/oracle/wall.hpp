#pragma once

#include <vector>

#include "orderspec/oracle/poly.hpp"

namespace orderspec::oracle {

struct PartitionData {
    std::vector<unsigned> lambda_z_minus_1;  // Jordan block sizes at eigenvalue 1, non-increasing
    std::vector<unsigned> lambda_z_plus_1;   // Jordan block sizes at eigenvalue -1, non-increasing
    std::vector<Poly> invariant_factors;     // of zE - h
    unsigned remaining_degree = 0;
};

// Block sizes of the eigenvalue-c part of h, from dim ker (h - cE)^j.
std::vector<unsigned> jordan_partition(const FiniteField& F, const FqMatrix& h, Elem c);

PartitionData partition_data(const FiniteField& F, const FqMatrix& h);

// Whether h = g g^{-T} for some g in GL_n(q).
bool gamma_membership(const FiniteField& F, const FqMatrix& h);

enum class SquareClass { Square, NonSquare };

SquareClass det_square_class(const FiniteField& F, const FqMatrix& g);

}  // namespace orderspec::oracle
