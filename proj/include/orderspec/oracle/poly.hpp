#pragma once

#include <string>
#include <vector>

#include "orderspec/oracle/field.hpp"
#include "orderspec/oracle/matrix.hpp"

namespace orderspec::oracle {

// Polynomial over F_q, coefficients constant term first, no trailing zeros.
// The zero polynomial is the empty vector.
using Poly = std::vector<Elem>;

void trim(Poly& a);
int degree(const Poly& a);  // -1 for zero
Poly poly_add(const FiniteField& F, const Poly& a, const Poly& b);
Poly poly_sub(const FiniteField& F, const Poly& a, const Poly& b);
Poly poly_mul(const FiniteField& F, const Poly& a, const Poly& b);
// a = quot * b + rem with deg rem < deg b; b nonzero.
void poly_divmod(const FiniteField& F, const Poly& a, const Poly& b, Poly& quot, Poly& rem);
Poly poly_monic(const FiniteField& F, const Poly& a);
std::string poly_to_string(const FiniteField& F, const Poly& a);

// Invariant factors of zE - h (monic, each dividing the next), the trivial
// factors 1 omitted.
std::vector<Poly> invariant_factors(const FiniteField& F, const FqMatrix& h);

}  // namespace orderspec::oracle
