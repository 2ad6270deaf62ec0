#pragma once

#include <variant>

#include "orderspec/errors.hpp"
#include "orderspec/group_spec.hpp"
#include "orderspec/oracle/matrix.hpp"

namespace orderspec::oracle {

using WitnessResult = std::variant<FqMatrix, Unsupported>;

// A matrix in GL_n(q) whose image in PSL_n(q) (family PSL) or PGL_n(q)
// (family PGL) has order `generator`. Only eps = + is covered.
WitnessResult witness_for_generator(const GroupSpec& spec, const BigInt& generator, std::uint64_t seed = 1);

// First monic polynomial of degree k over F whose companion matrix has order
// |F|^k - 1, constant term first.
std::vector<Elem> primitive_polynomial(const FiniteField& F, unsigned k);

}  // namespace orderspec::oracle
