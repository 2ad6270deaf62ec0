#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orderspec/group_spec.hpp"
#include "orderspec/oracle/brute.hpp"
#include "orderspec/spectrum.hpp"

namespace orderspec::oracle {

struct VerifyReport {
    std::string spec;
    std::string group;  // the matrix group that was enumerated or sampled
    Mode mode = Mode::Full;
    std::uint64_t seed = 0;
    OrderKind kind = OrderKind::Plain;
    std::vector<std::uint64_t> attained;  // ascending
    std::vector<BigInt> formula;          // maximal elements, descending
    bool pass = false;
    std::string detail;
    std::uint64_t processed = 0;
    std::string sampler;
    double wall_clock_ms = 0;
};

// The matrix group whose (projective, tau-coset, ...) orders realize the
// requested kind for spec. Throws UsageError for uncovered combinations.
MatrixGroup oracle_group_for(const GroupSpec& spec, OrderKind kind);

// Full mode: the attained set equals the formula set. Sample mode: it is
// contained in it. `expect` replaces the formula by an explicit spectrum,
// compared against the divisor closure of the attained set.
VerifyReport verify_spectrum(const GroupSpec& spec, OrderKind kind, const BruteOptions& opt,
                             const std::optional<Spectrum>& expect = std::nullopt);

struct GammaReport {
    std::string group;
    std::uint64_t elements = 0;
    std::size_t gamma_size = 0;          // |{g g^{-T}}|
    std::size_t accepted_size = 0;       // |{h : gamma_membership(h)}|
    std::size_t gamma_not_accepted = 0;
    std::size_t accepted_not_gamma = 0;
    bool equal = false;
    double wall_clock_ms = 0;
};

// Compares {g g^{-T} : g in GL_n(q)} with the matrices accepted by
// gamma_membership, both by full enumeration of GL_n(q).
GammaReport gamma_check(unsigned n, std::uint32_t q, const BruteOptions& opt);

}  // namespace orderspec::oracle
