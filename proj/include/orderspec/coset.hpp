#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "orderspec/errors.hpp"
#include "orderspec/group_spec.hpp"
#include "orderspec/spectrum.hpp"

namespace orderspec {

struct OutElement;

enum class Constraint { None, PDivisible, PPrimeOnly };

std::string constraint_name(Constraint c);

struct CosetPiece {
    BigInt multiplier = 1;
    Spectrum base;
    Constraint constraint = Constraint::None;
    std::uint64_t p = 0;
};

class CosetSpectrum {
public:
    CosetSpectrum() = default;
    explicit CosetSpectrum(std::vector<CosetPiece> pieces) : pieces_(std::move(pieces)) {}

    const std::vector<CosetPiece>& pieces() const { return pieces_; }
    void add(CosetPiece piece) { pieces_.push_back(std::move(piece)); }
    void append(const CosetSpectrum& other);
    CosetSpectrum scaled(const BigInt& k) const;

    bool contains(const BigInt& a) const;
    bool contains(std::uint64_t a) const { return contains(BigInt(static_cast<unsigned long>(a))); }

    // Maximal elements of each piece, reduced to a divisibility antichain.
    std::vector<BigInt> maximal_elements() const;

    // Every element, ascending. Intended for small parameters.
    std::vector<BigInt> elements() const;

private:
    std::vector<CosetPiece> pieces_;
};

using CosetResult = std::variant<CosetSpectrum, Unsupported>;

inline bool is_supported(const CosetResult& r) { return std::holds_alternative<CosetSpectrum>(r); }

enum class TauVerdict { Equal, Witness };

struct TauCase {
    int index = 0;
    BigInt witness;
};

struct TauCriterionResult {
    TauVerdict verdict = TauVerdict::Equal;
    int case_index = 0;  // 0 when Equal
    BigInt witness = 0;
    std::vector<TauCase> triggered;
};

// socle is PSL_n^eps(q) (family PSL) or PGL_n^eps(q) (family PGL).
CosetSpectrum graph_coset_psl_odd(const GroupSpec& socle);
CosetSpectrum graph_coset_pgl_even(const GroupSpec& socle);
CosetSpectrum graph_coset_psl_even(const GroupSpec& socle);

// The coset of the inverse-transpose automorphism over the socle, picking the
// formula for the parity of n. Equal for PSL and PSU with the same q.
CosetSpectrum graph_coset(const GroupSpec& socle);

enum class FieldVariant { Plain, Graph };

// Spectrum of the coset beta delta^i L (Plain) or beta tau delta^i L (Graph),
// beta = phi^{m/k} for eps = +. For eps = - the same with phi of order 2m on
// the unitary group, where Plain means phi^{m/k} and Graph phi^{m/k + m}.
CosetResult field_coset_spectrum(const GroupSpec& socle, unsigned i, unsigned k, FieldVariant variant);

TauCriterionResult tau_criterion(const GroupSpec& socle);

// Spectrum of the single coset yL, when a closed form applies.
CosetResult coset_spectrum(const GroupSpec& socle, const OutElement& y);

// Union of the coset spectra of all cosets of L in <L, alpha>.
CosetResult extension_spectrum(const GroupSpec& socle, const OutElement& generator);

}  // namespace orderspec
