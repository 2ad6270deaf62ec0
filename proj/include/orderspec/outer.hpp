#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orderspec/coset.hpp"
#include "orderspec/group_spec.hpp"

namespace orderspec {

// phi^a tau^c delta^i. In the unitary case c is always 0 and a runs mod 2m
// (tau = phi^m).
struct OutElement {
    unsigned a = 0;
    unsigned c = 0;
    unsigned i = 0;

    bool operator==(const OutElement&) const = default;
};

// Out(PSL_n^eps(q)) with its presentation in delta, phi, tau.
class OutGroup {
public:
    explicit OutGroup(const GroupSpec& socle);

    Sign eps() const { return eps_; }
    unsigned d() const { return d_; }
    unsigned m() const { return m_; }
    std::uint64_t p() const { return p_; }
    unsigned field_period() const { return eps_ == Sign::Plus ? m_ : 2 * m_; }
    std::size_t size() const;

    OutElement identity() const { return {}; }
    OutElement delta(unsigned k = 1) const;
    OutElement phi(unsigned k = 1) const;
    OutElement tau() const;

    OutElement mul(const OutElement& x, const OutElement& y) const;
    OutElement inverse(const OutElement& x) const;
    OutElement pow(const OutElement& x, unsigned long k) const;
    // g^{-1} x g
    OutElement conj(const OutElement& x, const OutElement& g) const;
    unsigned order(const OutElement& x) const;

    // Throws UsageError when an exponent is outside its canonical range.
    void check(const OutElement& x) const;

    std::size_t index(const OutElement& x) const;
    OutElement element(std::size_t idx) const;

    // Product-order word such as "f^2 t d^3"; the identity is "1".
    std::string to_string(const OutElement& x) const;
    // Accepts any product of f, t, d tokens with optional ^k exponents.
    OutElement parse(const std::string& word) const;

private:
    Sign eps_;
    std::uint64_t p_;
    unsigned m_;
    unsigned d_;
    std::vector<unsigned> p_pow_mod_d_;  // p^b mod d for b < field_period
};

struct SubgroupClasses {
    std::vector<OutElement> representatives;  // one generator per class, trivial first
    std::vector<std::size_t> class_of;        // element index -> class of the subgroup it generates
};

constexpr std::size_t kMaxOutSize = 100000;

SubgroupClasses subgroup_classes(const GroupSpec& socle, bool reverse_order = false);
std::vector<OutElement> cyclic_subgroups_up_to_conjugacy(const GroupSpec& socle);

struct AdmissibilityReport {
    GroupSpec socle;
    unsigned d = 1;
    unsigned b = 1;
    std::optional<OutElement> eta;      // eps = + only
    std::optional<OutElement> phi_hat;  // eps = + only
    OutElement psi;
    bool tau_admissible = false;
    TauCriterionResult tau;
    std::vector<OutElement> generators;  // maximal admissible generators
    std::vector<std::string> rows;       // names of the criteria that fired
    std::vector<std::string> diagnostics;
    // Conjugacy classes of cyclic subgroups conjugate into some listed <alpha>,
    // the trivial subgroup included.
    std::optional<std::size_t> class_count_total;
};

AdmissibilityReport admissible_generators(const GroupSpec& socle);

}  // namespace orderspec
