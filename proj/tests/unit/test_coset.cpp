#include <doctest.h>

#include "naive.hpp"
#include "orderspec/coset.hpp"
#include "orderspec/outer.hpp"
#include "orderspec/spectra.hpp"

using namespace orderspec;

namespace {

std::vector<BigInt> V(std::initializer_list<unsigned long> xs) {
    std::vector<BigInt> v;
    for (auto x : xs) v.push_back(BigInt(x));
    return v;
}

GroupSpec S(Family f, Sign e, unsigned n, std::uint64_t p, unsigned m = 1) { return make_spec(f, e, n, p, m); }

const CosetSpectrum& supported(const CosetResult& r) {
    REQUIRE(is_supported(r));
    return std::get<CosetSpectrum>(r);
}

std::vector<BigInt> scaled(const Spectrum& s, unsigned long k) {
    std::vector<BigInt> out;
    for (const auto& g : s.generators()) out.push_back(g * k);
    return out;
}

}  // namespace

TEST_CASE("odd graph coset") {
    CHECK(graph_coset_psl_odd(S(Family::PSL, Sign::Plus, 3, 3)).maximal_elements() == V({12, 8}));
    CHECK(graph_coset_psl_odd(S(Family::PSL, Sign::Plus, 3, 3)).elements() == V({2, 4, 6, 8, 12}));
    CHECK(graph_coset_psl_odd(S(Family::PSL, Sign::Plus, 3, 5)).maximal_elements() == V({20, 12, 8}));
    CHECK(graph_coset_psl_odd(S(Family::PSL, Sign::Plus, 5, 3)).maximal_elements() ==
          scaled(spectrum_symplectic(S(Family::Sp, Sign::Plus, 2, 3)), 2));
    // The same for the unitary socle and for PGL.
    CHECK(graph_coset(S(Family::PSL, Sign::Minus, 3, 3)).elements() == graph_coset(S(Family::PSL, Sign::Plus, 3, 3)).elements());
    CHECK(graph_coset(S(Family::PGL, Sign::Plus, 5, 3)).elements() == graph_coset(S(Family::PSL, Sign::Plus, 5, 3)).elements());
    CHECK_THROWS_AS(graph_coset_psl_odd(S(Family::PSL, Sign::Plus, 4, 3)), UsageError);
}

TEST_CASE("even graph cosets") {
    for (unsigned long p : {3ul, 5ul}) {
        const auto c = graph_coset_pgl_even(S(Family::PGL, Sign::Plus, 4, p));
        REQUIRE(c.pieces().size() == 1);
        CHECK(c.pieces()[0].multiplier == 2);
        CHECK(c.maximal_elements() == scaled(spectrum_symplectic(S(Family::PSp, Sign::Plus, 2, p)), 2));
    }
    CHECK_THROWS_AS(graph_coset_pgl_even(S(Family::PGL, Sign::Plus, 5, 3)), UsageError);

    // n = 4: the p-divisible part consists of multiples of p dividing p(q +- 1), and 18 when p = 3.
    auto p_part = [](const CosetSpectrum& c, unsigned long p) {
        std::vector<BigInt> out;
        for (const auto& e : c.elements())
            if (e % p == 0) out.push_back(e);
        return normalize(out).generators();
    };
    CHECK(p_part(graph_coset_psl_even(S(Family::PSL, Sign::Plus, 4, 3)), 3) == V({18, 12}));
    CHECK(p_part(graph_coset_psl_even(S(Family::PSL, Sign::Plus, 4, 5)), 5) == V({30, 20}));
    CHECK(graph_coset_psl_even(S(Family::PSL, Sign::Plus, 4, 3)).maximal_elements() == V({18, 12, 10, 8}));

    // n = 6: the p-divisible piece is 2 times the p-divisible part of omega(Omega_7(q)).
    const auto c6 = graph_coset_psl_even(S(Family::PSL, Sign::Plus, 6, 3));
    const Spectrum o7 = spectrum_symplectic(S(Family::OmegaOdd, Sign::Plus, 3, 3));
    std::vector<BigInt> expected;
    for (const auto& e : o7.elements())
        if (e % 3 == 0) expected.push_back(2 * e);
    CHECK(p_part(c6, 3) == normalize(expected).generators());
}

TEST_CASE("membership is monotone within pieces") {
    for (auto spec : {S(Family::PSL, Sign::Plus, 4, 3), S(Family::PSL, Sign::Minus, 6, 5), S(Family::PSL, Sign::Plus, 5, 7)}) {
        const CosetSpectrum c = graph_coset(spec);
        for (const auto& piece : c.pieces())
            for (const auto& b : piece.base.elements()) {
                const BigInt a = piece.multiplier * b;
                const bool held = piece.constraint == Constraint::None ||
                                  (piece.constraint == Constraint::PDivisible) == (b % piece.p == 0);
                if (!held) continue;
                CHECK(c.contains(a));
                for (const auto& d : divisor_closure({b})) {
                    if (piece.constraint == Constraint::None) CHECK(c.contains(piece.multiplier * d));
                    if (piece.constraint == Constraint::PDivisible && d % piece.p == 0) CHECK(c.contains(piece.multiplier * d));
                }
            }
    }
}

TEST_CASE("field cosets") {
    // beta = phi on PSL_3(27): q0 = 3, k = 3.
    const auto plain = supported(field_coset_spectrum(S(Family::PSL, Sign::Plus, 3, 3, 3), 0, 3, FieldVariant::Plain));
    CHECK(plain.maximal_elements() == scaled(spectrum_linear(S(Family::PSL, Sign::Plus, 3, 3)), 3));
    // beta tau with k = 2 on PSL_n(9): 2 times the unitary spectrum over q0 = 3.
    const auto graph = supported(field_coset_spectrum(S(Family::PSL, Sign::Plus, 3, 3, 2), 0, 2, FieldVariant::Graph));
    CHECK(graph.maximal_elements() == scaled(spectrum_linear(S(Family::PSL, Sign::Minus, 3, 3)), 2));
    // Graph variant with k odd: k times the graph coset over q0.
    const auto odd = supported(field_coset_spectrum(S(Family::PSL, Sign::Plus, 3, 3, 3), 0, 3, FieldVariant::Graph));
    CHECK(odd.elements() == graph_coset(S(Family::PSL, Sign::Plus, 3, 3)).scaled(BigInt(3)).elements());
    // No closed form for a diagonal-field coset.
    CHECK_FALSE(is_supported(field_coset_spectrum(S(Family::PSL, Sign::Plus, 4, 3, 2), 1, 2, FieldVariant::Plain)));
}

TEST_CASE("tau criterion examples") {
    auto t = tau_criterion(S(Family::PSL, Sign::Plus, 3, 5));
    CHECK(t.verdict == TauVerdict::Equal);
    CHECK(t.triggered.empty());

    t = tau_criterion(S(Family::PSL, Sign::Minus, 4, 3));
    CHECK(t.verdict == TauVerdict::Witness);
    CHECK(t.case_index == 3);
    CHECK(t.witness == 18);

    t = tau_criterion(S(Family::PSL, Sign::Plus, 5, 3));
    CHECK(t.case_index == 1);
    CHECK(t.witness == 36);

    t = tau_criterion(S(Family::PSL, Sign::Plus, 3, 7, 3));
    CHECK(t.case_index == 1);
    CHECK(t.witness == 28);
}

TEST_CASE("tau criterion is consistent with the coset formulas") {
    for (unsigned q : naive::odd_prime_powers(27)) {
        const auto f = naive::factor(q);
        for (unsigned n = 3; n <= 7; ++n)
            for (Sign eps : {Sign::Plus, Sign::Minus}) {
                const GroupSpec L = S(Family::PSL, eps, n, f.begin()->first, f.begin()->second);
                const Spectrum w = spectrum_linear(L);
                const CosetSpectrum c = graph_coset(L);
                const auto t = tau_criterion(L);
                if (t.verdict == TauVerdict::Witness) {
                    CHECK(c.contains(t.witness));
                    CHECK_FALSE(w.contains(t.witness));
                    for (const auto& tc : t.triggered) CHECK_FALSE(w.contains(tc.witness));
                } else {
                    for (const auto& e : c.maximal_elements()) CHECK(w.contains(e));
                }
            }
    }
}

TEST_CASE("extension spectra") {
    const GroupSpec L27 = S(Family::PSL, Sign::Plus, 3, 3, 3);
    const OutGroup out27(L27);
    const auto ext = supported(extension_spectrum(L27, out27.phi()));
    std::vector<BigInt> expected = spectrum_linear(L27).generators();
    for (const auto& g : scaled(spectrum_linear(S(Family::PSL, Sign::Plus, 3, 3)), 3)) expected.push_back(g);
    CHECK(ext.maximal_elements() == normalize(expected).generators());

    const GroupSpec L5 = S(Family::PSL, Sign::Plus, 3, 5);
    const auto tau_ext = supported(extension_spectrum(L5, OutGroup(L5).tau()));
    expected = spectrum_linear(L5).generators();
    for (const auto& g : graph_coset(L5).maximal_elements()) expected.push_back(g);
    CHECK(tau_ext.maximal_elements() == normalize(expected).generators());

    const GroupSpec L4 = S(Family::PSL, Sign::Plus, 4, 5);
    const OutGroup out4(L4);
    CHECK_FALSE(is_supported(extension_spectrum(L4, out4.mul(out4.tau(), out4.delta()))));
}
