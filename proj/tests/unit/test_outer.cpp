#include <doctest.h>

#include <random>
#include <set>

#include "naive.hpp"
#include "orderspec/outer.hpp"
#include "orderspec/spectra.hpp"

using namespace orderspec;

namespace {

GroupSpec S(Family f, Sign e, unsigned n, std::uint64_t p, unsigned m = 1) { return make_spec(f, e, n, p, m); }

std::vector<std::string> words(const AdmissibilityReport& r) {
    OutGroup out(r.socle);
    std::vector<std::string> w;
    for (const auto& g : r.generators) w.push_back(out.to_string(g));
    return w;
}

std::vector<GroupSpec> socle_grid() {
    std::vector<GroupSpec> out;
    const std::vector<std::pair<std::uint64_t, unsigned>> fields = {{3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}, {3, 3},
                                                                     {7, 2}, {3, 4}, {5, 3}, {7, 3}, {3, 6}, {11, 2}};
    for (auto [p, m] : fields)
        for (unsigned n = 3; n <= 9; ++n)
            for (Sign eps : {Sign::Plus, Sign::Minus}) out.push_back(S(Family::PSL, eps, n, p, m));
    return out;
}

// Classes of cyclic subgroups conjugate into some listed <alpha>.
std::set<std::size_t> admissible_classes(const AdmissibilityReport& r, const OutGroup& out, const SubgroupClasses& sc) {
    std::set<std::size_t> cls{sc.class_of[out.index(out.identity())]};
    for (const auto& g : r.generators)
        for (unsigned j = 0; j < out.order(g); ++j) cls.insert(sc.class_of[out.index(out.pow(g, j))]);
    return cls;
}

}  // namespace

TEST_CASE("multiplication examples") {
    const OutGroup out(S(Family::PSL, Sign::Plus, 3, 7, 2));  // d = 3, m = 2
    CHECK(out.mul({1, 0, 0}, {0, 0, 1}) == OutElement{1, 0, 1});
    CHECK(out.mul({0, 0, 1}, {1, 0, 0}) == OutElement{1, 0, 7 % 3});
    CHECK(out.mul(out.mul(out.tau(), out.delta()), out.tau()) == out.delta(2));
    const OutGroup u(S(Family::PSL, Sign::Minus, 3, 5, 3));
    CHECK(u.pow(u.phi(), 3) == u.tau());
    CHECK(u.pow(u.tau(), 2) == u.identity());
}

TEST_CASE("presentation relations") {
    std::mt19937_64 rng(3);
    for (const auto& s : socle_grid()) {
        const OutGroup out(s);
        CHECK(out.pow(out.delta(), out.d()) == out.identity());
        CHECK(out.conj(out.delta(), out.phi()) == out.delta(static_cast<unsigned>(s.p % out.d())));
        if (s.eps == Sign::Plus) {
            CHECK(out.pow(out.phi(), s.m) == out.identity());
            CHECK(out.pow(out.tau(), 2) == out.identity());
            CHECK(out.mul(out.phi(), out.tau()) == out.mul(out.tau(), out.phi()));
            CHECK(out.conj(out.delta(), out.tau()) == out.inverse(out.delta()));
        } else {
            CHECK(out.pow(out.phi(), s.m) == out.tau());
            CHECK(out.pow(out.phi(), 2 * s.m) == out.identity());
        }
        for (int it = 0; it < 20; ++it) {
            const auto x = out.element(rng() % out.size()), y = out.element(rng() % out.size()),
                       z = out.element(rng() % out.size());
            CHECK(out.mul(out.mul(x, y), z) == out.mul(x, out.mul(y, z)));
            CHECK(out.mul(x, out.inverse(x)) == out.identity());
            CHECK(out.element(out.index(x)) == x);
            CHECK(out.parse(out.to_string(x)) == x);
        }
    }
}

TEST_CASE("element orders") {
    const OutGroup a(S(Family::PSL, Sign::Plus, 4, 5));
    CHECK(a.order(a.identity()) == 1);
    CHECK(a.order(a.delta()) == 4);
    const OutGroup b(S(Family::PSL, Sign::Plus, 4, 5, 2));
    CHECK(b.order(b.mul(b.phi(), b.tau())) == 2);
    CHECK(b.size() == 16);
}

TEST_CASE("words") {
    const OutGroup out(S(Family::PSL, Sign::Plus, 4, 5, 2));
    CHECK(out.to_string(out.identity()) == "1");
    CHECK(out.to_string({1, 1, 3}) == "f t d^3");
    CHECK(out.parse("d f") == OutElement{1, 0, 5 % 4});
    CHECK(out.parse("d^-1") == out.delta(3));
    CHECK_THROWS_AS(out.parse("x"), UsageError);
    CHECK_THROWS_AS(out.parse(""), UsageError);
    CHECK_THROWS_AS(OutGroup(S(Family::PSL, Sign::Plus, 2, 5)), UsageError);
}

TEST_CASE("cyclic subgroups up to conjugacy") {
    const auto reps = cyclic_subgroups_up_to_conjugacy(S(Family::PSL, Sign::Plus, 3, 7));
    const OutGroup out(S(Family::PSL, Sign::Plus, 3, 7));
    REQUIRE(reps.size() == 3);
    CHECK(reps[0] == out.identity());
    std::multiset<unsigned> orders;
    for (const auto& r : reps) orders.insert(out.order(r));
    CHECK(orders == std::multiset<unsigned>{1, 2, 3});
    CHECK(cyclic_subgroups_up_to_conjugacy(S(Family::PSL, Sign::Plus, 3, 5)).size() == 2);
}

TEST_CASE("class computation does not depend on enumeration order") {
    for (const auto& s : socle_grid()) {
        const auto a = subgroup_classes(s, false), b = subgroup_classes(s, true);
        REQUIRE(a.representatives.size() == b.representatives.size());
        CHECK(a.representatives[0] == OutElement{});
        CHECK(b.representatives[0] == OutElement{});
        for (std::size_t x = 0; x < a.class_of.size(); ++x)
            for (std::size_t y = x; y < a.class_of.size(); y += 7)
                CHECK((a.class_of[x] == a.class_of[y]) == (b.class_of[x] == b.class_of[y]));
    }
}

TEST_CASE("admissibility examples") {
    auto r = admissible_generators(S(Family::PSL, Sign::Plus, 4, 5, 2));
    CHECK(r.d == 4);
    CHECK(r.b == 2);
    CHECK(words(r) == std::vector<std::string>{"f", "f t"});
    CHECK(r.class_count_total == 3);

    r = admissible_generators(S(Family::PSL, Sign::Plus, 3, 7, 3));
    CHECK_FALSE(r.tau_admissible);
    CHECK(r.tau.case_index == 1);
    CHECK(words(r) == std::vector<std::string>{"f"});
    CHECK(r.class_count_total == 2);

    r = admissible_generators(S(Family::PSL, Sign::Plus, 3, 5));
    CHECK(r.tau_admissible);
    CHECK(words(r) == std::vector<std::string>{"t"});
    CHECK(r.class_count_total == 2);

    for (auto s : {S(Family::PSL, Sign::Minus, 4, 3), S(Family::PSL, Sign::Minus, 4, 3, 2), S(Family::PSL, Sign::Minus, 10, 3)}) {
        r = admissible_generators(s);
        CHECK(r.generators.empty());
        CHECK(r.class_count_total == 1);
    }
}

TEST_CASE("admissibility reports are consistent with the coset formulas") {
    for (const auto& s : socle_grid()) {
        const auto r = admissible_generators(s);
        const OutGroup out(s);
        const Spectrum w = spectrum_linear(s);
        const auto sc = subgroup_classes(s);
        const auto allowed = admissible_classes(r, out, sc);
        REQUIRE(r.class_count_total.has_value());
        CHECK(*r.class_count_total == allowed.size());
        for (const auto& g : r.generators) {
            // No nontrivial power of a listed generator is diagonal.
            for (unsigned j = 1; j < out.order(g); ++j) {
                const auto x = out.pow(g, j);
                CHECK_FALSE((x.a == 0 && x.c == 0 && x.i != 0));
            }
            const auto ext = extension_spectrum(s, g);
            if (auto* cs = std::get_if<CosetSpectrum>(&ext))
                for (const auto& e : cs->maximal_elements()) CHECK(w.contains(e));
        }
        // Pure field automorphisms: admissible exactly when the extension adds no order.
        for (const auto& rep : sc.representatives) {
            if (rep.c != 0 || rep.i != 0 || rep.a == 0) continue;
            const auto ext = extension_spectrum(s, rep);
            REQUIRE(is_supported(ext));
            bool inside = true;
            for (const auto& e : std::get<CosetSpectrum>(ext).maximal_elements()) inside = inside && w.contains(e);
            INFO(s.display() << " " << out.to_string(rep));
            CHECK(inside == (allowed.count(sc.class_of[out.index(rep)]) == 1));
        }
    }
}
