#include "orderspec/oracle/witness.hpp"

#include <numeric>
#include <random>

#include "orderspec/oracle/groups.hpp"
#include "orderspec/oracle/order.hpp"
#include "orderspec/spectra.hpp"

namespace orderspec::oracle {

std::vector<Elem> primitive_polynomial(const FiniteField& F, unsigned k) {
    const std::uint64_t Q = F.q();
    std::uint64_t target = 1;
    for (unsigned i = 0; i < k; ++i) target *= Q;
    --target;
    std::uint64_t count = target + 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<Elem> poly(k + 1, 0);
        std::uint64_t x = idx;
        for (unsigned i = 0; i < k; ++i) {
            poly[i] = static_cast<Elem>(x % Q);
            x /= Q;
        }
        poly[k] = 1;
        if (poly[0] == 0) continue;
        if (matrix_order(F, companion(F, poly)) == target) return poly;
    }
    throw UsageError("no primitive polynomial found");
}

namespace {

constexpr std::uint64_t kExhaustiveCap = 2000000;
constexpr std::uint64_t kRandomTries = 200000;

struct Shape {
    unsigned jordan = 0;  // size of the unipotent block, 0 when absent
    std::vector<unsigned> parts;
};

}  // namespace

WitnessResult witness_for_generator(const GroupSpec& spec, const BigInt& generator, std::uint64_t seed) {
    if ((spec.family != Family::PSL && spec.family != Family::PGL) || spec.eps != Sign::Plus)
        return Unsupported{"witness construction covers PSL/PGL with eps = + only"};
    if (spec.q() > FiniteField::kMaxSize) return Unsupported{"field too large for the oracle"};
    const FiniteField F(static_cast<std::uint32_t>(spec.p), spec.m);
    const unsigned n = spec.n;
    const std::uint64_t q = F.q();
    const OrderComputer oc(F, n);
    const std::uint64_t d = std::gcd<std::uint64_t>(n, q - 1);
    const std::uint64_t det_exp = spec.family == Family::PSL ? (q - 1) / d : 0;

    std::vector<Shape> shapes;
    for (const auto& raw : spectrum_linear_raw(spec)) {
        if (raw.value != generator) continue;
        Shape s;
        if (raw.t > 0) s.jordan = static_cast<unsigned>(big_pow(spec.p_big(), raw.t - 1).get_ui()) + 1;
        s.parts = raw.parts;
        shapes.push_back(s);
    }
    if (shapes.empty()) return Unsupported{"value is not a listed generator"};

    for (const auto& shape : shapes) {
        // Block generators and the range of each exponent (the Jordan block is scaled by mu in F_q^*).
        std::vector<FqMatrix> gens;
        std::vector<std::uint64_t> ranges;
        if (shape.jordan > 0) ranges.push_back(q - 1);
        for (unsigned k : shape.parts) {
            gens.push_back(companion(F, primitive_polynomial(F, k)));
            std::uint64_t r = 1;
            for (unsigned i = 0; i < k; ++i) r *= q;
            ranges.push_back(r - 1);
        }
        auto build = [&](const std::vector<std::uint64_t>& ex) {
            std::vector<FqMatrix> blocks;
            std::size_t pos = 0;
            if (shape.jordan > 0) blocks.push_back(mat_scale(F, jordan_block(shape.jordan), F.exp(ex[pos++])));
            for (const auto& c : gens) blocks.push_back(mat_pow(F, c, ex[pos++]));
            return direct_sum(blocks);
        };
        auto good = [&](const FqMatrix& g) {
            if (det_exp != 0 && F.pow(determinant(F, g), det_exp) != 1) return false;
            return BigInt(static_cast<unsigned long>(oc.projective_order(g))) == generator;
        };

        long double total = 1;
        for (auto r : ranges) total *= static_cast<long double>(r);
        std::vector<std::uint64_t> ex(ranges.size(), 0);
        if (total <= kExhaustiveCap) {
            while (true) {
                FqMatrix g = build(ex);
                if (good(g)) return g;
                std::size_t i = 0;
                while (i < ex.size() && ++ex[i] == ranges[i]) ex[i++] = 0;
                if (i == ex.size()) break;
            }
        } else {
            std::mt19937_64 rng(splitmix64(seed));
            for (std::uint64_t t = 0; t < kRandomTries; ++t) {
                for (std::size_t i = 0; i < ex.size(); ++i) ex[i] = rng() % ranges[i];
                FqMatrix g = build(ex);
                if (good(g)) return g;
            }
        }
    }
    return Unsupported{"no witness found for " + generator.get_str()};
}

}  // namespace orderspec::oracle
