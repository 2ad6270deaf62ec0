#include "orderspec/oracle/brute.hpp"

#include <thread>
#include <vector>

#include "orderspec/errors.hpp"
#include "orderspec/oracle/order.hpp"
#include "orderspec/oracle/wall.hpp"

namespace orderspec::oracle {

std::string order_kind_name(OrderKind k) {
    switch (k) {
        case OrderKind::Plain: return "plain";
        case OrderKind::Projective: return "projective";
        case OrderKind::TauCoset: return "tau_coset";
        case OrderKind::TauDeltaCoset: return "tau_delta_coset";
    }
    return "?";
}

OrderKind parse_order_kind(const std::string& s) {
    for (auto k : {OrderKind::Plain, OrderKind::Projective, OrderKind::TauCoset, OrderKind::TauDeltaCoset})
        if (order_kind_name(k) == s) return k;
    throw UsageError("unknown order kind '" + s + "' (plain, projective, tau_coset, tau_delta_coset)");
}

std::string mode_name(Mode m) { return m == Mode::Full ? "full" : "sample"; }

Mode parse_mode(const std::string& s) {
    if (s == "full") return Mode::Full;
    if (s == "sample") return Mode::Sample;
    throw UsageError("unknown mode '" + s + "' (full, sample)");
}

namespace {

struct Worker {
    const MatrixGroup& G;
    const OrderComputer& oc;
    OrderKind kind;
    std::set<std::uint64_t> attained;
    std::uint64_t processed = 0;

    void take(const FqMatrix& g) {
        std::uint64_t v = 0;
        switch (kind) {
            case OrderKind::Plain: v = oc.order(g); break;
            case OrderKind::Projective: v = oc.projective_order(g); break;
            case OrderKind::TauCoset: v = oc.tau_coset_order(g); break;
            case OrderKind::TauDeltaCoset:
                if (det_square_class(G.field(), g) == SquareClass::Square) return;
                v = oc.tau_coset_order(g);
                break;
        }
        attained.insert(v);
        ++processed;
    }
};

// Moves a GL element into the non-square determinant class.
void force_nonsquare(const MatrixGroup& G, FqMatrix& g) {
    const FiniteField& F = G.field();
    if (det_square_class(F, g) == SquareClass::NonSquare) return;
    for (unsigned k = 0; k < g.n; ++k) g.at(0, k) = F.mul(g.at(0, k), F.primitive());
}

}  // namespace

BruteResult brute_spectrum(const MatrixGroup& G, OrderKind kind, const BruteOptions& opt) {
    if (kind == OrderKind::TauDeltaCoset && G.kind() != GroupKind::GL)
        throw UsageError("tau_delta_coset orders are taken over GL");
    if (opt.threads == 0) throw UsageError("threads must be positive");
    const OrderComputer oc(G.field(), G.n());
    const unsigned threads = opt.threads;
    std::vector<Worker> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) workers.push_back(Worker{G, oc, kind, {}, 0});

    BruteResult result;
    if (opt.mode == Mode::Full) {
        if (G.order() > BigInt(static_cast<unsigned long>(opt.enum_bound)))
            throw BoundExceeded("|" + G.name() + "| = " + G.order().get_str() + " exceeds the enumeration bound " +
                                std::to_string(opt.enum_bound) + "; use sample mode");
        result.sampler = "enumeration";
        auto run = [&](unsigned t) {
            enumerate_elements(G, [&](const FqMatrix& g) { workers[t].take(g); }, threads, t);
        };
        if (threads == 1) {
            run(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run, t);
            for (auto& th : pool) th.join();
        }
    } else {
        result.sampler = "uniform-sequential";
        const std::uint64_t chunks = (opt.samples + kSampleChunk - 1) / kSampleChunk;
        auto run = [&](unsigned t) {
            for (std::uint64_t c = t; c < chunks; c += threads) {
                auto rng = chunk_rng(opt.seed, c);
                const std::uint64_t count = std::min(kSampleChunk, opt.samples - c * kSampleChunk);
                for (std::uint64_t s = 0; s < count; ++s) {
                    FqMatrix g = sample_element(G, rng);
                    if (kind == OrderKind::TauDeltaCoset) force_nonsquare(G, g);
                    workers[t].take(g);
                }
            }
        };
        if (threads == 1) {
            run(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run, t);
            for (auto& th : pool) th.join();
        }
    }
    for (auto& w : workers) {
        result.attained.insert(w.attained.begin(), w.attained.end());
        result.processed += w.processed;
    }
    return result;
}

}  // namespace orderspec::oracle
