#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "orderspec/oracle/groups.hpp"

namespace orderspec::oracle {

enum class OrderKind { Plain, Projective, TauCoset, TauDeltaCoset };
enum class Mode { Full, Sample };

std::string order_kind_name(OrderKind k);
OrderKind parse_order_kind(const std::string& s);
std::string mode_name(Mode m);
Mode parse_mode(const std::string& s);

struct BruteOptions {
    Mode mode = Mode::Full;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::uint64_t enum_bound = 30000000;
};

struct BruteResult {
    std::set<std::uint64_t> attained;
    std::uint64_t processed = 0;  // elements whose order was taken
    std::string sampler;          // "enumeration" or "uniform-sequential"
};

// Orders of the requested kind over G (Plain, Projective, TauCoset) or over
// the non-square-determinant part of GL (TauDeltaCoset). Full mode throws
// BoundExceeded when |G| exceeds the bound.
BruteResult brute_spectrum(const MatrixGroup& G, OrderKind kind, const BruteOptions& opt);

constexpr std::uint64_t kSampleChunk = 1024;

}  // namespace orderspec::oracle
