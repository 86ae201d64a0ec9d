#pragma once

#include <string>
#include <vector>

#include "cpokit/poset.hpp"

namespace cpokit {

// Corpus sweeps quantify the categorical characterizations over every cpo map
// between pointed posets of bounded size. Each kernel exists in a serial
// reference form and an OpenMP form; both produce identical results (counts
// are reduced associatively, counterexample lists are sorted afterwards).
enum class Execution { Serial, OpenMP };

struct SweepResult {
    long long checked = 0;
    long long mismatches = 0;
    std::vector<std::string> counterexamples;  // sorted, at most 8 kept
    bool ok() const { return mismatches == 0; }
};

// All maps between all corpus posets of size <= bound, flattened.
struct MapCorpus {
    std::vector<FinPoset> posets;
    struct Entry {
        int src, dst;            // indices into posets
        std::vector<int> table;
    };
    std::vector<Entry> maps;

    static const MapCorpus& of(int bound);  // cached, bound <= 5
    std::size_t size() const { return maps.size(); }
};

// surjective <=> closure(image) = codomain <=> cokernel-pair legs equal
// <=> right-cancellable over all corpus targets.
SweepResult epi_quadruple_sweep(int bound, Execution exec = Execution::Serial);

// mono <=> injective <=> left-cancellable, and
// iso <=> order-reflecting bijection <=> two-sided inverse exists.
SweepResult mono_iso_sweep(int bound, Execution exec = Execution::Serial);

// For every epi: diagonalization against all corpus monos <=> extremal
// (mono-enumeration) verdict. For every mono: diagonalization against all
// corpus epis <=> order-embedding. Both coincidences in one pass.
struct StrongCoincidence {
    SweepResult epis;   // strong-epi diagonalization vs extremal
    SweepResult monos;  // strong-mono diagonalization vs embedding
};
StrongCoincidence strong_coincidence_sweep(int bound, Execution exec = Execution::Serial);

// m o e = f, e epi, m an order-embedding, mid = image with inherited order.
SweepResult factorization_sweep(int bound, Execution exec = Execution::Serial);

// Coequalizer universal property: unique mediating map for every coequalizing
// map into a corpus target.
SweepResult coequalizer_universal_sweep(int src_bound, int tgt_bound,
                                        Execution exec = Execution::Serial);

// Generated-order extremality route vs mono-enumeration route, all corpus maps.
SweepResult extremal_route_sweep(int bound, Execution exec = Execution::Serial);

}  // namespace cpokit
