#include "cpokit/closure.hpp"

#include "cpokit/errors.hpp"

namespace cpokit {

ClosureTrace directed_closure(const FinPoset& p, Subset start) {
    if (p.size() > 20)
        throw BoundTooLarge("directed_closure enumerates subsets; limited to 20 elements");
    if ((start & ~p.carrier()) != 0) throw MathError("start subset is not within the carrier");

    ClosureTrace trace{p, start, {start}, {}};
    for (;;) {
        const Subset cur = trace.stages.back();
        Subset next = cur;
        std::vector<ClosureWitness> found;
        const int stage = trace.length();
        // Enumerate subsets of the current stage via the standard submask walk.
        for (Subset y = cur;; y = (y - 1) & cur) {
            if (y != 0 && p.is_directed(y)) {
                auto j = p.join_of(y);
                if (j && !subset_has(cur, *j) && !subset_has(next, *j)) {
                    next = subset_with(next, *j);
                    found.push_back({stage, *j, y});
                }
            }
            if (y == 0) break;
        }
        if (next == cur) break;
        trace.stages.push_back(next);
        trace.witnesses.insert(trace.witnesses.end(), found.begin(), found.end());
    }
    return trace;
}

}  // namespace cpokit
