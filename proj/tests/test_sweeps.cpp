#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cpokit/sweep.hpp"

using namespace cpokit;

namespace {

bool same_result(const SweepResult& a, const SweepResult& b) {
    return a.checked == b.checked && a.mismatches == b.mismatches &&
           a.counterexamples == b.counterexamples;
}

}  // namespace

TEST_CASE("map corpus is deterministic") {
    const MapCorpus& a = MapCorpus::of(3);
    const MapCorpus& b = MapCorpus::of(3);
    CHECK(&a == &b);
    CHECK(a.size() > 0);
}

TEST_CASE("epi quadruple sweep: serial and OpenMP agree and find no mismatch") {
    const SweepResult s = epi_quadruple_sweep(3, Execution::Serial);
    const SweepResult p = epi_quadruple_sweep(3, Execution::OpenMP);
    CHECK(same_result(s, p));
    CHECK(s.ok());
    CHECK(s.checked > 0);
}

TEST_CASE("mono/iso sweep: serial and OpenMP agree and find no mismatch") {
    const SweepResult s = mono_iso_sweep(3, Execution::Serial);
    const SweepResult p = mono_iso_sweep(3, Execution::OpenMP);
    CHECK(same_result(s, p));
    CHECK(s.ok());
}

TEST_CASE("strong coincidence sweep: serial and OpenMP agree and find no mismatch") {
    const StrongCoincidence s = strong_coincidence_sweep(3, Execution::Serial);
    const StrongCoincidence p = strong_coincidence_sweep(3, Execution::OpenMP);
    CHECK(same_result(s.epis, p.epis));
    CHECK(same_result(s.monos, p.monos));
    CHECK(s.epis.ok());
    CHECK(s.monos.ok());
}

TEST_CASE("factorization sweep: serial and OpenMP agree and find no failure") {
    const SweepResult s = factorization_sweep(3, Execution::Serial);
    const SweepResult p = factorization_sweep(3, Execution::OpenMP);
    CHECK(same_result(s, p));
    CHECK(s.ok());
}

TEST_CASE("coequalizer universal sweep: serial and OpenMP agree and find no failure") {
    const SweepResult s = coequalizer_universal_sweep(2, 3, Execution::Serial);
    const SweepResult p = coequalizer_universal_sweep(2, 3, Execution::OpenMP);
    CHECK(same_result(s, p));
    CHECK(s.ok());
}

TEST_CASE("strong coincidence holds on the full n<=4 corpus") {
    // diagonalization vs extremal for epis, diagonalization vs embedding for
    // monos, exhaustive squares
    const StrongCoincidence r = strong_coincidence_sweep(4, Execution::OpenMP);
    CHECK(r.epis.ok());
    CHECK(r.monos.ok());
    CHECK(r.epis.checked > 0);
    CHECK(r.monos.checked > 0);
}

TEST_CASE("extremal route sweep: the two extremality routes agree corpus-wide") {
    const SweepResult s = extremal_route_sweep(3, Execution::Serial);
    const SweepResult p = extremal_route_sweep(3, Execution::OpenMP);
    CHECK(same_result(s, p));
    CHECK(s.ok());
}

TEST_CASE("parallel runs are reproducible") {
    const SweepResult a = epi_quadruple_sweep(3, Execution::OpenMP);
    const SweepResult b = epi_quadruple_sweep(3, Execution::OpenMP);
    CHECK(same_result(a, b));
}
