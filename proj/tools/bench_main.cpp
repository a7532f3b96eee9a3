#include "commutant/commute.hpp"
#include "commutant/latsolve.hpp"
#include "commutant/selftest.hpp"
#include "commutant/sl2grp.hpp"
#include "commutant/testkit.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

// Throughput comparison between the serial reference driver and the OpenMP
// batch driver on the main exact kernels. Cases are independent, so both
// drivers must agree on the failure count; the benchmark asserts that.
namespace {

using namespace commutant;

double now_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

struct Kernel {
    const char* name;
    CaseFn fn;
};

bool bench_decompose_case(std::uint64_t s, long) {
    testkit::Rng rng(s);
    const Ring z = Ring::integers();
    Matrix a = testkit::random_trace_zero(rng, z, 4, -50, 50);
    CommutatorCertificate cert = decompose_pid(a, s);
    return commutator(cert.X, cert.Y) == a && cert.gl_cert == 1;
}

bool bench_snf_case(std::uint64_t s, long) {
    testkit::Rng rng(s);
    const Ring z = Ring::integers();
    Matrix m = testkit::random_matrix(rng, z, 6, 6, -99, 99);
    SnfResult r = snf(m);
    return r.U * m * r.V == r.D;
}

bool bench_group_case(std::uint64_t s, long) {
    testkit::Rng rng(s);
    Ring R = Ring::residue_ring(7, 3);
    Matrix a = testkit::random_sl2(rng, R);
    GroupWitness w = group_commutator_sl(a);
    return w.x * w.y * inverse(w.x) * inverse(w.y) == a;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"commutant_bench: OpenMP batch driver vs serial reference"};
    long cases = 64;
    std::uint64_t seed = 42;
    app.add_option("--cases", cases, "cases per kernel");
    app.add_option("--seed", seed, "base seed");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; parallel driver falls back to serial\n");
#endif

    const Kernel kernels[] = {
        {"decompose_pid 4x4", bench_decompose_case},
        {"snf 6x6", bench_snf_case},
        {"group_commutator_sl p=7 k=3", bench_group_case},
    };

    bool all_ok = true;
    for (const Kernel& k : kernels) {
        double t0 = now_seconds();
        long fail_serial = run_cases_serial(cases, seed, k.fn, nullptr);
        double t1 = now_seconds();
        long fail_parallel = run_cases_parallel(cases, seed, k.fn, nullptr);
        double t2 = now_seconds();
        double ts = t1 - t0, tp = t2 - t1;
        bool agree = fail_serial == fail_parallel;
        all_ok = all_ok && agree && fail_serial == 0;
        std::printf("%-30s %6ld cases  serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n",
                    k.name, cases, ts, tp, tp > 0 ? ts / tp : 0.0,
                    agree ? (fail_serial == 0 ? "ok" : "FAILURES") : "DRIVERS DISAGREE");
    }
    return all_ok ? 0 : 1;
}
