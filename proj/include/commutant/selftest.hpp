#pragma once

#include "commutant/json_io.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace commutant {

// One property-test case; returns true on pass. The case derives all of its
// randomness from the given stream seed, so results do not depend on how the
// batch is scheduled.
using CaseFn = std::function<bool(std::uint64_t case_seed, long index)>;

struct SuiteResult {
    std::string name;
    long cases = 0;
    long failures = 0;
    double seconds = 0.0;
    std::string first_error;
};

// Batch drivers over independent cases. The OpenMP driver is the production
// path; the serial driver is the reference implementation kept for testing
// and benchmarking, and must produce the identical failure set.
long run_cases_serial(long n, std::uint64_t seed, const CaseFn& f, std::string* first_error);
long run_cases_parallel(long n, std::uint64_t seed, const CaseFn& f, std::string* first_error);

struct SelftestOptions {
    std::uint64_t seed = 42;
    double scale = 1.0;  // --budget small runs at 0.2
    bool parallel = true;
};

struct Suite {
    std::string name;
    long default_cases;
    CaseFn fn;
};

// The property suites backing `commutant selftest`, mirroring each module's
// stated invariants.
std::vector<Suite> all_suites();

std::vector<SuiteResult> run_selftest(const SelftestOptions& opt);
bool all_passed(const std::vector<SuiteResult>& results);

// Corrupt one matrix entry of a certificate document such that a certified
// identity genuinely breaks; used by the mutation-sensitivity checks.
Json mutate_decompose_certificate(std::mt19937_64& rng, const Json& doc);
Json mutate_group_certificate(std::mt19937_64& rng, const Json& doc);

}  // namespace commutant
