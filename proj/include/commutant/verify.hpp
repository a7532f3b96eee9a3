#pragma once

#include "commutant/json_io.hpp"

#include <string>
#include <vector>

namespace commutant {

// Outcome of re-checking a certificate document. The verifier deliberately
// re-implements matrix multiplication, powers and minor-gcd computations so
// that it shares no code path with the construction side.
struct VerifyReport {
    bool ok = true;
    std::vector<std::string> passed;
    std::vector<std::string> failed;

    void check(bool cond, const std::string& what) {
        (cond ? passed : failed).push_back(what);
        ok = ok && cond;
    }
};

VerifyReport verify_certificate(const Json& doc);  // throws ParseError on malformed input

}  // namespace commutant
