#pragma once

#include "commutant/commute.hpp"
#include "commutant/matrix.hpp"
#include "commutant/sl2grp.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace commutant {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "commutant";
inline constexpr const char* kToolVersion = "0.1.0";

Json ring_to_json(const Ring& ring);
Ring ring_from_json(const Json& j);  // throws ParseError

// {"ring": {...}, "rows": n, "cols": n, "entries": [["-4","0",...], ...]}
// with entries as strings so arbitrary precision survives interchange.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);  // throws ParseError

// Certificate documents. The verification summary is recomputed at write
// time by the independent verifier, never copied from the construction.
Json decompose_certificate_json(const Matrix& input, const CommutatorCertificate& cert,
                                bool traceless, std::uint64_t seed);
Json group_certificate_json(const Matrix& input, const GroupWitness& w, bool sl_variant,
                            std::uint64_t seed);

}  // namespace commutant
