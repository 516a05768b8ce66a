#pragma once

#include "json.hpp"

#include <span>
#include <string>

#include "walkmat/chebyshev.hpp"
#include "walkmat/verify.hpp"

namespace walkmat {

// Big integers are emitted as decimal strings. elapsed_ms is included only
// when with_timing is set, so default output is reproducible byte for byte.
nlohmann::json to_json(const VerifyReport& r, bool with_timing = false);
nlohmann::json to_json(std::span<const VerifyReport> reports, bool with_timing = false);
nlohmann::json to_json(const IdentityCheck& c);
nlohmann::json to_json(const Rank2CorpusResult& r);

// "1^3 2^1 0^1" style run-length rendering of an invariant-factor list.
std::string compress_diag(std::span<const BigInt> diag);

std::string format_table(std::span<const VerifyReport> reports, bool with_timing = false);

}  // namespace walkmat
