#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace ringcode {

enum class Verdict { holds, fails, error };

std::string to_string(Verdict v);

/// Exact count q^e. Counts routinely exceed 64 bits, so the pair is kept
/// symbolic; equality of counts with a common base is compared on exponents.
struct PrimePower {
    std::uint64_t base = 0;
    std::uint64_t exp = 0;

    bool fits_u64() const;
    std::uint64_t value() const;  ///< throws std::overflow_error when !fits_u64()
    std::string str() const;      ///< "4^3"
    nlohmann::json to_json() const;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Outcome of a structural check: which claim was tested, with which
/// parameters, whether it held, and the witness or counterexample payload.
struct Report {
    std::string claim;
    nlohmann::json params = nlohmann::json::object();
    Verdict verdict = Verdict::holds;
    nlohmann::json witness;
    std::vector<std::string> deviations;

    nlohmann::json to_json() const;
    std::string text() const;
    /// 0 = holds, 1 = fails, 2 = error
    int exit_code() const;
};

}  // namespace ringcode
