#include "ringcode/report.hpp"

#include <sstream>
#include <stdexcept>

namespace ringcode {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::error: return "error";
    }
    return "error";
}

bool PrimePower::fits_u64() const {
    if (base <= 1) return true;
    std::uint64_t acc = 1;
    for (std::uint64_t k = 0; k < exp; ++k) {
        if (acc > UINT64_MAX / base) return false;
        acc *= base;
    }
    return true;
}

std::uint64_t PrimePower::value() const {
    if (base <= 1) return exp == 0 ? 1 : base;
    std::uint64_t acc = 1;
    for (std::uint64_t k = 0; k < exp; ++k) {
        if (acc > UINT64_MAX / base) throw std::overflow_error("PrimePower::value: " + str() + " exceeds 64 bits");
        acc *= base;
    }
    return acc;
}

std::string PrimePower::str() const {
    return std::to_string(base) + "^" + std::to_string(exp);
}

nlohmann::json PrimePower::to_json() const {
    nlohmann::json j{{"base", base}, {"exponent", exp}, {"pow", str()}};
    if (fits_u64()) j["value"] = value();
    return j;
}

nlohmann::json Report::to_json() const {
    return nlohmann::json{
        {"claim", claim},
        {"params", params},
        {"verdict", to_string(verdict)},
        {"witness", witness.is_null() ? nlohmann::json(nullptr) : witness},
        {"deviations", deviations},
    };
}

std::string Report::text() const {
    std::ostringstream os;
    os << "claim:   " << claim << "\n";
    os << "params:  " << params.dump() << "\n";
    os << "verdict: " << to_string(verdict) << "\n";
    if (!witness.is_null()) os << "witness: " << witness.dump() << "\n";
    for (const auto& d : deviations) os << "note:    " << d << "\n";
    return os.str();
}

int Report::exit_code() const {
    switch (verdict) {
        case Verdict::holds: return 0;
        case Verdict::fails: return 1;
        case Verdict::error: return 2;
    }
    return 2;
}

}  // namespace ringcode
