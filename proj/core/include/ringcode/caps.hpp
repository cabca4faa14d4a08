#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ringcode {

/// Hard limits for exhaustive computations. Exceeding a cap raises cap_error
/// with an actionable message; results are never silently truncated.
struct Caps {
    std::uint64_t max_enum = std::uint64_t{1} << 20;       ///< elements per exhaustive scan
    std::uint64_t max_codewords = std::uint64_t{1} << 24;  ///< codewords per code enumeration
    std::uint32_t max_dim = 4096;                          ///< F_q-dimension of ambient spaces
};

class cap_error : public std::runtime_error {
  public:
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ringcode
