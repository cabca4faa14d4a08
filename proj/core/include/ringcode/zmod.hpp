#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ringcode {

/// Z_{p^r}: residues mod p^r. Units are exactly the residues coprime to p.
class ZMod {
  public:
    ZMod(std::uint64_t p, std::uint32_t r);

    std::uint64_t p() const { return p_; }
    std::uint32_t r() const { return r_; }
    std::uint64_t modulus() const { return m_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    bool is_unit(std::uint64_t a) const;
    /// Inverse by extended Euclid; throws std::domain_error on non-units.
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

  private:
    std::uint64_t p_;
    std::uint32_t r_;
    std::uint64_t m_;
};

/// Newton step refining a simple root: given f over Z_{p^{t+1}} (coefficients
/// ascending) and rho with f(rho) = 0 mod p^t and f'(rho) a unit mod p,
/// returns the unique sigma = rho mod p^t with f(sigma) = 0 mod p^{t+1},
/// computed as sigma = rho - f(rho) * f'(rho)^{-1} mod p^{t+1}. Both
/// postconditions are re-checked on every call.
std::uint64_t hensel_lift_root(std::uint64_t p, std::uint32_t t, std::span<const std::uint64_t> f,
                               std::uint64_t rho);

}  // namespace ringcode
