#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringcode/caps.hpp"
#include "ringcode/report.hpp"
#include "ringcode/zmod.hpp"

namespace ringcode {

/// GR(p^r, n) = Z_{p^r}[x]/(f) with f monic of degree n whose reduction mod p
/// is irreducible. The modulus used here is the coefficientwise lift of the
/// deterministic irreducible over Z_p. Elements are codes in [0, p^{rn}):
/// base-p^r digit k is the coefficient of theta^k.
class GaloisRing {
  public:
    GaloisRing(std::uint64_t p, std::uint32_t r, std::uint32_t n);

    std::uint64_t p() const { return p_; }
    std::uint32_t r() const { return r_; }
    std::uint32_t n() const { return n_; }
    const ZMod& coeff_ring() const { return zr_; }
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }
    std::uint64_t size() const { return size_; }

    std::uint64_t zero() const { return 0; }
    std::uint64_t one() const { return 1; }
    std::uint64_t theta() const;  ///< class of x

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    /// Embeds a coefficient c of Z_{p^r} as the constant c.
    std::uint64_t scalar(std::uint64_t c) const;

    std::vector<std::uint64_t> coeffs(std::uint64_t a) const;
    std::uint64_t from_coeffs(std::span<const std::uint64_t> c) const;
    std::string to_string(std::uint64_t a) const;
    std::string modulus_string() const;

    /// Verifies by enumeration that the p^{rn} combinations
    /// a_0 + a_1 theta + ... + a_{n-1} theta^{n-1}, a_k in Z_{p^r}, computed
    /// with ring arithmetic, are pairwise distinct and exhaust the ring.
    Report basis_check(const Caps& caps = {}) const;

  private:
    std::uint64_t p_;
    std::uint32_t r_;
    std::uint32_t n_;
    ZMod zr_;
    std::vector<std::uint64_t> modulus_;
    std::uint64_t size_;
};

}  // namespace ringcode
