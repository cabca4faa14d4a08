#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ringcode {

/// Field element code: the coefficient vector (a_0, ..., a_{r-1}) of the
/// residue class a_0 + a_1 y + ... + a_{r-1} y^{r-1} read as a base-p integer
/// with a_0 as the least significant digit. Element 0 is code 0, element 1 is
/// code 1, and for r >= 2 the class of y ("w" in the text grammar) is code p.
using fq_t = std::uint32_t;

bool is_prime(std::uint64_t n);

/// First monic irreducible of the given degree over Z_p, in the deterministic
/// order "coefficient vector (a_0, ..., a_{d-1}) ascending as a base-p
/// integer". Irreducibility is decided by trial division against every monic
/// polynomial of degree <= d/2. Returns the coefficient vector of size d+1
/// (leading coefficient 1 included).
std::vector<std::uint32_t> find_irreducible(std::uint64_t p, std::uint32_t degree);

/// F_q = Z_p[y]/(m(y)) with q = p^r. Immutable after construction and safe to
/// share across threads; all arithmetic is a pure function of (context, codes).
class Fq {
  public:
    /// Builds the field with modulus find_irreducible(p, r).
    Fq(std::uint64_t p, std::uint32_t r);
    /// Builds the field with an explicit monic modulus (coefficient vector of
    /// size r+1, ascending powers). The modulus is verified irreducible.
    Fq(std::uint64_t p, std::vector<std::uint32_t> modulus);

    std::uint64_t p() const { return p_; }
    std::uint32_t r() const { return r_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    fq_t zero() const { return 0; }
    fq_t one() const { return 1; }
    /// Class of y; only defined for r >= 2.
    fq_t gen() const;

    fq_t add(fq_t a, fq_t b) const;
    fq_t sub(fq_t a, fq_t b) const;
    fq_t neg(fq_t a) const;
    fq_t mul(fq_t a, fq_t b) const;
    /// Multiplicative inverse; throws std::domain_error on 0.
    fq_t inv(fq_t a) const;
    /// Square-and-multiply power; pow(0, 0) = 1 by convention.
    fq_t pow(fq_t a, std::uint64_t e) const;

    std::vector<std::uint32_t> coeffs(fq_t a) const;
    fq_t from_coeffs(std::span<const std::uint32_t> c) const;

    /// Scalar in w-notation, e.g. "0", "1", "w", "w+1", "2*w^2+1".
    std::string to_string(fq_t a) const;
    /// Parses the w-notation grammar (sums/products/powers of integers and w).
    fq_t parse(std::string_view text) const;

    bool same(const Fq& other) const;

  private:
    void validate();

    std::uint64_t p_ = 0;
    std::uint32_t r_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
};

using FqPtr = std::shared_ptr<const Fq>;

inline FqPtr make_field(std::uint64_t p, std::uint32_t r) {
    return std::make_shared<const Fq>(p, r);
}

}  // namespace ringcode
