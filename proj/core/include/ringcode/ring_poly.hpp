#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ringcode/monomial_ring.hpp"

namespace ringcode {

/// Polynomial over a RingSpec: c[k] is the coefficient of x^k, trailing zero
/// coefficients trimmed. The zero polynomial has an empty coefficient list and
/// no degree (nullopt sentinel, never -1 in formulas).
struct RingPoly {
    std::vector<RingElem> c;

    bool is_zero() const { return c.empty(); }
    std::optional<std::uint32_t> degree() const {
        if (c.empty()) return std::nullopt;
        return static_cast<std::uint32_t>(c.size() - 1);
    }
};

RingPoly poly_trim(const RingSpec& spec, RingPoly f);
RingPoly poly_zero();
RingPoly poly_one(const RingSpec& spec);
/// x^k with an arbitrary ring coefficient.
RingPoly poly_term(const RingSpec& spec, RingElem coeff, std::uint32_t k);
/// x^n - 1.
RingPoly x_pow_minus_one(const RingSpec& spec, std::uint32_t n);

bool poly_eq(const RingSpec& spec, const RingPoly& f, const RingPoly& g);
RingPoly poly_add(const RingSpec& spec, const RingPoly& f, const RingPoly& g);
RingPoly poly_sub(const RingSpec& spec, const RingPoly& f, const RingPoly& g);
RingPoly poly_neg(const RingSpec& spec, const RingPoly& f);
RingPoly poly_mul(const RingSpec& spec, const RingPoly& f, const RingPoly& g);
RingPoly poly_pow(const RingSpec& spec, const RingPoly& f, std::uint64_t e);
bool poly_is_monic(const RingSpec& spec, const RingPoly& f);

struct PolyDivMod {
    RingPoly quot;
    RingPoly rem;
};
/// Long division by a monic divisor, exact over any commutative coefficient
/// ring; throws std::domain_error when h is not monic.
PolyDivMod poly_divmod_monic(const RingSpec& spec, const RingPoly& f, const RingPoly& h);
/// True when the remainder of f by monic h vanishes.
bool divides_monic(const RingSpec& spec, const RingPoly& h, const RingPoly& f);

/// Canonical polynomial text: descending powers, each coefficient braced,
/// e.g. "{1+u}*x^3 + {u}*x + {1}"; the zero polynomial prints "{0}".
std::string poly_to_string(const RingSpec& spec, const RingPoly& f);
/// Parses the polynomial grammar. Bare "x^k" terms get coefficient one and
/// bare integers are field constants; repeated powers accumulate.
RingPoly poly_parse(const RingSpec& spec, std::string_view text);

/// R[x]/(x^n - 1). Elements are polynomials of degree < n; the quotient is an
/// F_q-space of dimension s*n flattened with column k*s + b (coordinate k,
/// ring basis monomial b).
class QuotientCtx {
  public:
    QuotientCtx(RingSpec ring, std::uint32_t n);

    const RingSpec& ring() const { return ring_; }
    std::uint32_t n() const { return n_; }
    std::uint32_t fq_dim() const { return ring_.dim() * n_; }
    PrimePower size() const { return {ring_.field().q(), fq_dim()}; }

    /// Folds x^{n+k} onto x^k.
    RingPoly reduce(const RingPoly& f) const;
    /// Convolution with index folding; inputs of degree < n.
    RingPoly mul(const RingPoly& f, const RingPoly& g) const;
    /// Cyclic coordinate shift (c_0,...,c_{n-1}) -> (c_{n-1},c_0,...,c_{n-2});
    /// equals multiplication by x.
    RingPoly shift(const RingPoly& f) const;
    RingElem coeff(const RingPoly& f, std::uint32_t k) const;

    std::vector<fq_t> flatten(const RingPoly& f) const;
    RingPoly unflatten(std::span<const fq_t> v) const;

    std::string to_string(const RingPoly& f) const { return poly_to_string(ring_, f); }
    /// Parse followed by reduction into the quotient.
    RingPoly parse(std::string_view text) const { return reduce(poly_parse(ring_, text)); }

    bool same(const QuotientCtx& other) const { return n_ == other.n_ && ring_.same(other.ring_); }

  private:
    RingSpec ring_;
    std::uint32_t n_;
};

/// Number of nonzero coordinates among c_0..c_{n-1} (trailing zeros carry no
/// weight, so the poly representation needs no padding).
std::uint32_t hamming_weight(const RingPoly& f);

}  // namespace ringcode
