#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringcode/caps.hpp"
#include "ringcode/fq.hpp"
#include "ringcode/report.hpp"

namespace ringcode {

/// The supported coefficient algebras, all commutative F_q-algebras on a
/// monomial basis whose pairwise products are again a basis monomial or zero:
///   Fq : the field itself, basis {1}
///   R  : F_q[u]/(u^i), basis u^a for 0 <= a < i, ascending a
///   S  : F_q[u_1..u_i]/(u_k^2, commutators), squarefree monomials ordered by
///        bitmask value with u_1 on bit 0
///   T  : F_q[u,v]/(u^i, v^j, commutator), basis u^a v^b ordered by a*j + b
enum class RingFamily { Fq, R, S, T };

std::string to_string(RingFamily f);

/// Element: one field coefficient per basis monomial, indexed in basis order.
using RingElem = std::vector<fq_t>;

class RingSpec {
  public:
    static RingSpec field_ring(FqPtr field);
    static RingSpec make(RingFamily family, std::uint32_t i, std::uint32_t j, FqPtr field);

    RingFamily family() const { return family_; }
    std::uint32_t param_i() const { return i_; }
    std::uint32_t param_j() const { return j_; }
    const Fq& field() const { return *field_; }
    FqPtr field_ptr() const { return field_; }

    /// F_q-dimension s of the algebra.
    std::uint32_t dim() const { return dim_; }
    /// Total element count q^s.
    PrimePower size() const { return {field_->q(), dim_}; }

    /// Product of two basis monomials: a basis index, or dim() when the
    /// product vanishes (exponent overflow / repeated squarefree variable).
    std::uint32_t mono_mul(std::uint32_t a, std::uint32_t b) const;
    std::string mono_name(std::uint32_t idx) const;

    RingElem zero() const { return RingElem(dim_, 0); }
    RingElem one() const;
    RingElem from_mono(std::uint32_t idx) const;
    bool is_zero(const RingElem& a) const;

    RingElem add(const RingElem& a, const RingElem& b) const;
    RingElem sub(const RingElem& a, const RingElem& b) const;
    RingElem neg(const RingElem& a) const;
    RingElem mul(const RingElem& a, const RingElem& b) const;
    RingElem scalar_mul(fq_t c, const RingElem& a) const;
    RingElem pow(const RingElem& a, std::uint64_t e) const;

    /// Units are exactly the elements with nonzero coefficient on the
    /// monomial 1 (index 0); everything else is nilpotent.
    bool is_unit(const RingElem& a) const;
    /// Inverse of a unit a = c(1 + m) via the finite Neumann series
    /// c^{-1} sum (-m)^k; the product a * a^{-1} = 1 is re-checked.
    RingElem inverse(const RingElem& a) const;
    /// Smallest t >= 1 with a^t = 0, or nullopt when a is not nilpotent.
    std::optional<std::uint32_t> nilpotency_index(const RingElem& a) const;

    /// Deterministic enumeration: coefficient vectors ascending as base-q
    /// integers with the coefficient of monomial 0 least significant.
    RingElem element_at(std::uint64_t idx) const;
    std::uint64_t index_of(const RingElem& a) const;
    std::vector<RingElem> enumerate(const Caps& caps = {}) const;

    /// Canonical text form: terms in basis order, zero coefficients omitted,
    /// the zero element printed "0".
    std::string to_string(const RingElem& a) const;
    /// Parses the element grammar (w-notation scalars, monomials in the
    /// family variables, '*', '^', '+', '-', parentheses).
    RingElem parse(std::string_view text) const;

    /// Canonical descriptor, e.g. "R[i=3,q=4]".
    std::string descriptor() const;

    bool same(const RingSpec& other) const;

  private:
    RingSpec(RingFamily family, std::uint32_t i, std::uint32_t j, FqPtr field);

    RingFamily family_;
    std::uint32_t i_;
    std::uint32_t j_;
    FqPtr field_;
    std::uint32_t dim_;
};

}  // namespace ringcode
