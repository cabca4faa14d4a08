#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "ringcode/galois_ring.hpp"
#include "ringcode/monomial_ring.hpp"

namespace ringcode {

/// Parses ring descriptors:
///   Fq[p=..,r=..] | R[i=..,q=..] | S[i=..,q=..] | T[i=..,j=..,q=..]
///   | GR[p=..,r=..,n=..]
/// where q = p^r selects the base field through the deterministic irreducible.
/// The result round-trips through its canonical printed form.
std::variant<RingSpec, GaloisRing> parse_ring_descriptor(std::string_view text);

/// Convenience for the common case; throws std::invalid_argument for GR
/// descriptors.
RingSpec parse_coefficient_ring(std::string_view text);

std::string descriptor_string(const std::variant<RingSpec, GaloisRing>& ring);

}  // namespace ringcode
