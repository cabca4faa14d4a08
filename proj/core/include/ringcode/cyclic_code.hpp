#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringcode/caps.hpp"
#include "ringcode/fq_matrix.hpp"
#include "ringcode/report.hpp"
#include "ringcode/ring_poly.hpp"

namespace ringcode {

/// A cyclic code as an ideal of R[x]/(x^n - 1), represented by a row-reduced
/// F_q-basis of the ideal inside F_q^{s n}. The basis rows are the reduction
/// of {b x^k g : b ring basis monomial, 0 <= k < n, g generator}, which spans
/// the ideal F_q-linearly.
struct CyclicCode {
    QuotientCtx ctx;
    std::vector<RingPoly> generators;
    FqMatrix basis;  ///< reduced

    std::uint32_t rank() const { return static_cast<std::uint32_t>(basis.rank()); }
    PrimePower cardinality() const { return {ctx.ring().field().q(), rank()}; }
};

CyclicCode code_build(const QuotientCtx& ctx, std::vector<RingPoly> generators, const Caps& caps = {});

bool code_contains(const CyclicCode& code, const RingPoly& c);

/// All q^rank codewords, deterministically ordered; capped by max_codewords.
std::vector<RingPoly> code_enumerate(const CyclicCode& code, const Caps& caps = {});

/// Minimum Hamming weight over the nonzero codewords, by full enumeration.
/// Throws std::domain_error on the zero code.
std::uint32_t min_distance(const CyclicCode& code, const Caps& caps = {});
/// Distance together with one codeword attaining it.
std::pair<std::uint32_t, RingPoly> min_weight_word(const CyclicCode& code, const Caps& caps = {});

/// For monic h | x^n - 1: checks that {h, xh, ..., x^{n-r-1}h} (r = deg h) is
/// R-linearly independent and spans (g), i.e. the code is free of rank n - r.
Report free_rank_check(const QuotientCtx& ctx, const RingPoly& h, const Caps& caps = {});

/// For monic h | x^n - 1: checks |C| = |R|^{n - deg h} exactly (compared as
/// powers of q).
Report cardinality_formula_check(const QuotientCtx& ctx, const RingPoly& h, const Caps& caps = {});

struct TwoGenResult {
    CyclicCode code;
    Report report;
};
/// Over R_2 (family R, i = 2): builds C = (g + u p, u a) for monic a | g |
/// x^n - 1 with deg p < deg a, and checks |C| = q^{2n - deg g - deg a}
/// together with independence and span of the associated 2n - r - t spanning
/// set.
TwoGenResult two_generator_build(const QuotientCtx& ctx, const RingPoly& g, const RingPoly& p_poly,
                                 const RingPoly& a, const Caps& caps = {});

enum class PAdicKind { zero_expansion, nonzero_expansion, full_expansion };

std::string to_string(PAdicKind k);

/// Classification of the base-p digits of n by the length t of the maximal
/// leading run of equal (nonzero) digits: full when the run is everything,
/// otherwise zero/nonzero depending on the digits below the run. All digits
/// strictly below the run are examined (see the deviation note carried in
/// every classification).
struct PAdicClass {
    std::uint64_t n = 0;
    std::uint64_t p = 0;
    std::vector<std::uint32_t> digits;  ///< most significant first
    PAdicKind kind = PAdicKind::full_expansion;
    std::uint32_t t = 0;
    std::vector<std::string> deviations;
};

PAdicClass classify_p_adic(std::uint64_t n, std::uint64_t p);
Report padic_report(const PAdicClass& c);

/// Builds C1 = (g1) of length p^{r-1} and C = ((x^{a p^{r-1}} - 1) g1) of
/// length p^r and tests d(C) = 2 d(C1) by brute-force distance on both codes.
/// A failing instance carries a minimum-weight counterexample codeword.
Report distance_doubling_check(const RingSpec& ring, std::uint64_t p, std::uint32_t r, std::uint32_t a,
                               const RingPoly& g1, const Caps& caps = {});

}  // namespace ringcode
