#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringcode/caps.hpp"
#include "ringcode/fq_matrix.hpp"
#include "ringcode/report.hpp"
#include "ringcode/ring_poly.hpp"

namespace ringcode {

/// Uniform view of a finite F_q-algebra: either a coefficient ring itself
/// (n = 1) or a quotient R[x]/(x^n - 1). Elements are flattened coordinate
/// vectors in F_q^{s n}; the element of index k has the base-q digits of k as
/// coordinates (column 0 least significant).
class AlgebraView {
  public:
    explicit AlgebraView(const RingSpec& spec) : ctx_(spec, 1) {}
    explicit AlgebraView(QuotientCtx ctx) : ctx_(std::move(ctx)) {}

    using Elem = std::vector<fq_t>;

    const QuotientCtx& ctx() const { return ctx_; }
    const RingSpec& ring() const { return ctx_.ring(); }
    const Fq& field() const { return ctx_.ring().field(); }
    std::uint32_t dim() const { return ctx_.fq_dim(); }
    PrimePower size() const { return ctx_.size(); }
    /// True when units are characterized by a nonzero coefficient on the
    /// monomial 1; valid for the bare coefficient rings (n = 1) only.
    bool unit_by_coeff() const { return ctx_.n() == 1; }

    Elem zero() const { return Elem(dim(), 0); }
    Elem one() const;
    Elem basis_elem(std::uint32_t idx) const;
    bool is_zero(const Elem& a) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem scalar_mul(fq_t c, const Elem& a) const;

    Elem element_at(std::uint64_t idx) const;
    std::uint64_t index_of(const Elem& a) const;

    std::string to_string(const Elem& a) const;
    std::string describe() const;

  private:
    QuotientCtx ctx_;
};

/// Exact unit decision for any AlgebraView element: a is a unit iff the
/// F_q-linear multiplication-by-a map hits 1, decided by solving M_a x = e_1
/// and re-checking the product. Precomputes the basis multiplication matrices
/// once per view.
class UnitTester {
  public:
    explicit UnitTester(const AlgebraView& view);
    bool is_unit(const AlgebraView::Elem& a) const;
    std::optional<AlgebraView::Elem> try_inverse(const AlgebraView::Elem& a) const;

  private:
    const AlgebraView& view_;
    std::vector<std::vector<fq_t>> basis_mats_;  // row-major dim x dim per basis element
};

/// Coefficient sum of f in the coefficient ring (the evaluation at x = 1);
/// a surjective ring morphism onto R.
RingElem augmentation(const QuotientCtx& ctx, const RingPoly& f);

/// F_q row space of {b g : b algebra basis element, g generator}; this equals
/// the smallest ideal containing the generators because the basis products
/// absorb further monomial multiplication.
struct IdealSet {
    FqMatrix basis;  ///< reduced
    PrimePower count() const;
};

IdealSet ideal_span(const AlgebraView& view, const std::vector<AlgebraView::Elem>& gens,
                    const Caps& caps = {});
/// All ideal elements, ascending by element index.
std::vector<AlgebraView::Elem> ideal_elements(const AlgebraView& view, const IdealSet& ideal,
                                              const Caps& caps = {});

/// Exhaustive single-generator search with early exit: holds with a witness
/// generator, or fails with the number of candidates ruled out.
Report is_principal(const AlgebraView& view, const IdealSet& ideal, const Caps& caps = {});

/// Locality via the non-units-form-an-ideal criterion. Enumerable algebras
/// are fully scanned (non-units absorb multiplication automatically, so the
/// verdict reduces to additive closure, decided by comparing the non-unit
/// count with its F_p-span). Larger algebras are scanned up to the cap and
/// can only return a verified counterexample pair; certifying locality beyond
/// the cap is a cap error.
Report is_local(const AlgebraView& view, const Caps& caps = {});

/// Enumerates the full ideal lattice (principal ideals of every element,
/// closed under pairwise sum) and tests total ordering by inclusion.
Report chain_check(const AlgebraView& view, const Caps& caps = {});

/// Verifies claimed factorizations of x^n - 1 by exact multiplication in
/// R[x]; optionally searches all monic linear shifts x - (1 + m), m nilpotent,
/// whose n-th power reproduces x^n - 1.
Report factorization_witness(const RingSpec& spec, std::uint32_t n,
                             const std::vector<std::vector<RingPoly>>& candidates, bool search = false,
                             const Caps& caps = {});

}  // namespace ringcode
