#include <set>
#include <random>

#include "doctest.h"
#include "ringcode/analysis.hpp"

using namespace ringcode;

namespace {

RingSpec r_spec(std::uint32_t i, std::uint64_t p, std::uint32_t r = 1) {
    return RingSpec::make(RingFamily::R, i, 1, make_field(p, r));
}
RingSpec s_spec(std::uint32_t i, std::uint64_t p, std::uint32_t r = 1) {
    return RingSpec::make(RingFamily::S, i, 1, make_field(p, r));
}
RingSpec t_spec(std::uint32_t i, std::uint32_t j, std::uint64_t p, std::uint32_t r = 1) {
    return RingSpec::make(RingFamily::T, i, j, make_field(p, r));
}

AlgebraView::Elem elem_of(const AlgebraView& view, const std::string& text) {
    return view.ctx().flatten(view.ctx().n() == 1 ? poly_term(view.ring(), view.ring().parse(text), 0)
                                                  : view.ctx().parse(text));
}

}  // namespace

TEST_CASE("augmentation sums the coefficients") {
    const QuotientCtx ctx(r_spec(2, 2), 3);
    CHECK(ctx.ring().is_zero(augmentation(ctx, poly_parse(ctx.ring(), "{1}*x-{1}"))));
    CHECK(augmentation(ctx, poly_parse(ctx.ring(), "{1}*x^2+{1}*x+{1}")) == ctx.ring().one());
    const RingElem c = ctx.ring().parse("1+u");
    CHECK(augmentation(ctx, poly_term(ctx.ring(), c, 0)) == c);
}

TEST_CASE("augmentation is a ring homomorphism") {
    // Exhaustive on a small quotient, randomized on a larger one.
    {
        const QuotientCtx ctx(r_spec(2, 2), 2);  // 16 elements
        const std::uint64_t total = ctx.size().value();
        const AlgebraView view(ctx);
        for (std::uint64_t i = 0; i < total; ++i) {
            const RingPoly f = ctx.unflatten(view.element_at(i));
            for (std::uint64_t j = 0; j < total; ++j) {
                const RingPoly g = ctx.unflatten(view.element_at(j));
                CHECK(augmentation(ctx, ctx.mul(f, g)) ==
                      ctx.ring().mul(augmentation(ctx, f), augmentation(ctx, g)));
                CHECK(augmentation(ctx, poly_add(ctx.ring(), f, g)) ==
                      ctx.ring().add(augmentation(ctx, f), augmentation(ctx, g)));
            }
        }
    }
    {
        std::mt19937 rng(99182);
        const QuotientCtx ctx(t_spec(2, 2, 2), 4);
        const AlgebraView view(ctx);
        const std::uint64_t total = ctx.size().value();
        for (int trial = 0; trial < 10000; ++trial) {
            const RingPoly f = ctx.unflatten(view.element_at(rng() % total));
            const RingPoly g = ctx.unflatten(view.element_at(rng() % total));
            CHECK(augmentation(ctx, ctx.mul(f, g)) ==
                  ctx.ring().mul(augmentation(ctx, f), augmentation(ctx, g)));
            CHECK(augmentation(ctx, poly_add(ctx.ring(), f, g)) ==
                  ctx.ring().add(augmentation(ctx, f), augmentation(ctx, g)));
        }
    }
}

TEST_CASE("augmentation is surjective onto the coefficient ring") {
    const QuotientCtx ctx(r_spec(2, 2), 2);
    const std::uint64_t ring_total = ctx.ring().size().value();
    std::set<std::uint64_t> hit;
    const AlgebraView view(ctx);
    for (std::uint64_t i = 0; i < ctx.size().value(); ++i)
        hit.insert(ctx.ring().index_of(augmentation(ctx, ctx.unflatten(view.element_at(i)))));
    CHECK(hit.size() == ring_total);
}

TEST_CASE("ideal spans") {
    {
        const AlgebraView view(s_spec(2, 2));
        const IdealSet ideal = ideal_span(view, {elem_of(view, "u1"), elem_of(view, "u2")});
        CHECK(ideal.basis.rank() == 3);  // span{u1, u2, u1u2}
        CHECK(ideal.count().value() == 8);
    }
    {
        const AlgebraView view(r_spec(3, 2));
        const IdealSet ideal = ideal_span(view, {elem_of(view, "u")});
        CHECK(ideal.count().value() == 4);
        const auto elems = ideal_elements(view, ideal);
        REQUIRE(elems.size() == 4);
        CHECK(view.to_string(elems[0]) == "0");
        CHECK(view.to_string(elems[1]) == "u");
        CHECK(view.to_string(elems[2]) == "u^2");
        CHECK(view.to_string(elems[3]) == "u+u^2");
    }
    {
        const AlgebraView view(t_spec(2, 2, 2));
        const IdealSet whole = ideal_span(view, {view.one()});
        CHECK(whole.basis.rank() == view.dim());
    }
}

TEST_CASE("ideal span is idempotent") {
    const AlgebraView view(s_spec(2, 2));
    const IdealSet ideal = ideal_span(view, {elem_of(view, "u1"), elem_of(view, "u2")});
    std::vector<AlgebraView::Elem> rows;
    for (std::size_t r = 0; r < ideal.basis.rank(); ++r) {
        const auto row = ideal.basis.row(r);
        rows.emplace_back(row.begin(), row.end());
    }
    const IdealSet again = ideal_span(view, rows);
    CHECK(again.basis.same_row_space(ideal.basis));
}

TEST_CASE("principality") {
    {
        const AlgebraView view(s_spec(2, 2));
        const Report rep = is_principal(view, ideal_span(view, {elem_of(view, "u1"), elem_of(view, "u2")}));
        CHECK(rep.verdict == Verdict::fails);
        CHECK(rep.witness.at("candidates_tested") == 8);
    }
    {
        const AlgebraView view(t_spec(2, 2, 2));
        const Report rep = is_principal(view, ideal_span(view, {elem_of(view, "u"), elem_of(view, "v")}));
        CHECK(rep.verdict == Verdict::fails);
    }
    {
        const AlgebraView view(s_spec(3, 2));
        const Report rep = is_principal(
            view, ideal_span(view, {elem_of(view, "u1"), elem_of(view, "u2"), elem_of(view, "u3")}));
        CHECK(rep.verdict == Verdict::fails);
    }
    {
        const AlgebraView view(t_spec(3, 2, 2));
        const Report rep = is_principal(view, ideal_span(view, {elem_of(view, "u"), elem_of(view, "v")}));
        CHECK(rep.verdict == Verdict::fails);
    }
    {
        const AlgebraView view(r_spec(3, 2));
        const Report rep = is_principal(view, ideal_span(view, {elem_of(view, "u^2"), elem_of(view, "u")}));
        CHECK(rep.verdict == Verdict::holds);
        CHECK(rep.witness.at("generator") == "u");
    }
    {
        const AlgebraView view(r_spec(2, 2));
        const Report rep = is_principal(view, ideal_span(view, {view.zero()}));
        CHECK(rep.verdict == Verdict::holds);
        CHECK(rep.witness.at("generator") == "0");
    }
}

TEST_CASE("locality of the coefficient rings themselves") {
    for (const auto& spec : {r_spec(2, 2), r_spec(3, 2, 2), s_spec(2, 2), t_spec(2, 2, 2)}) {
        const Report rep = is_local(AlgebraView(spec));
        CHECK(rep.verdict == Verdict::holds);
    }
}

TEST_CASE("locality of quotients follows the length") {
    const auto check_pair = [](const RingSpec& spec, std::uint32_t n, Verdict expected) {
        const Report rep = is_local(AlgebraView(QuotientCtx(spec, n)));
        CHECK(rep.verdict == expected);
        if (expected == Verdict::fails) {
            // The witness pair must be verifiable: both non-units, unit sum.
            REQUIRE(rep.witness.contains("sum_inverse"));
            const QuotientCtx ctx(spec, n);
            const AlgebraView view(ctx);
            const UnitTester tester(view);
            const auto a = ctx.flatten(ctx.parse(rep.witness.at("non_unit_a").get<std::string>()));
            const auto b = ctx.flatten(ctx.parse(rep.witness.at("non_unit_b").get<std::string>()));
            CHECK(!tester.is_unit(a));
            CHECK(!tester.is_unit(b));
            CHECK(tester.is_unit(view.add(a, b)));
        }
    };
    check_pair(r_spec(2, 2), 2, Verdict::holds);   // n = p
    check_pair(r_spec(2, 2), 4, Verdict::holds);   // n = p^2
    check_pair(r_spec(2, 2), 3, Verdict::fails);   // n = 3, gcd(p, 3) = 1
    check_pair(r_spec(2, 2), 6, Verdict::fails);   // n = 2 * 3
    check_pair(s_spec(2, 2), 2, Verdict::holds);
    check_pair(s_spec(2, 2), 3, Verdict::fails);
    check_pair(t_spec(2, 2, 2), 2, Verdict::holds);
    check_pair(t_spec(2, 2, 2), 3, Verdict::fails);
    check_pair(RingSpec::field_ring(make_field(2, 1)), 3, Verdict::fails);
    check_pair(RingSpec::field_ring(make_field(2, 1)), 4, Verdict::holds);
}

TEST_CASE("locality beyond the cap yields a counterexample or a cap error") {
    // 2^24 elements: not enumerable under the default cap, but the scan finds
    // a verified counterexample pair within the prefix.
    const Report rep = is_local(AlgebraView(QuotientCtx(s_spec(2, 2), 6)));
    CHECK(rep.verdict == Verdict::fails);
    CHECK(!rep.deviations.empty());
    // A local ring beyond the cap cannot be certified.
    Caps tight;
    tight.max_enum = 64;
    CHECK_THROWS_AS(is_local(AlgebraView(QuotientCtx(s_spec(2, 2), 4)), tight), cap_error);
}

TEST_CASE("chain verdicts") {
    {
        const Report rep = chain_check(AlgebraView(r_spec(3, 2)));
        CHECK(rep.verdict == Verdict::holds);
        CHECK(rep.witness.at("ideal_count") == 4);  // 0 c (u^2) c (u) c R
    }
    {
        const Report rep = chain_check(AlgebraView(RingSpec::field_ring(make_field(5, 1))));
        CHECK(rep.verdict == Verdict::holds);
        CHECK(rep.witness.at("ideal_count") == 2);
    }
    {
        const Report rep = chain_check(AlgebraView(s_spec(2, 2)));
        CHECK(rep.verdict == Verdict::fails);
        REQUIRE(rep.witness.contains("incomparable_a"));
    }
    {
        const Report rep = chain_check(AlgebraView(t_spec(2, 2, 2)));
        CHECK(rep.verdict == Verdict::fails);
    }
}

TEST_CASE("factorization witnesses over the three families") {
    {
        const auto spec = r_spec(3, 2, 2);  // R_3 over F_4
        const std::vector<std::vector<RingPoly>> cands{
            {poly_parse(spec, "{1}*x+{1}"), poly_parse(spec, "{1}*x+{1}")},
            {poly_parse(spec, "{1}*x+{1+u^2}"), poly_parse(spec, "{1}*x+{1+u^2}")},
        };
        const Report rep = factorization_witness(spec, 2, cands);
        CHECK(rep.verdict == Verdict::holds);
        CHECK(rep.witness.at("verified").size() == 2);
    }
    {
        const auto spec = t_spec(3, 2, 2, 2);  // T_(3,2) over F_4
        const std::vector<std::vector<RingPoly>> cands{
            {poly_parse(spec, "{1}*x+{1+u^2+v}"), poly_parse(spec, "{1}*x+{1+u^2+v}")},
        };
        CHECK(factorization_witness(spec, 2, cands).verdict == Verdict::holds);
    }
    {
        // The S_3 shift 1+u1^2+u2^2+u3^2 collapses to 1 because u_k^2 = 0; the
        // identity is verified as stated, and u1*u2 gives a genuinely distinct
        // second factorization.
        const auto spec = s_spec(3, 2, 2);
        const RingElem shift = spec.parse("1+u1^2+u2^2+u3^2");
        CHECK(shift == spec.one());
        const std::vector<std::vector<RingPoly>> cands{
            {poly_parse(spec, "{1}*x+{1+u1^2+u2^2+u3^2}"), poly_parse(spec, "{1}*x+{1+u1^2+u2^2+u3^2}")},
            {poly_parse(spec, "{1}*x+{1+u1*u2}"), poly_parse(spec, "{1}*x+{1+u1*u2}")},
        };
        CHECK(factorization_witness(spec, 2, cands).verdict == Verdict::holds);
    }
    {
        // A wrong claim is reported, not raised.
        const auto spec = r_spec(2, 2);
        const std::vector<std::vector<RingPoly>> cands{
            {poly_parse(spec, "{1}*x+{1+u}"), poly_parse(spec, "{1}*x+{1}")},
        };
        const Report rep = factorization_witness(spec, 2, cands);
        CHECK(rep.verdict == Verdict::fails);
        CHECK(rep.witness.at("failed").size() == 1);
    }
}

TEST_CASE("factorization search finds the nilpotent shifts") {
    const auto spec = s_spec(2, 2);
    const Report rep = factorization_witness(spec, 2, {}, true);
    CHECK(rep.verdict == Verdict::holds);
    // In characteristic 2 every nilpotent m of S_2 has m^2 = 0, so all eight
    // shifts x - (1 + m) square to x^2 - 1.
    const auto& found = rep.witness.at("search_found");
    CHECK(found.size() == 8);
    bool has_u1u2 = false;
    for (const auto& f : found) has_u1u2 = has_u1u2 || f.get<std::string>().find("u1*u2") != std::string::npos;
    CHECK(has_u1u2);
}
