#include <random>

#include "doctest.h"
#include "ringcode/monomial_ring.hpp"

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

// Exhaustive inverse search, deliberately independent of is_unit/inverse.
bool has_inverse_brute(const RingSpec& spec, const RingElem& a) {
    const std::uint64_t total = spec.size().value();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        if (spec.mul(a, spec.element_at(idx)) == spec.one()) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("ring construction: dimensions and sizes") {
    auto r2 = r_spec(2, 2);
    CHECK(r2.dim() == 2);
    CHECK(r2.size().value() == 4);

    auto s2 = s_spec(2, 2);
    CHECK(s2.dim() == 4);
    CHECK(s2.size().value() == 16);
    CHECK(s2.mono_name(1) == "u1");
    CHECK(s2.mono_name(3) == "u1*u2");

    auto t32 = t_spec(3, 2, 2, 2);  // over F_4
    CHECK(t32.dim() == 6);
    CHECK(t32.size() == PrimePower{4, 6});
    CHECK(t32.mono_name(5) == "u^2*v");

    CHECK_THROWS_AS(s_spec(17, 2), cap_error);
}

TEST_CASE("defining relations") {
    auto r3 = r_spec(3, 2, 2);  // R_3 over F_4
    const RingElem u = r3.parse("u");
    CHECK(r3.is_zero(r3.mul(u, r3.mul(u, u))));           // u^3 = 0
    CHECK(!r3.is_zero(r3.mul(u, u)));                     // u^2 != 0
    const RingElem e = r3.parse("1-u^2");
    CHECK(r3.mul(e, e) == r3.one());                      // (1-u^2)^2 = 1

    auto s2 = s_spec(2, 2);
    CHECK(s2.is_zero(s2.mul(s2.parse("u1"), s2.parse("u1"))));
    CHECK(s2.mul(s2.parse("u1"), s2.parse("u2")) == s2.parse("u1*u2"));

    auto t22 = t_spec(2, 2, 2);
    CHECK(t22.is_zero(t22.mul(t22.parse("u"), t22.parse("u"))));
    CHECK(t22.mul(t22.parse("u"), t22.parse("v")) == t22.parse("u*v"));
}

TEST_CASE("monomial products are commutative for all pairs") {
    for (const auto& spec : {r_spec(4, 3), s_spec(3, 2), t_spec(3, 2, 2, 2)}) {
        for (std::uint32_t a = 0; a < spec.dim(); ++a)
            for (std::uint32_t b = 0; b < spec.dim(); ++b) CHECK(spec.mono_mul(a, b) == spec.mono_mul(b, a));
    }
}

TEST_CASE("units and inverses") {
    auto r2 = r_spec(2, 2);
    CHECK(r2.is_unit(r2.parse("1+u")));
    CHECK(!r2.is_unit(r2.parse("u")));
    CHECK(!r2.is_unit(r2.zero()));
    CHECK(r2.inverse(r2.parse("1+u")) == r2.parse("1+u"));  // (1+u)^2 = 1

    auto r3 = r_spec(3, 2);
    CHECK(r3.inverse(r3.parse("1+u")) == r3.parse("1+u+u^2"));
    CHECK(r3.inverse(r3.one()) == r3.one());
    CHECK_THROWS_AS(r3.inverse(r3.parse("u")), std::domain_error);
}

TEST_CASE("unit predicate matches brute-force inverse search") {
    for (const auto& spec : {r_spec(2, 2), r_spec(3, 2), r_spec(3, 2, 2), s_spec(2, 2), s_spec(3, 2),
                             t_spec(2, 2, 2), t_spec(2, 2, 2, 2)}) {
        const std::uint64_t total = spec.size().value();
        std::uint64_t units = 0;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            const RingElem a = spec.element_at(idx);
            const bool predicted = spec.is_unit(a);
            CHECK(predicted == has_inverse_brute(spec, a));
            if (predicted) {
                ++units;
                CHECK(spec.mul(a, spec.inverse(a)) == spec.one());
            } else {
                CHECK(spec.nilpotency_index(a).has_value());
            }
        }
        // Units are a free choice away from a nonzero constant coefficient.
        const std::uint64_t q = spec.field().q();
        std::uint64_t expected = q - 1;
        for (std::uint32_t k = 1; k < spec.dim(); ++k) expected *= q;
        CHECK(units == expected);
    }
}

TEST_CASE("unit and nilpotent combinations") {
    for (const auto& spec : {t_spec(2, 2, 2), s_spec(2, 2), r_spec(3, 2, 2)}) {
        const std::uint64_t total = spec.size().value();
        for (std::uint64_t i = 0; i < total; ++i) {
            const RingElem a = spec.element_at(i);
            for (std::uint64_t j = 0; j < total; ++j) {
                const RingElem b = spec.element_at(j);
                if (spec.is_unit(a) && spec.is_unit(b)) CHECK(spec.is_unit(spec.mul(a, b)));
                if (spec.is_unit(a) && !spec.is_unit(b)) CHECK(spec.is_unit(spec.add(a, b)));
                if (!spec.is_unit(a) && !spec.is_unit(b)) CHECK(!spec.is_unit(spec.add(a, b)));
            }
        }
    }
}

TEST_CASE("nilpotency index") {
    auto r3 = r_spec(3, 2);
    CHECK(r3.nilpotency_index(r3.parse("u")) == 3);
    CHECK(r3.nilpotency_index(r3.zero()) == 1);
    CHECK(!r3.nilpotency_index(r3.parse("1+u")).has_value());
    auto s2 = s_spec(2, 2);
    CHECK(s2.nilpotency_index(s2.parse("u1")) == 2);
}

TEST_CASE("enumeration is exhaustive and deterministic") {
    auto s2 = s_spec(2, 2);
    const auto elems = s2.enumerate();
    CHECK(elems.size() == 16);
    for (std::uint64_t idx = 0; idx < elems.size(); ++idx) CHECK(s2.index_of(elems[idx]) == idx);

    auto t22 = t_spec(2, 2, 2);
    CHECK(t22.enumerate().size() == 16);

    Caps tight;
    tight.max_enum = 8;
    CHECK_THROWS_AS(s2.enumerate(tight), cap_error);
}

TEST_CASE("element grammar round-trips on every element of small rings") {
    for (const auto& spec : {r_spec(3, 2, 2), s_spec(2, 2), t_spec(2, 2, 2, 2), s_spec(2, 3)}) {
        const std::uint64_t total = spec.size().value();
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            const RingElem a = spec.element_at(idx);
            CHECK(spec.parse(spec.to_string(a)) == a);
        }
    }
}

TEST_CASE("element grammar accepts products and rejects junk") {
    auto t32 = t_spec(3, 2, 2, 2);
    CHECK(t32.parse("(w+1)*u*v") == t32.scalar_mul(t32.field().parse("w+1"), t32.parse("u*v")));
    CHECK(t32.is_zero(t32.parse("u^5")));  // overflow collapses to zero
    CHECK_THROWS_AS(t32.parse("u1"), std::invalid_argument);
    auto r2 = r_spec(2, 2);
    CHECK_THROWS_AS(r2.parse("v"), std::invalid_argument);
    CHECK_THROWS_AS(r2.parse("1+"), std::invalid_argument);
    auto s2 = s_spec(2, 2);
    CHECK_THROWS_AS(s2.parse("u3"), std::invalid_argument);
    CHECK_THROWS_AS(s2.parse("u"), std::invalid_argument);
}

TEST_CASE("ring arithmetic laws on random triples") {
    std::mt19937 rng(777);
    for (const auto& spec : {r_spec(4, 2), s_spec(3, 2), t_spec(3, 2, 2, 2)}) {
        const std::uint64_t total = spec.size().value();
        for (int trial = 0; trial < 500; ++trial) {
            const RingElem a = spec.element_at(rng() % total);
            const RingElem b = spec.element_at(rng() % total);
            const RingElem c = spec.element_at(rng() % total);
            CHECK(spec.mul(a, b) == spec.mul(b, a));
            CHECK(spec.mul(spec.mul(a, b), c) == spec.mul(a, spec.mul(b, c)));
            CHECK(spec.mul(a, spec.add(b, c)) == spec.add(spec.mul(a, b), spec.mul(a, c)));
        }
    }
}
