// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Structural claims are exercised both through the library
// and through the installed CLI surface.

#include <sys/wait.h>

#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ringcode/analysis.hpp"
#include "ringcode/cyclic_code.hpp"
#include "ringcode/descriptor.hpp"
#include "ringcode/galois_ring.hpp"
#include "ringcode/zmod.hpp"

#ifndef RINGCODE_CLI_PATH
#error "RINGCODE_CLI_PATH must point at the CLI binary"
#endif

using namespace ringcode;
using nlohmann::json;

namespace {

int g_failures = 0;

void criterion(int num, const std::string& desc, bool ok) {
    std::printf("%s criterion %2d: %s\n", ok ? "PASS" : "FAIL", num, desc.c_str());
    if (!ok) ++g_failures;
}

bool expect(bool cond, const std::string& what) {
    if (!cond) std::fprintf(stderr, "  check failed: %s\n", what.c_str());
    return cond;
}

struct CliResult {
    int exit_code = -1;
    std::string out;
};

std::string shell_quote(const std::string& s) { return "'" + s + "'"; }

CliResult run_cli(const std::vector<std::string>& args) {
    std::string cmd = shell_quote(RINGCODE_CLI_PATH);
    for (const auto& a : args) cmd += " " + shell_quote(a);
    cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    CliResult res;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) res.out.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

json cli_json(std::vector<std::string> args, int* exit_code = nullptr) {
    args.push_back("--format");
    args.push_back("json");
    const CliResult res = run_cli(args);
    if (exit_code) *exit_code = res.exit_code;
    return json::parse(res.out);
}

bool schema_ok(const json& j) {
    return j.is_object() && j.size() == 5 && j.contains("claim") && j.at("claim").is_string() &&
           j.contains("params") && j.at("params").is_object() && j.contains("verdict") &&
           (j.at("verdict") == "holds" || j.at("verdict") == "fails" || j.at("verdict") == "error") &&
           j.contains("witness") && j.contains("deviations") && j.at("deviations").is_array();
}

RingSpec f2() { return RingSpec::field_ring(make_field(2, 1)); }
RingSpec f3() { return RingSpec::field_ring(make_field(3, 1)); }
RingSpec f4() { return RingSpec::field_ring(make_field(2, 2)); }
RingSpec r_spec(std::uint32_t i, std::uint64_t p, std::uint32_t r = 1) {
    return RingSpec::make(RingFamily::R, i, 1, make_field(p, r));
}
RingSpec s_spec(std::uint32_t i, std::uint64_t p, std::uint32_t r = 1) {
    return RingSpec::make(RingFamily::S, i, 1, make_field(p, r));
}
RingSpec t_spec(std::uint32_t i, std::uint32_t j, std::uint64_t p, std::uint32_t r = 1) {
    return RingSpec::make(RingFamily::T, i, j, make_field(p, r));
}

std::vector<RingPoly> monic_divisors(const RingSpec& spec, std::uint32_t n) {
    const RingPoly xn1 = x_pow_minus_one(spec, n);
    std::vector<RingPoly> out;
    const std::uint64_t total = spec.size().value();
    for (std::uint32_t deg = 0; deg <= n; ++deg) {
        std::uint64_t count = 1;
        for (std::uint32_t k = 0; k < deg; ++k) count *= total;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            RingPoly h;
            h.c.assign(deg + 1, spec.zero());
            std::uint64_t rest = idx;
            for (std::uint32_t k = 0; k < deg; ++k) {
                h.c[k] = spec.element_at(rest % total);
                rest /= total;
            }
            h.c[deg] = spec.one();
            if (divides_monic(spec, h, xn1)) out.push_back(std::move(h));
        }
    }
    return out;
}

// ---- criterion 1: factorization witnesses of x^2 - 1 --------------------

bool crit1() {
    bool ok = true;
    {
        int code = 0;
        const json j = cli_json({"analyze-factor", "--ring", "R[i=3,q=4]", "--n", "2", "--candidate",
                                 "{1}*x+{1};{1}*x+{1}", "--candidate", "{1}*x+{1+u^2};{1}*x+{1+u^2}"},
                                &code);
        ok &= expect(code == 0 && j.at("verdict") == "holds", "R_3/F_4 witnesses verified via CLI");
        ok &= expect(j.at("witness").at("verified").size() == 2, "both R_3 factorizations verified");
    }
    {
        int code = 0;
        const json j = cli_json({"analyze-factor", "--ring", "T[i=3,j=2,q=4]", "--n", "2", "--candidate",
                                 "{1}*x+{1};{1}*x+{1}", "--candidate", "{1}*x+{1+u^2+v};{1}*x+{1+u^2+v}"},
                                &code);
        ok &= expect(code == 0 && j.at("verdict") == "holds", "T_(3,2)/F_4 witnesses verified via CLI");
    }
    // Bit-exact re-check through the library.
    {
        const auto spec = r_spec(3, 2, 2);
        const RingPoly f = poly_parse(spec, "{1}*x+{1+u^2}");
        ok &= expect(poly_eq(spec, poly_mul(spec, f, f), x_pow_minus_one(spec, 2)),
                     "(x-(1-u^2))^2 = x^2-1 over R_3/F_4");
    }
    {
        const auto spec = t_spec(3, 2, 2, 2);
        const RingPoly f = poly_parse(spec, "{1}*x+{1+u^2+v}");
        ok &= expect(poly_eq(spec, poly_mul(spec, f, f), x_pow_minus_one(spec, 2)),
                     "(x-(1+u^2+v))^2 = x^2-1 over T_(3,2)/F_4");
    }
    return ok;
}

// ---- criterion 2: locality by length -------------------------------------

bool crit2() {
    bool ok = true;
    const std::vector<std::string> rings{"R[i=2,q=2]", "S[i=2,q=2]", "T[i=2,j=2,q=2]"};
    for (const auto& ring : rings) {
        for (std::uint32_t n : {1u, 2u, 4u}) {
            int code = 0;
            const json j = cli_json({"analyze-local", "--ring", ring, "--n", std::to_string(n)}, &code);
            ok &= expect(code == 0 && j.at("verdict") == "holds",
                         ring + " local at n=" + std::to_string(n));
        }
        for (std::uint32_t n : {3u, 6u}) {
            int code = 0;
            const json j = cli_json({"analyze-local", "--ring", ring, "--n", std::to_string(n)}, &code);
            ok &= expect(code == 1 && j.at("verdict") == "fails",
                         ring + " not local at n=" + std::to_string(n));
            if (!j.at("witness").contains("non_unit_a")) {
                ok = expect(false, "counterexample pair attached");
                continue;
            }
            // Verify the attached pair independently.
            const RingSpec spec = parse_coefficient_ring(ring);
            const QuotientCtx ctx(spec, n);
            const AlgebraView view(ctx);
            const UnitTester tester(view);
            const auto a = ctx.flatten(ctx.parse(j.at("witness").at("non_unit_a").get<std::string>()));
            const auto b = ctx.flatten(ctx.parse(j.at("witness").at("non_unit_b").get<std::string>()));
            ok &= expect(!tester.is_unit(a) && !tester.is_unit(b) && tester.is_unit(view.add(a, b)),
                         ring + " n=" + std::to_string(n) + " pair re-verified");
        }
    }
    return ok;
}

// ---- criterion 3: non-principal ideals -----------------------------------

bool crit3() {
    bool ok = true;
    {
        int code = 0;
        const json j =
            cli_json({"analyze-principal", "--ring", "S[i=2,q=2]", "--gen", "u1", "--gen", "u2"}, &code);
        ok &= expect(code == 1 && j.at("verdict") == "fails", "(u1,u2) in S_2/F_2 not principal");
        ok &= expect(j.at("witness").at("candidates_tested") == 8, "all 8 candidates ruled out");
    }
    {
        int code = 0;
        const json j =
            cli_json({"analyze-principal", "--ring", "T[i=2,j=2,q=2]", "--gen", "u", "--gen", "v"}, &code);
        ok &= expect(code == 1 && j.at("verdict") == "fails", "(u,v) in T_(2,2)/F_2 not principal");
        ok &= expect(j.at("witness").at("candidates_tested") == 8, "all 8 candidates ruled out");
    }
    return ok;
}

// ---- criterion 4: free rank and cardinality for every monic divisor ------

bool crit4() {
    bool ok = true;
    struct Fixture {
        RingSpec spec;
        std::uint32_t n;
        std::size_t expected_divisors;
    };
    const Fixture fixtures[] = {{f2(), 3, 4}, {f2(), 7, 8}, {r_spec(2, 2), 3, 0}};
    for (const auto& fx : fixtures) {
        const QuotientCtx ctx(fx.spec, fx.n);
        const auto divisors = monic_divisors(fx.spec, fx.n);
        if (fx.expected_divisors != 0)
            ok &= expect(divisors.size() == fx.expected_divisors,
                         fx.spec.descriptor() + " divisor count of x^" + std::to_string(fx.n) + "-1");
        ok &= expect(divisors.size() >= 4, "at least the trivial divisors exist");
        for (const auto& h : divisors) {
            const std::uint32_t r = *h.degree();
            const Report rank_rep = free_rank_check(ctx, h);
            const Report card_rep = cardinality_formula_check(ctx, h);
            const bool rank_ok = rank_rep.verdict == Verdict::holds &&
                                 rank_rep.witness.at("module_rank") == fx.n - r;
            const bool card_ok = card_rep.verdict == Verdict::holds;
            const CyclicCode code = code_build(ctx, {h});
            const bool enum_ok = code_enumerate(code).size() == code.cardinality().value();
            if (!(rank_ok && card_ok && enum_ok)) {
                ok = expect(false, fx.spec.descriptor() + " n=" + std::to_string(fx.n) + " h=" +
                                       poly_to_string(fx.spec, h));
            }
        }
    }
    return ok;
}

// ---- criterion 5: cardinality bound with equality at the full ring -------

bool crit5() {
    bool ok = true;
    std::mt19937 rng(20260810);
    struct Fixture {
        RingSpec spec;
        std::uint32_t n;
    };
    const Fixture fixtures[] = {
        {r_spec(2, 2), 3}, {s_spec(2, 2), 2}, {t_spec(2, 2, 2), 2}, {r_spec(3, 2, 2), 2}, {f4(), 3}};
    for (const auto& fx : fixtures) {
        const QuotientCtx ctx(fx.spec, fx.n);
        const std::uint64_t total = fx.spec.size().value();
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<RingPoly> gens;
            const int count = 1 + static_cast<int>(rng() % 3);
            for (int g = 0; g < count; ++g) {
                RingPoly f;
                for (std::uint32_t k = 0; k < fx.n; ++k) f.c.push_back(fx.spec.element_at(rng() % total));
                gens.push_back(poly_trim(fx.spec, std::move(f)));
            }
            const CyclicCode code = code_build(ctx, gens);
            if (code.rank() > ctx.fq_dim())
                ok = expect(false, fx.spec.descriptor() + " bound violated");
        }
        ok &= expect(code_build(ctx, {poly_one(fx.spec)}).rank() == ctx.fq_dim(),
                     fx.spec.descriptor() + " full ring attains the bound");
    }
    return ok;
}

// ---- criterion 6: two-generator cardinality law ---------------------------

bool crit6() {
    bool ok = true;
    const auto spec = r_spec(2, 2);
    {
        const QuotientCtx ctx(spec, 2);
        const auto [code, rep] =
            two_generator_build(ctx, poly_parse(spec, "{1}*x+{1}"), poly_zero(), poly_one(spec));
        ok &= expect(rep.verdict == Verdict::holds && code.cardinality().value() == 8,
                     "main instance |C| = 8 = 2^(2n-r-t)");
        ok &= expect(code_enumerate(code).size() == 8, "main instance confirmed by enumeration");
    }
    struct Triple {
        std::uint32_t n;
        const char* g;
        const char* p;
        const char* a;
        std::uint64_t card;
    };
    const Triple more[] = {
        {2, "{1}*x+{1}", "{0}", "{1}*x+{1}", 4},
        {2, "{1}*x^2+{1}", "{0}", "{1}*x+{1}", 2},
        {4, "{1}*x^2+{1}", "{0}", "{1}*x+{1}", 32},
        {4, "{1}*x^2+{1}", "{1}", "{1}*x+{1}", 32},
    };
    for (const auto& t : more) {
        const QuotientCtx ctx(spec, t.n);
        const auto [code, rep] = two_generator_build(ctx, poly_parse(spec, t.g), poly_parse(spec, t.p),
                                                     poly_parse(spec, t.a));
        const bool pass = rep.verdict == Verdict::holds && code.cardinality().value() == t.card &&
                          code_enumerate(code).size() == t.card;
        if (!pass)
            ok = expect(false, std::string("triple n=") + std::to_string(t.n) + " g=" + t.g + " a=" + t.a);
    }
    return ok;
}

// ---- criterion 7: distance doubling --------------------------------------

bool crit7() {
    bool ok = true;
    {
        int code = 0;
        const json j = cli_json({"prop42", "--ring", "Fq[p=2,r=1]", "--p", "2", "--r", "2", "--a", "1",
                                 "--g1", "{1}"},
                                &code);
        ok &= expect(code == 0 && j.at("verdict") == "holds" && j.at("witness").at("d_lifted") == 2,
                     "g1 = 1: d doubles from 1 to 2");
    }
    {
        int code = 0;
        const json j = cli_json({"prop42", "--ring", "Fq[p=2,r=1]", "--p", "2", "--r", "2", "--a", "1",
                                 "--g1", "{1}*x+{1}"},
                                &code);
        ok &= expect(code == 0 && j.at("verdict") == "holds" && j.at("witness").at("d_lifted") == 4,
                     "g1 = 1+x: d doubles from 2 to 4");
    }
    {
        // A failing combination must carry a counterexample codeword.
        int code = 0;
        const json j = cli_json({"prop42", "--ring", "Fq[p=3,r=1]", "--p", "3", "--r", "2", "--a", "1",
                                 "--g1", "{1}*x^2+{1}*x+{1}"},
                                &code);
        ok &= expect(code == 1 && j.at("verdict") == "fails", "F_3 instance reported as failing");
        if (!j.at("witness").contains("counterexample")) return expect(false, "counterexample attached");
        const auto spec = f3();
        const QuotientCtx ctx(spec, 9);
        const RingPoly g1 = poly_parse(spec, "{1}*x^2+{1}*x+{1}");
        const RingPoly g = ctx.reduce(poly_mul(spec, x_pow_minus_one(spec, 3), g1));
        const CyclicCode c = code_build(ctx, {g});
        const RingPoly word = ctx.parse(j.at("witness").at("counterexample").get<std::string>());
        const std::uint32_t d_base = j.at("witness").at("d_base").get<std::uint32_t>();
        ok &= expect(code_contains(c, word) && hamming_weight(word) != 2 * d_base,
                     "counterexample codeword re-verified: member with non-doubled weight");
    }
    return ok;
}

// ---- criterion 8: Galois rings and Hensel lifting -------------------------

bool crit8() {
    bool ok = true;
    GaloisRing gr(2, 2, 2);
    ok &= expect(gr.size() == 16, "GR(2,2,2) has 16 elements");
    const Report rep = gr.basis_check();
    ok &= expect(rep.verdict == Verdict::holds && rep.witness.at("distinct_representations") == 16,
                 "16 distinct theta-basis representations");
    // hensel_lift_root re-checks both postconditions internally on every call.
    const std::vector<std::uint64_t> f{47, 0, 1};  // x^2 - 2 mod 49
    ok &= expect(hensel_lift_root(7, 1, f, 3) == 10, "lift of 3 is 10 mod 49");
    ok &= expect((10 * 10) % 49 == 2, "10^2 = 2 mod 49");
    return ok;
}

// ---- criterion 9: invariant suites ----------------------------------------

bool crit9() {
    bool ok = true;
    // Unit predicate vs inverse existence: literal scan on small fixtures,
    // exact linear-solve decision up to 2^16 elements.
    for (const auto& spec : {r_spec(2, 2), r_spec(3, 2), r_spec(3, 2, 2), s_spec(2, 2), s_spec(3, 2),
                             t_spec(2, 2, 2), t_spec(2, 2, 2, 2), t_spec(3, 2, 2)}) {
        const std::uint64_t total = spec.size().value();
        for (std::uint64_t i = 0; i < total; ++i) {
            const RingElem a = spec.element_at(i);
            bool found = false;
            for (std::uint64_t jdx = 0; jdx < total && !found; ++jdx)
                found = spec.mul(a, spec.element_at(jdx)) == spec.one();
            if (spec.is_unit(a) != found) {
                ok = expect(false, spec.descriptor() + ": unit predicate vs brute force at index " +
                                       std::to_string(i));
                break;
            }
        }
    }
    for (const auto& spec : {t_spec(3, 2, 2, 2), s_spec(4, 2)}) {  // 4096 and 65536 elements
        const AlgebraView view(spec);
        const UnitTester tester(view);
        const std::uint64_t total = spec.size().value();
        std::uint64_t mismatches = 0;
        for (std::uint64_t i = 0; i < total; ++i) {
            const auto e = view.element_at(i);
            if (tester.is_unit(e) != (e[0] != 0)) ++mismatches;
        }
        ok &= expect(mismatches == 0, spec.descriptor() + ": unit predicate vs solve decision");
    }
    // Ideal closure of built codes under shift and monomial multiplication.
    struct CodeFixture {
        RingSpec spec;
        std::uint32_t n;
        const char* gen;
    };
    const CodeFixture codes[] = {{r_spec(2, 2), 3, "{1}*x+{1}"},
                                 {s_spec(2, 2), 2, "{u1}*x+{1}"},
                                 {f2(), 7, "{1}*x^3+{1}*x+{1}"},
                                 {t_spec(2, 2, 2), 2, "{u}*x+{v}"}};
    for (const auto& fx : codes) {
        const QuotientCtx ctx(fx.spec, fx.n);
        const CyclicCode code = code_build(ctx, {poly_parse(fx.spec, fx.gen)});
        for (const auto& w : code_enumerate(code)) {
            if (!code_contains(code, ctx.shift(w))) ok = expect(false, "shift closure");
            for (std::uint32_t b = 0; b < fx.spec.dim(); ++b) {
                RingPoly scaled = w;
                for (auto& c : scaled.c) c = fx.spec.mul(fx.spec.from_mono(b), c);
                if (!code_contains(code, poly_trim(fx.spec, std::move(scaled))))
                    ok = expect(false, "monomial closure");
            }
        }
    }
    // Augmentation homomorphism laws: exhaustive pairs on small quotients,
    // randomized beyond.
    {
        const QuotientCtx ctx(r_spec(2, 2), 3);
        const AlgebraView view(ctx);
        const std::uint64_t total = ctx.size().value();
        for (std::uint64_t i = 0; i < total; ++i) {
            const RingPoly fp = ctx.unflatten(view.element_at(i));
            for (std::uint64_t jdx = 0; jdx < total; ++jdx) {
                const RingPoly gp = ctx.unflatten(view.element_at(jdx));
                if (augmentation(ctx, ctx.mul(fp, gp)) !=
                        ctx.ring().mul(augmentation(ctx, fp), augmentation(ctx, gp)) ||
                    augmentation(ctx, poly_add(ctx.ring(), fp, gp)) !=
                        ctx.ring().add(augmentation(ctx, fp), augmentation(ctx, gp))) {
                    ok = expect(false, "augmentation law violated");
                }
            }
        }
    }
    {
        std::mt19937 rng(4711);
        const QuotientCtx ctx(t_spec(2, 2, 2), 4);
        const AlgebraView view(ctx);
        const std::uint64_t total = ctx.size().value();
        for (int trial = 0; trial < 10000; ++trial) {
            const RingPoly fp = ctx.unflatten(view.element_at(rng() % total));
            const RingPoly gp = ctx.unflatten(view.element_at(rng() % total));
            if (augmentation(ctx, ctx.mul(fp, gp)) !=
                ctx.ring().mul(augmentation(ctx, fp), augmentation(ctx, gp)))
                ok = expect(false, "randomized augmentation law violated");
        }
    }
    return ok;
}

// ---- criterion 10: CLI contract -------------------------------------------

bool crit10() {
    bool ok = true;
    struct Fixture {
        std::vector<std::string> args;
        int expected_exit;
    };
    const std::vector<Fixture> fixtures{
        {{"ring-info", "--ring", "R[i=3,q=4]"}, 0},
        {{"ring-info", "--ring", "GR[p=2,r=2,n=2]"}, 0},
        {{"gr-build", "--p", "2", "--r", "2", "--n", "2"}, 0},
        {{"code-build", "--ring", "R[i=2,q=2]", "--n", "3", "--gen", "{1}*x+{1}"}, 0},
        {{"code-rank", "--ring", "R[i=2,q=2]", "--n", "3", "--divisor", "{1}*x+{1}"}, 0},
        {{"code-card", "--ring", "Fq[p=2,r=1]", "--n", "7", "--divisor", "{1}*x^3+{1}*x+{1}"}, 0},
        {{"code-distance", "--ring", "Fq[p=2,r=1]", "--n", "4", "--gen", "{1}*x^3+{1}*x^2+{1}*x+{1}"}, 0},
        {{"code-twogen", "--ring", "R[i=2,q=2]", "--n", "2", "--g", "{1}*x+{1}", "--a", "{1}"}, 0},
        {{"classify", "--n", "12", "--p", "2"}, 0},
        {{"analyze-local", "--ring", "S[i=2,q=2]", "--n", "2"}, 0},
        {{"analyze-local", "--ring", "R[i=2,q=2]", "--n", "3"}, 1},
        {{"analyze-principal", "--ring", "T[i=2,j=2,q=2]", "--gen", "u", "--gen", "v"}, 1},
        {{"analyze-chain", "--ring", "R[i=3,q=2]"}, 0},
        {{"analyze-chain", "--ring", "S[i=2,q=2]"}, 1},
        {{"analyze-factor", "--ring", "S[i=2,q=2]", "--n", "2", "--candidate",
          "{1}*x+{1+u1*u2};{1}*x+{1+u1*u2}"}, 0},
        {{"prop42", "--ring", "Fq[p=2,r=1]", "--p", "2", "--r", "2", "--g1", "{1}"}, 0},
        // Usage / cap errors.
        {{"ring-info", "--ring", "R[i=3,q=6]"}, 2},
        {{"gr-build", "--p", "2", "--r", "2", "--n", "2", "--max-enum", "4"}, 2},
        {{"code-distance", "--ring", "Fq[p=2,r=1]", "--n", "2", "--gen", "{0}"}, 2},
        {{"prop42", "--ring", "Fq[p=2,r=1]", "--p", "3", "--r", "2", "--g1", "{1}"}, 2},
    };
    for (const auto& fx : fixtures) {
        int code = 0;
        const json j = cli_json(fx.args, &code);
        const std::string label = fx.args[0] + " fixture";
        ok &= expect(schema_ok(j), label + ": JSON schema");
        ok &= expect(code == fx.expected_exit,
                     label + ": exit " + std::to_string(code) + " expected " +
                         std::to_string(fx.expected_exit));
        const std::string verdict = j.at("verdict").get<std::string>();
        ok &= expect((verdict == "holds") == (fx.expected_exit == 0) &&
                         (verdict == "fails") == (fx.expected_exit == 1) &&
                         (verdict == "error") == (fx.expected_exit == 2),
                     label + ": verdict/exit agreement");
        // Text mode must report the identical verdict.
        auto text_args = fx.args;
        const CliResult text = run_cli(text_args);
        ok &= expect(text.exit_code == fx.expected_exit, label + ": text-mode exit code");
        ok &= expect(text.out.find("verdict: " + verdict) != std::string::npos,
                     label + ": text-mode verdict line");
    }
    // Grammar round-trips across the fixture matrix: canonical strings echoed
    // in reports parse back to the same objects.
    {
        const json j = cli_json({"code-build", "--ring", "T[i=2,j=2,q=4]", "--n", "3", "--gen",
                                 "{(w+1)*u*v}*x^2+{w}*x+{1+u}"});
        const RingSpec spec = parse_coefficient_ring(j.at("params").at("ring").get<std::string>());
        ok &= expect(spec.descriptor() == "T[i=2,j=2,q=4]", "descriptor echo is canonical");
        const QuotientCtx ctx(spec, 3);
        for (const auto& text : j.at("params").at("generators")) {
            const RingPoly g = ctx.parse(text.get<std::string>());
            ok &= expect(ctx.to_string(g) == text.get<std::string>(), "generator echo round-trips");
        }
        for (const auto& text : j.at("witness").at("basis")) {
            const RingPoly b = ctx.parse(text.get<std::string>());
            ok &= expect(ctx.to_string(b) == text.get<std::string>(), "basis rows round-trip");
        }
    }
    return ok;
}

}  // namespace

int main() {
    std::printf("acceptance suite (CLI: %s)\n", RINGCODE_CLI_PATH);
    criterion(1, "factorization witnesses of x^2-1 over R_3/F_4 and T_(3,2)/F_4", crit1());
    criterion(2, "locality holds for n in {1,2,4} and fails with a pair for n in {3,6}", crit2());
    criterion(3, "(u1,u2) in S_2 and (u,v) in T_(2,2) are not principal", crit3());
    criterion(4, "free rank and |C| = |R|^(n-deg h) for every monic divisor", crit4());
    criterion(5, "random codes respect |C| <= q^(sn); the full ring attains it", crit5());
    criterion(6, "two-generator cardinality law on the R_2 instances", crit6());
    criterion(7, "distance doubling: binary instances hold, failures carry counterexamples", crit7());
    criterion(8, "GR(2,2,2) basis uniqueness and Hensel lift of 3 to 10 mod 49", crit8());
    criterion(9, "unit predicate, ideal closure and augmentation invariants", crit9());
    criterion(10, "CLI grammar round-trips, JSON schema and exit codes", crit10());
    if (g_failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", g_failures);
    return 1;
}
