// Command-line front end: every library operation behind a stable text
// grammar with JSON or human-readable report output.
//
// Exit codes: 0 = verdict holds / computation done, 1 = verdict fails
// (counterexample found), 2 = usage or cap error.

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ringcode/analysis.hpp"
#include "ringcode/cyclic_code.hpp"
#include "ringcode/descriptor.hpp"
#include "ringcode/galois_ring.hpp"

namespace {

using namespace ringcode;

struct Common {
    std::string format = "text";
    std::uint64_t max_enum = 0;
    std::uint64_t max_dim = 0;

    Caps caps(std::uint64_t default_enum = 0) const {
        Caps c;
        if (default_enum != 0) c.max_enum = default_enum;
        if (max_enum != 0) {
            c.max_enum = max_enum;
            c.max_codewords = std::max(c.max_codewords, max_enum);
        }
        if (max_dim != 0) c.max_dim = static_cast<std::uint32_t>(max_dim);
        return c;
    }
};

void add_common(CLI::App* cmd, Common& common) {
    cmd->add_option("--format", common.format, "Output mode")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--max-enum", common.max_enum, "Override the exhaustive-enumeration cap");
    cmd->add_option("--max-dim", common.max_dim, "Override the ambient F_q-dimension cap");
}

int emit(const Report& rep, const Common& common) {
    if (common.format == "json")
        std::cout << rep.to_json().dump(2) << std::endl;
    else
        std::cout << rep.text();
    return rep.exit_code();
}

int run_guarded(const std::string& claim, const Common& common, const std::function<Report()>& fn) {
    try {
        return emit(fn(), common);
    } catch (const std::exception& e) {
        Report rep;
        rep.claim = claim;
        rep.verdict = Verdict::error;
        rep.witness = {{"message", e.what()}};
        emit(rep, common);
        return 2;
    }
}

std::vector<RingPoly> parse_polys(const RingSpec& spec, const std::vector<std::string>& texts) {
    std::vector<RingPoly> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(poly_parse(spec, t));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for cyclic codes over small commutative rings"};
    app.require_subcommand(1);
    int rc = 2;

    // ring-info
    {
        auto* cmd = app.add_subcommand("ring-info", "Describe a ring given by its descriptor");
        auto common = std::make_shared<Common>();
        auto ring = std::make_shared<std::string>();
        auto n = std::make_shared<std::uint32_t>(0);
        cmd->add_option("--ring", *ring, "Ring descriptor")->required();
        cmd->add_option("--n", *n, "Also describe the quotient ring[x]/(x^n-1)");
        add_common(cmd, *common);
        cmd->callback([=, &rc] {
            rc = run_guarded("ring-info", *common, [&] {
                Report rep;
                rep.claim = "ring-info";
                auto parsed = parse_ring_descriptor(*ring);
                rep.params = {{"ring", descriptor_string(parsed)}};
                if (const auto* gr = std::get_if<GaloisRing>(&parsed)) {
                    if (*n != 0) throw std::invalid_argument("ring-info: --n is not supported for Galois rings");
                    rep.witness = {{"kind", "galois-ring"},
                                   {"p", gr->p()},
                                   {"r", gr->r()},
                                   {"n", gr->n()},
                                   {"modulus", gr->modulus_string()},
                                   {"size", gr->size()}};
                    return rep;
                }
                const RingSpec& spec = std::get<RingSpec>(parsed);
                nlohmann::json basis = nlohmann::json::array();
                for (std::uint32_t b = 0; b < std::min<std::uint32_t>(spec.dim(), 64); ++b)
                    basis.push_back(spec.mono_name(b));
                rep.witness = {{"kind", "coefficient-ring"},
                               {"family", to_string(spec.family())},
                               {"q", spec.field().q()},
                               {"p", spec.field().p()},
                               {"field_modulus_degree", spec.field().r()},
                               {"dimension", spec.dim()},
                               {"size", spec.size().to_json()},
                               {"basis", basis}};
                if (*n != 0) {
                    QuotientCtx ctx(spec, *n);
                    rep.witness["quotient"] = {{"n", *n},
                                               {"fq_dimension", ctx.fq_dim()},
                                               {"size", ctx.size().to_json()}};
                }
                return rep;
            });
        });
    }

    // gr-build
    {
        auto* cmd = app.add_subcommand("gr-build", "Construct a Galois ring and verify its free basis");
        auto common = std::make_shared<Common>();
        auto p = std::make_shared<std::uint64_t>();
        auto r = std::make_shared<std::uint32_t>();
        auto n = std::make_shared<std::uint32_t>();
        cmd->add_option("--p", *p, "Prime")->required();
        cmd->add_option("--r", *r, "Exponent of the coefficient ring Z_{p^r}")->required();
        cmd->add_option("--n", *n, "Extension degree")->required();
        add_common(cmd, *common);
        cmd->callback([=, &rc] {
            rc = run_guarded("galois-ring-basis", *common, [&] {
                GaloisRing gr(*p, *r, *n);
                return gr.basis_check(common->caps());
            });
        });
    }

    // code-build
    {
        auto* cmd = app.add_subcommand("code-build", "Build a cyclic code and report its F_q-basis");
        auto common = std::make_shared<Common>();
        auto ring = std::make_shared<std::string>();
        auto n = std::make_shared<std::uint32_t>();
        auto gens = std::make_shared<std::vector<std::string>>();
        cmd->add_option("--ring", *ring, "Coefficient ring descriptor")->required();
        cmd->add_option("--n", *n, "Code length")->required();
        cmd->add_option("--gen", *gens, "Generator polynomial (repeatable)")->required();
        add_common(cmd, *common);
        cmd->callback([=, &rc] {
            rc = run_guarded("code-build", *common, [&] {
                const RingSpec spec = parse_coefficient_ring(*ring);
                QuotientCtx ctx(spec, *n);
                CyclicCode code = code_build(ctx, parse_polys(spec, *gens), common->caps());
                Report rep;
                rep.claim = "code-build";
                nlohmann::json gen_json = nlohmann::json::array();
                for (const auto& g : code.generators) gen_json.push_back(ctx.to_string(g));
                rep.params = {{"ring", spec.descriptor()}, {"n", *n}, {"generators", gen_json}};
                nlohmann::json basis = nlohmann::json::array();
                for (std::size_t row = 0; row < code.basis.rank(); ++row)
                    basis.push_back(ctx.to_string(ctx.unflatten(code.basis.row(row))));
                rep.witness = {{"fq_dimension", code.rank()},
                               {"cardinality", code.cardinality().to_json()},
                               {"basis", basis}};
                return rep;
            });
        });
    }

    // code-rank
    {
        auto* cmd = app.add_subcommand("code-rank", "Free-rank law for a monic divisor of x^n-1");
        auto common = std::make_shared<Common>();
        auto ring = std::make_shared<std::string>();
        auto n = std::make_shared<std::uint32_t>();
        auto h = std::make_shared<std::string>();
        cmd->add_option("--ring", *ring, "Coefficient ring descriptor")->required();
        cmd->add_option("--n", *n, "Code length")->required();
        cmd->add_option("--divisor", *h, "Monic divisor of x^n-1")->required();
        add_common(cmd, *common);
        cmd->callback([=, &rc] {
            rc = run_guarded("free-rank", *common, [&] {
                const RingSpec spec = parse_coefficient_ring(*ring);
                return free_rank_check(QuotientCtx(spec, *n), poly_parse(spec, *h), common->caps());
            });
        });
    }

    // code-card
    {
        auto* cmd = app.add_subcommand("code-card", "Cardinality law |C| = |R|^{n-deg h}");
        auto common = std::make_shared<Common>();
        auto ring = std::make_shared<std::string>();
        auto n = std::make_shared<std::uint32_t>();
        auto h = std::make_shared<std::string>();
        cmd->add_option("--ring", *ring, "Coefficient ring descriptor")->required();
        cmd->add_option("--n", *n, "Code length")->required();
        cmd->add_option("--divisor", *h, "Monic divisor of x^n-1")->required();
        add_common(cmd, *common);
        cmd->callback([=, &rc] {
            rc = run_guarded("cardinality-formula", *common, [&] {
                const RingSpec spec = parse_coefficient_ring(*ring);
                return cardinality_formula_check(QuotientCtx(spec, *n), poly_parse(spec, *h), common->caps());
            });
        });
    }

    // code-distance
    {
        auto* cmd = app.add_subcommand("code-distance", "Minimum Hamming distance by full enumeration");
        auto common = std::make_shared<Common>();
        auto ring = std::make_shared<std::string>();
        auto n = std::make_shared<std::uint32_t>();
        auto gens = std::make_shared<std::vector<std::string>>();
        cmd->add_option("--ring", *ring, "Coefficient ring descriptor")->required();
        cmd->add_option("--n", *n, "Code length")->required();
        cmd->add_option("--gen", *gens, "Generator polynomial (repeatable)")->required();
        add_common(cmd, *common);
        cmd->callback([=, &rc] {
            rc = run_guarded("min-distance", *common, [&] {
                const RingSpec spec = parse_coefficient_ring(*ring);
                QuotientCtx ctx(spec, *n);
                CyclicCode code = code_build(ctx, parse_polys(spec, *gens), common->caps());
                const auto [d, word] = min_weight_word(code, common->caps());
                Report rep;
                rep.claim = "min-distance";
                nlohmann::json gen_json = nlohmann::json::array();
                for (const auto& g : code.generators) gen_json.push_back(ctx.to_string(g));
                rep.params = {{"ring", spec.descriptor()}, {"n", *n}, {"generators", gen_json}};
                rep.witness = {{"distance", d},
                               {"achieved_by", ctx.to_string(word)},
                               {"cardinality", code.cardinality().to_json()}};
                return rep;
            });
        });
    }

    // code-twogen
    {
        auto* cmd = app.add_subcommand("code-twogen",
                                       "Two-generator code C = (g + u p, u a) over R[i=2] and its "
                                       "cardinality law");
        auto common = std::make_shared<Common>();
        auto ring = std::make_shared<std::string>();
        auto n = std::make_shared<std::uint32_t>();
        auto g = std::make_shared<std::string>();
        auto p = std::make_shared<std::string>("{0}");
        auto a = std::make_shared<std::string>();
        cmd->add_option("--ring", *ring, "Coefficient ring descriptor (family R, i = 2)")->required();
        cmd->add_option("--n", *n, "Code length")->required();
        cmd->add_option("--g", *g, "Monic divisor g of x^n-1")->required();
        cmd->add_option("--p", *p, "Polynomial p with deg p < deg a")->capture_default_str();
        cmd->add_option("--a", *a, "Monic divisor a of g")->required();
        add_common(cmd, *common);
        cmd->callback([=, &rc] {
            rc = run_guarded("two-generator-cardinality", *common, [&] {
                const RingSpec spec = parse_coefficient_ring(*ring);
                QuotientCtx ctx(spec, *n);
                return two_generator_build(ctx, poly_parse(spec, *g), poly_parse(spec, *p),
                                           poly_parse(spec, *a), common->caps())
                    .report;
            });
        });
    }

    // classify
    {
        auto* cmd = app.add_subcommand("classify", "Base-p digit classification of n");
        auto common = std::make_shared<Common>();
        auto n = std::make_shared<std::uint64_t>();
        auto p = std::make_shared<std::uint64_t>();
        cmd->add_option("--n", *n, "Length to classify")->required();
        cmd->add_option("--p", *p, "Prime base")->required();
        add_common(cmd, *common);
        cmd->callback([=, &rc] {
            rc = run_guarded("p-adic-classification", *common,
                             [&] { return padic_report(classify_p_adic(*n, *p)); });
        });
    }

    // analyze-local
    {
        auto* cmd = app.add_subcommand("analyze-local", "Locality (non-units form an ideal)");
        auto common = std::make_shared<Common>();
        auto ring = std::make_shared<std::string>();
        auto n = std::make_shared<std::uint32_t>(0);
        cmd->add_option("--ring", *ring, "Coefficient ring descriptor")->required();
        cmd->add_option("--n", *n, "Analyze ring[x]/(x^n-1) instead of the ring itself");
        add_common(cmd, *common);
        cmd->callback([=, &rc] {
            rc = run_guarded("ring-is-local", *common, [&] {
                const RingSpec spec = parse_coefficient_ring(*ring);
                AlgebraView view = *n == 0 ? AlgebraView(spec) : AlgebraView(QuotientCtx(spec, *n));
                return is_local(view, common->caps());
            });
        });
    }

    // analyze-principal
    {
        auto* cmd = app.add_subcommand("analyze-principal", "Single-generator search for an ideal");
        auto common = std::make_shared<Common>();
        auto ring = std::make_shared<std::string>();
        auto n = std::make_shared<std::uint32_t>(0);
        auto gens = std::make_shared<std::vector<std::string>>();
        cmd->add_option("--ring", *ring, "Coefficient ring descriptor")->required();
        cmd->add_option("--n", *n, "Take the ideal inside ring[x]/(x^n-1)");
        cmd->add_option("--gen", *gens,
                        "Ideal generator: a ring element, or a polynomial when --n is given (repeatable)")
            ->required();
        add_common(cmd, *common);
        cmd->callback([=, &rc] {
            rc = run_guarded("ideal-is-principal", *common, [&] {
                const RingSpec spec = parse_coefficient_ring(*ring);
                AlgebraView view = *n == 0 ? AlgebraView(spec) : AlgebraView(QuotientCtx(spec, *n));
                std::vector<AlgebraView::Elem> gen_elems;
                nlohmann::json gen_json = nlohmann::json::array();
                for (const auto& text : *gens) {
                    if (*n == 0) {
                        RingElem e = spec.parse(text);
                        gen_json.push_back(spec.to_string(e));
                        gen_elems.push_back(view.ctx().flatten(poly_term(spec, std::move(e), 0)));
                    } else {
                        RingPoly f = view.ctx().parse(text);
                        gen_json.push_back(view.ctx().to_string(f));
                        gen_elems.push_back(view.ctx().flatten(f));
                    }
                }
                IdealSet ideal = ideal_span(view, gen_elems, common->caps());
                Report rep = is_principal(view, ideal, common->caps());
                rep.params["generators"] = gen_json;
                return rep;
            });
        });
    }

    // analyze-chain
    {
        auto* cmd = app.add_subcommand("analyze-chain", "Total ordering of the ideal lattice");
        auto common = std::make_shared<Common>();
        auto ring = std::make_shared<std::string>();
        cmd->add_option("--ring", *ring, "Coefficient ring descriptor")->required();
        add_common(cmd, *common);
        cmd->callback([=, &rc] {
            rc = run_guarded("ideals-form-chain", *common, [&] {
                const RingSpec spec = parse_coefficient_ring(*ring);
                // Ideal-lattice enumeration is certified for small rings only;
                // the default cap is tighter than elsewhere.
                return chain_check(AlgebraView(spec), common->caps(4096));
            });
        });
    }

    // analyze-factor
    {
        auto* cmd = app.add_subcommand("analyze-factor", "Verify factorizations of x^n-1");
        auto common = std::make_shared<Common>();
        auto ring = std::make_shared<std::string>();
        auto n = std::make_shared<std::uint32_t>();
        auto cands = std::make_shared<std::vector<std::string>>();
        auto search = std::make_shared<bool>(false);
        cmd->add_option("--ring", *ring, "Coefficient ring descriptor")->required();
        cmd->add_option("--n", *n, "Exponent in x^n-1")->required();
        cmd->add_option("--candidate", *cands,
                        "Claimed factorization: polynomial factors separated by ';' (repeatable)");
        cmd->add_flag("--search", *search, "Search monic linear shifts x-(1+m), m nilpotent");
        add_common(cmd, *common);
        cmd->callback([=, &rc] {
            rc = run_guarded("factorization-witnesses", *common, [&] {
                const RingSpec spec = parse_coefficient_ring(*ring);
                std::vector<std::vector<RingPoly>> candidates;
                for (const auto& text : *cands) {
                    std::vector<RingPoly> factors;
                    std::size_t start = 0;
                    while (start <= text.size()) {
                        const std::size_t semi = text.find(';', start);
                        const std::string part =
                            text.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
                        factors.push_back(poly_parse(spec, part));
                        if (semi == std::string::npos) break;
                        start = semi + 1;
                    }
                    candidates.push_back(std::move(factors));
                }
                if (candidates.empty() && !*search)
                    throw std::invalid_argument("analyze-factor: give --candidate and/or --search");
                return factorization_witness(spec, *n, candidates, *search, common->caps());
            });
        });
    }

    // prop42 (distance doubling for lengths p^r)
    {
        auto* cmd = app.add_subcommand("prop42", "Distance doubling d(C) = 2 d(C1) for length p^r");
        auto common = std::make_shared<Common>();
        auto ring = std::make_shared<std::string>();
        auto p = std::make_shared<std::uint64_t>();
        auto r = std::make_shared<std::uint32_t>();
        auto a = std::make_shared<std::uint32_t>(1);
        auto g1 = std::make_shared<std::string>();
        cmd->add_option("--ring", *ring, "Coefficient ring descriptor")->required();
        cmd->add_option("--p", *p, "Prime (the ring characteristic)")->required();
        cmd->add_option("--r", *r, "Length exponent, n = p^r")->required();
        cmd->add_option("--a", *a, "Shift multiplier, 1 <= a <= p-1")->capture_default_str();
        cmd->add_option("--g1", *g1, "Generator of the base code of length p^{r-1}")->required();
        add_common(cmd, *common);
        cmd->callback([=, &rc] {
            rc = run_guarded("distance-doubling", *common, [&] {
                const RingSpec spec = parse_coefficient_ring(*ring);
                return distance_doubling_check(spec, *p, *r, *a, poly_parse(spec, *g1), common->caps());
            });
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return rc;
}
