#include "ringcode/ring_poly.hpp"

#include <cctype>
#include <stdexcept>

namespace ringcode {

RingPoly poly_trim(const RingSpec& spec, RingPoly f) {
    while (!f.c.empty() && spec.is_zero(f.c.back())) f.c.pop_back();
    return f;
}

RingPoly poly_zero() { return {}; }

RingPoly poly_one(const RingSpec& spec) { return {{spec.one()}}; }

RingPoly poly_term(const RingSpec& spec, RingElem coeff, std::uint32_t k) {
    if (spec.is_zero(coeff)) return {};
    RingPoly f;
    f.c.assign(k + 1, spec.zero());
    f.c[k] = std::move(coeff);
    return f;
}

RingPoly x_pow_minus_one(const RingSpec& spec, std::uint32_t n) {
    RingPoly f;
    f.c.assign(n + 1, spec.zero());
    f.c[0] = spec.neg(spec.one());
    f.c[n] = spec.one();
    return f;
}

bool poly_eq(const RingSpec& spec, const RingPoly& f, const RingPoly& g) {
    const RingPoly a = poly_trim(spec, f), b = poly_trim(spec, g);
    return a.c == b.c;
}

RingPoly poly_add(const RingSpec& spec, const RingPoly& f, const RingPoly& g) {
    RingPoly out;
    out.c.assign(std::max(f.c.size(), g.c.size()), spec.zero());
    for (std::size_t k = 0; k < out.c.size(); ++k) {
        if (k < f.c.size()) out.c[k] = spec.add(out.c[k], f.c[k]);
        if (k < g.c.size()) out.c[k] = spec.add(out.c[k], g.c[k]);
    }
    return poly_trim(spec, std::move(out));
}

RingPoly poly_neg(const RingSpec& spec, const RingPoly& f) {
    RingPoly out = f;
    for (auto& e : out.c) e = spec.neg(e);
    return out;
}

RingPoly poly_sub(const RingSpec& spec, const RingPoly& f, const RingPoly& g) {
    return poly_add(spec, f, poly_neg(spec, g));
}

RingPoly poly_mul(const RingSpec& spec, const RingPoly& f, const RingPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    RingPoly out;
    out.c.assign(f.c.size() + g.c.size() - 1, spec.zero());
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (spec.is_zero(f.c[i])) continue;
        for (std::size_t j = 0; j < g.c.size(); ++j)
            out.c[i + j] = spec.add(out.c[i + j], spec.mul(f.c[i], g.c[j]));
    }
    return poly_trim(spec, std::move(out));
}

RingPoly poly_pow(const RingSpec& spec, const RingPoly& f, std::uint64_t e) {
    RingPoly result = poly_one(spec);
    RingPoly base = f;
    while (e > 0) {
        if (e & 1) result = poly_mul(spec, result, base);
        base = poly_mul(spec, base, base);
        e >>= 1;
    }
    return result;
}

bool poly_is_monic(const RingSpec& spec, const RingPoly& f) {
    return !f.is_zero() && f.c.back() == spec.one();
}

PolyDivMod poly_divmod_monic(const RingSpec& spec, const RingPoly& f, const RingPoly& h) {
    if (!poly_is_monic(spec, h))
        throw std::domain_error("poly_divmod_monic: division is only defined by monic polynomials");
    RingPoly rem = poly_trim(spec, f);
    const std::size_t dh = h.c.size() - 1;
    if (rem.c.size() <= dh) return {poly_zero(), std::move(rem)};
    RingPoly quot;
    quot.c.assign(rem.c.size() - dh, spec.zero());
    while (rem.c.size() > dh) {
        const RingElem lead = rem.c.back();
        const std::size_t shift = rem.c.size() - 1 - dh;
        quot.c[shift] = lead;
        for (std::size_t j = 0; j <= dh; ++j)
            rem.c[shift + j] = spec.sub(rem.c[shift + j], spec.mul(lead, h.c[j]));
        rem = poly_trim(spec, std::move(rem));
        if (!rem.c.empty() && rem.c.size() > dh + shift)
            throw std::logic_error("poly_divmod_monic: leading term did not cancel");
    }
    return {poly_trim(spec, std::move(quot)), std::move(rem)};
}

bool divides_monic(const RingSpec& spec, const RingPoly& h, const RingPoly& f) {
    return poly_divmod_monic(spec, f, h).rem.is_zero();
}

QuotientCtx::QuotientCtx(RingSpec ring, std::uint32_t n) : ring_(std::move(ring)), n_(n) {
    if (n == 0) throw std::invalid_argument("QuotientCtx: n must be >= 1");
}

RingPoly QuotientCtx::reduce(const RingPoly& f) const {
    RingPoly out;
    out.c.assign(n_, ring_.zero());
    for (std::size_t k = 0; k < f.c.size(); ++k)
        out.c[k % n_] = ring_.add(out.c[k % n_], f.c[k]);
    return poly_trim(ring_, std::move(out));
}

RingPoly QuotientCtx::mul(const RingPoly& f, const RingPoly& g) const {
    RingPoly out;
    out.c.assign(n_, ring_.zero());
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (ring_.is_zero(f.c[i])) continue;
        for (std::size_t j = 0; j < g.c.size(); ++j) {
            const std::size_t k = (i + j) % n_;
            out.c[k] = ring_.add(out.c[k], ring_.mul(f.c[i], g.c[j]));
        }
    }
    return poly_trim(ring_, std::move(out));
}

RingPoly QuotientCtx::shift(const RingPoly& f) const {
    RingPoly out;
    out.c.assign(n_, ring_.zero());
    for (std::size_t k = 0; k < f.c.size(); ++k) out.c[(k + 1) % n_] = f.c[k];
    return poly_trim(ring_, std::move(out));
}

RingElem QuotientCtx::coeff(const RingPoly& f, std::uint32_t k) const {
    return k < f.c.size() ? f.c[k] : ring_.zero();
}

std::vector<fq_t> QuotientCtx::flatten(const RingPoly& f) const {
    const std::uint32_t s = ring_.dim();
    std::vector<fq_t> v(fq_dim(), 0);
    for (std::size_t k = 0; k < f.c.size() && k < n_; ++k)
        for (std::uint32_t b = 0; b < s; ++b) v[k * s + b] = f.c[k][b];
    return v;
}

RingPoly QuotientCtx::unflatten(std::span<const fq_t> v) const {
    if (v.size() != fq_dim()) throw std::invalid_argument("QuotientCtx::unflatten: size mismatch");
    const std::uint32_t s = ring_.dim();
    RingPoly f;
    f.c.assign(n_, ring_.zero());
    for (std::uint32_t k = 0; k < n_; ++k)
        for (std::uint32_t b = 0; b < s; ++b) f.c[k][b] = v[k * s + b];
    return poly_trim(ring_, std::move(f));
}

std::uint32_t hamming_weight(const RingPoly& f) {
    std::uint32_t w = 0;
    for (const auto& e : f.c) {
        for (fq_t c : e) {
            if (c != 0) {
                ++w;
                break;
            }
        }
    }
    return w;
}

namespace {

struct PolyParser {
    const RingSpec& spec;
    std::string_view s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos) + ": " + msg);
    }
    std::uint64_t parse_uint() {
        skip();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected integer");
        std::uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > (std::uint64_t{1} << 20)) fail("exponent too large");
            ++pos;
        }
        return v;
    }

    // term := ('{' element '}' | uint)? ['*'] ['x' ['^' uint]]
    void term(RingPoly& acc, bool negate) {
        skip();
        RingElem coeff = spec.one();
        bool have_coeff = false;
        if (pos < s.size() && s[pos] == '{') {
            const std::size_t close = s.find('}', pos);
            if (close == std::string_view::npos) fail("unterminated '{'");
            coeff = spec.parse(s.substr(pos + 1, close - pos - 1));
            pos = close + 1;
            have_coeff = true;
        } else if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            const std::uint64_t v = parse_uint();
            coeff = spec.zero();
            coeff[0] = spec.field().from_coeffs(
                std::vector<std::uint32_t>{static_cast<std::uint32_t>(v % spec.field().p())});
            have_coeff = true;
        }
        skip();
        if (pos < s.size() && s[pos] == '*') {
            ++pos;
            skip();
        }
        std::uint32_t power = 0;
        bool have_x = false;
        if (pos < s.size() && s[pos] == 'x') {
            ++pos;
            have_x = true;
            power = 1;
            skip();
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                power = static_cast<std::uint32_t>(parse_uint());
            }
        }
        if (!have_coeff && !have_x) fail("expected '{coefficient}' or 'x'");
        if (negate) coeff = spec.neg(coeff);
        acc = poly_add(spec, acc, poly_term(spec, std::move(coeff), power));
    }

    RingPoly parse() {
        RingPoly acc;
        skip();
        bool negate = false;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) negate = s[pos++] == '-';
        term(acc, negate);
        while (true) {
            skip();
            if (pos >= s.size()) break;
            if (s[pos] != '+' && s[pos] != '-') fail("expected '+' or '-'");
            negate = s[pos++] == '-';
            term(acc, negate);
        }
        return acc;
    }
};

}  // namespace

std::string poly_to_string(const RingSpec& spec, const RingPoly& f) {
    if (f.is_zero()) return "{0}";
    std::string out;
    for (std::size_t k = f.c.size(); k-- > 0;) {
        if (spec.is_zero(f.c[k])) continue;
        if (!out.empty()) out += " + ";
        out += "{" + spec.to_string(f.c[k]) + "}";
        if (k == 1) out += "*x";
        if (k >= 2) out += "*x^" + std::to_string(k);
    }
    return out;
}

RingPoly poly_parse(const RingSpec& spec, std::string_view text) {
    PolyParser p{spec, text};
    return p.parse();
}

}  // namespace ringcode
