#include <cctype>
#include <stdexcept>

#include "ringcode/monomial_ring.hpp"

namespace ringcode {
namespace {

struct ElemParser {
    const RingSpec& spec;
    std::string_view s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("element parse error at offset " + std::to_string(pos) + ": " + msg);
    }
    std::uint64_t parse_uint() {
        skip();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected integer");
        std::uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > (std::uint64_t{1} << 62)) fail("integer too large");
            ++pos;
        }
        return v;
    }

    RingElem scalar(fq_t c) const {
        RingElem e = spec.zero();
        e[0] = c;
        return e;
    }

    RingElem variable() {
        const char v = s[pos++];
        std::uint64_t sub = 0;
        bool has_sub = false;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            sub = sub * 10 + (s[pos] - '0');
            has_sub = true;
            ++pos;
        }
        switch (spec.family()) {
            case RingFamily::Fq:
                fail("the base field has no ring variables");
            case RingFamily::R:
                if (v != 'u' || has_sub) fail("unknown variable (family R has only 'u'; powers are 'u^k')");
                return spec.param_i() >= 2 ? spec.from_mono(1) : spec.zero();
            case RingFamily::S:
                if (v != 'u' || !has_sub || sub < 1 || sub > spec.param_i())
                    fail("unknown variable (family S has u1..u" + std::to_string(spec.param_i()) + ")");
                return spec.from_mono(std::uint32_t{1} << (sub - 1));
            case RingFamily::T:
                if (has_sub) fail("unknown variable (family T has 'u' and 'v'; powers are 'u^k')");
                if (v == 'u') return spec.param_i() >= 2 ? spec.from_mono(spec.param_j()) : spec.zero();
                if (v == 'v') return spec.param_j() >= 2 ? spec.from_mono(1) : spec.zero();
                fail("unknown variable (family T has 'u' and 'v')");
        }
        fail("unknown variable");
    }

    RingElem base() {
        skip();
        if (pos >= s.size()) fail("unexpected end of input");
        const char c = s[pos];
        if (c == '(') {
            ++pos;
            RingElem v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::uint64_t v = parse_uint();
            return scalar(spec.field().from_coeffs(
                std::vector<std::uint32_t>{static_cast<std::uint32_t>(v % spec.field().p())}));
        }
        if (c == 'w') {
            ++pos;
            return scalar(spec.field().gen());
        }
        if (c == 'u' || c == 'v') return variable();
        fail("expected integer, 'w', a ring variable or '('");
    }

    RingElem factor() {
        RingElem v = base();
        skip();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            v = spec.pow(v, parse_uint());
        }
        return v;
    }

    RingElem term() {
        RingElem v = factor();
        while (true) {
            skip();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                v = spec.mul(v, factor());
            } else {
                return v;
            }
        }
    }

    RingElem expr() {
        bool negate = eat('-');
        RingElem v = term();
        if (negate) v = spec.neg(v);
        while (true) {
            skip();
            if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
                const char op = s[pos++];
                RingElem t = term();
                v = op == '+' ? spec.add(v, t) : spec.sub(v, t);
            } else {
                return v;
            }
        }
    }
};

}  // namespace

std::string RingSpec::to_string(const RingElem& a) const {
    if (is_zero(a)) return "0";
    std::string out;
    for (std::uint32_t idx = 0; idx < dim_; ++idx) {
        if (a[idx] == 0) continue;
        const std::string coeff = field_->to_string(a[idx]);
        if (!out.empty()) out += "+";
        if (idx == 0) {
            out += coeff;
            continue;
        }
        const std::string name = mono_name(idx);
        if (a[idx] == field_->one()) {
            out += name;
        } else if (coeff.find('+') == std::string::npos) {
            out += coeff + "*" + name;
        } else {
            out += "(" + coeff + ")*" + name;
        }
    }
    return out;
}

RingElem RingSpec::parse(std::string_view text) const {
    ElemParser p{*this, text};
    RingElem v = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

}  // namespace ringcode
