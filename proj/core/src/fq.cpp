#include "ringcode/fq.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ringcode {
namespace {

constexpr std::uint64_t kMaxQ = std::uint64_t{1} << 20;

// Dense Z_p[y] polynomials as coefficient vectors, ascending powers, used only
// for modulus construction and verification.
using ZpPoly = std::vector<std::uint32_t>;

ZpPoly zp_trim(ZpPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

// Remainder of f by monic divisor h, all coefficients mod p.
ZpPoly zp_mod(ZpPoly f, const ZpPoly& h, std::uint64_t p) {
    f = zp_trim(std::move(f));
    const std::size_t dh = h.size() - 1;
    while (f.size() >= h.size()) {
        const std::uint64_t lead = f.back();
        const std::size_t shift = f.size() - 1 - dh;
        for (std::size_t j = 0; j <= dh; ++j) {
            std::uint64_t cur = f[shift + j];
            std::uint64_t sub = (lead * h[j]) % p;
            f[shift + j] = static_cast<std::uint32_t>((cur + p - sub) % p);
        }
        f = zp_trim(std::move(f));
    }
    return f;
}

bool zp_irreducible(const ZpPoly& f, std::uint64_t p) {
    const std::size_t d = f.size() - 1;
    if (d == 0) return false;
    if (d == 1) return true;
    // Trial division by every monic polynomial of degree 1..d/2.
    for (std::size_t dd = 1; dd <= d / 2; ++dd) {
        std::uint64_t count = 1;
        for (std::size_t k = 0; k < dd; ++k) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            ZpPoly h(dd + 1, 0);
            std::uint64_t rest = idx;
            for (std::size_t k = 0; k < dd; ++k) {
                h[k] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            h[dd] = 1;
            if (zp_mod(f, h, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> find_irreducible(std::uint64_t p, std::uint32_t degree) {
    if (!is_prime(p)) throw std::invalid_argument("find_irreducible: p must be prime");
    if (degree == 0) throw std::invalid_argument("find_irreducible: degree must be >= 1");
    std::uint64_t count = 1;
    for (std::uint32_t k = 0; k < degree; ++k) {
        count *= p;
        if (count > kMaxQ) throw std::invalid_argument("find_irreducible: p^degree beyond desk scale");
    }
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        ZpPoly f(degree + 1, 0);
        std::uint64_t rest = idx;
        for (std::uint32_t k = 0; k < degree; ++k) {
            f[k] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        f[degree] = 1;
        if (zp_irreducible(f, p)) return f;
    }
    throw std::logic_error("find_irreducible: no irreducible found");  // unreachable
}

Fq::Fq(std::uint64_t p, std::uint32_t r) : p_(p), r_(r) {
    if (!is_prime(p)) throw std::invalid_argument("Fq: p must be prime");
    if (r == 0) throw std::invalid_argument("Fq: r must be >= 1");
    modulus_ = find_irreducible(p, r);
    validate();
}

Fq::Fq(std::uint64_t p, std::vector<std::uint32_t> modulus) : p_(p), modulus_(std::move(modulus)) {
    if (!is_prime(p)) throw std::invalid_argument("Fq: p must be prime");
    if (modulus_.size() < 2) throw std::invalid_argument("Fq: modulus must have degree >= 1");
    r_ = static_cast<std::uint32_t>(modulus_.size() - 1);
    validate();
}

void Fq::validate() {
    q_ = 1;
    for (std::uint32_t k = 0; k < r_; ++k) {
        q_ *= p_;
        if (q_ > kMaxQ) throw std::invalid_argument("Fq: q = p^r beyond desk scale");
    }
    for (auto& c : modulus_) c = static_cast<std::uint32_t>(c % p_);
    if (modulus_.back() != 1) throw std::invalid_argument("Fq: modulus must be monic");
    if (!zp_irreducible(modulus_, p_)) throw std::invalid_argument("Fq: modulus is reducible");
}

fq_t Fq::gen() const {
    if (r_ < 2) throw std::domain_error("Fq: w is undefined in a prime field");
    return static_cast<fq_t>(p_);
}

std::vector<std::uint32_t> Fq::coeffs(fq_t a) const {
    std::vector<std::uint32_t> c(r_, 0);
    std::uint64_t rest = a;
    for (std::uint32_t k = 0; k < r_; ++k) {
        c[k] = static_cast<std::uint32_t>(rest % p_);
        rest /= p_;
    }
    return c;
}

fq_t Fq::from_coeffs(std::span<const std::uint32_t> c) const {
    std::uint64_t code = 0;
    std::uint64_t scale = 1;
    for (std::uint32_t k = 0; k < r_; ++k) {
        std::uint64_t digit = k < c.size() ? c[k] % p_ : 0;
        code += digit * scale;
        scale *= p_;
    }
    return static_cast<fq_t>(code);
}

fq_t Fq::add(fq_t a, fq_t b) const {
    std::uint64_t code = 0;
    std::uint64_t scale = 1;
    std::uint64_t ra = a, rb = b;
    for (std::uint32_t k = 0; k < r_; ++k) {
        code += ((ra % p_) + (rb % p_)) % p_ * scale;
        ra /= p_;
        rb /= p_;
        scale *= p_;
    }
    return static_cast<fq_t>(code);
}

fq_t Fq::neg(fq_t a) const {
    std::uint64_t code = 0;
    std::uint64_t scale = 1;
    std::uint64_t ra = a;
    for (std::uint32_t k = 0; k < r_; ++k) {
        code += (p_ - ra % p_) % p_ * scale;
        ra /= p_;
        scale *= p_;
    }
    return static_cast<fq_t>(code);
}

fq_t Fq::sub(fq_t a, fq_t b) const { return add(a, neg(b)); }

fq_t Fq::mul(fq_t a, fq_t b) const {
    if (a == 0 || b == 0) return 0;
    // Schoolbook product of the digit vectors, then reduction by the monic
    // modulus.
    std::uint32_t da[64], db[64];
    std::uint64_t buf[128] = {0};
    std::uint64_t ra = a, rb = b;
    for (std::uint32_t k = 0; k < r_; ++k) {
        da[k] = static_cast<std::uint32_t>(ra % p_);
        db[k] = static_cast<std::uint32_t>(rb % p_);
        ra /= p_;
        rb /= p_;
    }
    for (std::uint32_t i = 0; i < r_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < r_; ++j) buf[i + j] += std::uint64_t{da[i]} * db[j];
    }
    for (std::uint32_t k = 2 * r_ - 2; k + 1 > r_; --k) {
        std::uint64_t c = buf[k] % p_;
        buf[k] = 0;
        if (c == 0) continue;
        for (std::uint32_t j = 0; j < r_; ++j) {
            buf[k - r_ + j] += (p_ - (c * modulus_[j]) % p_);
        }
    }
    std::uint64_t code = 0;
    std::uint64_t scale = 1;
    for (std::uint32_t k = 0; k < r_; ++k) {
        code += (buf[k] % p_) * scale;
        scale *= p_;
    }
    return static_cast<fq_t>(code);
}

fq_t Fq::pow(fq_t a, std::uint64_t e) const {
    fq_t result = one();
    fq_t base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

fq_t Fq::inv(fq_t a) const {
    if (a == 0) throw std::domain_error("Fq: inverse of zero");
    return pow(a, q_ - 2);
}

bool Fq::same(const Fq& other) const {
    return p_ == other.p_ && r_ == other.r_ && modulus_ == other.modulus_;
}

std::string Fq::to_string(fq_t a) const {
    if (a == 0) return "0";
    if (r_ == 1) return std::to_string(a);
    const auto c = coeffs(a);
    std::string out;
    for (std::uint32_t k = r_; k-- > 0;) {
        if (c[k] == 0) continue;
        if (!out.empty()) out += "+";
        if (k == 0) {
            out += std::to_string(c[k]);
        } else {
            if (c[k] != 1) out += std::to_string(c[k]) + "*";
            out += (k == 1) ? "w" : "w^" + std::to_string(k);
        }
    }
    return out;
}

namespace {

// Minimal recursive-descent evaluator for the scalar grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ['^' uint]
//   base   := uint | 'w' | '(' expr ')'
struct ScalarParser {
    const Fq& f;
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
        throw std::invalid_argument("scalar parse error at offset " + std::to_string(pos) + ": " + msg);
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
    fq_t base() {
        skip();
        if (pos >= s.size()) fail("unexpected end of input");
        if (s[pos] == '(') {
            ++pos;
            fq_t v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (s[pos] == 'w') {
            ++pos;
            return f.gen();
        }
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::uint64_t v = parse_uint();
            return f.from_coeffs(std::vector<std::uint32_t>{static_cast<std::uint32_t>(v % f.p())});
        }
        fail("expected integer, 'w' or '('");
    }
    fq_t factor() {
        fq_t v = base();
        skip();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            v = f.pow(v, parse_uint());
        }
        return v;
    }
    fq_t term() {
        fq_t v = factor();
        while (true) {
            skip();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                v = f.mul(v, factor());
            } else {
                return v;
            }
        }
    }
    fq_t expr() {
        bool negate = eat('-');
        fq_t v = term();
        if (negate) v = f.neg(v);
        while (true) {
            skip();
            if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
                char op = s[pos++];
                fq_t t = term();
                v = op == '+' ? f.add(v, t) : f.sub(v, t);
            } else {
                return v;
            }
        }
    }
};

}  // namespace

fq_t Fq::parse(std::string_view text) const {
    ScalarParser p{*this, text};
    fq_t v = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

}  // namespace ringcode
