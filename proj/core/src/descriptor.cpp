#include "ringcode/descriptor.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

namespace ringcode {
namespace {

[[noreturn]] void bad(const std::string& text, const std::string& why) {
    throw std::invalid_argument("ring descriptor '" + text + "': " + why);
}

// Factors q into (p, r) with p prime and q = p^r.
std::pair<std::uint64_t, std::uint32_t> prime_power(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t r = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++r;
    }
    if (rest != 1) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    return {p, r};
}

}  // namespace

std::variant<RingSpec, GaloisRing> parse_ring_descriptor(std::string_view text) {
    const std::string s(text);
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    skip();
    std::string name;
    while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) name += s[pos++];
    skip();
    if (pos >= s.size() || s[pos] != '[') bad(s, "expected '[' after the family name");
    ++pos;
    std::map<std::string, std::uint64_t> kv;
    while (true) {
        skip();
        std::string key;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) key += s[pos++];
        skip();
        if (key.empty() || pos >= s.size() || s[pos] != '=') bad(s, "expected key=value");
        ++pos;
        skip();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) bad(s, "expected integer value");
        std::uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos++] - '0');
            if (v > (std::uint64_t{1} << 40)) bad(s, "value too large");
        }
        if (kv.count(key)) bad(s, "duplicate key '" + key + "'");
        kv[key] = v;
        skip();
        if (pos < s.size() && s[pos] == ',') {
            ++pos;
            continue;
        }
        break;
    }
    if (pos >= s.size() || s[pos] != ']') bad(s, "expected ']'");
    ++pos;
    skip();
    if (pos != s.size()) bad(s, "trailing input");

    auto need = [&](std::initializer_list<const char*> keys) {
        if (kv.size() != keys.size()) bad(s, "wrong number of parameters");
        for (const char* k : keys)
            if (!kv.count(k)) bad(s, std::string("missing parameter '") + k + "'");
    };
    auto field_from_q = [&](std::uint64_t q) {
        const auto [p, r] = prime_power(q);
        return make_field(p, r);
    };

    try {
        if (name == "Fq") {
            need({"p", "r"});
            if (!is_prime(kv["p"])) bad(s, "p must be prime");
            return RingSpec::field_ring(make_field(kv["p"], static_cast<std::uint32_t>(kv["r"])));
        }
        if (name == "R") {
            need({"i", "q"});
            return RingSpec::make(RingFamily::R, static_cast<std::uint32_t>(kv["i"]), 1,
                                  field_from_q(kv["q"]));
        }
        if (name == "S") {
            need({"i", "q"});
            return RingSpec::make(RingFamily::S, static_cast<std::uint32_t>(kv["i"]), 1,
                                  field_from_q(kv["q"]));
        }
        if (name == "T") {
            need({"i", "j", "q"});
            return RingSpec::make(RingFamily::T, static_cast<std::uint32_t>(kv["i"]),
                                  static_cast<std::uint32_t>(kv["j"]), field_from_q(kv["q"]));
        }
        if (name == "GR") {
            need({"p", "r", "n"});
            return GaloisRing(kv["p"], static_cast<std::uint32_t>(kv["r"]),
                              static_cast<std::uint32_t>(kv["n"]));
        }
    } catch (const cap_error&) {
        throw;
    } catch (const std::invalid_argument& e) {
        bad(s, e.what());
    }
    bad(s, "unknown family '" + name + "' (expected Fq, R, S, T or GR)");
}

RingSpec parse_coefficient_ring(std::string_view text) {
    auto v = parse_ring_descriptor(text);
    if (std::holds_alternative<GaloisRing>(v))
        throw std::invalid_argument("ring descriptor '" + std::string(text) +
                                    "': a Galois ring is not usable as a code coefficient ring here");
    return std::get<RingSpec>(std::move(v));
}

std::string descriptor_string(const std::variant<RingSpec, GaloisRing>& ring) {
    if (const auto* spec = std::get_if<RingSpec>(&ring)) return spec->descriptor();
    const auto& gr = std::get<GaloisRing>(ring);
    return "GR[p=" + std::to_string(gr.p()) + ",r=" + std::to_string(gr.r()) +
           ",n=" + std::to_string(gr.n()) + "]";
}

}  // namespace ringcode
