#include "ringcode/zmod.hpp"

#include <stdexcept>

#include "ringcode/fq.hpp"

namespace ringcode {
namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

// Inverse of a mod m for gcd(a, m) = 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw std::domain_error("inv_mod: not a unit");
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t pow_u64_checked(std::uint64_t base, std::uint32_t exp, const char* what) {
    std::uint64_t acc = 1;
    for (std::uint32_t k = 0; k < exp; ++k) {
        if (acc > (std::uint64_t{1} << 62) / base) throw std::invalid_argument(std::string(what) + ": modulus beyond 2^62");
        acc *= base;
    }
    return acc;
}

std::uint64_t eval_poly_mod(std::span<const std::uint64_t> f, std::uint64_t x, std::uint64_t m) {
    std::uint64_t acc = 0;
    for (std::size_t k = f.size(); k-- > 0;) acc = (mul_mod(acc, x, m) + f[k] % m) % m;
    return acc;
}

std::uint64_t eval_deriv_mod(std::span<const std::uint64_t> f, std::uint64_t x, std::uint64_t m) {
    std::uint64_t acc = 0;
    for (std::size_t k = f.size(); k-- > 1;) acc = (mul_mod(acc, x, m) + mul_mod(k % m, f[k] % m, m)) % m;
    return acc;
}

}  // namespace

ZMod::ZMod(std::uint64_t p, std::uint32_t r) : p_(p), r_(r) {
    if (!is_prime(p)) throw std::invalid_argument("ZMod: p must be prime");
    if (r == 0) throw std::invalid_argument("ZMod: r must be >= 1");
    m_ = pow_u64_checked(p, r, "ZMod");
}

std::uint64_t ZMod::add(std::uint64_t a, std::uint64_t b) const { return (a % m_ + b % m_) % m_; }
std::uint64_t ZMod::sub(std::uint64_t a, std::uint64_t b) const { return (a % m_ + m_ - b % m_) % m_; }
std::uint64_t ZMod::neg(std::uint64_t a) const { return (m_ - a % m_) % m_; }
std::uint64_t ZMod::mul(std::uint64_t a, std::uint64_t b) const { return mul_mod(a % m_, b % m_, m_); }
bool ZMod::is_unit(std::uint64_t a) const { return (a % m_) % p_ != 0; }

std::uint64_t ZMod::inv(std::uint64_t a) const {
    if (!is_unit(a)) throw std::domain_error("ZMod: inverse of a non-unit");
    return inv_mod(a % m_, m_);
}

std::uint64_t ZMod::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t result = 1 % m_;
    std::uint64_t base = a % m_;
    while (e > 0) {
        if (e & 1) result = mul_mod(result, base, m_);
        base = mul_mod(base, base, m_);
        e >>= 1;
    }
    return result;
}

std::uint64_t hensel_lift_root(std::uint64_t p, std::uint32_t t, std::span<const std::uint64_t> f,
                               std::uint64_t rho) {
    if (!is_prime(p)) throw std::invalid_argument("hensel_lift_root: p must be prime");
    if (t == 0) throw std::invalid_argument("hensel_lift_root: t must be >= 1");
    const std::uint64_t mod_t = pow_u64_checked(p, t, "hensel_lift_root");
    const std::uint64_t mod_t1 = pow_u64_checked(p, t + 1, "hensel_lift_root");

    if (eval_poly_mod(f, rho, mod_t) != 0)
        throw std::invalid_argument("hensel_lift_root: rho is not a root of f mod p^t");
    const std::uint64_t d = eval_deriv_mod(f, rho, mod_t1);
    if (d % p == 0) throw std::domain_error("hensel_lift_root: non-simple root, lift undefined");

    const std::uint64_t step = mul_mod(eval_poly_mod(f, rho, mod_t1), inv_mod(d, mod_t1), mod_t1);
    const std::uint64_t sigma = (rho % mod_t1 + mod_t1 - step) % mod_t1;

    // Postconditions checked per call, never trusted.
    if (sigma % mod_t != rho % mod_t || eval_poly_mod(f, sigma, mod_t1) != 0)
        throw std::logic_error("hensel_lift_root: postcondition violated");
    return sigma;
}

}  // namespace ringcode
