#include "ringcode/monomial_ring.hpp"

#include <stdexcept>

namespace ringcode {

std::string to_string(RingFamily f) {
    switch (f) {
        case RingFamily::Fq: return "Fq";
        case RingFamily::R: return "R";
        case RingFamily::S: return "S";
        case RingFamily::T: return "T";
    }
    return "?";
}

RingSpec::RingSpec(RingFamily family, std::uint32_t i, std::uint32_t j, FqPtr field)
    : family_(family), i_(i), j_(j), field_(std::move(field)) {
    if (!field_) throw std::invalid_argument("RingSpec: null field");
    switch (family_) {
        case RingFamily::Fq:
            dim_ = 1;
            break;
        case RingFamily::R:
            if (i_ < 1) throw std::invalid_argument("RingSpec: R needs i >= 1");
            dim_ = i_;
            break;
        case RingFamily::S:
            if (i_ < 1) throw std::invalid_argument("RingSpec: S needs i >= 1");
            if (i_ > 16) throw cap_error("RingSpec: S with i > 16 exceeds the basis cap 2^16");
            dim_ = std::uint32_t{1} << i_;
            break;
        case RingFamily::T:
            if (i_ < 1 || j_ < 1) throw std::invalid_argument("RingSpec: T needs i, j >= 1");
            if (std::uint64_t{i_} * j_ > (std::uint64_t{1} << 16))
                throw cap_error("RingSpec: T with i*j > 2^16 exceeds the basis cap");
            dim_ = i_ * j_;
            break;
    }
}

RingSpec RingSpec::field_ring(FqPtr field) { return RingSpec(RingFamily::Fq, 1, 1, std::move(field)); }

RingSpec RingSpec::make(RingFamily family, std::uint32_t i, std::uint32_t j, FqPtr field) {
    return RingSpec(family, i, j, std::move(field));
}

std::uint32_t RingSpec::mono_mul(std::uint32_t a, std::uint32_t b) const {
    switch (family_) {
        case RingFamily::Fq:
            return 0;
        case RingFamily::R:
            return a + b < i_ ? a + b : dim_;
        case RingFamily::S:
            return (a & b) ? dim_ : (a | b);
        case RingFamily::T: {
            const std::uint32_t ua = a / j_ + b / j_;
            const std::uint32_t vb = a % j_ + b % j_;
            return (ua < i_ && vb < j_) ? ua * j_ + vb : dim_;
        }
    }
    return dim_;
}

std::string RingSpec::mono_name(std::uint32_t idx) const {
    if (idx == 0) return "1";
    switch (family_) {
        case RingFamily::Fq:
            return "1";
        case RingFamily::R:
            return idx == 1 ? "u" : "u^" + std::to_string(idx);
        case RingFamily::S: {
            std::string out;
            for (std::uint32_t k = 0; k < i_; ++k) {
                if (idx & (std::uint32_t{1} << k)) {
                    if (!out.empty()) out += "*";
                    out += "u" + std::to_string(k + 1);
                }
            }
            return out;
        }
        case RingFamily::T: {
            const std::uint32_t a = idx / j_, b = idx % j_;
            std::string out;
            if (a > 0) out += a == 1 ? "u" : "u^" + std::to_string(a);
            if (b > 0) {
                if (!out.empty()) out += "*";
                out += b == 1 ? "v" : "v^" + std::to_string(b);
            }
            return out;
        }
    }
    return "?";
}

RingElem RingSpec::one() const {
    RingElem e(dim_, 0);
    e[0] = field_->one();
    return e;
}

RingElem RingSpec::from_mono(std::uint32_t idx) const {
    if (idx >= dim_) throw std::invalid_argument("RingSpec::from_mono: index out of range");
    RingElem e(dim_, 0);
    e[idx] = field_->one();
    return e;
}

bool RingSpec::is_zero(const RingElem& a) const {
    for (fq_t c : a)
        if (c != 0) return false;
    return true;
}

RingElem RingSpec::add(const RingElem& a, const RingElem& b) const {
    RingElem out(dim_, 0);
    for (std::uint32_t k = 0; k < dim_; ++k) out[k] = field_->add(a[k], b[k]);
    return out;
}

RingElem RingSpec::sub(const RingElem& a, const RingElem& b) const {
    RingElem out(dim_, 0);
    for (std::uint32_t k = 0; k < dim_; ++k) out[k] = field_->sub(a[k], b[k]);
    return out;
}

RingElem RingSpec::neg(const RingElem& a) const {
    RingElem out(dim_, 0);
    for (std::uint32_t k = 0; k < dim_; ++k) out[k] = field_->neg(a[k]);
    return out;
}

RingElem RingSpec::mul(const RingElem& a, const RingElem& b) const {
    RingElem out(dim_, 0);
    for (std::uint32_t x = 0; x < dim_; ++x) {
        if (a[x] == 0) continue;
        for (std::uint32_t y = 0; y < dim_; ++y) {
            if (b[y] == 0) continue;
            const std::uint32_t m = mono_mul(x, y);
            if (m == dim_) continue;
            out[m] = field_->add(out[m], field_->mul(a[x], b[y]));
        }
    }
    return out;
}

RingElem RingSpec::scalar_mul(fq_t c, const RingElem& a) const {
    RingElem out(dim_, 0);
    for (std::uint32_t k = 0; k < dim_; ++k) out[k] = field_->mul(c, a[k]);
    return out;
}

RingElem RingSpec::pow(const RingElem& a, std::uint64_t e) const {
    RingElem result = one();
    RingElem base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

bool RingSpec::is_unit(const RingElem& a) const { return a[0] != 0; }

RingElem RingSpec::inverse(const RingElem& a) const {
    if (!is_unit(a)) throw std::domain_error("RingSpec::inverse: not a unit");
    const fq_t c_inv = field_->inv(a[0]);
    // a = c (1 + m) with m nilpotent.
    RingElem m = scalar_mul(c_inv, a);
    m[0] = 0;
    const RingElem neg_m = neg(m);
    RingElem acc = one();
    RingElem term = one();
    for (std::uint32_t k = 0; k <= dim_ + 1; ++k) {
        term = mul(term, neg_m);
        if (is_zero(term)) break;
        acc = add(acc, term);
    }
    if (!is_zero(term) && !is_zero(mul(term, neg_m)))
        throw std::logic_error("RingSpec::inverse: Neumann series did not terminate");
    RingElem result = scalar_mul(c_inv, acc);
    if (!is_zero(sub(mul(a, result), one())))
        throw std::logic_error("RingSpec::inverse: verification a * a^{-1} = 1 failed");
    return result;
}

std::optional<std::uint32_t> RingSpec::nilpotency_index(const RingElem& a) const {
    RingElem cur = a;
    for (std::uint32_t t = 1; t <= dim_ + 1; ++t) {
        if (is_zero(cur)) return t;
        cur = mul(cur, a);
    }
    return std::nullopt;
}

RingElem RingSpec::element_at(std::uint64_t idx) const {
    const std::uint64_t q = field_->q();
    RingElem e(dim_, 0);
    for (std::uint32_t k = 0; k < dim_ && idx != 0; ++k) {
        e[k] = static_cast<fq_t>(idx % q);
        idx /= q;
    }
    return e;
}

std::uint64_t RingSpec::index_of(const RingElem& a) const {
    const std::uint64_t q = field_->q();
    std::uint64_t idx = 0;
    std::uint64_t scale = 1;
    for (std::uint32_t k = 0; k < dim_; ++k) {
        idx += a[k] * scale;
        scale *= q;
    }
    return idx;
}

std::vector<RingElem> RingSpec::enumerate(const Caps& caps) const {
    const PrimePower count = size();
    if (!count.fits_u64() || count.value() > caps.max_enum)
        throw cap_error("RingSpec::enumerate: " + count.str() + " elements exceed the enumeration cap " +
                        std::to_string(caps.max_enum) + " (raise max_enum to override)");
    const std::uint64_t total = count.value();
    std::vector<RingElem> out;
    out.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) out.push_back(element_at(idx));
    return out;
}

std::string RingSpec::descriptor() const {
    switch (family_) {
        case RingFamily::Fq:
            return "Fq[p=" + std::to_string(field_->p()) + ",r=" + std::to_string(field_->r()) + "]";
        case RingFamily::R:
            return "R[i=" + std::to_string(i_) + ",q=" + std::to_string(field_->q()) + "]";
        case RingFamily::S:
            return "S[i=" + std::to_string(i_) + ",q=" + std::to_string(field_->q()) + "]";
        case RingFamily::T:
            return "T[i=" + std::to_string(i_) + ",j=" + std::to_string(j_) +
                   ",q=" + std::to_string(field_->q()) + "]";
    }
    return "?";
}

bool RingSpec::same(const RingSpec& other) const {
    return family_ == other.family_ && i_ == other.i_ &&
           (family_ != RingFamily::T || j_ == other.j_) && field_->same(*other.field_);
}

}  // namespace ringcode
