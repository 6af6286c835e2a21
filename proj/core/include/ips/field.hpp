#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ips {

// Element of F_q in the canonical integer encoding sum(c_i * p^i) over the
// coefficients of its polynomial representative. The encoding is a bijection
// onto [0, q) and gives the total order used whenever a tie must break.
using Fe = std::uint32_t;

// Full description of F_q, q = p^r: modulus, multiplication tables, the set
// of squares, and (for q = 1 mod 4) a fixed square root of -1.
//
// Determinism contract: the modulus is the monic irreducible of degree r
// with the smallest coefficient code, and every "fixed element" witness
// (omega, generators) is the smallest valid code. Two runs on any machine
// build the identical field model.
class FieldCtx {
public:
    static constexpr std::uint32_t kMaxQ = 1u << 16;

    FieldCtx(std::uint32_t p, std::uint32_t r);

    std::uint32_t p() const { return p_; }
    std::uint32_t r() const { return r_; }
    std::uint32_t q() const { return q_; }
    bool even() const { return p_ == 2; }
    // residue of q mod 4 (2 for even q)
    std::uint32_t q_mod4() const { return q_ % 4; }

    // Monic modulus as r+1 coefficients over F_p, constant term first.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Fe zero() const { return 0; }
    Fe one() const { return 1; }
    // Embeds an integer via its residue mod p.
    Fe from_int(std::int64_t n) const;

    Fe add(Fe a, Fe b) const;
    Fe neg(Fe a) const;
    Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }
    Fe mul(Fe a, Fe b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t e = log_[a] + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }
    Fe inv(Fe a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
    Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
    Fe sq(Fe a) const { return mul(a, a); }
    Fe pow(Fe a, std::uint64_t e) const;
    // x -> x^(p^k), the k-th Frobenius power
    Fe frob(Fe a, std::uint32_t k = 1) const;

    bool is_square(Fe a) const { return square_[a] != 0; }
    std::size_t square_count() const { return square_count_; }
    // Smallest element with omega^2 = -1; present exactly when q = 1 mod 4.
    std::optional<Fe> omega() const { return omega_; }

    // Smallest generator of the multiplicative group F_q*.
    Fe primitive_element() const { return exp_[1]; }

private:
    void build_tables();

    std::uint32_t p_, r_, q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<Fe> exp_, log_;
    std::vector<std::uint8_t> square_;
    std::size_t square_count_ = 0;
    std::optional<Fe> omega_;
    std::vector<std::uint32_t> pow_p_; // p^0..p^r
};

inline FieldCtx make_field(std::uint32_t p, std::uint32_t r) { return FieldCtx(p, r); }

// ---------------------------------------------------------------------------
// F_q[i], i^2 = -1. For q = 3 mod 4 this is the field F_{q^2}; for
// q = 1 mod 4 it is a ring with zero divisors on the two ideals
// F_q(omega + i) and F_q(omega - i).

struct Gauss {
    Fe re = 0, im = 0;
    friend bool operator==(const Gauss&, const Gauss&) = default;
};

inline Gauss gadd(const FieldCtx& F, Gauss a, Gauss b) {
    return {F.add(a.re, b.re), F.add(a.im, b.im)};
}
inline Gauss gsub(const FieldCtx& F, Gauss a, Gauss b) {
    return {F.sub(a.re, b.re), F.sub(a.im, b.im)};
}
inline Gauss gmul(const FieldCtx& F, Gauss a, Gauss b) {
    return {F.sub(F.mul(a.re, b.re), F.mul(a.im, b.im)),
            F.add(F.mul(a.re, b.im), F.mul(a.im, b.re))};
}
inline Gauss gconj(const FieldCtx& F, Gauss a) { return {a.re, F.neg(a.im)}; }
inline Gauss gscale(const FieldCtx& F, Fe s, Gauss a) {
    return {F.mul(s, a.re), F.mul(s, a.im)};
}

// N(z) = z * conj(z) = re^2 + im^2. Multiplicative: N(zw) = N(z)N(w).
inline Fe gnorm(const FieldCtx& F, Gauss a) {
    return F.add(F.sq(a.re), F.sq(a.im));
}

inline bool is_zero_divisor(const FieldCtx& F, Gauss a) {
    return !(a.re == 0 && a.im == 0) && gnorm(F, a) == 0;
}

Gauss gpow(const FieldCtx& F, Gauss a, std::uint64_t e);

// Canonical code of a Gauss element, re-major. Matches the Point encoding.
inline std::uint32_t gauss_code(const FieldCtx& F, Gauss a) {
    return a.re * F.q() + a.im;
}

// The unit circle N^{-1}(1), a cyclic group of order q-1 (q = 1 mod 4)
// or q+1 (q = 3 mod 4). `elements` lists generator powers z^0, z^1, ...;
// `generator` is the smallest-code generator.
struct UnitCircle {
    std::vector<Gauss> elements;
    Gauss generator;
    std::size_t order() const { return elements.size(); }
};

UnitCircle unit_circle(const FieldCtx& F);

// The parametrisation F_q* -> N^{-1}(1),
//   t -> (1+t^2)/(2t) + omega*(1-t^2)/(2t) * i,
// a group isomorphism; defined for q = 1 mod 4 and t != 0.
Gauss rho(const FieldCtx& F, Fe t);

} // namespace ips
