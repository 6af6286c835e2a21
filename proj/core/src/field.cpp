#include "ips/field.hpp"

#include <algorithm>
#include <numeric>

namespace ips {
namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> fs;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// Dense polynomial over F_p, constant term first, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

void ptrim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& mod, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p;
    }
    // mod is monic of degree r
    std::size_t r = mod.size() - 1;
    for (std::size_t d = prod.size(); d-- > r;) {
        std::uint32_t c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (std::size_t j = 0; j < r; ++j) {
            std::uint64_t t = std::uint64_t(c) * mod[j] % p;
            prod[d - r + j] = (prod[d - r + j] + p - t) % p;
        }
    }
    prod.resize(r);
    ptrim(prod);
    return prod;
}

Poly ppowmod(Poly base, std::uint64_t e, const Poly& mod, std::uint32_t p) {
    Poly acc{1};
    while (e) {
        if (e & 1) acc = pmulmod(acc, base, mod, p);
        base = pmulmod(base, base, mod, p);
        e >>= 1;
    }
    return acc;
}

Poly pgcd(Poly a, Poly b, std::uint32_t p) {
    auto inv_mod_p = [p](std::uint32_t x) {
        std::uint32_t r = 1, e = p - 2, b = x;
        while (e) {
            if (e & 1) r = std::uint64_t(r) * b % p;
            b = std::uint64_t(b) * b % p;
            e >>= 1;
        }
        return r;
    };
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // a mod b
        std::uint32_t lead_inv = inv_mod_p(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            std::uint32_t c = std::uint64_t(a.back()) * lead_inv % p;
            std::size_t off = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t t = std::uint64_t(c) * b[j] % p;
                a[off + j] = (a[off + j] + p - t) % p;
            }
            ptrim(a);
        }
        std::swap(a, b);
    }
    return a;
}

// x^(p^k) mod f via k successive p-th powers.
Poly frobenius_power(const Poly& f, std::uint32_t p, std::uint32_t k) {
    Poly x{0, 1};
    Poly acc = x;
    for (std::uint32_t i = 0; i < k; ++i) acc = ppowmod(acc, p, f, p);
    return acc;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    std::uint32_t r = f.size() - 1;
    if (r == 1) return true;
    Poly x{0, 1};
    // x^(p^r) == x mod f
    Poly xq = frobenius_power(f, p, r);
    Poly diff = xq;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    ptrim(diff);
    if (!diff.empty()) return false;
    for (std::uint32_t t : prime_factors(r)) {
        Poly xe = frobenius_power(f, p, r / t);
        Poly d = xe;
        d.resize(std::max<std::size_t>(d.size(), 2), 0);
        d[1] = (d[1] + p - 1) % p;
        ptrim(d);
        Poly g = pgcd(f, d, p);
        if (g.size() != 1) return false;
    }
    return true;
}

} // namespace

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t r) : p_(p), r_(r) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (r < 1) throw std::invalid_argument("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
        q *= p;
        if (q > kMaxQ) throw std::invalid_argument("q exceeds supported bound");
    }
    q_ = static_cast<std::uint32_t>(q);

    pow_p_.resize(r_ + 1);
    pow_p_[0] = 1;
    for (std::uint32_t i = 1; i <= r_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;

    // Smallest-code monic irreducible of degree r.
    modulus_.assign(r_ + 1, 0);
    modulus_[r_] = 1;
    if (r_ == 1) {
        // modulus x; elements are plain residues
    } else {
        bool found = false;
        for (std::uint32_t code = 0; code < q_; ++code) {
            Poly f(r_ + 1, 0);
            std::uint32_t c = code;
            for (std::uint32_t i = 0; i < r_; ++i) {
                f[i] = c % p_;
                c /= p_;
            }
            f[r_] = 1;
            if (is_irreducible(f, p_)) {
                modulus_.assign(f.begin(), f.end());
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("no irreducible polynomial found");
    }

    build_tables();
}

Fe FieldCtx::from_int(std::int64_t n) const {
    std::int64_t m = n % static_cast<std::int64_t>(p_);
    if (m < 0) m += p_;
    return static_cast<Fe>(m);
}

Fe FieldCtx::add(Fe a, Fe b) const {
    Fe out = 0;
    for (std::uint32_t i = 0; i < r_; ++i) {
        std::uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        std::uint32_t d = da + db;
        if (d >= p_) d -= p_;
        out += d * pow_p_[i];
    }
    return out;
}

Fe FieldCtx::neg(Fe a) const {
    Fe out = 0;
    for (std::uint32_t i = 0; i < r_; ++i) {
        std::uint32_t d = a % p_;
        a /= p_;
        if (d) d = p_ - d;
        out += d * pow_p_[i];
    }
    return out;
}

Fe FieldCtx::pow(Fe a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    std::uint64_t le = std::uint64_t(log_[a]) * (e % (q_ - 1)) % (q_ - 1);
    return exp_[le];
}

Fe FieldCtx::frob(Fe a, std::uint32_t k) const {
    if (a == 0) return 0;
    std::uint64_t pk = 1;
    for (std::uint32_t i = 0; i < k % r_; ++i) pk = pk * p_ % (q_ - 1);
    return exp_[std::uint64_t(log_[a]) * pk % (q_ - 1)];
}

void FieldCtx::build_tables() {
    // Multiplication by a fixed element as a map on codes, computed from the
    // polynomial representation. Used only while bootstrapping exp/log.
    auto poly_of = [this](Fe code) {
        Poly f(r_, 0);
        for (std::uint32_t i = 0; i < r_; ++i) {
            f[i] = code % p_;
            code /= p_;
        }
        ptrim(f);
        return f;
    };
    auto code_of = [this](const Poly& f) {
        Fe c = 0;
        for (std::size_t i = 0; i < f.size(); ++i) c += f[i] * pow_p_[i];
        return c;
    };
    Poly mod(modulus_.begin(), modulus_.end());

    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    std::vector<std::uint32_t> fs = prime_factors(q_ - 1);
    bool have_gen = false;
    for (Fe g = 1; g < q_ && !have_gen; ++g) {
        Poly gp = poly_of(g);
        Poly acc{1};
        bool primitive = true;
        for (std::uint32_t i = 0; i + 1 < q_; ++i) {
            Fe c = code_of(acc);
            if (c == 1 && i > 0) {
                primitive = false; // order i < q-1
                break;
            }
            exp_[i] = c;
            acc = pmulmod(acc, gp, mod, p_);
        }
        if (primitive && code_of(acc) == 1) have_gen = true;
    }
    if (!have_gen) throw std::logic_error("no primitive element found");
    for (std::uint32_t i = 0; i + 1 < q_; ++i) log_[exp_[i]] = i;

    square_.assign(q_, 0);
    for (Fe x = 0; x < q_; ++x) square_[mul(x, x)] = 1;
    square_count_ = std::accumulate(square_.begin(), square_.end(), std::size_t{0});
    if (p_ != 2 && square_count_ != (q_ + 1) / 2)
        throw std::logic_error("square table has wrong cardinality");
    if (p_ == 2 && square_count_ != q_)
        throw std::logic_error("square table must cover all of F_q in characteristic 2");

    if (q_ % 4 == 1) {
        Fe minus1 = neg(1);
        for (Fe a = 0; a < q_; ++a) {
            if (mul(a, a) == minus1) {
                omega_ = a;
                break;
            }
        }
        if (!omega_) throw std::logic_error("q = 1 mod 4 but no square root of -1");
    }
}

Gauss gpow(const FieldCtx& F, Gauss a, std::uint64_t e) {
    Gauss acc{1, 0};
    while (e) {
        if (e & 1) acc = gmul(F, acc, a);
        a = gmul(F, a, a);
        e >>= 1;
    }
    return acc;
}

UnitCircle unit_circle(const FieldCtx& F) {
    if (F.even()) throw std::invalid_argument("unit circle requires odd q");
    std::vector<Gauss> members;
    for (Fe x = 0; x < F.q(); ++x)
        for (Fe y = 0; y < F.q(); ++y)
            if (gnorm(F, {x, y}) == 1) members.push_back({x, y});

    std::size_t n = members.size();
    std::size_t expected = F.q_mod4() == 1 ? F.q() - 1 : F.q() + 1;
    if (n != expected) throw std::logic_error("unit circle has unexpected order");

    // Smallest-code generator; order computed by stepping powers.
    std::sort(members.begin(), members.end(), [&](Gauss a, Gauss b) {
        return gauss_code(F, a) < gauss_code(F, b);
    });
    for (Gauss z : members) {
        std::vector<Gauss> powers;
        Gauss w = z;
        powers.push_back({1, 0});
        while (!(w.re == 1 && w.im == 0)) {
            powers.push_back(w);
            w = gmul(F, w, z);
            if (powers.size() > n) throw std::logic_error("element order exceeds group order");
        }
        if (powers.size() == n) return {std::move(powers), z};
    }
    throw std::logic_error("unit circle is not cyclic");
}

Gauss rho(const FieldCtx& F, Fe t) {
    if (F.q_mod4() != 1) throw std::invalid_argument("rho requires q = 1 mod 4");
    if (t == 0) throw std::invalid_argument("rho is undefined at t = 0");
    Fe t2 = F.sq(t);
    Fe twot = F.add(t, t);
    Fe re = F.div(F.add(1, t2), twot);
    Fe im = F.mul(*F.omega(), F.div(F.sub(1, t2), twot));
    return {re, im};
}

} // namespace ips
