#include "ips/symmetry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ips {

Point aff_apply(const FieldCtx& F, const AffMap& m, Point p) {
    Fe x = F.frob(p.x, m.frob), y = F.frob(p.y, m.frob);
    return {F.add(F.add(F.mul(m.a[0], x), F.mul(m.a[1], y)), m.b[0]),
            F.add(F.add(F.mul(m.a[2], x), F.mul(m.a[3], y)), m.b[1])};
}

AffMap aff_compose(const FieldCtx& F, const AffMap& f, const AffMap& g) {
    AffMap out;
    out.frob = (f.frob + g.frob) % F.r();
    std::array<Fe, 4> ga;
    std::array<Fe, 2> gb;
    for (int i = 0; i < 4; ++i) ga[i] = F.frob(g.a[i], f.frob);
    for (int i = 0; i < 2; ++i) gb[i] = F.frob(g.b[i], f.frob);
    out.a = {F.add(F.mul(f.a[0], ga[0]), F.mul(f.a[1], ga[2])),
             F.add(F.mul(f.a[0], ga[1]), F.mul(f.a[1], ga[3])),
             F.add(F.mul(f.a[2], ga[0]), F.mul(f.a[3], ga[2])),
             F.add(F.mul(f.a[2], ga[1]), F.mul(f.a[3], ga[3]))};
    out.b = {F.add(F.add(F.mul(f.a[0], gb[0]), F.mul(f.a[1], gb[1])), f.b[0]),
             F.add(F.add(F.mul(f.a[2], gb[0]), F.mul(f.a[3], gb[1])), f.b[1])};
    return out;
}

AffMap aff_inverse(const FieldCtx& F, const AffMap& m) {
    Fe det = F.sub(F.mul(m.a[0], m.a[3]), F.mul(m.a[1], m.a[2]));
    if (det == 0) throw std::invalid_argument("singular affine map");
    Fe di = F.inv(det);
    std::array<Fe, 4> inv = {F.mul(m.a[3], di), F.neg(F.mul(m.a[1], di)),
                             F.neg(F.mul(m.a[2], di)), F.mul(m.a[0], di)};
    AffMap out;
    out.frob = (F.r() - m.frob % F.r()) % F.r();
    for (int i = 0; i < 4; ++i) out.a[i] = F.frob(inv[i], out.frob);
    Fe bx = F.frob(m.b[0], out.frob), by = F.frob(m.b[1], out.frob);
    out.b = {F.neg(F.add(F.mul(out.a[0], bx), F.mul(out.a[1], by))),
             F.neg(F.add(F.mul(out.a[2], bx), F.mul(out.a[3], by)))};
    return out;
}

AffMap aff_translation(Point shift) {
    AffMap m;
    m.b = {shift.x, shift.y};
    return m;
}

namespace {

bool is_translation(const AffMap& m) {
    return m.frob == 0 && m.a == std::array<Fe, 4>{1, 0, 0, 1};
}
bool fixes_origin(const AffMap& m) { return m.b == std::array<Fe, 2>{0, 0}; }

std::array<std::uint32_t, 5> linear_key(const AffMap& m) {
    return {m.frob, m.a[0], m.a[1], m.a[2], m.a[3]};
}

// Closure of origin-fixing maps under composition.
std::vector<AffMap> close_linear(const FieldCtx& F, std::vector<AffMap> gens,
                                 std::uint64_t cap) {
    std::set<std::array<std::uint32_t, 5>> seen;
    std::vector<AffMap> out;
    AffMap id;
    seen.insert(linear_key(id));
    out.push_back(id);
    for (auto& g : gens) {
        g.b = {0, 0};
        if (seen.insert(linear_key(g)).second) out.push_back(g);
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const AffMap& g : gens) {
            AffMap h = aff_compose(F, g, out[i]);
            if (seen.insert(linear_key(h)).second) {
                out.push_back(h);
                if (out.size() > cap) throw GroupCapExceeded("linear closure exceeds cap");
            }
        }
    }
    return out;
}

// Difference membership table: is the norm of the point with this code a
// square? Linear-semilinear maps preserve adjacency iff they preserve this
// set of codes.
std::vector<std::uint8_t> integral_difference_table(const FieldCtx& F) {
    std::uint32_t q = F.q();
    std::vector<std::uint8_t> s(std::size_t{q} * q);
    for (Fe x = 0; x < q; ++x)
        for (Fe y = 0; y < q; ++y) s[x * q + y] = F.is_square(F.add(F.sq(x), F.sq(y)));
    return s;
}

bool preserves_differences(const FieldCtx& F, const AffMap& m,
                           const std::vector<std::uint8_t>& table) {
    std::uint32_t q = F.q();
    for (Fe x = 0; x < q; ++x)
        for (Fe y = 0; y < q; ++y) {
            Point img = aff_apply(F, {m.frob, m.a, {0, 0}}, {x, y});
            if (table[x * q + y] != table[img.x * q + img.y]) return false;
        }
    return true;
}

// Exhaustive origin stabiliser of the integral difference set inside
// GammaL(2, q). Only needed for q in {5, 9}, where the generic generator
// list of h_generators is a proper subgroup.
std::vector<AffMap> stabiliser_by_search(const FieldCtx& F) {
    auto table = integral_difference_table(F);
    std::uint32_t q = F.q();
    std::vector<AffMap> found;
    for (std::uint32_t k = 0; k < F.r(); ++k)
        for (Fe a0 = 0; a0 < q; ++a0)
            for (Fe a1 = 0; a1 < q; ++a1)
                for (Fe a2 = 0; a2 < q; ++a2)
                    for (Fe a3 = 0; a3 < q; ++a3) {
                        if (F.sub(F.mul(a0, a3), F.mul(a1, a2)) == 0) continue;
                        AffMap m{k, {a0, a1, a2, a3}, {0, 0}};
                        if (preserves_differences(F, m, table)) found.push_back(m);
                    }
    return found;
}

} // namespace

std::vector<AffMap> h_generators(const FieldCtx& F) {
    if (F.even()) throw std::invalid_argument("automorphism generators need odd q");
    std::vector<AffMap> gens;

    // translations by a basis of F_q^2 over F_p
    for (std::uint32_t j = 0; j < F.r(); ++j) {
        Fe e = 1;
        for (std::uint32_t i = 0; i < j; ++i) e *= F.p();
        gens.push_back(aff_translation({e, 0}));
        gens.push_back(aff_translation({0, e}));
    }

    AffMap swap;
    swap.a = {0, 1, 1, 0};
    gens.push_back(swap);

    // ((a,b),(b,-a)) with a^2+b^2 a nonzero square; as a map on F_q[i] this
    // is conjugation followed by multiplication with a+bi.
    for (Fe a = 0; a < F.q(); ++a)
        for (Fe b = 0; b < F.q(); ++b) {
            Fe n = F.add(F.sq(a), F.sq(b));
            if (n != 0 && F.is_square(n))
                gens.push_back({0, {a, b, b, F.neg(a)}, {0, 0}});
        }

    if (F.r() > 1) {
        AffMap frob;
        frob.frob = 1;
        gens.push_back(frob);
    }

    // For q in {5, 9} the theorem-shaped generators close into a proper
    // subgroup of H; extend with searched stabiliser elements until the
    // closure carries the whole stabiliser.
    if (F.q() == 5 || F.q() == 9) {
        std::vector<AffMap> full = stabiliser_by_search(F);
        std::vector<AffMap> linear;
        for (const AffMap& g : gens)
            if (!is_translation(g)) linear.push_back(g);
        std::vector<AffMap> closed = close_linear(F, linear, 1 << 20);
        std::set<std::array<std::uint32_t, 5>> have;
        for (const AffMap& m : closed) have.insert(linear_key(m));
        for (const AffMap& m : full) {
            if (closed.size() == full.size()) break;
            if (!have.contains(linear_key(m))) {
                linear.push_back(m);
                gens.push_back(m);
                closed = close_linear(F, linear, 1 << 20);
                have.clear();
                for (const AffMap& c : closed) have.insert(linear_key(c));
            }
        }
        if (closed.size() != full.size())
            throw std::logic_error("stabiliser extension failed to close");
    }
    return gens;
}

namespace {

struct SplitClosure {
    std::vector<AffMap> linear; // origin-fixing elements, closed
    std::size_t translation_count = 0;
};

SplitClosure close_split(const FieldCtx& F, std::span<const AffMap> gens,
                         std::uint64_t cap) {
    std::vector<AffMap> lin;
    std::vector<PointCode> shifts;
    std::uint32_t q = F.q();
    for (const AffMap& g : gens) {
        if (is_translation(g)) {
            shifts.push_back(g.b[0] * q + g.b[1]);
        } else if (fixes_origin(g)) {
            lin.push_back(g);
        } else {
            throw std::invalid_argument(
                "close_group expects translations and origin-fixing generators");
        }
    }
    SplitClosure out;
    out.linear = close_linear(F, lin, cap);

    // additive closure of the shifts, kept invariant under the linear parts
    std::vector<std::uint8_t> in(std::size_t{q} * q, 0);
    std::vector<PointCode> queue;
    auto push = [&](PointCode c) {
        if (!in[c]) {
            in[c] = 1;
            queue.push_back(c);
        }
    };
    push(0);
    for (PointCode s : shifts) push(s);
    for (std::size_t i = 0; i < queue.size(); ++i) {
        Point p = point_at(F, queue[i]);
        for (std::size_t j = 0; j <= i; ++j) {
            Point r = point_at(F, queue[j]);
            push(point_code(F, {F.add(p.x, r.x), F.add(p.y, r.y)}));
        }
        for (const AffMap& g : lin) push(point_code(F, aff_apply(F, g, p)));
    }
    out.translation_count = queue.size();
    if (std::uint64_t(out.translation_count) * out.linear.size() > cap)
        throw GroupCapExceeded("group order exceeds cap");
    return out;
}

} // namespace

PermGroup::PermGroup(const FieldCtx& F, std::vector<std::uint32_t> stab0_flat)
    : field_(&F), q_(F.q()), n_(F.q() * F.q()) {
    if (stab0_flat.empty() || stab0_flat.size() % n_ != 0)
        throw std::invalid_argument("stabiliser permutations have wrong length");
    count_ = stab0_flat.size() / n_;
    flat_ = std::move(stab0_flat);
    for (std::size_t i = 0; i < count_; ++i)
        if (flat_[i * n_] != 0)
            throw std::invalid_argument("stabiliser permutation moves the origin");

    xof_.resize(n_);
    yof_.resize(n_);
    for (std::uint32_t c = 0; c < n_; ++c) {
        xof_[c] = c / q_;
        yof_[c] = c % q_;
    }
    fsub_.resize(std::size_t{q_} * q_);
    for (Fe a = 0; a < q_; ++a)
        for (Fe b = 0; b < q_; ++b) fsub_[a * q_ + b] = F.sub(a, b);
}

std::uint64_t PermGroup::order() const {
    return std::uint64_t(n_) * count_;
}

namespace {

std::vector<std::uint32_t> materialize(const FieldCtx& F, const AffMap& m) {
    std::uint32_t q = F.q();
    std::vector<std::uint32_t> perm(std::size_t{q} * q);
    for (std::uint32_t c = 0; c < perm.size(); ++c)
        perm[c] = point_code(F, aff_apply(F, m, point_at(F, c)));
    return perm;
}

} // namespace

PermGroup close_group(const FieldCtx& F, std::span<const AffMap> gens, std::uint64_t cap) {
    SplitClosure cl = close_split(F, gens, cap);
    std::uint32_t n = F.q() * F.q();
    if (cl.translation_count != n)
        throw std::logic_error("translation generators do not span the plane");
    std::vector<std::uint32_t> flat;
    flat.reserve(cl.linear.size() * n);
    for (const AffMap& m : cl.linear) {
        auto perm = materialize(F, m);
        flat.insert(flat.end(), perm.begin(), perm.end());
    }
    return PermGroup(F, std::move(flat));
}

std::uint64_t closed_group_order(const FieldCtx& F, std::span<const AffMap> gens,
                                 std::uint64_t cap) {
    SplitClosure cl = close_split(F, gens, cap);
    return std::uint64_t(cl.translation_count) * cl.linear.size();
}

PermGroup close_group_perms(const FieldCtx& F,
                            std::span<const std::vector<std::uint32_t>> gens,
                            std::uint64_t cap) {
    std::uint32_t n = F.q() * F.q();
    for (const auto& g : gens)
        if (g.size() != n) throw std::invalid_argument("permutation degree mismatch");

    auto compose = [n](const std::vector<std::uint32_t>& f,
                       const std::vector<std::uint32_t>& g) {
        std::vector<std::uint32_t> out(n);
        for (std::uint32_t i = 0; i < n; ++i) out[i] = f[g[i]];
        return out;
    };
    auto invert = [n](const std::vector<std::uint32_t>& f) {
        std::vector<std::uint32_t> out(n);
        for (std::uint32_t i = 0; i < n; ++i) out[f[i]] = i;
        return out;
    };

    // Orbit of the origin with a transversal.
    std::vector<std::vector<std::uint32_t>> transversal(n);
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<std::uint32_t> queue{0};
    std::vector<std::uint32_t> identity(n);
    for (std::uint32_t i = 0; i < n; ++i) identity[i] = i;
    transversal[0] = identity;
    seen[0] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        std::uint32_t x = queue[i];
        for (const auto& g : gens) {
            std::uint32_t y = g[x];
            if (!seen[y]) {
                seen[y] = 1;
                transversal[y] = compose(g, transversal[x]);
                queue.push_back(y);
            }
        }
    }
    if (queue.size() != n)
        throw std::logic_error("group is not transitive on the plane");

    // Schreier generators of the origin stabiliser, then their closure.
    std::set<std::vector<std::uint32_t>> stab_set;
    std::vector<std::vector<std::uint32_t>> stab_gens;
    for (std::uint32_t x = 0; x < n; ++x) {
        for (const auto& g : gens) {
            auto s = compose(invert(transversal[g[x]]), compose(g, transversal[x]));
            if (s[0] != 0) throw std::logic_error("Schreier generator moves the origin");
            if (stab_set.insert(s).second) stab_gens.push_back(s);
        }
    }
    std::set<std::vector<std::uint32_t>> closed(stab_set.begin(), stab_set.end());
    std::vector<std::vector<std::uint32_t>> order_list(stab_gens.begin(), stab_gens.end());
    if (!closed.contains(identity)) {
        closed.insert(identity);
        order_list.push_back(identity);
    }
    for (std::size_t i = 0; i < order_list.size(); ++i) {
        for (const auto& g : stab_gens) {
            auto h = compose(g, order_list[i]);
            if (closed.insert(h).second) {
                order_list.push_back(h);
                if (std::uint64_t(order_list.size()) * n > cap)
                    throw GroupCapExceeded("stabiliser closure exceeds cap");
            }
        }
    }

    // The PermGroup form needs every translation inside the group.
    std::uint32_t q = F.q();
    for (std::uint32_t basis : {std::uint32_t{1}, q}) {
        Point sh = point_at(F, basis);
        std::vector<std::uint32_t> tau(n);
        for (std::uint32_t c = 0; c < n; ++c) {
            Point p = point_at(F, c);
            tau[c] = point_code(F, {F.add(p.x, sh.x), F.add(p.y, sh.y)});
        }
        auto h = compose(invert(transversal[tau[0]]), tau);
        if (!closed.contains(h))
            throw std::logic_error("group does not contain the translations");
    }

    std::vector<std::uint32_t> flat;
    flat.reserve(order_list.size() * n);
    for (const auto& pm : order_list) flat.insert(flat.end(), pm.begin(), pm.end());
    return PermGroup(F, std::move(flat));
}

// ---------------------------------------------------------------------------
// canonical forms

namespace {

// One pass over all (stabiliser element, anchor) candidates. Calls sink
// with each candidate's sorted code sequence.
template <class Sink>
void scan_candidates(const PermGroup& G, std::span<const std::uint32_t> codes, Sink&& sink) {
    std::size_t n = codes.size();
    std::vector<std::uint32_t> img(n), cand(n);
    for (std::size_t hi = 0; hi < G.stab0_count(); ++hi) {
        auto perm = G.stab0(hi);
        for (std::size_t i = 0; i < n; ++i) img[i] = perm[codes[i]];
        for (std::size_t ui = 0; ui < n; ++ui) {
            for (std::size_t i = 0; i < n; ++i) cand[i] = G.code_sub(img[i], img[ui]);
            std::sort(cand.begin(), cand.end());
            if (!sink(hi, img[ui], cand)) return;
        }
    }
}

} // namespace

CanonicalForm canonical_form(const PermGroup& G, const PointSet& P) {
    const auto& codes = P.codes();
    if (codes.empty()) return {};
    CanonicalForm best;
    scan_candidates(G, codes, [&](std::size_t, std::uint32_t, const std::vector<std::uint32_t>& cand) {
        if (best.codes.empty() || cand < best.codes) best.codes = cand;
        return true;
    });
    return best;
}

bool is_canonical_rep(const PermGroup& G, std::span<const std::uint32_t> codes) {
    if (codes.empty()) return true;
    if (codes.front() != 0) return false;
    bool canonical = true;
    scan_candidates(G, codes, [&](std::size_t, std::uint32_t, const std::vector<std::uint32_t>& cand) {
        if (std::lexicographical_compare(cand.begin(), cand.end(), codes.begin(), codes.end())) {
            canonical = false;
            return false;
        }
        return true;
    });
    return canonical;
}

std::uint64_t aut_order_of_set(const PermGroup& G, const PointSet& P) {
    const auto& codes = P.codes();
    if (codes.empty()) return G.order();
    std::vector<std::uint32_t> target(codes.size());
    for (std::size_t i = 0; i < codes.size(); ++i)
        target[i] = G.code_sub(codes[i], codes[0]);
    std::sort(target.begin(), target.end());
    std::uint64_t count = 0;
    scan_candidates(G, codes, [&](std::size_t, std::uint32_t, const std::vector<std::uint32_t>& cand) {
        if (cand == target) ++count;
        return true;
    });
    return count;
}

AffMap normalize_pair(const FieldCtx& F, Point p1, Point p2) {
    if (p1 == p2) throw std::invalid_argument("normalize_pair needs two distinct points");
    Fe d = sqdist(F, p1, p2);
    if (!F.is_square(d)) throw std::invalid_argument("pair is not at integral distance");
    Point target = d == 0 ? Point{1, *F.omega()} : Point{1, 0};
    Point v{F.sub(p2.x, p1.x), F.sub(p2.y, p1.y)};

    std::vector<AffMap> lin;
    for (const AffMap& g : h_generators(F))
        if (!is_translation(g)) lin.push_back(g);
    for (const AffMap& m : close_linear(F, lin, 1 << 24)) {
        if (aff_apply(F, m, v) == target)
            return aff_compose(F, m, aff_translation({F.neg(p1.x), F.neg(p1.y)}));
    }
    throw std::logic_error("no normalising automorphism found");
}

// ---------------------------------------------------------------------------
// classification group

namespace {

// Frobenius on one ring coordinate of F_q[i] = F_q x F_q (q = 1 mod 4):
// (u, v) -> (u^p, v) in the coordinates u = x + wy, v = x - wy. Additive,
// adjacency preserving, not norm-semilinear; the [G : H] = r factor.
std::vector<std::uint32_t> coordinate_frobenius_perm(const FieldCtx& F) {
    Fe w = *F.omega();
    Fe inv2 = F.inv(F.from_int(2));
    Fe inv2w = F.inv(F.mul(F.from_int(2), w));
    std::uint32_t q = F.q();
    std::vector<std::uint32_t> perm(std::size_t{q} * q);
    for (Fe x = 0; x < q; ++x)
        for (Fe y = 0; y < q; ++y) {
            Fe u = F.add(x, F.mul(w, y));
            Fe v = F.sub(x, F.mul(w, y));
            Fe up = F.frob(u);
            Fe nx = F.mul(F.add(up, v), inv2);
            Fe ny = F.mul(F.sub(up, v), inv2w);
            perm[x * q + y] = nx * q + ny;
        }
    return perm;
}

// Closure of origin-fixing code permutations under composition.
PermGroup close_stab0_perms(const FieldCtx& F,
                            const std::vector<std::vector<std::uint32_t>>& gens,
                            std::uint64_t cap = 1 << 22) {
    std::uint32_t n = F.q() * F.q();
    auto compose = [n](const std::vector<std::uint32_t>& f,
                       const std::vector<std::uint32_t>& g) {
        std::vector<std::uint32_t> out(n);
        for (std::uint32_t i = 0; i < n; ++i) out[i] = f[g[i]];
        return out;
    };
    std::vector<std::uint32_t> identity(n);
    for (std::uint32_t i = 0; i < n; ++i) identity[i] = i;
    std::set<std::vector<std::uint32_t>> closed{identity};
    std::vector<std::vector<std::uint32_t>> order_list{identity};
    for (const auto& g : gens)
        if (closed.insert(g).second) order_list.push_back(g);
    for (std::size_t i = 0; i < order_list.size(); ++i)
        for (const auto& g : gens) {
            auto h = compose(g, order_list[i]);
            if (closed.insert(h).second) {
                order_list.push_back(h);
                if (order_list.size() > cap)
                    throw GroupCapExceeded("stabiliser closure exceeds cap");
            }
        }
    std::vector<std::uint32_t> flat;
    flat.reserve(order_list.size() * n);
    for (const auto& pm : order_list) flat.insert(flat.end(), pm.begin(), pm.end());
    return PermGroup(F, std::move(flat));
}

} // namespace

std::uint64_t expected_aut_order(const FieldCtx& F) {
    std::uint64_t q = F.q(), r = F.r();
    if (q == 5) return 28800;
    if (q == 9) return 186624;
    if (F.q_mod4() == 1) return q * q * (q - 1) * (q - 1) * r * r;
    // q = 3 mod 4: the graph is Paley(q^2), whose automorphisms are the
    // semilinear similarities of F_{q^2}; all of them preserve F_q-lines,
    // so the group coincides with H of order q^2 (q^2 - 1) r.
    return q * q * (q * q - 1) * r;
}

PermGroup classification_group(const FieldCtx& F, const IntegralGraph& g) {
    if (F.even()) throw std::invalid_argument("classification group needs odd q");
    std::uint32_t q = F.q();
    PermGroup group = [&]() {
        if (q == 5 || q == 9) {
            GraphAutomorphisms aut = graph_automorphisms(g.rows());
            return close_group_perms(F, aut.generators);
        }
        auto gens = h_generators(F);
        if (F.q_mod4() == 1 && F.r() > 1) {
            std::vector<std::vector<std::uint32_t>> perm_gens;
            for (const AffMap& m : gens)
                if (!is_translation(m)) perm_gens.push_back(materialize(F, m));
            perm_gens.push_back(coordinate_frobenius_perm(F));
            return close_stab0_perms(F, perm_gens);
        }
        return close_group(F, gens);
    }();
    if (group.order() != expected_aut_order(F))
        throw std::logic_error("classification group has unexpected order");
    return group;
}

std::uint64_t graph_aut_order(const IntegralGraph& g, IrOptions opt) {
    if (g.vertex_count() > opt.max_vertices)
        throw std::invalid_argument("graph too large for the IR engine");
    return graph_automorphisms(g.rows()).order;
}

} // namespace ips
