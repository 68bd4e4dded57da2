#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/common.hpp"
#include "ringlab/finite_ring.hpp"
#include "ringlab/group_table.hpp"
#include "ringlab/unit_analysis.hpp"

namespace ringlab {

// An element a + b*s of the integral group ring of the order-2 group.
struct Zc2 {
    BigInt a, b;

    Zc2() : a(0), b(0) {}
    Zc2(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {}

    bool operator==(const Zc2& o) const { return a == o.a && b == o.b; }

    Zc2 operator+(const Zc2& o) const { return {a + o.a, b + o.b}; }
    Zc2 operator*(const Zc2& o) const { return {a * o.a + b * o.b, a * o.b + b * o.a}; }
    Zc2 operator-() const { return {-a, -b}; }
};

// a + b*s is invertible exactly when both evaluations at s = 1 and s = -1
// are +-1, i.e. (a, b) is one of (+-1, 0), (0, +-1).
inline bool zc2_is_unit(const BigInt& a, const BigInt& b) {
    const BigInt sum = a + b, diff = a - b;
    return (sum == 1 || sum == -1) && (diff == 1 || diff == -1);
}

// Evaluation at s = 1 and s = -1 followed by reduction mod k.
inline std::pair<std::uint64_t, std::uint64_t> gamma_maps(std::uint64_t k, const BigInt& a,
                                                          const BigInt& b) {
    if (k < 1) throw Error("gamma_maps: k must be positive");
    const BigInt kk = k;
    auto mod = [&](BigInt v) {
        v %= kk;
        if (v < 0) v += kk;
        return std::uint64_t(v);
    };
    return {mod(a + b), mod(a - b)};
}

// Element (t, u) of the ring Z_k (+) Z[C2] whose product twists the first
// component through the two evaluation maps.
struct GammaElement {
    std::uint64_t t = 0;  // residue mod k
    Zc2 u;

    bool operator==(const GammaElement& o) const { return t == o.t && u == o.u; }
};

inline GammaElement gamma_add(std::uint64_t k, const GammaElement& x, const GammaElement& y) {
    return {(x.t + y.t) % k, x.u + y.u};
}

// (t, u)(t', v) = (t*D(v) + t'*S(u), u*v)
inline GammaElement gamma_mul(std::uint64_t k, const GammaElement& x, const GammaElement& y) {
    if (k < 1) throw Error("gamma_mul: k must be positive");
    const std::uint64_t s_u = gamma_maps(k, x.u.a, x.u.b).first;
    const std::uint64_t d_v = gamma_maps(k, y.u.a, y.u.b).second;
    const std::uint64_t t = (x.t % k * d_v + y.t % k * s_u) % k;
    return {t, x.u * y.u};
}

inline GammaElement gamma_one() { return {0, Zc2{1, 0}}; }

// The unit group of the ring above has exactly 4k elements: second
// components must be the four units of Z[C2]. Builds the table over the
// candidates {(t, +-1), (t, +-s)}, verifying closure and inverses, and
// classifies the result (dihedral of order 4k when k is odd).
inline UnitGroupReport gamma_unit_group(std::uint64_t k, std::uint64_t budget = kDefaultBudget) {
    if (k < 1) throw Error("gamma_unit_group: k must be positive");
    if (4 * k > budget) throw BudgetError("gamma_unit_group: enumeration budget exceeded");
    const std::array<Zc2, 4> zc2_units{Zc2{1, 0}, Zc2{-1, 0}, Zc2{0, 1}, Zc2{0, -1}};
    const std::array<std::string, 4> unit_names{"1", "-1", "s", "-s"};
    const std::uint32_t m = std::uint32_t(4 * k);
    std::vector<GammaElement> elems(m);
    std::vector<std::string> labels(m);
    for (std::uint64_t t = 0; t < k; ++t) {
        for (std::uint32_t j = 0; j < 4; ++j) {
            elems[t * 4 + j] = GammaElement{t, zc2_units[j]};
            labels[t * 4 + j] = "(" + std::to_string(t) + ", " + unit_names[j] + ")";
        }
    }
    auto index_of = [&](const GammaElement& e) -> std::uint32_t {
        for (std::uint32_t j = 0; j < 4; ++j) {
            if (e.u == zc2_units[j]) return std::uint32_t(e.t * 4 + j);
        }
        throw Error("gamma_unit_group: unit candidate set is not closed under multiplication");
    };
    UnitGroupReport rep;
    rep.group.order = m;
    rep.group.mul.resize(std::size_t(m) * m);
    for (std::uint32_t i = 0; i < m; ++i) {
        for (std::uint32_t j = 0; j < m; ++j) {
            rep.group.mul[std::size_t(i) * m + j] = index_of(gamma_mul(k, elems[i], elems[j]));
        }
    }
    rep.group.identity = index_of(gamma_one());
    rep.group.labels = std::move(labels);
    for (std::uint32_t i = 0; i < m; ++i) {
        bool has_inverse = false;
        for (std::uint32_t j = 0; j < m; ++j) {
            if (rep.group.at(i, j) == rep.group.identity &&
                rep.group.at(j, i) == rep.group.identity) {
                has_inverse = true;
                break;
            }
        }
        if (!has_inverse) throw Error("gamma_unit_group: candidate without inverse");
    }
    rep.unit_indices.resize(m);
    for (std::uint32_t i = 0; i < m; ++i) rep.unit_indices[i] = i;
    rep.structure = classify_group(rep.group);
    return rep;
}

// Finite semidirect-style ring on B (+) A from two ring homomorphisms
// f, g : A -> Z(B), with product (b, a)(b', a') = (b f(a') + b' g(a), a a').
struct SemidirectSpec {
    RingPtr A;
    RingPtr B;
    std::vector<std::uint32_t> f;  // element index map A -> B
    std::vector<std::uint32_t> g;
};

inline void validate_semidirect_spec(const SemidirectSpec& spec) {
    const FiniteRing& A = *spec.A;
    const FiniteRing& B = *spec.B;
    if (spec.f.size() != A.order() || spec.g.size() != A.order()) {
        throw Error("semidirect spec: map size mismatch");
    }
    for (const auto* map : {&spec.f, &spec.g}) {
        const auto& h = *map;
        if (h[A.one()] != B.one()) throw Error("semidirect spec: map does not send 1 to 1");
        for (std::uint32_t x = 0; x < A.order(); ++x) {
            for (std::uint32_t y = 0; y < A.order(); ++y) {
                if (h[A.add(x, y)] != B.add(h[x], h[y])) {
                    throw Error("semidirect spec: map is not additive");
                }
                if (h[A.mul(x, y)] != B.mul(h[x], h[y])) {
                    throw Error("semidirect spec: map is not multiplicative");
                }
            }
            for (std::uint32_t b = 0; b < B.order(); ++b) {
                if (B.mul(h[x], b) != B.mul(b, h[x])) {
                    throw Error("semidirect spec: image is not central in B");
                }
            }
        }
    }
}

class SemidirectRing final : public FiniteRing {
public:
    explicit SemidirectRing(SemidirectSpec spec)
        : FiniteRing(spec.B->order() * spec.A->order(), 0, 0,
                     "Semidirect(" + spec.B->structure_tag() + ", " + spec.A->structure_tag() +
                         ")"),
          spec_(std::move(spec)),
          na_(std::uint32_t(spec_.A->order())) {
        zero_ = pack(spec_.B->zero(), spec_.A->zero());
        one_ = pack(spec_.B->zero(), spec_.A->one());
    }

    std::uint32_t pack(std::uint32_t b, std::uint32_t a) const { return b * na_ + a; }
    std::uint32_t a_part(std::uint32_t x) const { return x % na_; }
    std::uint32_t b_part(std::uint32_t x) const { return x / na_; }

    std::string label(std::uint32_t x) const override {
        return "(" + spec_.B->label(b_part(x)) + ", " + spec_.A->label(a_part(x)) + ")";
    }

protected:
    std::uint32_t do_add(std::uint32_t x, std::uint32_t y) const override {
        return pack(spec_.B->add(b_part(x), b_part(y)), spec_.A->add(a_part(x), a_part(y)));
    }

    std::uint32_t do_mul(std::uint32_t x, std::uint32_t y) const override {
        const std::uint32_t bx = b_part(x), ax = a_part(x);
        const std::uint32_t by = b_part(y), ay = a_part(y);
        const std::uint32_t b =
            spec_.B->add(spec_.B->mul(bx, spec_.f[ay]), spec_.B->mul(by, spec_.g[ax]));
        return pack(b, spec_.A->mul(ax, ay));
    }

    std::uint32_t do_neg(std::uint32_t x) const override {
        return pack(spec_.B->neg(b_part(x)), spec_.A->neg(a_part(x)));
    }

private:
    SemidirectSpec spec_;
    std::uint32_t na_;
};

inline RingPtr semidirect_ring(const SemidirectSpec& spec, std::uint64_t budget = kDefaultBudget) {
    validate_semidirect_spec(spec);
    checked_mul(spec.A->order(), spec.B->order(), budget, "semidirect_ring");
    return std::make_shared<SemidirectRing>(spec);
}

// Structure of the unit group of the semidirect ring: (B, 1) is a normal
// subgroup, (0, A^x) a complement, their product is everything, and
// conjugation by (0, a) acts on (b, 1) as b -> g(a) f(a^-1) b.
inline bool semidirect_unit_check(const SemidirectSpec& spec,
                                  std::uint64_t budget = kDefaultBudget) {
    auto ring = semidirect_ring(spec, budget);
    const auto* t = dynamic_cast<const SemidirectRing*>(ring.get());
    const FiniteRing& A = *spec.A;
    const FiniteRing& B = *spec.B;
    const auto units = unit_set(*ring);
    const auto a_units = unit_set(A);
    if (units.size() != B.order() * a_units.size()) return false;
    std::vector<bool> is_unit(ring->order(), false);
    for (auto u : units) is_unit[u] = true;
    // (b, 1) are units and form a normal subgroup
    std::vector<bool> in_bprime(ring->order(), false);
    for (std::uint32_t b = 0; b < B.order(); ++b) {
        const std::uint32_t x = t->pack(b, A.one());
        if (!is_unit[x]) return false;
        in_bprime[x] = true;
    }
    std::vector<bool> a_unit_flag(A.order(), false);
    for (auto a : a_units) {
        a_unit_flag[a] = true;
        if (!is_unit[t->pack(B.zero(), a)]) return false;
    }
    // every unit has a unit A-part, so the product set (B,1)(0,A^x) is all
    // of the unit group and the intersection is {(0,1)}
    for (auto u : units) {
        if (!a_unit_flag[t->a_part(u)]) return false;
    }
    auto a_inverse = [&](std::uint32_t a) -> std::uint32_t {
        for (auto v : a_units) {
            if (A.mul(a, v) == A.one() && A.mul(v, a) == A.one()) return v;
        }
        throw Error("semidirect_unit_check: missing inverse in A");
    };
    for (auto a : a_units) {
        const std::uint32_t ainv = a_inverse(a);
        const std::uint32_t ua = t->pack(B.zero(), a);
        const std::uint32_t ua_inv = t->pack(B.zero(), ainv);
        const std::uint32_t twist = B.mul(spec.g[a], spec.f[ainv]);
        for (std::uint32_t b = 0; b < B.order(); ++b) {
            const std::uint32_t conj = ring->mul(ring->mul(ua, t->pack(b, A.one())), ua_inv);
            if (!in_bprime[conj]) return false;
            if (t->b_part(conj) != B.mul(twist, b)) return false;
        }
    }
    // the stated inverse law: (b, a)^-1 = (-b g(a^-1) f(a^-1), a^-1)
    for (auto u : units) {
        const std::uint32_t a = t->a_part(u), b = t->b_part(u);
        const std::uint32_t ainv = a_inverse(a);
        const std::uint32_t binv =
            B.neg(B.mul(B.mul(b, spec.g[ainv]), spec.f[ainv]));
        const std::uint32_t inv = t->pack(binv, ainv);
        if (ring->mul(u, inv) != ring->one() || ring->mul(inv, u) != ring->one()) return false;
    }
    return true;
}

}  // namespace ringlab
