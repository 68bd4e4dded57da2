#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ringlab/common.hpp"
#include "ringlab/finite_ring.hpp"
#include "ringlab/group_table.hpp"
#include "ringlab/ideals.hpp"
#include "ringlab/ring_build.hpp"

namespace ringlab {

// Unit membership for every element. An element is a unit exactly when left
// multiplication by it is injective: finite rings are Dedekind-finite, so a
// one-sided inverse is two-sided.
inline std::vector<bool> unit_bitmap(const FiniteRing& r) {
    const std::uint64_t n = r.order();
    std::vector<bool> out(n, false);
    std::vector<std::uint32_t> stamp(n, 0xffffffff);
    for (std::uint32_t x = 0; x < n; ++x) {
        bool injective = true;
        for (std::uint32_t y = 0; y < n; ++y) {
            const std::uint32_t p = r.mul(x, y);
            if (stamp[p] == x) {
                injective = false;
                break;
            }
            stamp[p] = x;
        }
        out[x] = injective;
    }
    return out;
}

inline std::vector<std::uint32_t> unit_set(const FiniteRing& r) {
    r.ensure_mul_table();
    auto in = unit_bitmap(r);
    std::vector<std::uint32_t> units;
    for (std::uint32_t x = 0; x < r.order(); ++x) {
        if (in[x]) units.push_back(x);
    }
    return units;
}

struct GroupStructure {
    enum class Kind { Dihedral, Abelian, Unclassified };
    Kind kind = Kind::Unclassified;
    std::uint32_t dihedral_n = 0;  // the group is dihedral of order 2n
    AbelianInvariants invariants;  // when abelian

    bool is_dihedral_of_order(std::uint32_t two_n) const {
        return kind == Kind::Dihedral && 2 * dihedral_n == two_n;
    }

    std::string describe() const {
        switch (kind) {
            case Kind::Dihedral:
                return "D_" + std::to_string(2 * dihedral_n) + " (dihedral, n = " +
                       std::to_string(dihedral_n) + ")";
            case Kind::Abelian:
                return "abelian " + invariants.to_string();
            default:
                return "unclassified";
        }
    }
};

// Dihedral recognition is tried first: the order-2 group and the Klein
// four-group are abelian but carry the dihedral labels D_2 and D_4.
inline GroupStructure classify_group(const GroupTable& g) {
    GroupStructure s;
    if (auto n = recognize_dihedral(g)) {
        s.kind = GroupStructure::Kind::Dihedral;
        s.dihedral_n = *n;
        return s;
    }
    if (is_abelian(g)) {
        s.kind = GroupStructure::Kind::Abelian;
        s.invariants = abelian_invariants(g);
        return s;
    }
    return s;
}

struct UnitGroupReport {
    RingPtr ring;  // null for units-only constructions
    std::vector<std::uint32_t> unit_indices;
    GroupTable group;
    GroupStructure structure;
};

inline UnitGroupReport unit_group(const RingPtr& ring) {
    UnitGroupReport rep;
    rep.ring = ring;
    rep.unit_indices = unit_set(*ring);
    const std::uint32_t m = std::uint32_t(rep.unit_indices.size());
    std::vector<std::uint32_t> pos(ring->order(), 0xffffffff);
    for (std::uint32_t i = 0; i < m; ++i) pos[rep.unit_indices[i]] = i;
    rep.group.order = m;
    rep.group.mul.resize(std::size_t(m) * m);
    for (std::uint32_t i = 0; i < m; ++i) {
        for (std::uint32_t j = 0; j < m; ++j) {
            const std::uint32_t p = pos[ring->mul(rep.unit_indices[i], rep.unit_indices[j])];
            if (p == 0xffffffff) throw Error("unit_group: units are not closed (not a ring?)");
            rep.group.mul[std::size_t(i) * m + j] = p;
        }
    }
    rep.group.identity = pos[ring->one()];
    rep.group.labels.resize(m);
    for (std::uint32_t i = 0; i < m; ++i) rep.group.labels[i] = ring->label(rep.unit_indices[i]);
    rep.structure = classify_group(rep.group);
    return rep;
}

struct RadicalReport {
    IdealSpan radical;
    std::uint64_t one_plus_j_order = 0;
    RingPtr quotient;
    std::uint64_t quotient_units_order = 0;
};

// Jacobson radical as {x : 1 - rx is a unit for every r}, using a
// precomputed unit table; quadratic in the ring order.
inline RadicalReport jacobson_radical(const RingPtr& ring) {
    const FiniteRing& r = *ring;
    r.ensure_mul_table();
    const std::uint64_t n = r.order();
    const auto is_unit = unit_bitmap(r);
    std::vector<std::uint32_t> one_minus(n);
    for (std::uint32_t x = 0; x < n; ++x) one_minus[x] = r.sub(r.one(), x);
    std::vector<std::uint32_t> members;
    for (std::uint32_t x = 0; x < n; ++x) {
        bool in = true;
        for (std::uint32_t s = 0; s < n; ++s) {
            if (!is_unit[one_minus[r.mul(s, x)]]) {
                in = false;
                break;
            }
        }
        if (in) members.push_back(x);
    }
    RadicalReport rep;
    rep.radical = IdealSpan{ring, std::move(members)};
    rep.one_plus_j_order = rep.radical.size();
    rep.quotient = make_quotient(ring, rep.radical);
    rep.quotient_units_order = unit_set(*rep.quotient).size();
    return rep;
}

inline bool has_trivial_radical(const RingPtr& ring) {
    return jacobson_radical(ring).radical.size() == 1;
}

// Verifies the unit-counting identities around the radical: the projection
// R -> R/J is surjective on units with kernel 1 + J, so
// |R^x| = |(R/J)^x| * |J|.
inline bool radical_counting_check(const RingPtr& ring) {
    const FiniteRing& r = *ring;
    auto rep = jacobson_radical(ring);
    const auto* q = dynamic_cast<const QuotientRing*>(rep.quotient.get());
    const auto units = unit_set(r);
    const auto qunits = unit_set(*rep.quotient);
    if (units.size() != qunits.size() * rep.radical.size()) return false;
    // image of R^x under the projection must be exactly (R/J)^x
    std::vector<bool> hit(rep.quotient->order(), false);
    std::vector<bool> qunit_flag(rep.quotient->order(), false);
    for (auto u : qunits) qunit_flag[u] = true;
    std::uint64_t kernel = 0;
    for (auto u : units) {
        const std::uint32_t im = q->project(u);
        if (!qunit_flag[im]) return false;
        hit[im] = true;
        if (im == rep.quotient->one()) ++kernel;
    }
    for (auto u : qunits) {
        if (!hit[u]) return false;
    }
    // the kernel of the induced unit map is 1 + J
    if (kernel != rep.radical.size()) return false;
    std::vector<bool> unit_flag(r.order(), false);
    for (auto u : units) unit_flag[u] = true;
    for (auto j : rep.radical.elements) {
        const std::uint32_t x = r.add(r.one(), j);
        if (!unit_flag[x] || q->project(x) != rep.quotient->one()) return false;
    }
    return true;
}

// One-plus-radical as a set of ring element indices.
inline std::vector<std::uint32_t> one_plus_ideal(const FiniteRing& r, const IdealSpan& ideal) {
    std::vector<std::uint32_t> out;
    out.reserve(ideal.elements.size());
    for (auto j : ideal.elements) out.push_back(r.add(r.one(), j));
    std::sort(out.begin(), out.end());
    return out;
}

// Normality of 1 + J inside the unit group, checked by conjugation.
inline bool one_plus_radical_is_normal(const FiniteRing& r, const IdealSpan& ideal,
                                       const std::vector<std::uint32_t>& units) {
    std::vector<bool> in(r.order(), false);
    for (auto x : one_plus_ideal(r, ideal)) in[x] = true;
    for (auto u : units) {
        // inverse of u by scanning the unit list
        std::uint32_t uin = 0xffffffff;
        for (auto v : units) {
            if (r.mul(u, v) == r.one()) {
                uin = v;
                break;
            }
        }
        if (uin == 0xffffffff) return false;
        for (auto j : ideal.elements) {
            const std::uint32_t g = r.add(r.one(), j);
            if (!in[r.mul(r.mul(u, g), uin)]) return false;
        }
    }
    return true;
}

// Membership test for the three-quantifier radical characterization
// {x : 1 + RxR is contained in the units}; cubic cost, for cross-checks on
// small rings only.
inline std::vector<std::uint32_t> radical_by_two_sided_test(const FiniteRing& r) {
    r.ensure_mul_table();
    const std::uint64_t n = r.order();
    const auto is_unit = unit_bitmap(r);
    std::vector<std::uint32_t> members;
    for (std::uint32_t x = 0; x < n; ++x) {
        bool in = true;
        for (std::uint32_t a = 0; a < n && in; ++a) {
            const std::uint32_t ax = r.mul(a, x);
            for (std::uint32_t b = 0; b < n; ++b) {
                if (!is_unit[r.add(r.one(), r.mul(ax, b))]) {
                    in = false;
                    break;
                }
            }
        }
        if (in) members.push_back(x);
    }
    return members;
}

// Closed form for the unit group of F_p[x]/(x^n): C_{p-1} times a product
// of C_{p^k} factors whose multiplicities come from ceiling differences. The
// k-range bound uses integer power comparisons only.
inline AbelianInvariants un_formula(std::uint64_t p, std::uint64_t n) {
    if (!is_prime(p)) throw Error("un_formula: p must be prime");
    if (n < 1) throw Error("un_formula: n must be positive");
    AbelianInvariants inv;
    if (p > 2) {
        // primary decomposition of the cyclic factor C_{p-1}
        for (auto [q, e] : factorize(p - 1)) inv.factors.push_back(ipow(q, e));
    }
    // 1 <= k < 1 + log_p(n)  <=>  p^(k-1) < n
    for (std::uint64_t k = 1, pk_minus_1 = 1; pk_minus_1 < n; ++k, pk_minus_1 *= p) {
        const std::uint64_t pk = pk_minus_1 * p;
        const std::uint64_t beta =
            ceil_div(n, pk_minus_1) + ceil_div(n, pk * p) - 2 * ceil_div(n, pk);
        for (std::uint64_t i = 0; i < beta; ++i) inv.factors.push_back(pk);
    }
    std::sort(inv.factors.begin(), inv.factors.end());
    return inv;
}

// Lower bound on the number of primary factors forced by a unit of order
// p^r, r >= 2: 1 + (p-1)p^(r-2) for odd p, 2^(r-2) for p = 2.
inline std::uint64_t rankprop_bound(std::uint64_t p, std::uint32_t r) {
    if (!is_prime(p)) throw Error("rankprop_bound: p must be prime");
    if (r < 2) throw Error("rankprop_bound: requires r >= 2");
    if (p == 2) return ipow(2, r - 2);
    return 1 + (p - 1) * ipow(p, r - 2);
}

// |GL_m(F_q)| for q = p^k, with the p-adic valuation km(m-1)/2 asserted.
inline BigInt gl_order(std::uint32_t m, std::uint64_t p, std::uint32_t k) {
    if (m < 1 || k < 1) throw Error("gl_order: m and k must be positive");
    if (!is_prime(p)) throw Error("gl_order: p must be prime");
    BigInt q = 1;
    for (std::uint32_t i = 0; i < k; ++i) q *= p;
    BigInt qm = 1;
    for (std::uint32_t i = 0; i < m; ++i) qm *= q;
    BigInt result = 1;
    BigInt qi = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        result *= qm - qi;
        qi *= q;
    }
    BigInt t = result;
    std::uint64_t val = 0;
    while (t % p == 0) {
        t /= p;
        ++val;
    }
    if (val != std::uint64_t(k) * m * (m - 1) / 2) {
        throw Error("gl_order: p-adic valuation does not match km(m-1)/2");
    }
    return result;
}

// Brute-force primary decomposition of the unit group of F_p[x]/(x^n),
// independent of un_formula: units are the residues with nonzero constant
// term, and the factor multiplicities are derived from order counts.
inline AbelianInvariants poly_quotient_unit_invariants_bruteforce(
    std::uint64_t p, std::uint32_t n, std::uint64_t budget = kDefaultBudget) {
    std::vector<std::int64_t> modulus(n + 1, 0);
    modulus[n] = 1;
    auto ring = make_poly_quotient(make_zn(p, budget), modulus, budget);
    const auto* pq = dynamic_cast<const PolyQuotientRing*>(ring.get());
    std::vector<std::uint64_t> units;
    units.reserve(std::size_t(ring->order() / p * (p - 1)));
    for (std::uint64_t x = 0; x < ring->order(); ++x) {
        if (pq->digit(std::uint32_t(x), 0) != 0) units.push_back(x);
    }
    return primary_invariants_by_counting(
        units,
        [&](std::uint64_t a, std::uint64_t b) {
            return std::uint64_t(ring->mul(std::uint32_t(a), std::uint32_t(b)));
        },
        ring->one());
}

}  // namespace ringlab
