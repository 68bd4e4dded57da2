#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ringlab/common.hpp"

namespace ringlab {

// A finite group as an explicit multiplication table. Element labels are
// optional; label(i) falls back to "g<i>".
struct GroupTable {
    std::uint32_t order = 0;
    std::vector<std::uint32_t> mul;  // row-major, order x order
    std::uint32_t identity = 0;
    std::vector<std::string> labels;

    std::uint32_t at(std::uint32_t a, std::uint32_t b) const {
        return mul[std::size_t(a) * order + b];
    }

    std::uint32_t inverse(std::uint32_t a) const {
        for (std::uint32_t b = 0; b < order; ++b) {
            if (at(a, b) == identity) return b;
        }
        throw Error("GroupTable::inverse: no inverse found (not a group)");
    }

    std::string label(std::uint32_t i) const {
        if (i < labels.size()) return labels[i];
        return "g" + std::to_string(i);
    }

    std::uint32_t power(std::uint32_t g, std::uint64_t e) const {
        std::uint32_t acc = identity;
        std::uint32_t base = g;
        while (e > 0) {
            if (e & 1) acc = at(acc, base);
            base = at(base, base);
            e >>= 1;
        }
        return acc;
    }
};

inline GroupTable make_cyclic(std::uint32_t n) {
    if (n < 1) throw Error("make_cyclic: order must be positive");
    GroupTable g;
    g.order = n;
    g.identity = 0;
    g.mul.resize(std::size_t(n) * n);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            g.mul[std::size_t(i) * n + j] = (i + j) % n;
        }
    }
    g.labels.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        g.labels[i] = i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i));
    }
    return g;
}

// Dihedral group of order two_n, generated by a rotation r of order n and a
// reflection s. Indices 0..n-1 are r^i, indices n..2n-1 are r^i * s.
inline GroupTable make_dihedral(std::uint32_t two_n) {
    if (two_n < 2 || two_n % 2 != 0) {
        throw Error("make_dihedral: order must be a positive even integer");
    }
    const std::uint32_t n = two_n / 2;
    GroupTable g;
    g.order = two_n;
    g.identity = 0;
    g.mul.resize(std::size_t(two_n) * two_n);
    auto idx = [n](std::uint32_t rot, bool flip) { return flip ? n + rot : rot; };
    for (std::uint32_t a = 0; a < two_n; ++a) {
        const std::uint32_t ra = a % n;
        const bool fa = a >= n;
        for (std::uint32_t b = 0; b < two_n; ++b) {
            const std::uint32_t rb = b % n;
            const bool fb = b >= n;
            // (r^a s^fa)(r^b s^fb): moving s past r^b inverts the rotation.
            const std::uint32_t rot = fa ? (ra + n - rb % n) % n : (ra + rb) % n;
            g.mul[std::size_t(a) * two_n + b] = idx(rot, fa != fb);
        }
    }
    g.labels.resize(two_n);
    for (std::uint32_t i = 0; i < n; ++i) {
        std::string r = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
        g.labels[i] = i == 0 ? "1" : r;
        g.labels[n + i] = i == 0 ? "s" : r + "*s";
    }
    return g;
}

inline GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
    GroupTable p;
    p.order = g.order * h.order;
    p.identity = g.identity * h.order + h.identity;
    p.mul.resize(std::size_t(p.order) * p.order);
    for (std::uint32_t a = 0; a < p.order; ++a) {
        const std::uint32_t ga = a / h.order, ha = a % h.order;
        for (std::uint32_t b = 0; b < p.order; ++b) {
            const std::uint32_t gb = b / h.order, hb = b % h.order;
            p.mul[std::size_t(a) * p.order + b] = g.at(ga, gb) * h.order + h.at(ha, hb);
        }
    }
    p.labels.resize(p.order);
    for (std::uint32_t a = 0; a < p.order; ++a) {
        p.labels[a] = "(" + g.label(a / h.order) + ", " + h.label(a % h.order) + ")";
    }
    return p;
}

inline std::uint32_t element_order(const GroupTable& g, std::uint32_t x) {
    if (x >= g.order) throw Error("element_order: index out of range");
    std::uint32_t acc = x;
    std::uint32_t m = 1;
    while (acc != g.identity) {
        acc = g.at(acc, x);
        ++m;
        if (m > g.order) throw Error("element_order: no finite order (not a group)");
    }
    return m;
}

inline bool is_abelian(const GroupTable& g) {
    for (std::uint32_t a = 0; a < g.order; ++a) {
        for (std::uint32_t b = a + 1; b < g.order; ++b) {
            if (g.at(a, b) != g.at(b, a)) return false;
        }
    }
    return true;
}

inline std::vector<std::uint32_t> subgroup_generated(const GroupTable& g,
                                                     const std::vector<std::uint32_t>& gens) {
    std::vector<bool> in(g.order, false);
    std::vector<std::uint32_t> members;
    std::vector<std::uint32_t> work;
    auto push = [&](std::uint32_t x) {
        if (!in[x]) {
            in[x] = true;
            members.push_back(x);
            work.push_back(x);
        }
    };
    push(g.identity);
    for (auto x : gens) {
        if (x >= g.order) throw Error("subgroup_generated: index out of range");
        push(x);
    }
    while (!work.empty()) {
        const std::uint32_t x = work.back();
        work.pop_back();
        // members may grow during iteration; new products are re-examined via work.
        for (std::size_t i = 0; i < members.size(); ++i) {
            push(g.at(x, members[i]));
            push(g.at(members[i], x));
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

// A small generating set, found greedily; used to keep center and
// commutation checks near-linear on large groups.
inline std::vector<std::uint32_t> find_generators(const GroupTable& g) {
    std::vector<std::uint32_t> gens;
    std::vector<std::uint32_t> span = subgroup_generated(g, {});
    std::vector<bool> in(g.order, false);
    for (auto x : span) in[x] = true;
    for (std::uint32_t x = 0; x < g.order && span.size() < g.order; ++x) {
        if (in[x]) continue;
        gens.push_back(x);
        span = subgroup_generated(g, gens);
        std::fill(in.begin(), in.end(), false);
        for (auto y : span) in[y] = true;
    }
    return gens;
}

inline std::vector<std::uint32_t> center(const GroupTable& g) {
    const auto gens = find_generators(g);
    std::vector<std::uint32_t> z;
    for (std::uint32_t x = 0; x < g.order; ++x) {
        bool central = true;
        for (auto y : gens) {
            if (g.at(x, y) != g.at(y, x)) {
                central = false;
                break;
            }
        }
        if (central) z.push_back(x);
    }
    return z;
}

inline bool is_subgroup(const GroupTable& g, const std::vector<std::uint32_t>& s) {
    std::vector<bool> in(g.order, false);
    for (auto x : s) {
        if (x >= g.order) return false;
        in[x] = true;
    }
    if (!in[g.identity]) return false;
    for (auto a : s) {
        for (auto b : s) {
            if (!in[g.at(a, b)]) return false;
        }
    }
    for (auto a : s) {
        if (!in[g.inverse(a)]) return false;
    }
    return true;
}

inline bool is_normal(const GroupTable& g, const std::vector<std::uint32_t>& s) {
    if (!is_subgroup(g, s)) throw Error("is_normal: the given set is not a subgroup");
    std::vector<bool> in(g.order, false);
    for (auto x : s) in[x] = true;
    for (std::uint32_t a = 0; a < g.order; ++a) {
        const std::uint32_t ainv = g.inverse(a);
        for (auto x : s) {
            if (!in[g.at(g.at(a, x), ainv)]) return false;
        }
    }
    return true;
}

inline std::map<std::uint32_t, std::uint64_t> order_census(const GroupTable& g) {
    std::map<std::uint32_t, std::uint64_t> census;
    for (std::uint32_t x = 0; x < g.order; ++x) ++census[element_order(g, x)];
    return census;
}

// Canonical primary decomposition of a finite abelian group: the multiset of
// prime-power cyclic factor orders.
struct AbelianInvariants {
    std::vector<std::uint64_t> factors;  // sorted ascending

    std::size_t d() const { return factors.size(); }

    std::uint64_t product() const {
        std::uint64_t p = 1;
        for (auto f : factors) p *= f;
        return p;
    }

    bool operator==(const AbelianInvariants& o) const { return factors == o.factors; }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) s += ", ";
            s += std::to_string(factors[i]);
        }
        return s + "}";
    }
};

// Primary decomposition of an abelian group given only by an opaque
// multiplication functor over `n` element ids. Counts, for each prime p
// dividing n, how many elements have order dividing p^k; the multiplicity of
// the C_{p^k} factor is the p-logarithm of a_k^2 / (a_{k-1} a_{k+1}).
template <class Elems, class Mul>
AbelianInvariants primary_invariants_by_counting(const Elems& elements, Mul&& mul,
                                                 std::uint64_t identity) {
    const std::uint64_t n = elements.size();
    AbelianInvariants inv;
    if (n <= 1) return inv;
    auto power = [&](std::uint64_t g, std::uint64_t e) {
        std::uint64_t acc = identity, base = g;
        while (e > 0) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    };
    for (auto [p, mult] : factorize(n)) {
        const std::uint64_t p_part = ipow(p, mult);
        // alpha[k] = number of elements of order dividing p^k
        std::vector<std::uint64_t> alpha{1};
        std::uint64_t pk = 1;
        while (alpha.back() < p_part) {
            pk *= p;
            std::uint64_t count = 0;
            for (auto g : elements) {
                if (power(g, pk) == identity) ++count;
            }
            alpha.push_back(count);
        }
        alpha.push_back(alpha.back());
        for (std::size_t k = 1; k + 1 < alpha.size(); ++k) {
            std::uint64_t num = alpha[k] * alpha[k];
            std::uint64_t den = alpha[k - 1] * alpha[k + 1];
            if (num % den != 0) throw Error("primary_invariants_by_counting: counts are inconsistent");
            std::uint64_t ratio = num / den;
            std::uint64_t beta = 0;
            while (ratio > 1) {
                if (ratio % p != 0) {
                    throw Error("primary_invariants_by_counting: counts are inconsistent");
                }
                ratio /= p;
                ++beta;
            }
            for (std::uint64_t i = 0; i < beta; ++i) inv.factors.push_back(ipow(p, unsigned(k)));
        }
    }
    std::sort(inv.factors.begin(), inv.factors.end());
    return inv;
}

inline AbelianInvariants abelian_invariants(const GroupTable& g) {
    if (!is_abelian(g)) throw Error("abelian_invariants: group is not abelian");
    std::vector<std::uint64_t> elems(g.order);
    for (std::uint32_t i = 0; i < g.order; ++i) elems[i] = i;
    return primary_invariants_by_counting(
        elems,
        [&](std::uint64_t a, std::uint64_t b) {
            return std::uint64_t(g.at(std::uint32_t(a), std::uint32_t(b)));
        },
        g.identity);
}

// Returns n if G is the dihedral group of order 2n: there must be a rotation
// of order n and an involution outside it, conjugation by which inverts the
// rotation. The order-2 group counts as n = 1.
inline std::optional<std::uint32_t> recognize_dihedral(const GroupTable& g) {
    if (g.order == 2) return 1;
    if (g.order < 2 || g.order % 2 != 0) return std::nullopt;
    const std::uint32_t n = g.order / 2;
    std::vector<std::uint32_t> orders(g.order);
    for (std::uint32_t x = 0; x < g.order; ++x) orders[x] = element_order(g, x);
    for (std::uint32_t r = 0; r < g.order; ++r) {
        if (orders[r] != n) continue;
        // <r> and its complement; any valid s gives the presentation.
        std::vector<bool> in_r(g.order, false);
        std::uint32_t acc = g.identity;
        for (std::uint32_t i = 0; i < n; ++i) {
            in_r[acc] = true;
            acc = g.at(acc, r);
        }
        const std::uint32_t rinv = g.inverse(r);
        for (std::uint32_t s = 0; s < g.order; ++s) {
            if (orders[s] != 2 || in_r[s]) continue;
            if (g.at(g.at(s, r), s) == rinv) return n;
        }
    }
    return std::nullopt;
}

// Sanity checker for constructed tables: Latin-square property, identity,
// inverses, and associativity (exhaustive up to order 24, sampled above).
inline void validate_group(const GroupTable& g, std::uint64_t seed = 1) {
    if (g.order == 0 || g.mul.size() != std::size_t(g.order) * g.order) {
        throw Error("validate_group: malformed table");
    }
    std::vector<bool> seen(g.order);
    for (std::uint32_t a = 0; a < g.order; ++a) {
        std::fill(seen.begin(), seen.end(), false);
        for (std::uint32_t b = 0; b < g.order; ++b) {
            const std::uint32_t p = g.at(a, b);
            if (p >= g.order || seen[p]) throw Error("validate_group: row is not a permutation");
            seen[p] = true;
        }
        std::fill(seen.begin(), seen.end(), false);
        for (std::uint32_t b = 0; b < g.order; ++b) {
            const std::uint32_t p = g.at(b, a);
            if (seen[p]) throw Error("validate_group: column is not a permutation");
            seen[p] = true;
        }
        if (g.at(g.identity, a) != a || g.at(a, g.identity) != a) {
            throw Error("validate_group: identity axiom fails");
        }
        const std::uint32_t ainv = g.inverse(a);
        if (g.at(ainv, a) != g.identity) throw Error("validate_group: inverse axiom fails");
    }
    auto assoc = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        if (g.at(g.at(a, b), c) != g.at(a, g.at(b, c))) {
            throw Error("validate_group: associativity fails");
        }
    };
    if (g.order <= 24) {
        for (std::uint32_t a = 0; a < g.order; ++a) {
            for (std::uint32_t b = 0; b < g.order; ++b) {
                for (std::uint32_t c = 0; c < g.order; ++c) assoc(a, b, c);
            }
        }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::uint32_t> pick(0, g.order - 1);
        for (int i = 0; i < 10000; ++i) assoc(pick(rng), pick(rng), pick(rng));
    }
}

}  // namespace ringlab
