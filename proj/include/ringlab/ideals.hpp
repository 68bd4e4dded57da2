#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ringlab/common.hpp"
#include "ringlab/finite_ring.hpp"

namespace ringlab {

// A two-sided ideal of a finite ring, stored as its full (sorted) element set.
struct IdealSpan {
    RingPtr parent;
    std::vector<std::uint32_t> elements;

    std::uint64_t size() const { return elements.size(); }

    std::vector<bool> bitmap() const {
        std::vector<bool> in(parent->order(), false);
        for (auto x : elements) in[x] = true;
        return in;
    }
};

namespace detail {

// Extends (members, in) to the additive subgroup generated by the current
// members together with `fresh`.
inline void extend_additive_span(const FiniteRing& r, std::vector<std::uint32_t>& members,
                                 std::vector<bool>& in, const std::vector<std::uint32_t>& fresh) {
    std::vector<std::uint32_t> work;
    auto push = [&](std::uint32_t x) {
        if (!in[x]) {
            in[x] = true;
            members.push_back(x);
            work.push_back(x);
        }
    };
    push(r.zero());
    for (auto g : fresh) push(g);
    while (!work.empty()) {
        const std::uint32_t x = work.back();
        work.pop_back();
        push(r.neg(x));
        for (std::size_t i = 0; i < members.size(); ++i) push(r.add(x, members[i]));
    }
}

}  // namespace detail

// Least two-sided ideal containing `gens`: alternate additive closure with
// left/right multiplication by every ring element until a fixed point.
inline IdealSpan ideal_closure(const RingPtr& ring, const std::vector<std::uint32_t>& gens) {
    const FiniteRing& r = *ring;
    std::vector<bool> in(r.order(), false);
    std::vector<std::uint32_t> members;
    detail::extend_additive_span(r, members, in, gens);
    std::size_t scanned = 0;
    while (scanned < members.size()) {
        const std::size_t end = members.size();
        std::vector<std::uint32_t> fresh;
        for (std::size_t i = scanned; i < end; ++i) {
            const std::uint32_t s = members[i];
            for (std::uint32_t x = 0; x < r.order(); ++x) {
                const std::uint32_t l = r.mul(x, s);
                if (!in[l]) fresh.push_back(l);
                const std::uint32_t q = r.mul(s, x);
                if (!in[q]) fresh.push_back(q);
            }
        }
        scanned = end;
        if (!fresh.empty()) detail::extend_additive_span(r, members, in, fresh);
    }
    std::sort(members.begin(), members.end());
    return IdealSpan{ring, std::move(members)};
}

inline bool is_ideal(const FiniteRing& r, const std::vector<std::uint32_t>& elements) {
    std::vector<bool> in(r.order(), false);
    for (auto x : elements) in[x] = true;
    if (!in[r.zero()]) return false;
    for (auto a : elements) {
        if (!in[r.neg(a)]) return false;
        for (auto b : elements) {
            if (!in[r.add(a, b)]) return false;
        }
        for (std::uint32_t x = 0; x < r.order(); ++x) {
            if (!in[r.mul(x, a)] || !in[r.mul(a, x)]) return false;
        }
    }
    return true;
}

// Quotient ring R/I with cosets represented by their least element index.
class QuotientRing final : public FiniteRing {
public:
    QuotientRing(RingPtr parent, const IdealSpan& ideal)
        : FiniteRing(parent->order() / ideal.size(), 0, 0,
                     "Quot(" + parent->structure_tag() + ", |I|=" +
                         std::to_string(ideal.size()) + ")"),
          parent_(std::move(parent)) {
        const std::uint64_t n = parent_->order();
        rep_of_.assign(n, kUnset);
        idx_of_.assign(n, kUnset);
        for (std::uint32_t x = 0; x < n; ++x) {
            if (rep_of_[x] != kUnset) continue;
            const std::uint32_t idx = std::uint32_t(reps_.size());
            reps_.push_back(x);
            idx_of_[x] = idx;
            for (auto j : ideal.elements) rep_of_[parent_->add(x, j)] = x;
        }
        zero_ = idx_of_[rep_of_[parent_->zero()]];
        one_ = idx_of_[rep_of_[parent_->one()]];
    }

    const RingPtr& parent() const { return parent_; }
    std::uint32_t lift(std::uint32_t x) const { return reps_[x]; }
    std::uint32_t project(std::uint32_t parent_elt) const { return idx_of_[rep_of_[parent_elt]]; }

    std::string label(std::uint32_t x) const override { return parent_->label(reps_[x]) + "+I"; }

protected:
    std::uint32_t do_add(std::uint32_t a, std::uint32_t b) const override {
        return project(parent_->add(reps_[a], reps_[b]));
    }
    std::uint32_t do_mul(std::uint32_t a, std::uint32_t b) const override {
        return project(parent_->mul(reps_[a], reps_[b]));
    }
    std::uint32_t do_neg(std::uint32_t a) const override { return project(parent_->neg(reps_[a])); }

private:
    static constexpr std::uint32_t kUnset = 0xffffffff;
    RingPtr parent_;
    std::vector<std::uint32_t> reps_;
    std::vector<std::uint32_t> rep_of_;
    std::vector<std::uint32_t> idx_of_;
};

inline RingPtr make_quotient(const RingPtr& ring, const IdealSpan& ideal) {
    if (ideal.parent.get() != ring.get()) {
        throw Error("make_quotient: ideal belongs to a different ring");
    }
    if (!is_ideal(*ring, ideal.elements)) {
        throw Error("make_quotient: the given set is not a two-sided ideal");
    }
    return std::make_shared<QuotientRing>(ring, ideal);
}

// All central idempotents, ascending; contains zero and one.
inline std::vector<std::uint32_t> central_idempotents(const FiniteRing& r) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t e = 0; e < r.order(); ++e) {
        if (r.mul(e, e) != e) continue;
        bool central = true;
        for (std::uint32_t x = 0; x < r.order(); ++x) {
            if (r.mul(e, x) != r.mul(x, e)) {
                central = false;
                break;
            }
        }
        if (central) out.push_back(e);
    }
    return out;
}

// A ring with identity is a direct product of two nontrivial rings exactly
// when it has a central idempotent other than 0 and 1.
inline bool is_indecomposable(const FiniteRing& r) {
    if (r.order() < 2) throw Error("is_indecomposable: undefined for the trivial ring");
    for (std::uint32_t e = 0; e < r.order(); ++e) {
        if (e == r.zero() || e == r.one()) continue;
        if (r.mul(e, e) != e) continue;
        bool central = true;
        for (std::uint32_t x = 0; x < r.order(); ++x) {
            if (r.mul(e, x) != r.mul(x, e)) {
                central = false;
                break;
            }
        }
        if (central) return false;
    }
    return true;
}

// The subring eRe for a central idempotent e, with identity e.
class CornerRing final : public FiniteRing {
public:
    CornerRing(RingPtr parent, std::uint32_t e, std::vector<std::uint32_t> elements)
        : FiniteRing(elements.size(), 0, 0,
                     "Peirce(" + parent->structure_tag() + ", e=" + parent->label(e) + ")"),
          parent_(std::move(parent)),
          elements_(std::move(elements)) {
        idx_of_.assign(parent_->order(), 0xffffffff);
        for (std::uint32_t i = 0; i < elements_.size(); ++i) idx_of_[elements_[i]] = i;
        zero_ = idx_of_[parent_->zero()];
        one_ = idx_of_[e];
    }

    std::uint32_t lift(std::uint32_t x) const { return elements_[x]; }

    std::string label(std::uint32_t x) const override { return parent_->label(elements_[x]); }

protected:
    std::uint32_t do_add(std::uint32_t a, std::uint32_t b) const override {
        return idx_of_[parent_->add(elements_[a], elements_[b])];
    }
    std::uint32_t do_mul(std::uint32_t a, std::uint32_t b) const override {
        return idx_of_[parent_->mul(elements_[a], elements_[b])];
    }
    std::uint32_t do_neg(std::uint32_t a) const override {
        return idx_of_[parent_->neg(elements_[a])];
    }

private:
    RingPtr parent_;
    std::vector<std::uint32_t> elements_;
    std::vector<std::uint32_t> idx_of_;
};

// Splits R as eRe x (1-e)R(1-e) at a nontrivial central idempotent.
inline std::pair<RingPtr, RingPtr> peirce_split(const RingPtr& ring, std::uint32_t e) {
    const FiniteRing& r = *ring;
    if (e == r.zero() || e == r.one()) {
        throw Error("peirce_split: idempotent must be nontrivial");
    }
    if (r.mul(e, e) != e) throw Error("peirce_split: element is not idempotent");
    for (std::uint32_t x = 0; x < r.order(); ++x) {
        if (r.mul(e, x) != r.mul(x, e)) throw Error("peirce_split: idempotent is not central");
    }
    auto corner = [&](std::uint32_t idem) {
        std::vector<bool> in(r.order(), false);
        std::vector<std::uint32_t> elems;
        for (std::uint32_t x = 0; x < r.order(); ++x) {
            const std::uint32_t y = r.mul(idem, x);
            if (!in[y]) {
                in[y] = true;
                elems.push_back(y);
            }
        }
        std::sort(elems.begin(), elems.end());
        return std::make_shared<CornerRing>(ring, idem, std::move(elems));
    };
    return {corner(e), corner(r.sub(r.one(), e))};
}

// Ideal product I*J as a two-sided ideal (additive span of pairwise products;
// multiplication closure is inherited from I and J being two-sided).
inline IdealSpan ideal_product(const RingPtr& ring, const IdealSpan& lhs, const IdealSpan& rhs) {
    const FiniteRing& r = *ring;
    std::vector<bool> seen(r.order(), false);
    std::vector<std::uint32_t> prods;
    for (auto a : lhs.elements) {
        for (auto b : rhs.elements) {
            const std::uint32_t p = r.mul(a, b);
            if (!seen[p]) {
                seen[p] = true;
                prods.push_back(p);
            }
        }
    }
    std::vector<bool> in(r.order(), false);
    std::vector<std::uint32_t> span;
    detail::extend_additive_span(r, span, in, prods);
    std::sort(span.begin(), span.end());
    return IdealSpan{ring, std::move(span)};
}

inline bool ideal_is_nilpotent(const RingPtr& ring, const IdealSpan& ideal) {
    IdealSpan power = ideal;
    std::uint64_t prev = power.size();
    while (power.size() > 1) {
        power = ideal_product(ring, power, ideal);
        if (power.size() == prev && power.size() > 1) return false;
        prev = power.size();
    }
    return true;
}

}  // namespace ringlab
