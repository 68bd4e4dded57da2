#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "ringlab/common.hpp"

namespace ringlab {

// A finite ring with unity over canonically indexed elements. Concrete
// constructor families implement do_add / do_mul / do_neg; analyses go
// through the inline wrappers, which consult the memoized multiplication
// table when one has been built.
class FiniteRing {
public:
    virtual ~FiniteRing() = default;

    std::uint64_t order() const { return order_; }
    std::uint32_t zero() const { return zero_; }
    std::uint32_t one() const { return one_; }
    const std::string& structure_tag() const { return tag_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return do_add(a, b); }
    std::uint32_t neg(std::uint32_t a) const { return do_neg(a); }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return do_add(a, do_neg(b)); }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (!mul_table_.empty()) return mul_table_[std::size_t(a) * order_ + b];
        return do_mul(a, b);
    }

    // Additive order of 1; always divides the ring order.
    std::uint64_t characteristic() const {
        if (characteristic_ == 0) {
            std::uint64_t c = 1;
            std::uint32_t t = one_;
            while (t != zero_) {
                t = do_add(t, one_);
                ++c;
            }
            characteristic_ = c;
        }
        return characteristic_;
    }

    std::uint32_t scalar(std::uint64_t c) const {
        c %= characteristic();
        std::uint32_t acc = zero_;
        for (std::uint64_t i = 0; i < c; ++i) acc = do_add(acc, one_);
        return acc;
    }

    std::uint32_t pow(std::uint32_t x, std::uint64_t e) const {
        std::uint32_t acc = one_, base = x;
        while (e > 0) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    virtual std::string label(std::uint32_t x) const { return "e" + std::to_string(x); }

    // Memoize the full multiplication table; a no-op above the size cap.
    // Call before tight scan loops and before any concurrent reads.
    static constexpr std::uint64_t kMulTableCap = 4096;
    void ensure_mul_table() const {
        if (!mul_table_.empty() || order_ > kMulTableCap) return;
        mul_table_.resize(std::size_t(order_) * order_);
        for (std::uint32_t a = 0; a < order_; ++a) {
            for (std::uint32_t b = 0; b < order_; ++b) {
                mul_table_[std::size_t(a) * order_ + b] = std::uint16_t(do_mul(a, b));
            }
        }
    }

protected:
    FiniteRing(std::uint64_t order, std::uint32_t zero, std::uint32_t one, std::string tag)
        : order_(order), zero_(zero), one_(one), tag_(std::move(tag)) {}

    virtual std::uint32_t do_add(std::uint32_t a, std::uint32_t b) const = 0;
    virtual std::uint32_t do_mul(std::uint32_t a, std::uint32_t b) const = 0;
    virtual std::uint32_t do_neg(std::uint32_t a) const = 0;

    std::uint64_t order_;
    std::uint32_t zero_;
    std::uint32_t one_;
    std::string tag_;

private:
    mutable std::uint64_t characteristic_ = 0;
    mutable std::vector<std::uint16_t> mul_table_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

inline bool is_commutative(const FiniteRing& r) {
    for (std::uint32_t a = 0; a < r.order(); ++a) {
        for (std::uint32_t b = a + 1; b < r.order(); ++b) {
            if (r.mul(a, b) != r.mul(b, a)) return false;
        }
    }
    return true;
}

// Ring axiom check, separate from construction. The additive group is
// checked exhaustively at quadratic cost; cubic-cost laws (associativity,
// distributivity) are exhaustive up to order 64 and sampled above.
inline void validate_ring(const FiniteRing& r, std::uint64_t seed = 1) {
    const std::uint64_t n = r.order();
    if (n == 0) throw Error("validate_ring: empty ring");
    for (std::uint32_t a = 0; a < n; ++a) {
        if (r.add(r.zero(), a) != a) throw Error("validate_ring: additive identity fails");
        if (r.add(a, r.neg(a)) != r.zero()) throw Error("validate_ring: additive inverse fails");
        if (r.mul(r.one(), a) != a || r.mul(a, r.one()) != a) {
            throw Error("validate_ring: multiplicative identity fails");
        }
        for (std::uint32_t b = 0; b < n; ++b) {
            if (r.add(a, b) != r.add(b, a)) throw Error("validate_ring: addition not commutative");
        }
    }
    auto triple = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) {
            throw Error("validate_ring: addition not associative");
        }
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) {
            throw Error("validate_ring: multiplication not associative");
        }
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) {
            throw Error("validate_ring: left distributivity fails");
        }
        if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) {
            throw Error("validate_ring: right distributivity fails");
        }
    };
    if (n <= 64) {
        for (std::uint32_t a = 0; a < n; ++a) {
            for (std::uint32_t b = 0; b < n; ++b) {
                for (std::uint32_t c = 0; c < n; ++c) triple(a, b, c);
            }
        }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::uint32_t> pick(0, std::uint32_t(n - 1));
        for (int i = 0; i < 100000; ++i) triple(pick(rng), pick(rng), pick(rng));
    }
    if (r.order() % r.characteristic() != 0) {
        throw Error("validate_ring: characteristic does not divide the order");
    }
}

}  // namespace ringlab
