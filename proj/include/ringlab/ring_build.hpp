#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/common.hpp"
#include "ringlab/finite_ring.hpp"
#include "ringlab/group_table.hpp"

namespace ringlab {

class ZnRing final : public FiniteRing {
public:
    explicit ZnRing(std::uint64_t n, std::string tag = "")
        : FiniteRing(n, 0, n == 1 ? 0 : 1, tag.empty() ? "Z(" + std::to_string(n) + ")" : std::move(tag)),
          n_(std::uint32_t(n)) {}

    std::string label(std::uint32_t x) const override { return std::to_string(x); }

protected:
    std::uint32_t do_add(std::uint32_t a, std::uint32_t b) const override { return (a + b) % n_; }
    std::uint32_t do_mul(std::uint32_t a, std::uint32_t b) const override {
        return std::uint32_t((std::uint64_t(a) * b) % n_);
    }
    std::uint32_t do_neg(std::uint32_t a) const override { return a == 0 ? 0 : n_ - a; }

private:
    std::uint32_t n_;
};

inline RingPtr make_zn(std::uint64_t n, std::uint64_t budget = kDefaultBudget) {
    if (n < 1) throw Error("make_zn: modulus must be positive");
    if (n > budget) throw BudgetError("make_zn: enumeration budget exceeded");
    return std::make_shared<ZnRing>(n);
}

// Shared machinery for rings whose elements are fixed-length digit vectors
// over a coefficient ring: polynomial quotients, matrix rings and group
// algebras. Element index is the base-|B| number with digit 0 least
// significant; the decode of every element is cached at construction.
class MixedRadixRing : public FiniteRing {
public:
    static constexpr std::uint32_t kMaxPositions = 64;

    const RingPtr& base() const { return base_; }
    std::uint32_t positions() const { return npos_; }
    std::uint32_t digit(std::uint32_t x, std::uint32_t i) const {
        return digits_[std::size_t(x) * npos_ + i];
    }

protected:
    MixedRadixRing(RingPtr base, std::uint32_t npos, std::uint64_t order, std::string tag)
        : FiniteRing(order, 0, 0, std::move(tag)),
          base_(std::move(base)),
          npos_(npos),
          b_(std::uint32_t(base_->order())) {
        if (npos_ == 0 || npos_ > kMaxPositions) {
            throw Error(tag_ + ": unsupported number of coefficient positions");
        }
        digits_.resize(std::size_t(order_) * npos_);
        for (std::uint64_t x = 0; x < order_; ++x) {
            std::uint64_t t = x;
            for (std::uint32_t i = 0; i < npos_; ++i) {
                digits_[x * npos_ + i] = std::uint32_t(t % b_);
                t /= b_;
            }
        }
        if (std::uint64_t(b_) * b_ <= (std::uint64_t(1) << 24)) {
            badd_.resize(std::size_t(b_) * b_);
            bmul_.resize(std::size_t(b_) * b_);
            bneg_.resize(b_);
            for (std::uint32_t i = 0; i < b_; ++i) {
                bneg_[i] = base_->neg(i);
                for (std::uint32_t j = 0; j < b_; ++j) {
                    badd_[std::size_t(i) * b_ + j] = base_->add(i, j);
                    bmul_[std::size_t(i) * b_ + j] = base_->mul(i, j);
                }
            }
        }
    }

    std::uint32_t badd(std::uint32_t a, std::uint32_t b) const {
        return badd_.empty() ? base_->add(a, b) : badd_[std::size_t(a) * b_ + b];
    }
    std::uint32_t bmul(std::uint32_t a, std::uint32_t b) const {
        return bmul_.empty() ? base_->mul(a, b) : bmul_[std::size_t(a) * b_ + b];
    }
    std::uint32_t bneg(std::uint32_t a) const { return bneg_.empty() ? base_->neg(a) : bneg_[a]; }
    std::uint32_t bsub(std::uint32_t a, std::uint32_t b) const { return badd(a, bneg(b)); }

    std::uint32_t encode(const std::uint32_t* d) const {
        std::uint64_t idx = 0;
        for (std::uint32_t i = npos_; i-- > 0;) idx = idx * b_ + d[i];
        return std::uint32_t(idx);
    }

    std::uint32_t encode_unit_digit(std::uint32_t pos, std::uint32_t value) const {
        std::uint64_t idx = value;
        for (std::uint32_t i = 0; i < pos; ++i) idx *= b_;
        return std::uint32_t(idx);
    }

    std::uint32_t do_add(std::uint32_t a, std::uint32_t b) const override {
        std::uint32_t d[kMaxPositions];
        const std::uint32_t* da = &digits_[std::size_t(a) * npos_];
        const std::uint32_t* db = &digits_[std::size_t(b) * npos_];
        for (std::uint32_t i = 0; i < npos_; ++i) d[i] = badd(da[i], db[i]);
        return encode(d);
    }

    std::uint32_t do_neg(std::uint32_t a) const override {
        std::uint32_t d[kMaxPositions];
        const std::uint32_t* da = &digits_[std::size_t(a) * npos_];
        for (std::uint32_t i = 0; i < npos_; ++i) d[i] = bneg(da[i]);
        return encode(d);
    }

    RingPtr base_;
    std::uint32_t npos_;
    std::uint32_t b_;
    std::vector<std::uint32_t> digits_;
    std::vector<std::uint32_t> badd_, bmul_, bneg_;
};

// Residue-class ring R[x]/(m) for a monic modulus m over a commutative R.
class PolyQuotientRing final : public MixedRadixRing {
public:
    PolyQuotientRing(const RingPtr& base, std::vector<std::uint32_t> modulus_low, std::string tag)
        : MixedRadixRing(base, std::uint32_t(modulus_low.size()),
                         pow_order(base->order(), modulus_low.size()), std::move(tag)),
          mod_(std::move(modulus_low)) {
        one_ = encode_unit_digit(0, base_->one());
    }

    // Index of the residue class of x (reduced if the degree is 1).
    std::uint32_t generator_index() const {
        if (npos_ >= 2) return encode_unit_digit(1, base_->one());
        return bneg(mod_[0]);
    }

    std::string label(std::uint32_t x) const override {
        std::string out;
        for (std::uint32_t i = 0; i < npos_; ++i) {
            const std::uint32_t c = digit(x, i);
            if (c == base_->zero()) continue;
            std::string term;
            std::string cl = base_->label(c);
            if (cl.find('+') != std::string::npos) cl = "(" + cl + ")";
            if (i == 0) {
                term = cl;
            } else {
                std::string xs = i == 1 ? "x" : "x^" + std::to_string(i);
                term = (c == base_->one()) ? xs : cl + "*" + xs;
            }
            if (!out.empty()) out += "+";
            out += term;
        }
        return out.empty() ? base_->label(base_->zero()) : out;
    }

protected:
    std::uint32_t do_mul(std::uint32_t a, std::uint32_t b) const override {
        const std::uint32_t* da = &digits_[std::size_t(a) * npos_];
        const std::uint32_t* db = &digits_[std::size_t(b) * npos_];
        const std::uint32_t z = base_->zero();
        std::uint32_t tmp[2 * kMaxPositions];
        std::fill(tmp, tmp + 2 * npos_ - 1, z);
        for (std::uint32_t i = 0; i < npos_; ++i) {
            if (da[i] == z) continue;
            for (std::uint32_t j = 0; j < npos_; ++j) {
                if (db[j] == z) continue;
                tmp[i + j] = badd(tmp[i + j], bmul(da[i], db[j]));
            }
        }
        for (std::uint32_t i = 2 * npos_ - 2; i >= npos_; --i) {
            const std::uint32_t c = tmp[i];
            if (c != z) {
                tmp[i] = z;
                for (std::uint32_t j = 0; j < npos_; ++j) {
                    tmp[i - npos_ + j] = bsub(tmp[i - npos_ + j], bmul(c, mod_[j]));
                }
            }
        }
        return encode(tmp);
    }

private:
    static std::uint64_t pow_order(std::uint64_t base_order, std::size_t deg) {
        std::uint64_t o = 1;
        for (std::size_t i = 0; i < deg; ++i) o *= base_order;
        return o;
    }

    std::vector<std::uint32_t> mod_;  // low coefficients; leading 1 implied
};

inline RingPtr make_poly_quotient(const RingPtr& base, const std::vector<std::int64_t>& modulus,
                                  std::uint64_t budget = kDefaultBudget, std::string tag = "") {
    if (modulus.size() < 2) throw Error("make_poly_quotient: modulus degree must be at least 1");
    if (modulus.back() != 1) throw Error("make_poly_quotient: modulus must be monic");
    if (!is_commutative(*base)) {
        throw Error("make_poly_quotient: coefficient ring must be commutative");
    }
    const std::uint32_t deg = std::uint32_t(modulus.size() - 1);
    checked_pow(base->order(), deg, budget, "make_poly_quotient");
    std::vector<std::uint32_t> low(deg);
    for (std::uint32_t i = 0; i < deg; ++i) {
        const std::int64_t c = modulus[i];
        const std::uint64_t m = std::uint64_t(c < 0 ? -c : c);
        low[i] = c < 0 ? base->neg(base->scalar(m)) : base->scalar(m);
    }
    if (tag.empty()) {
        tag = "PQ(" + base->structure_tag() + ", [";
        for (std::size_t i = 0; i < modulus.size(); ++i) {
            if (i) tag += ", ";
            tag += std::to_string(modulus[i]);
        }
        tag += "])";
    }
    return std::make_shared<PolyQuotientRing>(base, std::move(low), std::move(tag));
}

namespace detail {

// Coefficients of monic degree-k polynomials over F_p, enumerated in
// increasing base-p value and tested for irreducibility by trial division.
inline std::vector<std::uint32_t> smallest_irreducible(std::uint64_t p, std::uint32_t k) {
    auto poly_rem_is_zero = [&](const std::vector<std::uint32_t>& f,
                                const std::vector<std::uint32_t>& g) {
        // remainder of f by monic g over F_p
        std::vector<std::uint32_t> r = f;
        const std::size_t dg = g.size() - 1;
        for (std::size_t i = r.size() - 1; i >= dg; --i) {
            const std::uint64_t c = r[i];
            if (c != 0) {
                for (std::size_t j = 0; j <= dg; ++j) {
                    const std::uint64_t sub = (c * g[j]) % p;
                    r[i - dg + j] = std::uint32_t((r[i - dg + j] + p - sub) % p);
                }
            }
            if (i == dg) break;
        }
        for (std::size_t j = 0; j < dg; ++j) {
            if (r[j] != 0) return false;
        }
        return true;
    };
    auto is_irreducible = [&](const std::vector<std::uint32_t>& f) {
        const std::uint32_t deg = std::uint32_t(f.size() - 1);
        for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
            const std::uint64_t count = ipow(p, d);
            for (std::uint64_t v = 0; v < count; ++v) {
                std::vector<std::uint32_t> g(d + 1);
                std::uint64_t t = v;
                for (std::uint32_t i = 0; i < d; ++i) {
                    g[i] = std::uint32_t(t % p);
                    t /= p;
                }
                g[d] = 1;
                if (poly_rem_is_zero(f, g)) return false;
            }
        }
        return true;
    };
    const std::uint64_t count = ipow(p, k);
    for (std::uint64_t v = 0; v < count; ++v) {
        std::vector<std::uint32_t> f(k + 1);
        // v encodes (c_{k-1}, ..., c_0) with c_{k-1} most significant
        std::uint64_t t = v;
        for (std::uint32_t i = 0; i < k; ++i) {
            f[i] = std::uint32_t(t % p);
            t /= p;
        }
        f[k] = 1;
        if (is_irreducible(f)) return std::vector<std::uint32_t>(f.begin(), f.end() - 1);
    }
    throw Error("smallest_irreducible: none found");  // unreachable for prime p
}

}  // namespace detail

// The finite field of order p^k, modeled as F_p[x]/(m) with the smallest
// monic irreducible modulus (coefficient vectors ordered by base-p value).
inline RingPtr make_gf(std::uint64_t p, std::uint32_t k, std::uint64_t budget = kDefaultBudget) {
    if (!is_prime(p)) throw Error("make_gf: " + std::to_string(p) + " is not prime");
    if (k < 1) throw Error("make_gf: extension degree must be positive");
    const std::uint64_t q = checked_pow(p, k, budget, "make_gf");
    if (k == 1) return std::make_shared<ZnRing>(p, "GF(" + std::to_string(p) + ")");
    auto base = std::make_shared<ZnRing>(p);
    auto low = detail::smallest_irreducible(p, k);
    return std::make_shared<PolyQuotientRing>(base, std::move(low), "GF(" + std::to_string(q) + ")");
}

enum class MatrixShape { Full, UpperTriangular };

// m x m matrices over an arbitrary base ring, full or upper triangular.
class MatrixRing final : public MixedRadixRing {
public:
    MatrixRing(RingPtr base, std::uint32_t m, MatrixShape shape, std::uint64_t order,
               std::string tag)
        : MixedRadixRing(std::move(base),
                         shape == MatrixShape::Full ? m * m : m * (m + 1) / 2, order,
                         std::move(tag)),
          m_(m),
          shape_(shape) {
        pos_.assign(std::size_t(m) * m, kNoPos);
        std::uint32_t next = 0;
        for (std::uint32_t r = 0; r < m; ++r) {
            for (std::uint32_t c = (shape == MatrixShape::Full ? 0 : r); c < m; ++c) {
                pos_[std::size_t(r) * m + c] = next++;
            }
        }
        std::vector<std::uint32_t> d(npos_, base_->zero());
        for (std::uint32_t r = 0; r < m; ++r) d[pos_[std::size_t(r) * m + r]] = base_->one();
        one_ = encode(d.data());
    }

    std::string label(std::uint32_t x) const override {
        std::string out = "[";
        for (std::uint32_t r = 0; r < m_; ++r) {
            if (r) out += ", ";
            out += "[";
            for (std::uint32_t c = 0; c < m_; ++c) {
                if (c) out += ", ";
                const std::uint32_t p = pos_[std::size_t(r) * m_ + c];
                out += p == kNoPos ? base_->label(base_->zero()) : base_->label(digit(x, p));
            }
            out += "]";
        }
        return out + "]";
    }

protected:
    std::uint32_t do_mul(std::uint32_t a, std::uint32_t b) const override {
        const std::uint32_t* da = &digits_[std::size_t(a) * npos_];
        const std::uint32_t* db = &digits_[std::size_t(b) * npos_];
        const std::uint32_t z = base_->zero();
        std::uint32_t d[kMaxPositions];
        for (std::uint32_t r = 0; r < m_; ++r) {
            for (std::uint32_t c = 0; c < m_; ++c) {
                const std::uint32_t pc = pos_[std::size_t(r) * m_ + c];
                if (pc == kNoPos) continue;
                std::uint32_t acc = z;
                for (std::uint32_t k = 0; k < m_; ++k) {
                    const std::uint32_t pa = pos_[std::size_t(r) * m_ + k];
                    const std::uint32_t pb = pos_[std::size_t(k) * m_ + c];
                    if (pa == kNoPos || pb == kNoPos) continue;
                    acc = badd(acc, bmul(da[pa], db[pb]));
                }
                d[pc] = acc;
            }
        }
        return encode(d);
    }

private:
    static constexpr std::uint32_t kNoPos = 0xffffffff;
    std::uint32_t m_;
    MatrixShape shape_;
    std::vector<std::uint32_t> pos_;  // (row, col) -> digit position
};

inline RingPtr make_matrix_ring(std::uint32_t m, const RingPtr& base, MatrixShape shape,
                                std::uint64_t budget = kDefaultBudget) {
    if (m < 1) throw Error("make_matrix_ring: dimension must be positive");
    const std::uint32_t cells = shape == MatrixShape::Full ? m * m : m * (m + 1) / 2;
    const std::uint64_t order = checked_pow(base->order(), cells, budget, "make_matrix_ring");
    std::string tag = (shape == MatrixShape::Full ? "M(" : "UT(") + std::to_string(m) + ", " +
                      base->structure_tag() + ")";
    return std::make_shared<MatrixRing>(base, m, shape, order, std::move(tag));
}

// Group algebra R[G]: functions G -> R with convolution product.
class GroupAlgebraRing final : public MixedRadixRing {
public:
    GroupAlgebraRing(RingPtr base, GroupTable group, std::uint64_t order, std::string tag)
        : MixedRadixRing(std::move(base), group.order, order, std::move(tag)),
          group_(std::move(group)) {
        one_ = encode_unit_digit(group_.identity, base_->one());
    }

    const GroupTable& group() const { return group_; }

    std::uint32_t basis_element(std::uint32_t group_index) const {
        return encode_unit_digit(group_index, base_->one());
    }

    std::string label(std::uint32_t x) const override {
        std::string out;
        for (std::uint32_t i = 0; i < npos_; ++i) {
            const std::uint32_t c = digit(x, i);
            if (c == base_->zero()) continue;
            std::string cl = base_->label(c);
            if (cl.find('+') != std::string::npos) cl = "(" + cl + ")";
            std::string gl = group_.label(i);
            std::string term;
            if (gl == "1") {
                term = cl;
            } else {
                term = (c == base_->one()) ? gl : cl + "*" + gl;
            }
            if (!out.empty()) out += "+";
            out += term;
        }
        return out.empty() ? base_->label(base_->zero()) : out;
    }

protected:
    std::uint32_t do_mul(std::uint32_t a, std::uint32_t b) const override {
        const std::uint32_t* da = &digits_[std::size_t(a) * npos_];
        const std::uint32_t* db = &digits_[std::size_t(b) * npos_];
        const std::uint32_t z = base_->zero();
        std::uint32_t d[kMaxPositions];
        std::fill(d, d + npos_, z);
        for (std::uint32_t i = 0; i < npos_; ++i) {
            if (da[i] == z) continue;
            const std::uint32_t* row = &group_.mul[std::size_t(i) * npos_];
            for (std::uint32_t j = 0; j < npos_; ++j) {
                if (db[j] == z) continue;
                const std::uint32_t g = row[j];
                d[g] = badd(d[g], bmul(da[i], db[j]));
            }
        }
        return encode(d);
    }

private:
    GroupTable group_;
};

inline RingPtr make_group_algebra(const RingPtr& base, const GroupTable& group,
                                  std::uint64_t budget = kDefaultBudget, std::string tag = "") {
    const std::uint64_t order =
        checked_pow(base->order(), group.order, budget, "make_group_algebra");
    if (tag.empty()) {
        tag = "GA(" + base->structure_tag() + ", |G|=" + std::to_string(group.order) + ")";
    }
    return std::make_shared<GroupAlgebraRing>(base, group, order, std::move(tag));
}

// Componentwise product of two rings; index = i * |S| + j.
class ProductRing final : public FiniteRing {
public:
    ProductRing(RingPtr a, RingPtr b, std::string tag)
        : FiniteRing(a->order() * b->order(), 0, 0, std::move(tag)),
          a_(std::move(a)),
          b_(std::move(b)),
          nb_(std::uint32_t(b_->order())) {
        zero_ = a_->zero() * nb_ + b_->zero();
        one_ = a_->one() * nb_ + b_->one();
    }

    const RingPtr& left() const { return a_; }
    const RingPtr& right() const { return b_; }
    std::uint32_t pack(std::uint32_t x, std::uint32_t y) const { return x * nb_ + y; }

    std::string label(std::uint32_t x) const override {
        return "(" + a_->label(x / nb_) + ", " + b_->label(x % nb_) + ")";
    }

protected:
    std::uint32_t do_add(std::uint32_t x, std::uint32_t y) const override {
        return a_->add(x / nb_, y / nb_) * nb_ + b_->add(x % nb_, y % nb_);
    }
    std::uint32_t do_mul(std::uint32_t x, std::uint32_t y) const override {
        return a_->mul(x / nb_, y / nb_) * nb_ + b_->mul(x % nb_, y % nb_);
    }
    std::uint32_t do_neg(std::uint32_t x) const override {
        return a_->neg(x / nb_) * nb_ + b_->neg(x % nb_);
    }

private:
    RingPtr a_, b_;
    std::uint32_t nb_;
};

inline RingPtr make_product(const RingPtr& a, const RingPtr& b,
                            std::uint64_t budget = kDefaultBudget) {
    checked_mul(a->order(), b->order(), budget, "make_product");
    std::string tag = a->structure_tag() + " x " + b->structure_tag();
    return std::make_shared<ProductRing>(a, b, std::move(tag));
}

// Endomorphism ring of the abelian group C4 x C2 under pointwise addition
// and composition. An endomorphism is determined by the generator images
// e1 -> a*e1 + c*e2, e2 -> b*e1 + d*e2 with a in Z4, b in {0, 2}, c, d in Z2;
// the element index packs (a, b/2, c, d) in mixed radix (4, 2, 2, 2).
class EndC4C2Ring final : public FiniteRing {
public:
    EndC4C2Ring() : FiniteRing(32, 0, pack(1, 0, 0, 1), "EndC4C2") {}

    std::string label(std::uint32_t x) const override {
        auto [a, b, c, d] = unpack(x);
        return "[[" + std::to_string(a) + ", " + std::to_string(b) + "], [" + std::to_string(c) +
               ", " + std::to_string(d) + "]]";
    }

protected:
    std::uint32_t do_add(std::uint32_t x, std::uint32_t y) const override {
        auto [a1, b1, c1, d1] = unpack(x);
        auto [a2, b2, c2, d2] = unpack(y);
        return pack((a1 + a2) % 4, (b1 + b2) % 4, (c1 + c2) % 2, (d1 + d2) % 2);
    }

    std::uint32_t do_mul(std::uint32_t x, std::uint32_t y) const override {
        auto [a1, b1, c1, d1] = unpack(x);
        auto [a2, b2, c2, d2] = unpack(y);
        // composition x after y, written on generator images
        const std::uint32_t a = (a1 * a2 + b1 * c2) % 4;
        const std::uint32_t c = (c1 * a2 + d1 * c2) % 2;
        const std::uint32_t b = (a1 * b2 + b1 * d2) % 4;
        const std::uint32_t d = (c1 * b2 + d1 * d2) % 2;
        return pack(a, b, c, d);
    }

    std::uint32_t do_neg(std::uint32_t x) const override {
        auto [a, b, c, d] = unpack(x);
        return pack((4 - a) % 4, (4 - b) % 4, (2 - c) % 2, (2 - d) % 2);
    }

private:
    struct Images {
        std::uint32_t a, b, c, d;
    };
    static Images unpack(std::uint32_t x) {
        return {x % 4, ((x / 4) % 2) * 2, (x / 8) % 2, (x / 16) % 2};
    }
    static std::uint32_t pack(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
        return a + 4 * ((b / 2) % 2) + 8 * c + 16 * d;
    }
};

inline RingPtr make_end_c4c2() { return std::make_shared<EndC4C2Ring>(); }

}  // namespace ringlab
