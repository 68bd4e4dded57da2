#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "ringlab/common.hpp"

namespace ringlab {

// Split quaternions over the integers: a + b*i + c*s + d*is with i^2 = -1,
// s^2 = 1 and si = -is. Writing an element as u + v*s with u, v Gaussian
// integers, the product is (u1*u2 + v1*conj(v2), u1*v2 + v1*conj(u2)).
struct SplitQuaternion {
    BigInt a, b, c, d;

    SplitQuaternion() : a(0), b(0), c(0), d(0) {}
    SplitQuaternion(BigInt a_, BigInt b_, BigInt c_, BigInt d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static SplitQuaternion from_int(std::int64_t v) { return {BigInt(v), 0, 0, 0}; }

    const BigInt& re() const { return a; }

    bool operator==(const SplitQuaternion& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }

    SplitQuaternion operator+(const SplitQuaternion& o) const {
        return {a + o.a, b + o.b, c + o.c, d + o.d};
    }

    SplitQuaternion operator-(const SplitQuaternion& o) const {
        return {a - o.a, b - o.b, c - o.c, d - o.d};
    }

    SplitQuaternion operator-() const { return {-a, -b, -c, -d}; }

    SplitQuaternion operator*(const SplitQuaternion& o) const {
        // (u1 + v1 s)(u2 + v2 s) = u1 u2 + v1 conj(v2) + (u1 v2 + v1 conj(u2)) s
        // with u = a + bi, v = c + di
        return {a * o.a - b * o.b + c * o.c + d * o.d,
                a * o.b + b * o.a + d * o.c - c * o.d,
                a * o.c - b * o.d + c * o.a + d * o.b,
                a * o.d + b * o.c - c * o.b + d * o.a};
    }

    // a - bi - cs - d*is; an anti-automorphism of order 2.
    SplitQuaternion conjugate() const { return {a, -b, -c, -d}; }

    // N(x) = x * conjugate(x) = a^2 + b^2 - c^2 - d^2.
    BigInt norm() const { return a * a + b * b - c * c - d * d; }

    SplitQuaternion pow(std::uint64_t e) const {
        SplitQuaternion acc = from_int(1);
        SplitQuaternion base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    std::string to_string() const {
        return "(" + a.str() + ") + (" + b.str() + ")i + (" + c.str() + ")s + (" + d.str() +
               ")is";
    }
};

inline const SplitQuaternion kQuaternionI{0, 1, 0, 0};
inline const SplitQuaternion kQuaternionS{0, 0, 1, 0};

// The norm -1 unit (1 + 4i) + (3 + 3i)s. It satisfies z^2 = 2z + 1, so its
// powers stay in the span of {1, z} with Pell-recurrence coefficients and
// strictly growing real part.
inline const SplitQuaternion kPellUnit{1, 4, 3, 3};

struct ObstructionCertificate {
    std::uint32_t k = 0;
    BigInt norm_value;  // N(z^(8k) - 1)
    BigInt re_value;    // Re(z^(8k))
    bool nonzero = false;
};

// Certificate that z^(8k) - 1 has nonzero norm: computed by
// square-and-multiply and cross-checked against the linear recurrence
// z^j = 2 z^(j-1) + z^(j-2).
inline ObstructionCertificate obstruction_certificate(std::uint32_t k) {
    if (k < 1) throw Error("obstruction_certificate: k must be positive");
    const std::uint64_t e = std::uint64_t(8) * k;
    const SplitQuaternion w = kPellUnit.pow(e);
    // power through the recurrence: z^j = x_j * z + x_{j-1}
    BigInt x_prev = 0, x_cur = 1;  // x_0, x_1
    for (std::uint64_t j = 2; j <= e; ++j) {
        const BigInt next = 2 * x_cur + x_prev;
        x_prev = x_cur;
        x_cur = next;
    }
    const SplitQuaternion via_recurrence{x_cur * kPellUnit.a + x_prev, x_cur * kPellUnit.b,
                                         x_cur * kPellUnit.c, x_cur * kPellUnit.d};
    if (!(w == via_recurrence)) {
        throw Error("obstruction_certificate: power and recurrence disagree");
    }
    if (w.norm() != 1) {
        throw Error("obstruction_certificate: N(z^(8k)) != 1");
    }
    ObstructionCertificate cert;
    cert.k = k;
    cert.re_value = w.re();
    cert.norm_value = (w - SplitQuaternion::from_int(1)).norm();
    cert.nonzero = cert.norm_value != 0;
    return cert;
}

}  // namespace ringlab
