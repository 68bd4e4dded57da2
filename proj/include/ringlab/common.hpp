#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ringlab {

using BigInt = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a construction would enumerate more elements than allowed.
class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& what) : Error(what) {}
};

// Default cap on the number of elements any constructor may enumerate.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 20;

// base^exp, failing if the result would exceed `limit`.
inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit,
                                 const std::string& what) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > limit / base) {
            throw BudgetError(what + ": enumeration budget of " + std::to_string(limit) +
                              " elements exceeded");
        }
        r *= base;
        if (r > limit) {
            throw BudgetError(what + ": enumeration budget of " + std::to_string(limit) +
                              " elements exceeded");
        }
    }
    return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t limit,
                                 const std::string& what) {
    if (a != 0 && b > limit / a) {
        throw BudgetError(what + ": enumeration budget of " + std::to_string(limit) +
                          " elements exceeded");
    }
    return a * b;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// Prime factorization as (prime, multiplicity) pairs, ascending.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            unsigned e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// Returns p such that n = p^k for a prime p, or 0 if n is not a prime power.
inline std::uint64_t prime_power_base(std::uint64_t n) {
    if (n < 2) return 0;
    auto f = factorize(n);
    return f.size() == 1 ? f[0].first : 0;
}

inline std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

}  // namespace ringlab
