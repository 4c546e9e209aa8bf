#pragma once

// Shared basics: the library-wide error type, the default size cap for
// materialized Cayley tables, and small modular helpers used everywhere.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace caloops {

// Every recoverable failure in the library throws this with a short message
// naming the violated contract (and a witness where one exists).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Largest loop order any constructor will materialize unless the caller
// raises the cap explicitly.
inline constexpr int64_t kDefaultOrderCap = 10000;

inline bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Reduce into [0, p) for possibly negative inputs.
inline int32_t mod_norm(int64_t v, int32_t p) {
    int64_t r = v % p;
    if (r < 0) r += p;
    return static_cast<int32_t>(r);
}

inline int32_t mod_pow(int64_t base, int64_t exp, int32_t p) {
    int64_t r = 1, b = mod_norm(base, p);
    while (exp > 0) {
        if (exp & 1) r = r * b % p;
        b = b * b % p;
        exp >>= 1;
    }
    return static_cast<int32_t>(r);
}

// Inverse mod a prime p.
inline int32_t mod_inv(int64_t v, int32_t p) {
    int32_t a = mod_norm(v, p);
    if (a == 0) throw Error("mod_inv: zero has no inverse");
    return mod_pow(a, p - 2, p);
}

}  // namespace caloops
