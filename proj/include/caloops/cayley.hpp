#pragma once

// Finite loops as explicit Cayley tables. Convention throughout the library:
// elements are 0..n-1 and element 0 is the identity. Tables are row-major,
// table[a*n+b] = a*b. Division tables are materialized up front for orders
// where the memory is cheap, because left division sits on the hot path of
// every automorphism and associator scan.

#include <cstdint>
#include <string>
#include <vector>

#include "caloops/common.hpp"

namespace caloops {

enum class Side { left, right };

class CayleyLoop {
public:
    int32_t order() const { return n_; }

    int32_t mul(int32_t a, int32_t b) const { return t_[a * n_ + b]; }

    // Unique z with a*z = b.
    int32_t ldiv(int32_t a, int32_t b) const {
        if (!ld_.empty()) return ld_[a * n_ + b];
        const int32_t* row = &t_[a * n_];
        for (int32_t z = 0; z < n_; ++z)
            if (row[z] == b) return z;
        throw Error("ldiv: no solution (table is not a loop)");
    }

    // Unique z with z*a = b.
    int32_t rdiv(int32_t a, int32_t b) const {
        if (!rd_.empty()) return rd_[a * n_ + b];
        for (int32_t z = 0; z < n_; ++z)
            if (t_[z * n_ + a] == b) return z;
        throw Error("rdiv: no solution (table is not a loop)");
    }

    const int32_t* row(int32_t a) const { return &t_[a * n_]; }
    const int32_t* ldiv_row(int32_t a) const {
        return ld_.empty() ? nullptr : &ld_[a * n_];
    }

    const std::vector<int32_t>& table() const { return t_; }

    // Smallest k >= 1 with x^k = 0, powers left-bracketed. This is the length
    // of the cycle of right translation by x through the identity.
    int32_t element_order(int32_t x) const {
        int32_t z = t_[0 * n_ + x], k = 1;
        while (z != 0) {
            z = t_[z * n_ + x];
            ++k;
        }
        return k;
    }

    // Left-bracketed power x^k for k >= 0.
    int32_t power(int32_t x, int64_t k) const {
        int32_t z = 0;
        for (int64_t i = 0; i < k; ++i) z = t_[z * n_ + x];
        return z;
    }

    friend CayleyLoop build_loop(int32_t n, const std::vector<int32_t>& table,
                                 int64_t order_cap);

private:
    int32_t n_ = 0;
    std::vector<int32_t> t_;
    std::vector<int32_t> ld_, rd_;
};

// Validates and adopts a flat row-major table: entries in range, Latin in
// rows and columns, identity at index 0. Throws Error with a witness
// otherwise. Division tables are built for orders up to 1500.
CayleyLoop build_loop(int32_t n, const std::vector<int32_t>& table,
                      int64_t order_cap = kDefaultOrderCap);

// Text format: optional '#' comment lines and blank lines, then a line
// "order n", then n rows of n space-separated entries. The round trip
// format_cayley(parse_cayley(s)) is bit-exact on its own output.
CayleyLoop parse_cayley(const std::string& text,
                        int64_t order_cap = kDefaultOrderCap);
std::string format_cayley(const CayleyLoop& q);

CayleyLoop load_cayley_file(const std::string& path,
                            int64_t order_cap = kDefaultOrderCap);
void save_cayley_file(const CayleyLoop& q, const std::string& path);

// divide(q, a, b, left) = a\b, divide(q, a, b, right) = b/a.
inline int32_t divide(const CayleyLoop& q, int32_t a, int32_t b, Side side) {
    return side == Side::left ? q.ldiv(a, b) : q.rdiv(a, b);
}

}  // namespace caloops
