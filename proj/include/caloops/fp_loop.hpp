#pragma once

// The order-p^6 quotient of the free loop, on 6-tuples over Z_p.
// Coordinates: (a1, a2) generator exponents, (a3, a4) exponents of x^p and
// y^p, (a5, a6) exponents of the associators (x,x,y) and (x,y,y). The last
// four coordinates span the center. Products pick up a carry into (a3, a4)
// when generator exponents overflow past p, plus the signed class-two
// corrections in (a5, a6); all arithmetic is signed then reduced to 0..p-1.

#include <array>
#include <cstdint>
#include <string>

#include "caloops/cayley.hpp"
#include "caloops/common.hpp"
#include "caloops/free_loop.hpp"

namespace caloops {

struct FpElement {
    std::array<int32_t, 6> c{0, 0, 0, 0, 0, 0};

    bool operator==(const FpElement&) const = default;
};

inline FpElement fp_identity() { return {}; }

// 1 when a + b wraps past p (a, b reduced residues).
inline int32_t carry(int32_t p, int32_t a, int32_t b) {
    return a + b >= p ? 1 : 0;
}

// Total carry accumulated while adding a to itself k times:
// sum over i = 1..k-1 of carry(a, (i*a) mod p). Empty sum for k <= 1.
int32_t carry_sum(int32_t p, int64_t k, int32_t a);

FpElement fp_mul(int32_t p, const FpElement& u, const FpElement& v);

// Unique w with u*w = v, by back substitution (no table needed).
FpElement fp_left_divide(int32_t p, const FpElement& u, const FpElement& v);

// Left-bracketed power u^k, k >= 0, via the closed form: generator and
// central exponents scale by k, carries contribute carry_sum terms, and the
// associator coordinates pick up sum(i + i^2, i = 1..k-1) corrections.
FpElement fp_power(int32_t p, const FpElement& u, int64_t k);

// Closed form of the associator (u,v,w); depends only on generator
// coordinates and lands in the associator span.
FpElement fp_associator(int32_t p, const FpElement& u, const FpElement& v,
                        const FpElement& w);

// Projection of a free element: generator coordinates split into digit and
// carry mod p^2, associator coordinates reduce mod p.
FpElement fp_from_free(int32_t p, const FreeElement& u);

// Exponents (equal to the coordinates) of the canonical word
// x^a1 y^a2 (x^p)^a3 (y^p)^a4 (x,x,y)^a5 (x,y,y)^a6, re-evaluated through
// fp_mul/fp_power as a self-check; throws on mismatch.
std::array<int32_t, 6> fp_canonical_word(int32_t p, const FpElement& u);

// Text form "p:a1,a2,a3,a4,a5,a6".
struct ParsedFpElement {
    int32_t p;
    FpElement e;
};
ParsedFpElement fp_parse(const std::string& text);
std::string fp_format(int32_t p, const FpElement& u);

// The full order-p^6 Cayley table with its index maps. Identity is index 0;
// indices are the mixed-radix value of the 6 coordinates, a1 most
// significant.
struct FpCayley {
    int32_t p;
    CayleyLoop loop;

    int64_t index_of(const FpElement& u) const {
        int64_t idx = 0;
        for (int i = 0; i < 6; ++i) idx = idx * p + u.c[i];
        return idx;
    }
    FpElement element(int64_t idx) const {
        FpElement u;
        for (int i = 5; i >= 0; --i) {
            u.c[i] = static_cast<int32_t>(idx % p);
            idx /= p;
        }
        return u;
    }
};

FpCayley fp_cayley(int32_t p, int64_t order_cap = kDefaultOrderCap);

}  // namespace caloops
