#pragma once

// Invertible 2x2 matrices over Z_p. Convention: Mat2 rows are the generator
// images, so rho = [[a,b],[c,d]] sends x to x^a y^b and y to x^c y^d, and
// row vectors of generator exponents are acted on by right multiplication.

#include <cstdint>
#include <vector>

#include "caloops/common.hpp"

namespace caloops {

struct Mat2 {
    int32_t a, b, c, d;  // [[a, b], [c, d]]

    bool operator==(const Mat2&) const = default;
};

inline int32_t mat2_det(int32_t p, const Mat2& m) {
    return mod_norm(static_cast<int64_t>(m.a) * m.d -
                        static_cast<int64_t>(m.b) * m.c,
                    p);
}

inline Mat2 mat2_mul(int32_t p, const Mat2& m, const Mat2& n) {
    auto dot = [p](int64_t x1, int64_t x2, int64_t y1, int64_t y2) {
        return mod_norm(x1 * y1 + x2 * y2, p);
    };
    return {dot(m.a, m.b, n.a, n.c), dot(m.a, m.b, n.b, n.d),
            dot(m.c, m.d, n.a, n.c), dot(m.c, m.d, n.b, n.d)};
}

inline uint64_t gl2_order(int32_t p) {
    uint64_t p2 = static_cast<uint64_t>(p) * p;
    return (p2 - 1) * (p2 - p);
}

// All invertible matrices, identity first, the rest in lexicographic
// (a,b,c,d) order.
std::vector<Mat2> gl2_enumerate(int32_t p);

// Smallest quadratic non-residue mod p (p odd), by exhaustive squaring.
int32_t smallest_nonresidue(int32_t p);

}  // namespace caloops
