#pragma once

// Central extensions of an abelian group L by an abelian group Z along a
// normalized cocycle theta: L x L -> Z. The extension lives on L x Z with
//
//   (x1, z1)(x2, z2) = (x1 + x2, z1 + z2 + theta(x1, x2))
//
// and its associator is determined by the cocycle alone, which gives the
// tests an oracle that bypasses the table entirely.

#include <cstdint>
#include <vector>

#include "caloops/cayley.hpp"

namespace caloops {

// A finite abelian group as a product of cyclic factors, elements indexed in
// mixed radix with the first factor most significant.
struct AbelianGroupSpec {
    std::vector<int32_t> moduli;

    int64_t size() const {
        int64_t s = 1;
        for (int32_t m : moduli) s *= m;
        return s;
    }
    std::vector<int32_t> tuple(int64_t idx) const {
        std::vector<int32_t> t(moduli.size());
        for (size_t i = moduli.size(); i-- > 0;) {
            t[i] = static_cast<int32_t>(idx % moduli[i]);
            idx /= moduli[i];
        }
        return t;
    }
    int64_t index(const std::vector<int32_t>& t) const {
        int64_t idx = 0;
        for (size_t i = 0; i < moduli.size(); ++i)
            idx = idx * moduli[i] + mod_norm(t[i], moduli[i]);
        return idx;
    }
    int64_t add(int64_t a, int64_t b) const {
        auto ta = tuple(a), tb = tuple(b);
        for (size_t i = 0; i < moduli.size(); ++i)
            ta[i] = static_cast<int32_t>((ta[i] + tb[i]) % moduli[i]);
        return index(ta);
    }
    int64_t neg(int64_t a) const {
        auto t = tuple(a);
        for (size_t i = 0; i < moduli.size(); ++i)
            t[i] = static_cast<int32_t>((moduli[i] - t[i]) % moduli[i]);
        return index(t);
    }
};

struct Cocycle {
    AbelianGroupSpec base;   // L
    AbelianGroupSpec fiber;  // Z
    // theta(i, j) as a fiber index, row-major over base indices
    std::vector<int32_t> theta;

    int32_t value(int64_t i, int64_t j) const {
        return theta[i * base.size() + j];
    }
};

// Element index of (l, z) is l * |Z| + z, so the extension's element order
// matches the mixed radix of (base tuple, fiber tuple). Throws "cocycle not
// normalized" (with a witness) unless theta(x,0) = theta(0,x) = 0.
CayleyLoop central_extension(const Cocycle& c,
                             int64_t order_cap = kDefaultOrderCap);

// Fiber index of the associator of cosets i,j,k, straight from the cocycle:
// theta(i,j) + theta(i+j,k) - theta(j,k) - theta(i,j+k).
int64_t extension_associator(const Cocycle& c, int64_t i, int64_t j,
                             int64_t k);

// The cocycle presenting the order-p^6 quotient of the free loop as a
// central extension of (Z_p)^2 by (Z_p)^4: carries of the generator digits
// plus the signed class-two corrections.
Cocycle fp_cocycle(int32_t p);

}  // namespace caloops
