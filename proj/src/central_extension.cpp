#include "caloops/central_extension.hpp"

#include <string>

#include "caloops/fp_loop.hpp"

namespace caloops {

CayleyLoop central_extension(const Cocycle& c, int64_t order_cap) {
    int64_t nl = c.base.size(), nz = c.fiber.size();
    int64_t n = nl * nz;
    if (n > order_cap) throw Error("central_extension: order cap exceeded");
    if (static_cast<int64_t>(c.theta.size()) != nl * nl)
        throw Error("central_extension: cocycle table has wrong size");
    for (int64_t x = 0; x < nl; ++x)
        if (c.value(x, 0) != 0 || c.value(0, x) != 0)
            throw Error("central_extension: cocycle not normalized at x = " +
                        std::to_string(x));

    std::vector<int32_t> table(static_cast<size_t>(n) * n);
    for (int64_t l1 = 0; l1 < nl; ++l1)
        for (int64_t l2 = 0; l2 < nl; ++l2) {
            int64_t l3 = c.base.add(l1, l2);
            int64_t th = c.value(l1, l2);
            for (int64_t z1 = 0; z1 < nz; ++z1) {
                int64_t z1th = c.fiber.add(z1, th);
                int64_t row = (l1 * nz + z1) * n + l2 * nz;
                for (int64_t z2 = 0; z2 < nz; ++z2)
                    table[row + z2] = static_cast<int32_t>(
                        l3 * nz + c.fiber.add(z1th, z2));
            }
        }
    return build_loop(static_cast<int32_t>(n), table, order_cap);
}

int64_t extension_associator(const Cocycle& c, int64_t i, int64_t j,
                             int64_t k) {
    int64_t ij = c.base.add(i, j), jk = c.base.add(j, k);
    int64_t v = c.fiber.add(c.value(i, j), c.value(ij, k));
    v = c.fiber.add(v, c.fiber.neg(c.value(j, k)));
    v = c.fiber.add(v, c.fiber.neg(c.value(i, jk)));
    return v;
}

Cocycle fp_cocycle(int32_t p) {
    Cocycle c;
    c.base.moduli = {p, p};
    c.fiber.moduli = {p, p, p, p};
    int64_t nl = c.base.size();
    c.theta.resize(nl * nl);
    for (int32_t a1 = 0; a1 < p; ++a1)
        for (int32_t a2 = 0; a2 < p; ++a2)
            for (int32_t b1 = 0; b1 < p; ++b1)
                for (int32_t b2 = 0; b2 < p; ++b2) {
                    int64_t i = a1 * p + a2, j = b1 * p + b2;
                    std::vector<int32_t> z = {
                        carry(p, a1, b1), carry(p, a2, b2),
                        mod_norm(-static_cast<int64_t>(a1) * b1 * (a2 + b2),
                                 p),
                        mod_norm(static_cast<int64_t>(a2) * b2 * (a1 + b1),
                                 p)};
                    c.theta[i * nl + j] =
                        static_cast<int32_t>(c.fiber.index(z));
                }
    return c;
}

}  // namespace caloops
