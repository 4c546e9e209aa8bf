#include "caloops/standard_loops.hpp"

#include "caloops/common.hpp"

namespace caloops {

CayleyLoop cyclic_group(int32_t n, int64_t order_cap) {
    if (n < 1) throw Error("cyclic_group: order must be positive");
    std::vector<int32_t> t(static_cast<size_t>(n) * n);
    for (int32_t a = 0; a < n; ++a)
        for (int32_t b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
    return build_loop(n, t, order_cap);
}

CayleyLoop direct_product(const CayleyLoop& a, const CayleyLoop& b,
                          int64_t order_cap) {
    int64_t na = a.order(), nb = b.order(), n = na * nb;
    if (n > order_cap) throw Error("direct_product: order cap exceeded");
    std::vector<int32_t> t(static_cast<size_t>(n) * n);
    for (int32_t i = 0; i < n; ++i) {
        int32_t ia = i / nb, ib = i % nb;
        for (int32_t j = 0; j < n; ++j) {
            int32_t ja = j / nb, jb = j % nb;
            t[i * n + j] = a.mul(ia, ja) * static_cast<int32_t>(nb) +
                           b.mul(ib, jb);
        }
    }
    return build_loop(static_cast<int32_t>(n), t, order_cap);
}

std::vector<CayleyLoop> catalog_groups(int32_t p, int64_t order_cap) {
    if (!is_prime(p)) throw Error("catalog_groups: p is not prime");
    int64_t n3 = static_cast<int64_t>(p) * p * p;
    if (n3 > order_cap) throw Error("catalog_groups: order cap exceeded");
    CayleyLoop zp = cyclic_group(p, order_cap);
    std::vector<CayleyLoop> out;
    out.push_back(cyclic_group(static_cast<int32_t>(n3), order_cap));
    out.push_back(direct_product(zp, cyclic_group(p * p, order_cap), order_cap));
    out.push_back(direct_product(direct_product(zp, zp, order_cap), zp,
                                 order_cap));
    return out;
}

CayleyLoop exceptional_loop_8() {
    static const int32_t t[64] = {
        0, 1, 2, 3, 4, 5, 6, 7,  //
        1, 0, 3, 2, 5, 4, 7, 6,  //
        2, 3, 0, 1, 6, 7, 4, 5,  //
        3, 2, 1, 0, 7, 6, 5, 4,  //
        4, 5, 6, 7, 0, 3, 1, 2,  //
        5, 4, 7, 6, 3, 0, 2, 1,  //
        6, 7, 4, 5, 1, 2, 0, 3,  //
        7, 6, 5, 4, 2, 1, 3, 0,
    };
    return build_loop(8, std::vector<int32_t>(t, t + 64));
}

}  // namespace caloops
