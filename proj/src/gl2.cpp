#include "caloops/gl2.hpp"

namespace caloops {

std::vector<Mat2> gl2_enumerate(int32_t p) {
    if (!is_prime(p)) throw Error("gl2_enumerate: p is not prime");
    std::vector<Mat2> out;
    out.reserve(gl2_order(p));
    const Mat2 id{1 % p, 0, 0, 1 % p};
    out.push_back(id);
    for (int32_t a = 0; a < p; ++a)
        for (int32_t b = 0; b < p; ++b)
            for (int32_t c = 0; c < p; ++c)
                for (int32_t d = 0; d < p; ++d) {
                    Mat2 m{a, b, c, d};
                    if (m == id) continue;
                    if (mat2_det(p, m) != 0) out.push_back(m);
                }
    if (out.size() != gl2_order(p))
        throw Error("gl2_enumerate: wrong count");  // cannot happen
    return out;
}

int32_t smallest_nonresidue(int32_t p) {
    if (p == 2) throw Error("smallest_nonresidue: undefined for p = 2");
    std::vector<char> is_square(p, 0);
    for (int32_t v = 0; v < p; ++v)
        is_square[static_cast<int64_t>(v) * v % p] = 1;
    for (int32_t v = 2; v < p; ++v)
        if (!is_square[v]) return v;
    throw Error("smallest_nonresidue: none found");  // cannot happen, p > 2
}

}  // namespace caloops
