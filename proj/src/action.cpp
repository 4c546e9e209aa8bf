#include "caloops/action.hpp"

namespace caloops {

ActionMatrix action_matrix(int32_t p, const Mat2& rho) {
    if (mat2_det(p, rho) == 0) throw Error("action_matrix: rho not invertible");
    int64_t a1 = rho.a, a2 = rho.b, b1 = rho.c, b2 = rho.d;
    int64_t det = mat2_det(p, rho);
    ActionMatrix t;
    auto set = [&](int r, int c, int64_t v) {
        t.m[r * 4 + c] = mod_norm(v, p);
    };
    // x^p and y^p map to the p-th powers of the substituted generators; at
    // p = 3 those powers pick up associator corrections.
    set(0, 0, a1);
    set(0, 1, a2);
    set(0, 2, p == 3 ? a1 * a1 * a2 : 0);
    set(0, 3, p == 3 ? -a1 * a2 * a2 : 0);
    set(1, 0, b1);
    set(1, 1, b2);
    set(1, 2, p == 3 ? b1 * b1 * b2 : 0);
    set(1, 3, p == 3 ? -b1 * b2 * b2 : 0);
    // associators are linear in each slot, so they scale by det
    set(2, 2, a1 * det);
    set(2, 3, a2 * det);
    set(3, 2, b1 * det);
    set(3, 3, b2 * det);
    return t;
}

ActionMatrix action_mul(int32_t p, const ActionMatrix& a,
                        const ActionMatrix& b) {
    ActionMatrix r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int64_t s = 0;
            for (int k = 0; k < 4; ++k)
                s += static_cast<int64_t>(a.m[i * 4 + k]) * b.m[k * 4 + j];
            r.m[i * 4 + j] = mod_norm(s, p);
        }
    return r;
}

std::array<int32_t, 4> apply_vector(int32_t p, const std::array<int32_t, 4>& v,
                                    const ActionMatrix& a) {
    std::array<int32_t, 4> r{};
    for (int j = 0; j < 4; ++j) {
        int64_t s = 0;
        for (int i = 0; i < 4; ++i)
            s += static_cast<int64_t>(v[i]) * a.m[i * 4 + j];
        r[j] = mod_norm(s, p);
    }
    return r;
}

Subspace3 apply_subspace(int32_t p, const Subspace3& s,
                         const ActionMatrix& a) {
    std::array<std::array<int32_t, 4>, 3> rows;
    for (int r = 0; r < 3; ++r) {
        std::array<int32_t, 4> v{s.rref[r * 4], s.rref[r * 4 + 1],
                                 s.rref[r * 4 + 2], s.rref[r * 4 + 3]};
        rows[r] = apply_vector(p, v, a);
    }
    return subspace_from_rows(p, rows);
}

int32_t action_det(int32_t p, const ActionMatrix& a) {
    int64_t m[4][4];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = a.m[i * 4 + j];
    int64_t det = 1;
    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int r = col; r < 4; ++r)
            if (m[r][col] % p != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det = mod_norm(det * m[col][col], p);
        int64_t inv = mod_inv(m[col][col], p);
        for (int r = col + 1; r < 4; ++r) {
            int64_t f = m[r][col] % p * inv % p;
            for (int c = col; c < 4; ++c)
                m[r][c] = mod_norm(m[r][c] - f * m[col][c], p);
        }
    }
    return static_cast<int32_t>(det);
}

}  // namespace caloops
