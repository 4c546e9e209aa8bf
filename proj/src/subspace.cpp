#include "caloops/subspace.hpp"

#include <algorithm>
#include <sstream>

namespace caloops {

std::string Subspace3::key(int32_t p) const {
    std::ostringstream os;
    for (int i = 0; i < 12; ++i) {
        if (p >= 10 && i) os << ',';
        os << rref[i];
    }
    return os.str();
}

Subspace3 subspace_from_rows(
    int32_t p, const std::array<std::array<int32_t, 4>, 3>& rows) {
    // Gaussian elimination to RREF over Z_p
    std::array<std::array<int64_t, 4>, 3> m;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 4; ++c) m[r][c] = mod_norm(rows[r][c], p);

    int rank = 0;
    for (int col = 0; col < 4 && rank < 3; ++col) {
        int pivot = -1;
        for (int r = rank; r < 3; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        int64_t inv = mod_inv(m[rank][col], p);
        for (int c = 0; c < 4; ++c) m[rank][c] = m[rank][c] * inv % p;
        for (int r = 0; r < 3; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            int64_t f = m[r][col];
            for (int c = 0; c < 4; ++c)
                m[r][c] = mod_norm(m[r][c] - f * m[rank][c], p);
        }
        ++rank;
    }
    if (rank != 3) throw Error("subspace_from_rows: rank is not 3");

    Subspace3 s;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 4; ++c)
            s.rref[r * 4 + c] = static_cast<int32_t>(m[r][c]);
    return s;
}

std::vector<Subspace3> grassmannian3(int32_t p) {
    if (!is_prime(p)) throw Error("grassmannian3: p is not prime");
    std::vector<Subspace3> out;
    // each 3-dim subspace is the kernel of a unique dual vector f with its
    // first nonzero coordinate normalized to 1
    for (int pivot = 0; pivot < 4; ++pivot) {
        // f = (0,...,0,1,f_{pivot+1},...,f_3)
        int free_count = 3 - pivot;
        int64_t combos = 1;
        for (int i = 0; i < free_count; ++i) combos *= p;
        for (int64_t code = 0; code < combos; ++code) {
            std::array<int32_t, 4> f{};
            f[pivot] = 1;
            int64_t rem = code;
            for (int i = 3; i > pivot; --i) {
                f[i] = static_cast<int32_t>(rem % p);
                rem /= p;
            }
            // kernel basis: for each coordinate j != pivot, e_j - f_j e_pivot
            std::array<std::array<int32_t, 4>, 3> rows{};
            int r = 0;
            for (int j = 0; j < 4; ++j) {
                if (j == pivot) continue;
                rows[r][j] = 1;
                rows[r][pivot] = mod_norm(-f[j], p);
                ++r;
            }
            out.push_back(subspace_from_rows(p, rows));
        }
    }
    std::sort(out.begin(), out.end());
    int64_t expected = static_cast<int64_t>(p) * p * p + p * p + p + 1;
    if (static_cast<int64_t>(out.size()) != expected ||
        std::adjacent_find(out.begin(), out.end()) != out.end())
        throw Error("grassmannian3: enumeration produced duplicates");
    return out;
}

}  // namespace caloops
