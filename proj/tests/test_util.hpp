#pragma once

// Shared helpers for the test binaries: exception message capture, a small
// nonabelian group, and seeded random loop construction used to manufacture
// counterexamples (non-automorphic and non-power-associative loops).

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "caloops/cayley.hpp"
#include "caloops/common.hpp"
#include "caloops/rng.hpp"

namespace caloops_test {

// Runs fn and returns the caloops::Error message, or "" if nothing threw.
template <typename Fn>
std::string thrown_message(Fn&& fn) {
    try {
        fn();
    } catch (const caloops::Error& e) {
        return e.what();
    }
    return "";
}

inline bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

// S3 as a Cayley table: elements are the permutations of {0,1,2} listed with
// the identity first, product = apply left factor after right factor.
inline caloops::CayleyLoop symmetric_group_3() {
    static const int32_t perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto find = [](const int32_t* img) {
        for (int32_t i = 0; i < 6; ++i) {
            if (perms[i][0] == img[0] && perms[i][1] == img[1] &&
                perms[i][2] == img[2])
                return i;
        }
        return int32_t{-1};
    };
    std::vector<int32_t> t(36);
    for (int32_t a = 0; a < 6; ++a) {
        for (int32_t b = 0; b < 6; ++b) {
            int32_t img[3];
            for (int32_t x = 0; x < 3; ++x) img[x] = perms[a][perms[b][x]];
            t[a * 6 + b] = find(img);
        }
    }
    return caloops::build_loop(6, t);
}

// Random symmetric Latin square with identity row 0, by randomized cell fill
// with backtracking. Returns an empty vector when the attempt dead-ends so
// callers can reseed and retry.
inline std::vector<int32_t> random_commutative_table(int32_t n,
                                                     caloops::SplitMix64& rng) {
    std::vector<int32_t> t(n * n, -1);
    for (int32_t i = 0; i < n; ++i) {
        t[0 * n + i] = i;
        t[i * n + 0] = i;
    }
    // Fill the upper triangle cell by cell, mirroring into the lower one.
    std::vector<std::pair<int32_t, int32_t>> cells;
    for (int32_t a = 1; a < n; ++a)
        for (int32_t b = a; b < n; ++b) cells.push_back({a, b});

    std::function<bool(size_t)> fill = [&](size_t k) {
        if (k == cells.size()) return true;
        auto [a, b] = cells[k];
        std::vector<int32_t> cand;
        for (int32_t v = 0; v < n; ++v) {
            bool ok = true;
            for (int32_t j = 0; j < n && ok; ++j)
                if (t[a * n + j] == v || t[j * n + b] == v ||
                    (a != b && (t[b * n + j] == v || t[j * n + a] == v)))
                    ok = false;
            if (ok) cand.push_back(v);
        }
        for (size_t i = cand.size(); i > 1; --i)
            std::swap(cand[i - 1], cand[rng.below(i)]);
        for (int32_t v : cand) {
            t[a * n + b] = v;
            t[b * n + a] = v;
            if (fill(k + 1)) return true;
            t[a * n + b] = -1;
            t[b * n + a] = -1;
        }
        return false;
    };
    if (!fill(0)) return {};
    return t;
}

inline caloops::CayleyLoop random_commutative_loop(int32_t n, uint64_t seed) {
    for (uint64_t attempt = 0;; ++attempt) {
        caloops::SplitMix64 rng(seed + attempt);
        auto t = random_commutative_table(n, rng);
        if (!t.empty()) return caloops::build_loop(n, t);
    }
}

}  // namespace caloops_test
