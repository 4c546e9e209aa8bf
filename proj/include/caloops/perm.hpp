#pragma once

// Permutations of {0..n-1} as image vectors.

#include <cstdint>
#include <vector>

#include "caloops/common.hpp"

namespace caloops {

struct Permutation {
    std::vector<int32_t> img;

    int32_t size() const { return static_cast<int32_t>(img.size()); }
    int32_t operator()(int32_t x) const { return img[x]; }

    static Permutation identity(int32_t n) {
        Permutation p;
        p.img.resize(n);
        for (int32_t i = 0; i < n; ++i) p.img[i] = i;
        return p;
    }

    bool is_identity() const {
        for (int32_t i = 0; i < size(); ++i)
            if (img[i] != i) return false;
        return true;
    }

    // (a.then(b))(x) = b(a(x))
    Permutation then(const Permutation& b) const {
        Permutation r;
        r.img.resize(img.size());
        for (size_t i = 0; i < img.size(); ++i) r.img[i] = b.img[img[i]];
        return r;
    }

    Permutation inverse() const {
        Permutation r;
        r.img.resize(img.size());
        for (size_t i = 0; i < img.size(); ++i)
            r.img[img[i]] = static_cast<int32_t>(i);
        return r;
    }

    bool operator==(const Permutation& o) const { return img == o.img; }
};

}  // namespace caloops
