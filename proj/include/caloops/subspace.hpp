#pragma once

// 3-dimensional subspaces of (Z_p)^4 in canonical reduced row echelon form.
// Two subspaces are equal iff their RREF bases are identical, which makes
// the canonical key a stable dictionary key for orbit bookkeeping.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "caloops/common.hpp"

namespace caloops {

struct Subspace3 {
    // 3x4 row-major RREF basis
    std::array<int32_t, 12> rref{};

    bool operator==(const Subspace3&) const = default;
    auto operator<=>(const Subspace3&) const = default;

    // Flattened row-major digits; single characters for p < 10, else
    // comma-separated.
    std::string key(int32_t p) const;
};

// Canonicalize the span of three row vectors; throws if the rank is not 3.
Subspace3 subspace_from_rows(int32_t p,
                             const std::array<std::array<int32_t, 4>, 3>& rows);

// All 3-dimensional subspaces, sorted by canonical basis. Exactly
// p^3 + p^2 + p + 1 of them, enumerated through their 1-dimensional duals.
std::vector<Subspace3> grassmannian3(int32_t p);

}  // namespace caloops
