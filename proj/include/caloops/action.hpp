#pragma once

// The 4x4 matrix describing how a generator substitution acts on the center
// coordinates (x^p, y^p, (x,x,y), (x,y,y)). Rows are images of basis
// vectors; center vectors are rows multiplied on the right, so the map
// "apply rho then sigma" corresponds to the ordinary matrix product
// action_matrix(rho) * action_matrix(sigma).

#include <array>
#include <cstdint>

#include "caloops/gl2.hpp"
#include "caloops/subspace.hpp"

namespace caloops {

struct ActionMatrix {
    std::array<int32_t, 16> m{};  // row-major 4x4

    bool operator==(const ActionMatrix&) const = default;
};

ActionMatrix action_matrix(int32_t p, const Mat2& rho);

ActionMatrix action_mul(int32_t p, const ActionMatrix& a,
                        const ActionMatrix& b);

std::array<int32_t, 4> apply_vector(int32_t p, const std::array<int32_t, 4>& v,
                                    const ActionMatrix& a);

Subspace3 apply_subspace(int32_t p, const Subspace3& s, const ActionMatrix& a);

// Determinant mod p by elimination; nonzero for every induced matrix.
int32_t action_det(int32_t p, const ActionMatrix& a);

}  // namespace caloops
