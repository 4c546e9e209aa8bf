#pragma once

// Reference loops: cyclic groups, direct products, the three abelian groups
// of order p^3, and the one nonassociative commutative automorphic loop of
// order 8 that is not a quotient construction (it has trivial center and is
// not nilpotent).

#include <vector>

#include "caloops/cayley.hpp"

namespace caloops {

CayleyLoop cyclic_group(int32_t n, int64_t order_cap = kDefaultOrderCap);

// Index of (i, j) is i * b.order() + j.
CayleyLoop direct_product(const CayleyLoop& a, const CayleyLoop& b,
                          int64_t order_cap = kDefaultOrderCap);

// The abelian groups of order p^3, in the fixed order
// [Z_{p^3}, Z_p x Z_{p^2}, Z_p x Z_p x Z_p].
std::vector<CayleyLoop> catalog_groups(int32_t p,
                                       int64_t order_cap = kDefaultOrderCap);

CayleyLoop exceptional_loop_8();

}  // namespace caloops
