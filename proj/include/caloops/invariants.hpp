#pragma once

// Structural invariants of a Cayley-table loop: associators, the associator
// subloop (normal closure of all associators), center and nuclei, quotients
// by normal subloops, and the isomorphism-invariant profile record used to
// separate loops cheaply before any search runs.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "caloops/cayley.hpp"

namespace caloops {

// Unique a with (xy)z = (x(yz)) * a.
inline int32_t associator(const CayleyLoop& q, int32_t x, int32_t y,
                          int32_t z) {
    return q.ldiv(q.mul(x, q.mul(y, z)), q.mul(q.mul(x, y), z));
}

// A subloop given by its sorted member list (always contains 0).
struct Subloop {
    std::vector<int32_t> members;
    int32_t size() const { return static_cast<int32_t>(members.size()); }
};

// Multiplicative closure of the given elements plus the identity. In a
// finite loop a multiplicatively closed subset is a subloop.
Subloop generated_subloop(const CayleyLoop& q,
                          const std::vector<int32_t>& gens);

bool is_subloop(const CayleyLoop& q, const Subloop& s);
// Normality = invariance under every inner mapping generator.
bool is_normal_subloop(const CayleyLoop& q, const Subloop& s);

Subloop center(const CayleyLoop& q);

struct InvariantSubsets {
    Subloop center;
    Subloop nucleus_left;
    Subloop nucleus_middle;
    Subloop nucleus_right;
    Subloop nucleus;  // intersection of the three
    Subloop associator_subloop;
};

InvariantSubsets invariant_subsets(const CayleyLoop& q);
Subloop associator_subloop(const CayleyLoop& q);

// Quotient by a normal subloop. Cosets are numbered by their smallest
// element in increasing order, so the identity coset is 0. Checks that the
// coset product is well defined and throws otherwise.
struct QuotientResult {
    CayleyLoop loop;
    std::vector<int32_t> coset_of;  // element index -> coset index
};
QuotientResult quotient(const CayleyLoop& q, const Subloop& n);

bool is_associative(const CayleyLoop& q);
bool is_commutative(const CayleyLoop& q);
// All-splits criterion: x^i * x^j = x^(i+j) for all i,j >= 1, i+j <= order.
bool is_power_associative(const CayleyLoop& q);

struct StructureProfile {
    std::map<int32_t, int32_t> order_spectrum;  // element order -> count
    int32_t center_size = 0;
    int32_t associator_subloop_size = 0;
    // Number of iterated center quotients until trivial; empty when the
    // center series stalls (loop is not centrally nilpotent).
    std::optional<int32_t> nilpotency_class;
    bool is_group = false;
    bool is_commutative = false;
    bool is_power_associative = false;

    bool operator==(const StructureProfile&) const = default;
};

StructureProfile structure_profile(const CayleyLoop& q);

// Name of the first field in which the two profiles differ, empty if equal.
// Used as non-isomorphism evidence in reports.
std::string profile_difference(const StructureProfile& a,
                               const StructureProfile& b);

std::string profile_to_string(const StructureProfile& p);

}  // namespace caloops
