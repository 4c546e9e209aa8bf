#pragma once

// Orbits of the induced GL2(p) action on 3-dimensional center subspaces,
// labeled against the five pinned representatives. Full group enumeration
// up to p = 7; generator BFS (two transvections plus a primitive-root
// diagonal) beyond, where enumerating all (p^2-1)(p^2-p) matrices per
// subspace stops being worth it.

#include <cstdint>
#include <string>
#include <vector>

#include "caloops/subspace.hpp"

namespace caloops {

// The pinned orbit representatives, label 1..5. Label 5 does not exist at
// p = 2 ("O5 undefined for p=2"). For odd p != 3 the O5 representative uses
// the smallest quadratic non-residue.
Subspace3 named_representative(int32_t p, int32_t label);

struct Orbit {
    std::string label;            // "O1".."O5"
    Subspace3 representative;     // the named representative
    Subspace3 representative_min; // lexicographically least member
    std::vector<Subspace3> members;  // sorted
};

struct OrbitReport {
    int32_t p = 0;
    int64_t total_subspaces = 0;
    uint64_t group_order = 0;
    std::vector<Orbit> orbits;  // in label order O1, O2, ...
};

struct OrbitOptions {
    int32_t max_p = 13;
    int32_t full_enumeration_max_p = 7;
};

// Throws "unlabeled orbit found" if the partition has an orbit containing
// no named representative.
OrbitReport compute_orbits(int32_t p, const OrbitOptions& opt = {});

}  // namespace caloops
