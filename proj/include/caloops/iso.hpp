#pragma once

// Table isomorphism search: backtracking over element images with forward
// propagation (every known product forces the image of its result). The
// search is exhaustive, so "no isomorphism found" is a proof, subject to the
// node budget; running out of budget is reported as its own status, never
// as a negative answer.

#include <cstdint>
#include <vector>

#include "caloops/cayley.hpp"

namespace caloops {

enum class IsoStatus { isomorphic, not_isomorphic, budget_exceeded };

struct IsoOptions {
    uint64_t node_budget = 10000000;
    // When true, candidate images are restricted to elements with the same
    // (element order, center membership, associator subloop membership)
    // signature, and mismatched signature multisets reject immediately.
    // When false the search is pure backtracking plus propagation; slower
    // but free of any invariant reasoning.
    bool use_invariants = true;
};

struct IsoResult {
    IsoStatus status = IsoStatus::not_isomorphic;
    std::vector<int32_t> map;  // image of each element when isomorphic
    uint64_t nodes = 0;        // assignments attempted (decisions + forced)
};

IsoResult is_isomorphic(const CayleyLoop& q1, const CayleyLoop& q2,
                        const IsoOptions& opt = {});

}  // namespace caloops
