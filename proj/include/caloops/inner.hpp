#pragma once

// Inner mappings and the two routes to "is this loop automorphic":
//
//   inner      check every standard inner mapping generator (L_{x,y}, and
//              R_{x,y}, T_x when the loop is not commutative) against the
//              multiplication table;
//   identity_a check the single identity
//              (yx)\(y(x(ab))) = ((yx)\(y(xa))) * ((yx)\(y(xb)))
//              over quadruples (x,y,a,b), exhaustively for small orders and
//              by seeded sampling above that.
//
// For commutative loops the two agree (R_{x,y} = L_{x,y} and T_x = id), which
// the tests exploit as a cross-check.

#include <array>
#include <cstdint>
#include <functional>

#include "caloops/cayley.hpp"
#include "caloops/perm.hpp"

namespace caloops {

// L_{x,y}: z -> (yx) \ (y(xz))
Permutation left_inner(const CayleyLoop& q, int32_t x, int32_t y);
// R_{x,y}: z -> ((zx)y) / (xy)
Permutation right_inner(const CayleyLoop& q, int32_t x, int32_t y);
// T_x: z -> x \ (zx)
Permutation conj_inner(const CayleyLoop& q, int32_t x);

struct InnerGenerator {
    char kind;  // 'L', 'R' or 'T'
    int32_t x;
    int32_t y;  // unused for 'T'
    Permutation perm;
};

// Streams the inner mapping generators in a fixed order: all L_{x,y} in
// lexicographic (x,y) order, then (unless commutative_only) all R_{x,y},
// then all T_x. The callback returns false to stop early.
void inner_generators(const CayleyLoop& q, bool commutative_only,
                      const std::function<bool(const InnerGenerator&)>& cb);

// First (a,b) with f(a*b) != f(a)*f(b), or {-1,-1} if f is an automorphism.
std::array<int32_t, 2> automorphism_violation(const CayleyLoop& q,
                                              const Permutation& f);
inline bool is_automorphism(const CayleyLoop& q, const Permutation& f) {
    return automorphism_violation(q, f)[0] < 0;
}

enum class AutoMethod { inner, identity_a };

struct AutomorphicOptions {
    AutoMethod method = AutoMethod::inner;
    // identity_a: exhaustive when order <= exhaustive_max_order or forced,
    // otherwise `samples` seeded random quadruples.
    int32_t exhaustive_max_order = 100;
    bool force_exhaustive = false;
    uint64_t samples = 1000000;
    uint64_t seed = 0;
};

struct AutomorphicResult {
    bool automorphic = false;
    bool exhaustive = false;  // full space covered, not a sample
    uint64_t checked = 0;     // (generator, pair) or quadruple checks done
    // On failure: L_{x,y} (or the identity above) breaks at (a,b). For a 'T'
    // witness y is -1.
    char witness_kind = 0;  // 'L', 'R', 'T' or 'A'
    std::array<int32_t, 4> witness{-1, -1, -1, -1};
};

AutomorphicResult is_automorphic(const CayleyLoop& q,
                                 const AutomorphicOptions& opt = {});

}  // namespace caloops
