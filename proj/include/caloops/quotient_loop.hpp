#pragma once

// Order-p^3 quotients of the order-p^6 free quotient by central subloops,
// built directly on coset representatives (no p^6 table), plus evaluation
// of generator-image homomorphisms from the free loop into candidate
// targets. Together these implement the translation between subspace orbits
// and loop isomorphism classes.

#include <array>
#include <cstdint>
#include <vector>

#include "caloops/cayley.hpp"
#include "caloops/fp_loop.hpp"
#include "caloops/subspace.hpp"

namespace caloops {

// Quotient by the central subloop {(0,0,c) : c in N}. Cosets are indexed by
// (a1, a2, t) mixed radix, where t is a fixed linear functional on the
// center that vanishes exactly on N. Identity coset is 0.
struct FpQuotient {
    int32_t p = 0;
    Subspace3 kernel;
    std::array<int32_t, 4> dual{};     // f with N = ker f, first nonzero 1
    std::array<int32_t, 4> section{};  // e with f.e = 1
    CayleyLoop loop;
    int32_t gen_x = 0, gen_y = 0;  // coset indices of the generators

    int64_t index_of(const FpElement& u) const;
    FpElement rep_of(int64_t idx) const;
};

FpQuotient quotient_loop(int32_t p, const Subspace3& n);

// Shared per-target state for generator-image homomorphism scans. The
// constructor certifies the target is in the right variety: order p^3,
// commutative, automorphic, exponent dividing p^2, associators of order
// dividing p. Throws "target outside variety" otherwise. Certification can
// be skipped when the caller has already certified the same loop.
class FreeHomContext {
public:
    FreeHomContext(const CayleyLoop& q, int32_t p, bool assume_valid = false);

    const CayleyLoop& target() const { return *q_; }
    int32_t p() const { return p_; }

private:
    const CayleyLoop* q_;
    int32_t p_;
};

// The homomorphism from the free loop determined by x -> a, y -> b,
// evaluated through canonical words in the target.
class FreeHom {
public:
    FreeHom(const FreeHomContext& ctx, int32_t a, int32_t b);

    // image of the 6-coordinate canonical form
    int32_t image(const FpElement& u) const;
    // do the three basis vectors of N (as central elements) map to 0?
    bool kernel_contains(const Subspace3& n) const;
    bool surjective() const;  // <a, b> is the whole target

    int32_t a() const { return a_; }
    int32_t b() const { return b_; }

private:
    const CayleyLoop* q_;
    int32_t p_, a_, b_;
    // per canonical slot: left-bracketed powers of a, b, a^p, b^p and the
    // two associators, exponents 0..p-1
    std::array<std::vector<int32_t>, 6> pow_;
};

// One-shot form; validates the target each call. Scans over many generator
// pairs should construct the context once instead.
FreeHom hom_from_free(int32_t p, const CayleyLoop& q, int32_t a, int32_t b);

// Partition of grassmannian3(p) into loop-isomorphism classes: N1 ~ N2 when
// some generator pair of the N1-quotient realizes a surjective homomorphism
// from the free loop with kernel containing N2. Classes are listed in order
// of their first member; members stay in canonical order.
struct FreeIsoClasses {
    int32_t p = 0;
    std::vector<std::vector<Subspace3>> classes;
};

FreeIsoClasses iso_classes_via_free(int32_t p);

}  // namespace caloops
