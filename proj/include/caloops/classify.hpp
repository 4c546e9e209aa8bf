#pragma once

// The order-p^3 catalog: three abelian groups, the quotients of the labeled
// orbit representatives, and at p = 2 the exceptional order-8 loop. Every
// entry is certified (loop axioms, commutativity, the automorphic property,
// pairwise non-isomorphism) before the report is returned; a failed
// certificate throws instead of producing an unverified catalog.

#include <cstdint>
#include <string>
#include <vector>

#include "caloops/cayley.hpp"
#include "caloops/inner.hpp"
#include "caloops/invariants.hpp"
#include "caloops/orbits.hpp"
#include "caloops/subspace.hpp"

namespace caloops {

// How a pair of catalog entries was told apart. "profile" names the first
// differing structure_profile field; "hom-scan" means no generator-image
// pair in either direction realizes an isomorphism through the free loop;
// "backtracking" means the exhaustive image search came back empty.
struct NonIsoEvidence {
    std::string other;
    std::string method;
    std::string detail;
};

struct CatalogEntry {
    std::string name;          // Z8, Z2xZ4, Z2^3, Q2..Q5, E8
    std::string construction;  // group descriptor, orbit label, exceptional-8
    CayleyLoop loop;
    StructureProfile profile;
    bool from_orbit = false;
    Subspace3 kernel;  // meaningful only when from_orbit

    // certificates
    bool axioms = false;
    bool commutative = false;
    std::string auto_method;  // identity-a or inner
    AutomorphicResult automorphic;
    std::vector<NonIsoEvidence> noniso;  // against every later entry
};

struct ClassifyOptions {
    int32_t max_p = 7;
    // force the identity-(A) quadruple sweep on every entry instead of the
    // per-size default certification method
    bool exhaustive = false;
    uint64_t samples = 1000000;  // for the p=3 free-quotient preamble
    uint64_t seed = 0;
};

struct ClassificationReport {
    int32_t p = 0;
    OrbitReport orbits;
    // identity (A) checked on the order-p^6 free quotient itself, exhaustive
    // at p=2 and sampled at p=3; skipped (ran=false) for p >= 5 where the
    // table does not fit
    bool preamble_ran = false;
    AutomorphicResult preamble;
    std::string q1_group;  // group descriptor the O1 quotient coincides with
    std::vector<CatalogEntry> entries;  // exactly 7
};

ClassificationReport classify_p3(int32_t p, const ClassifyOptions& opt = {});

}  // namespace caloops
