#include "caloops/classify.hpp"

#include "caloops/fp_loop.hpp"
#include "caloops/iso.hpp"
#include "caloops/quotient_loop.hpp"
#include "caloops/standard_loops.hpp"

namespace caloops {

namespace {

AutomorphicResult certify_automorphic(const CayleyLoop& q,
                                      const ClassifyOptions& opt,
                                      std::string& method) {
    AutomorphicOptions ao;
    ao.seed = opt.seed;
    if (opt.exhaustive) {
        ao.method = AutoMethod::identity_a;
        ao.force_exhaustive = true;
        method = "identity-a";
    } else if (q.order() <= ao.exhaustive_max_order) {
        ao.method = AutoMethod::identity_a;  // exhaustive at this size
        method = "identity-a";
    } else {
        ao.method = AutoMethod::inner;
        method = "inner";
    }
    return is_automorphic(q, ao);
}

// Is there a generator pair of the target whose induced map from the free
// loop is onto with the given subspace in its kernel? Counting forces such
// a kernel to be exactly the subspace's central subloop, so a hit means the
// target is isomorphic to the quotient by `n`.
bool onto_pair_with_kernel(const CayleyLoop& target, int32_t p,
                           const Subspace3& n) {
    // target is one of our certified quotient entries, so skip revalidation
    FreeHomContext ctx(target, p, /*assume_valid=*/true);
    for (int32_t a = 0; a < target.order(); ++a)
        for (int32_t b = 0; b < target.order(); ++b) {
            FreeHom h(ctx, a, b);
            if (h.kernel_contains(n) && h.surjective()) return true;
        }
    return false;
}

NonIsoEvidence separate(const CatalogEntry& a, const CatalogEntry& b,
                        int32_t p) {
    NonIsoEvidence ev;
    ev.other = b.name;
    if (p == 2) {
        // small enough that raw exhaustive backtracking is the certificate
        IsoOptions io;
        io.use_invariants = false;
        IsoResult r = is_isomorphic(a.loop, b.loop, io);
        if (r.status == IsoStatus::isomorphic)
            throw Error("certification failed: " + a.name + " and " + b.name +
                        " are isomorphic");
        ev.method = "backtracking";
        ev.detail = "search exhausted, " + std::to_string(r.nodes) + " nodes";
        return ev;
    }
    if (a.from_orbit && b.from_orbit) {
        // scan both directions even though one would do; the two quotients
        // certify each other
        int64_t pairs = static_cast<int64_t>(a.loop.order()) * a.loop.order();
        if (onto_pair_with_kernel(a.loop, p, b.kernel) ||
            onto_pair_with_kernel(b.loop, p, a.kernel))
            throw Error("certification failed: " + a.name + " and " + b.name +
                        " are isomorphic");
        ev.method = "hom-scan";
        ev.detail = "no onto generator pair with the other kernel, " +
                    std::to_string(pairs) + " pairs per direction";
        return ev;
    }
    std::string field = profile_difference(a.profile, b.profile);
    if (!field.empty()) {
        ev.method = "profile";
        ev.detail = field;
        return ev;
    }
    // profiles collide and the pair involves a group: fall back to search
    IsoResult r = is_isomorphic(a.loop, b.loop);
    if (r.status == IsoStatus::budget_exceeded)
        throw Error("certification failed: isomorphism search budget "
                    "exceeded for " + a.name + " and " + b.name);
    if (r.status == IsoStatus::isomorphic)
        throw Error("certification failed: " + a.name + " and " + b.name +
                    " are isomorphic");
    ev.method = "backtracking";
    ev.detail = "search exhausted, " + std::to_string(r.nodes) + " nodes";
    return ev;
}

}  // namespace

ClassificationReport classify_p3(int32_t p, const ClassifyOptions& opt) {
    if (!is_prime(p))
        throw Error("classify_p3: " + std::to_string(p) + " is not prime");
    if (p > opt.max_p)
        throw Error("classify_p3: p exceeds cap (" +
                    std::to_string(opt.max_p) + ")");

    ClassificationReport rep;
    rep.p = p;
    rep.orbits = compute_orbits(p);
    const size_t want_orbits = p == 2 ? 4 : 5;
    if (rep.orbits.orbits.size() != want_orbits)
        throw Error("certification failed: expected " +
                    std::to_string(want_orbits) + " orbits, found " +
                    std::to_string(rep.orbits.orbits.size()));

    // identity (A) on the order-p^6 free quotient, where the table fits
    if (p <= 3) {
        FpCayley big = fp_cayley(p);
        AutomorphicOptions ao;
        ao.method = AutoMethod::identity_a;
        ao.seed = opt.seed;
        ao.samples = opt.samples;
        ao.force_exhaustive = p == 2;  // 64^4 quadruples is still cheap
        rep.preamble = is_automorphic(big.loop, ao);
        rep.preamble_ran = true;
        if (!rep.preamble.automorphic)
            throw Error("certification failed: identity (A) fails on the "
                        "order-" + std::to_string(big.loop.order()) +
                        " free quotient");
    }

    const std::string ps = std::to_string(p);
    const std::vector<std::string> group_names{
        "Z" + std::to_string(p * p * p), "Z" + ps + "xZ" + std::to_string(p * p),
        "Z" + ps + "^3"};
    std::vector<CayleyLoop> groups = catalog_groups(p);
    for (int i = 0; i < 3; ++i) {
        CatalogEntry e;
        e.name = group_names[i];
        e.construction = group_names[i];
        e.loop = groups[i];
        rep.entries.push_back(std::move(e));
    }
    const int32_t last_label = p == 2 ? 4 : 5;
    for (int32_t label = 2; label <= last_label; ++label) {
        CatalogEntry e;
        e.name = "Q" + std::to_string(label);
        e.construction = "O" + std::to_string(label);
        e.from_orbit = true;
        e.kernel = named_representative(p, label);
        e.loop = quotient_loop(p, e.kernel).loop;
        rep.entries.push_back(std::move(e));
    }
    if (p == 2) {
        CatalogEntry e;
        e.name = "E8";
        e.construction = "exceptional-8";
        e.loop = exceptional_loop_8();
        rep.entries.push_back(std::move(e));
    }
    if (rep.entries.size() != 7)
        throw Error("certification failed: catalog has " +
                    std::to_string(rep.entries.size()) + " entries");

    for (CatalogEntry& e : rep.entries) {
        e.axioms = true;  // every construction above went through build_loop
        e.commutative = is_commutative(e.loop);
        if (!e.commutative)
            throw Error("certification failed: " + e.name +
                        " is not commutative");
        e.automorphic = certify_automorphic(e.loop, opt, e.auto_method);
        if (!e.automorphic.automorphic || !e.automorphic.exhaustive)
            throw Error("certification failed: " + e.name +
                        " is not certified automorphic");
        e.profile = structure_profile(e.loop);
    }

    // the O1 quotient is the one group among the quotients, and it is the
    // Z_p x Z_{p^2} already in the catalog
    CayleyLoop quo1 = quotient_loop(p, named_representative(p, 1)).loop;
    if (!is_associative(quo1))
        throw Error("certification failed: O1 quotient is not associative");
    if (is_isomorphic(quo1, groups[1]).status != IsoStatus::isomorphic)
        throw Error("certification failed: O1 quotient does not match " +
                    group_names[1]);
    rep.q1_group = group_names[1];
    int nonassoc = 0;
    for (const CatalogEntry& e : rep.entries) {
        if (e.from_orbit && e.profile.is_group)
            throw Error("certification failed: " + e.name +
                        " is associative");
        if (!e.profile.is_group) ++nonassoc;
    }
    if (nonassoc != 4)
        throw Error("certification failed: expected 4 nonassociative "
                    "entries, found " + std::to_string(nonassoc));

    for (size_t i = 0; i < rep.entries.size(); ++i)
        for (size_t j = i + 1; j < rep.entries.size(); ++j)
            rep.entries[i].noniso.push_back(
                separate(rep.entries[i], rep.entries[j], p));

    return rep;
}

}  // namespace caloops
