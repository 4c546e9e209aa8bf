#include "caloops/orbits.hpp"

#include <algorithm>
#include <map>

#include "caloops/action.hpp"
#include "caloops/gl2.hpp"

namespace caloops {

Subspace3 named_representative(int32_t p, int32_t label) {
    if (!is_prime(p)) throw Error("named_representative: p is not prime");
    if (label < 1 || label > 5)
        throw Error("named_representative: label out of range");
    if (p == 2 && label == 5)
        throw Error("named_representative: O5 undefined for p=2");

    using Rows = std::array<std::array<int32_t, 4>, 3>;
    // basis order: x^p, y^p, (x,x,y), (x,y,y)
    switch (label) {
        case 1:  // <x^p> + both associators
            return subspace_from_rows(
                p, Rows{{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}});
        case 2:  // <x^p, y^p, (x,x,y)>
            return subspace_from_rows(
                p, Rows{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}});
        default:
            break;
    }
    if (p == 3) {
        switch (label) {
            case 3:  // x^p + (x,y,y), y^p, (x,x,y)
                return subspace_from_rows(
                    p, Rows{{{1, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}}});
            case 4:  // x^p - (x,y,y), y^p, (x,x,y)
                return subspace_from_rows(
                    p, Rows{{{1, 0, 0, 2}, {0, 1, 0, 0}, {0, 0, 1, 0}}});
            default:  // x^p - (x,y,y), y^p + (x,y,y), (x,x,y)
                return subspace_from_rows(
                    p, Rows{{{1, 0, 0, 2}, {0, 1, 0, 1}, {0, 0, 1, 0}}});
        }
    }
    switch (label) {
        case 3:  // x^p, y^p + (x,y,y), (x,x,y)
            return subspace_from_rows(
                p, Rows{{{1, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}}});
        case 4:  // x^p + (x,y,y), y^p, (x,x,y)
            return subspace_from_rows(
                p, Rows{{{1, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}}});
        default: {  // lambda x^p + (x,y,y), y^p, (x,x,y)
            int32_t lambda = smallest_nonresidue(p);
            return subspace_from_rows(
                p, Rows{{{lambda, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}}});
        }
    }
}

namespace {

// Orbit of one subspace under the whole group (matrices precomputed).
std::vector<Subspace3> orbit_full(int32_t p, const Subspace3& s,
                                  const std::vector<ActionMatrix>& mats) {
    std::vector<Subspace3> out;
    for (const auto& m : mats) out.push_back(apply_subspace(p, s, m));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Orbit by BFS over a generating set of GL2(p).
std::vector<Subspace3> orbit_bfs(int32_t p, const Subspace3& s,
                                 const std::vector<ActionMatrix>& gens) {
    std::vector<Subspace3> frontier{s}, all{s};
    while (!frontier.empty()) {
        std::vector<Subspace3> next;
        for (const auto& t : frontier)
            for (const auto& g : gens) {
                Subspace3 u = apply_subspace(p, t, g);
                if (!std::binary_search(all.begin(), all.end(), u))
                    next.push_back(u);
            }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        std::vector<Subspace3> merged;
        std::set_union(all.begin(), all.end(), next.begin(), next.end(),
                       std::back_inserter(merged));
        all = std::move(merged);
        frontier = std::move(next);
    }
    return all;
}

std::vector<ActionMatrix> bfs_generators(int32_t p) {
    // two transvections generate SL2(p); a primitive-root diagonal extends
    // to the full group
    std::vector<Mat2> gens = {{1, 1, 0, 1}, {1, 0, 1, 1}};
    for (int32_t g = 2; g < p; ++g) {
        int64_t v = g;
        int32_t ord = 1;
        while (v != 1) {
            v = v * g % p;
            ++ord;
        }
        if (ord == p - 1) {
            gens.push_back({g, 0, 0, 1});
            break;
        }
    }
    std::vector<ActionMatrix> out;
    for (const auto& m : gens) out.push_back(action_matrix(p, m));
    return out;
}

}  // namespace

OrbitReport compute_orbits(int32_t p, const OrbitOptions& opt) {
    if (!is_prime(p)) throw Error("compute_orbits: p is not prime");
    if (p > opt.max_p)
        throw Error("compute_orbits: p exceeds cap (" +
                    std::to_string(opt.max_p) + ")");

    std::vector<Subspace3> all = grassmannian3(p);
    bool full = p <= opt.full_enumeration_max_p;
    std::vector<ActionMatrix> mats;
    if (full)
        for (const auto& m : gl2_enumerate(p))
            mats.push_back(action_matrix(p, m));
    else
        mats = bfs_generators(p);

    std::map<Subspace3, int32_t> orbit_of;
    std::vector<std::vector<Subspace3>> raw_orbits;
    for (const auto& s : all) {
        if (orbit_of.count(s)) continue;
        auto members = full ? orbit_full(p, s, mats) : orbit_bfs(p, s, mats);
        int32_t id = static_cast<int32_t>(raw_orbits.size());
        for (const auto& m : members) orbit_of[m] = id;
        raw_orbits.push_back(std::move(members));
    }

    OrbitReport rep;
    rep.p = p;
    rep.total_subspaces = static_cast<int64_t>(all.size());
    rep.group_order = gl2_order(p);

    int32_t max_label = p == 2 ? 4 : 5;
    std::vector<char> claimed(raw_orbits.size(), 0);
    for (int32_t label = 1; label <= max_label; ++label) {
        Subspace3 r = named_representative(p, label);
        auto it = orbit_of.find(r);
        if (it == orbit_of.end())
            throw Error("compute_orbits: representative missing");  // cannot happen
        int32_t id = it->second;
        if (claimed[id])
            throw Error("compute_orbits: representatives O" +
                        std::to_string(label) + " and an earlier one share "
                        "an orbit");
        claimed[id] = 1;
        Orbit o;
        o.label = "O" + std::to_string(label);
        o.representative = r;
        o.members = raw_orbits[id];
        o.representative_min = o.members.front();
        rep.orbits.push_back(std::move(o));
    }
    for (size_t i = 0; i < raw_orbits.size(); ++i)
        if (!claimed[i]) throw Error("compute_orbits: unlabeled orbit found");
    return rep;
}

}  // namespace caloops
