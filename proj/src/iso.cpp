#include "caloops/iso.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "caloops/invariants.hpp"

namespace caloops {

namespace {

using Sig = std::tuple<int32_t, bool, bool>;

std::vector<Sig> signatures(const CayleyLoop& q) {
    int32_t n = q.order();
    std::vector<Sig> sig(n);
    std::vector<char> in_z(n, 0), in_a(n, 0);
    for (int32_t x : center(q).members) in_z[x] = 1;
    for (int32_t x : associator_subloop(q).members) in_a[x] = 1;
    for (int32_t x = 0; x < n; ++x)
        sig[x] = {q.element_order(x), in_z[x] != 0, in_a[x] != 0};
    return sig;
}

struct Search {
    const CayleyLoop& q1;
    const CayleyLoop& q2;
    int32_t n;
    uint64_t budget;
    bool exceeded = false;
    uint64_t nodes = 0;

    std::vector<int32_t> phi;     // image in q2, -1 unassigned
    std::vector<char> used;       // q2 elements taken
    std::vector<int32_t> mapped;  // q1 elements in assignment order

    // use_invariants: per q1 element, its candidate list in q2
    std::vector<const std::vector<int32_t>*> candidates;
    std::vector<int32_t> all_elements;

    Search(const CayleyLoop& a, const CayleyLoop& b, uint64_t budget_)
        : q1(a), q2(b), n(a.order()), budget(budget_),
          phi(n, -1), used(n, 0) {}

    bool assign(int32_t u, int32_t v) {
        if (++nodes > budget) {
            exceeded = true;
            return false;
        }
        phi[u] = v;
        used[v] = 1;
        mapped.push_back(u);
        return true;
    }

    void undo_to(size_t mark) {
        while (mapped.size() > mark) {
            int32_t u = mapped.back();
            mapped.pop_back();
            used[phi[u]] = 0;
            phi[u] = -1;
        }
    }

    // Check/extend all products between newly mapped elements (from index
    // `from` onward) and everything mapped before them.
    bool propagate(size_t from) {
        for (size_t i = from; i < mapped.size(); ++i) {
            int32_t u = mapped[i], v = phi[u];
            for (size_t j = 0; j <= i; ++j) {
                int32_t w = mapped[j], fw = phi[w];
                int32_t d = q1.mul(u, w), e = q2.mul(v, fw);
                if (phi[d] < 0) {
                    if (used[e]) return false;
                    if (!assign(d, e)) return false;
                } else if (phi[d] != e) {
                    return false;
                }
                d = q1.mul(w, u);
                e = q2.mul(fw, v);
                if (phi[d] < 0) {
                    if (used[e]) return false;
                    if (!assign(d, e)) return false;
                } else if (phi[d] != e) {
                    return false;
                }
            }
        }
        return true;
    }

    bool dfs() {
        if (exceeded) return false;
        int32_t a = -1;
        for (int32_t x = 0; x < n; ++x)
            if (phi[x] < 0) {
                a = x;
                break;
            }
        if (a < 0) return true;  // everything mapped and verified
        const std::vector<int32_t>& cand =
            candidates.empty() ? all_elements : *candidates[a];
        for (int32_t c : cand) {
            if (used[c]) continue;
            size_t mark = mapped.size();
            if (assign(a, c) && propagate(mark) && dfs()) return true;
            undo_to(mark);
            if (exceeded) return false;
        }
        return false;
    }
};

}  // namespace

IsoResult is_isomorphic(const CayleyLoop& q1, const CayleyLoop& q2,
                        const IsoOptions& opt) {
    IsoResult res;
    if (q1.order() != q2.order()) {
        res.status = IsoStatus::not_isomorphic;
        return res;
    }
    int32_t n = q1.order();
    Search s(q1, q2, opt.node_budget);

    std::map<Sig, std::vector<int32_t>> classes2;
    std::vector<Sig> sig1;
    if (opt.use_invariants) {
        if (!profile_difference(structure_profile(q1), structure_profile(q2))
                 .empty()) {
            res.status = IsoStatus::not_isomorphic;
            return res;
        }
        sig1 = signatures(q1);
        std::vector<Sig> sig2 = signatures(q2);
        for (int32_t x = 0; x < n; ++x) classes2[sig2[x]].push_back(x);
        // signature multisets must agree
        std::map<Sig, int32_t> count1;
        for (auto& g : sig1) ++count1[g];
        bool match = count1.size() == classes2.size();
        if (match)
            for (auto& [k, v] : count1) {
                auto it = classes2.find(k);
                if (it == classes2.end() ||
                    static_cast<int32_t>(it->second.size()) != v) {
                    match = false;
                    break;
                }
            }
        if (!match) {
            res.status = IsoStatus::not_isomorphic;
            return res;
        }
        s.candidates.resize(n);
        for (int32_t x = 0; x < n; ++x)
            s.candidates[x] = &classes2[sig1[x]];
    } else {
        s.all_elements.resize(n);
        for (int32_t x = 0; x < n; ++x) s.all_elements[x] = x;
    }

    // identity maps to identity in any loop isomorphism
    bool found = s.assign(0, 0) && s.propagate(0) && s.dfs();
    res.nodes = s.nodes;
    if (s.exceeded) {
        res.status = IsoStatus::budget_exceeded;
        return res;
    }
    if (found) {
        res.status = IsoStatus::isomorphic;
        res.map = s.phi;
        return res;
    }
    res.status = IsoStatus::not_isomorphic;
    return res;
}

}  // namespace caloops
