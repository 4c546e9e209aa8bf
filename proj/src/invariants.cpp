#include "caloops/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "caloops/inner.hpp"

namespace caloops {

namespace {

// Membership bitmap of a sorted member list.
std::vector<char> member_flags(int32_t n, const std::vector<int32_t>& m) {
    std::vector<char> f(n, 0);
    for (int32_t x : m) f[x] = 1;
    return f;
}

}  // namespace

Subloop generated_subloop(const CayleyLoop& q,
                          const std::vector<int32_t>& gens) {
    int32_t n = q.order();
    std::vector<char> in(n, 0);
    std::vector<int32_t> members;
    auto add = [&](int32_t x) {
        if (!in[x]) {
            in[x] = 1;
            members.push_back(x);
        }
    };
    add(0);
    for (int32_t g : gens) {
        if (g < 0 || g >= n) throw Error("generated_subloop: element out of range");
        add(g);
    }
    // worklist closure under products in both orders
    for (size_t i = 0; i < members.size(); ++i) {
        int32_t a = members[i];
        for (size_t j = 0; j <= i; ++j) {
            int32_t b = members[j];
            add(q.mul(a, b));
            add(q.mul(b, a));
        }
    }
    std::sort(members.begin(), members.end());
    return Subloop{members};
}

bool is_subloop(const CayleyLoop& q, const Subloop& s) {
    if (s.members.empty() || s.members[0] != 0) return false;
    auto in = member_flags(q.order(), s.members);
    for (int32_t a : s.members)
        for (int32_t b : s.members)
            if (!in[q.mul(a, b)]) return false;
    return true;
}

bool is_normal_subloop(const CayleyLoop& q, const Subloop& s) {
    auto in = member_flags(q.order(), s.members);
    bool normal = true;
    inner_generators(q, false, [&](const InnerGenerator& g) {
        for (int32_t m : s.members)
            if (!in[g.perm.img[m]]) {
                normal = false;
                return false;
            }
        return true;
    });
    return normal;
}

namespace {

// One element's nucleus membership, with early exit. which: 0 left, 1 middle,
// 2 right.
bool in_nucleus(const CayleyLoop& q, int32_t x, int which) {
    int32_t n = q.order();
    for (int32_t a = 0; a < n; ++a)
        for (int32_t b = 0; b < n; ++b) {
            bool ok;
            switch (which) {
                case 0: ok = q.mul(q.mul(x, a), b) == q.mul(x, q.mul(a, b)); break;
                case 1: ok = q.mul(q.mul(a, x), b) == q.mul(a, q.mul(x, b)); break;
                default: ok = q.mul(q.mul(a, b), x) == q.mul(a, q.mul(b, x)); break;
            }
            if (!ok) return false;
        }
    return true;
}

bool commutes_with_all(const CayleyLoop& q, int32_t x) {
    int32_t n = q.order();
    for (int32_t a = 0; a < n; ++a)
        if (q.mul(x, a) != q.mul(a, x)) return false;
    return true;
}

}  // namespace

Subloop center(const CayleyLoop& q) {
    int32_t n = q.order();
    std::vector<int32_t> m;
    for (int32_t x = 0; x < n; ++x)
        if (commutes_with_all(q, x) && in_nucleus(q, x, 0) &&
            in_nucleus(q, x, 1) && in_nucleus(q, x, 2))
            m.push_back(x);
    return Subloop{m};
}

InvariantSubsets invariant_subsets(const CayleyLoop& q) {
    int32_t n = q.order();
    InvariantSubsets r;
    std::vector<char> nl(n), nm(n), nr(n);
    for (int32_t x = 0; x < n; ++x) {
        nl[x] = in_nucleus(q, x, 0);
        nm[x] = in_nucleus(q, x, 1);
        nr[x] = in_nucleus(q, x, 2);
        if (nl[x]) r.nucleus_left.members.push_back(x);
        if (nm[x]) r.nucleus_middle.members.push_back(x);
        if (nr[x]) r.nucleus_right.members.push_back(x);
        if (nl[x] && nm[x] && nr[x]) {
            r.nucleus.members.push_back(x);
            if (commutes_with_all(q, x)) r.center.members.push_back(x);
        }
    }
    r.associator_subloop = associator_subloop(q);
    return r;
}

Subloop associator_subloop(const CayleyLoop& q) {
    int32_t n = q.order();
    // all associator values first
    std::vector<char> seen(n, 0);
    std::vector<int32_t> gens;
    for (int32_t x = 0; x < n; ++x)
        for (int32_t y = 0; y < n; ++y) {
            for (int32_t z = 0; z < n; ++z) {
                int32_t a = associator(q, x, y, z);
                if (!seen[a]) {
                    seen[a] = 1;
                    gens.push_back(a);
                }
            }
        }
    // normal closure: alternate inner-mapping sweeps and subloop closure
    Subloop s = generated_subloop(q, gens);
    for (;;) {
        auto in = member_flags(n, s.members);
        std::vector<int32_t> fresh;
        inner_generators(q, false, [&](const InnerGenerator& g) {
            for (int32_t m : s.members) {
                int32_t im = g.perm.img[m];
                if (!in[im]) {
                    in[im] = 1;
                    fresh.push_back(im);
                }
            }
            return true;
        });
        if (fresh.empty()) break;
        std::vector<int32_t> all = s.members;
        all.insert(all.end(), fresh.begin(), fresh.end());
        s = generated_subloop(q, all);
    }
    return s;
}

QuotientResult quotient(const CayleyLoop& q, const Subloop& nsub) {
    int32_t n = q.order();
    if (!is_subloop(q, nsub)) throw Error("quotient: not a subloop");
    if (!is_normal_subloop(q, nsub))
        throw Error("quotient: subloop not normal");
    int32_t k = nsub.size();
    if (n % k != 0) throw Error("quotient: subloop size does not divide order");
    int32_t m = n / k;

    // number cosets by smallest element, in increasing order
    std::vector<int32_t> coset(n, -1), reps;
    for (int32_t x = 0; x < n; ++x) {
        if (coset[x] >= 0) continue;
        int32_t id = static_cast<int32_t>(reps.size());
        reps.push_back(x);
        for (int32_t w : nsub.members) {
            int32_t xw = q.mul(x, w);
            if (coset[xw] >= 0 && coset[xw] != id)
                throw Error("quotient: cosets do not partition the loop");
            coset[xw] = id;
        }
    }
    if (static_cast<int32_t>(reps.size()) != m)
        throw Error("quotient: cosets do not partition the loop");

    // products must be constant on cosets
    std::vector<int32_t> table(static_cast<size_t>(m) * m, -1);
    for (int32_t a = 0; a < n; ++a)
        for (int32_t b = 0; b < n; ++b) {
            int32_t i = coset[a], j = coset[b], v = coset[q.mul(a, b)];
            int32_t& cell = table[i * m + j];
            if (cell < 0)
                cell = v;
            else if (cell != v)
                throw Error("quotient: product is not well defined on cosets");
        }
    return {build_loop(m, table), std::move(coset)};
}

bool is_associative(const CayleyLoop& q) {
    int32_t n = q.order();
    for (int32_t x = 0; x < n; ++x)
        for (int32_t y = 0; y < n; ++y) {
            int32_t xy = q.mul(x, y);
            for (int32_t z = 0; z < n; ++z)
                if (q.mul(xy, z) != q.mul(x, q.mul(y, z))) return false;
        }
    return true;
}

bool is_commutative(const CayleyLoop& q) {
    int32_t n = q.order();
    for (int32_t a = 0; a < n; ++a)
        for (int32_t b = a + 1; b < n; ++b)
            if (q.mul(a, b) != q.mul(b, a)) return false;
    return true;
}

bool is_power_associative(const CayleyLoop& q) {
    int32_t n = q.order();
    std::vector<int32_t> pow(n + 1);
    for (int32_t x = 0; x < n; ++x) {
        pow[0] = 0;
        for (int32_t k = 1; k <= n; ++k) pow[k] = q.mul(pow[k - 1], x);
        for (int32_t i = 1; i < n; ++i)
            for (int32_t j = 1; i + j <= n; ++j)
                if (q.mul(pow[i], pow[j]) != pow[i + j]) return false;
    }
    return true;
}

StructureProfile structure_profile(const CayleyLoop& q) {
    StructureProfile p;
    int32_t n = q.order();
    for (int32_t x = 0; x < n; ++x) ++p.order_spectrum[q.element_order(x)];
    p.is_commutative = is_commutative(q);
    p.is_group = is_associative(q);
    p.is_power_associative = p.is_group || is_power_associative(q);
    p.associator_subloop_size = associator_subloop(q).size();

    Subloop z = center(q);
    p.center_size = z.size();

    // central series by iterated center quotients
    CayleyLoop cur = q;
    Subloop zc = z;
    int32_t cls = 0;
    while (cur.order() > 1) {
        if (zc.size() == 1) {
            p.nilpotency_class = std::nullopt;
            return p;
        }
        cur = quotient(cur, zc).loop;
        zc = center(cur);
        ++cls;
    }
    p.nilpotency_class = cls;
    return p;
}

std::string profile_difference(const StructureProfile& a,
                               const StructureProfile& b) {
    if (a.order_spectrum != b.order_spectrum) return "order_spectrum";
    if (a.center_size != b.center_size) return "center_size";
    if (a.associator_subloop_size != b.associator_subloop_size)
        return "associator_subloop_size";
    if (a.nilpotency_class != b.nilpotency_class) return "nilpotency_class";
    if (a.is_group != b.is_group) return "is_group";
    if (a.is_commutative != b.is_commutative) return "is_commutative";
    if (a.is_power_associative != b.is_power_associative)
        return "is_power_associative";
    return "";
}

std::string profile_to_string(const StructureProfile& p) {
    std::ostringstream os;
    os << "orders{";
    bool first = true;
    for (auto [k, v] : p.order_spectrum) {
        if (!first) os << ",";
        first = false;
        os << k << ":" << v;
    }
    os << "} center=" << p.center_size
       << " assoc_subloop=" << p.associator_subloop_size << " nilpotency=";
    if (p.nilpotency_class)
        os << *p.nilpotency_class;
    else
        os << "none";
    os << (p.is_group ? " group" : " nonassociative")
       << (p.is_commutative ? " commutative" : " noncommutative")
       << (p.is_power_associative ? " power-associative"
                                  : " not-power-associative");
    return os.str();
}

}  // namespace caloops
