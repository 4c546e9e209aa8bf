#include "caloops/quotient_loop.hpp"

#include <cassert>

#include "caloops/inner.hpp"
#include "caloops/invariants.hpp"

namespace caloops {

int64_t FpQuotient::index_of(const FpElement& u) const {
    int64_t t = 0;
    for (int j = 0; j < 4; ++j) t += static_cast<int64_t>(dual[j]) * u.c[2 + j];
    return (static_cast<int64_t>(u.c[0]) * p + u.c[1]) * p + mod_norm(t, p);
}

FpElement FpQuotient::rep_of(int64_t idx) const {
    FpElement u;
    int32_t t = static_cast<int32_t>(idx % p);
    u.c[1] = static_cast<int32_t>((idx / p) % p);
    u.c[0] = static_cast<int32_t>(idx / p / p);
    for (int j = 0; j < 4; ++j)
        u.c[2 + j] = mod_norm(static_cast<int64_t>(t) * section[j], p);
    return u;
}

// (a1, a2, f.central) is constant on cosets of {(0,0,c) : c in N} and
// separates them, because central elements multiply coordinatewise and f
// kills exactly N. The three values in mixed radix give the coset index.
FpQuotient quotient_loop(int32_t p, const Subspace3& n) {
    FpQuotient out;
    out.p = p;
    out.kernel = n;

    // Solve rref . f = 0. The null space is one-dimensional: put 1 in the
    // free column, minus the column entry at each pivot.
    std::array<bool, 4> is_pivot{};
    std::array<int32_t, 3> pivot_col{};
    for (int r = 0; r < 3; ++r) {
        int c = 0;
        while (c < 4 && n.rref[r * 4 + c] == 0) ++c;
        pivot_col[r] = c;
        is_pivot[c] = true;
    }
    int free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    out.dual[free_col] = 1;
    for (int r = 0; r < 3; ++r)
        out.dual[pivot_col[r]] = mod_norm(-n.rref[r * 4 + free_col], p);

    // Normalize the leading entry of f to 1, then pick the section e with
    // f.e = 1 supported on that coordinate.
    int lead = 0;
    while (out.dual[lead] == 0) ++lead;
    int64_t inv = mod_inv(out.dual[lead], p);
    for (int j = 0; j < 4; ++j)
        out.dual[j] = mod_norm(out.dual[j] * inv, p);
    out.section[lead] = mod_inv(out.dual[lead], p);

#ifndef NDEBUG
    for (int r = 0; r < 3; ++r) {
        int64_t dot = 0;
        for (int j = 0; j < 4; ++j)
            dot += static_cast<int64_t>(n.rref[r * 4 + j]) * out.dual[j];
        assert(dot % p == 0 && "dual does not annihilate the kernel");
    }
#endif

    const int32_t n3 = p * p * p;
    std::vector<int32_t> table(static_cast<size_t>(n3) * n3);
    std::vector<FpElement> reps(n3);
    for (int32_t i = 0; i < n3; ++i) reps[i] = out.rep_of(i);
    for (int32_t i = 0; i < n3; ++i)
        for (int32_t j = 0; j < n3; ++j)
            table[static_cast<size_t>(i) * n3 + j] =
                static_cast<int32_t>(out.index_of(fp_mul(p, reps[i], reps[j])));
    out.loop = build_loop(n3, table);

    out.gen_x = static_cast<int32_t>(out.index_of(FpElement{{1 % p, 0, 0, 0, 0, 0}}));
    out.gen_y = static_cast<int32_t>(out.index_of(FpElement{{0, 1 % p, 0, 0, 0, 0}}));
    return out;
}

FreeHomContext::FreeHomContext(const CayleyLoop& q, int32_t p, bool assume_valid)
    : q_(&q), p_(p) {
    if (assume_valid) return;
    const int32_t n = q.order();
    if (n != p * p * p || !is_commutative(q))
        throw Error("hom_from_free: target outside variety");
    std::vector<int32_t> ord(n);
    for (int32_t x = 0; x < n; ++x) {
        ord[x] = q.element_order(x);
        if (ord[x] != 1 && ord[x] != p && ord[x] != p * p)
            throw Error("hom_from_free: target outside variety");
    }
    for (int32_t x = 0; x < n; ++x)
        for (int32_t y = 0; y < n; ++y)
            for (int32_t z = 0; z < n; ++z) {
                int32_t o = ord[associator(q, x, y, z)];
                if (o != 1 && o != p)
                    throw Error("hom_from_free: target outside variety");
            }
    AutomorphicOptions opt;
    // both paths below are exhaustive, never sampled
    opt.method = n <= opt.exhaustive_max_order ? AutoMethod::identity_a
                                               : AutoMethod::inner;
    if (!is_automorphic(q, opt).automorphic)
        throw Error("hom_from_free: target outside variety");
}

FreeHom::FreeHom(const FreeHomContext& ctx, int32_t a, int32_t b)
    : q_(&ctx.target()), p_(ctx.p()), a_(a), b_(b) {
    const CayleyLoop& q = *q_;
    const std::array<int32_t, 6> base{a,
                                      b,
                                      q.power(a, p_),
                                      q.power(b, p_),
                                      associator(q, a, a, b),
                                      associator(q, a, b, b)};
    for (int s = 0; s < 6; ++s) {
        pow_[s].resize(p_);
        pow_[s][0] = 0;
        for (int32_t k = 1; k < p_; ++k)
            pow_[s][k] = q.mul(pow_[s][k - 1], base[s]);
    }
}

int32_t FreeHom::image(const FpElement& u) const {
    int32_t w = pow_[0][u.c[0]];
    for (int s = 1; s < 6; ++s) w = q_->mul(w, pow_[s][u.c[s]]);
    return w;
}

bool FreeHom::kernel_contains(const Subspace3& n) const {
    for (int r = 0; r < 3; ++r) {
        FpElement z;
        for (int j = 0; j < 4; ++j) z.c[2 + j] = n.rref[r * 4 + j];
        if (image(z) != 0) return false;
    }
    return true;
}

bool FreeHom::surjective() const {
    return generated_subloop(*q_, {a_, b_}).size() == q_->order();
}

FreeHom hom_from_free(int32_t p, const CayleyLoop& q, int32_t a, int32_t b) {
    return FreeHom(FreeHomContext(q, p), a, b);
}

FreeIsoClasses iso_classes_via_free(int32_t p) {
    FreeIsoClasses out;
    out.p = p;
    const std::vector<Subspace3> all = grassmannian3(p);
    const int32_t n3 = p * p * p;
    std::vector<bool> placed(all.size(), false);
    for (size_t i = 0; i < all.size(); ++i) {
        if (placed[i]) continue;
        placed[i] = true;
        out.classes.push_back({all[i]});
        std::vector<Subspace3>& cls = out.classes.back();

        FpQuotient quo = quotient_loop(p, all[i]);
        FreeHomContext ctx(quo.loop, p);
        std::vector<FreeHom> homs;
        homs.reserve(static_cast<size_t>(n3) * n3);
        for (int32_t a = 0; a < n3; ++a)
            for (int32_t b = 0; b < n3; ++b) homs.emplace_back(ctx, a, b);
        // surjectivity is per pair, not per candidate kernel; fill lazily
        std::vector<int8_t> onto(homs.size(), -1);

        for (size_t j = i + 1; j < all.size(); ++j) {
            if (placed[j]) continue;
            for (size_t h = 0; h < homs.size(); ++h) {
                if (!homs[h].kernel_contains(all[j])) continue;
                if (onto[h] < 0) onto[h] = homs[h].surjective() ? 1 : 0;
                if (!onto[h]) continue;
                // surjective with p^3 central elements killed: the kernel
                // is exactly all[j]'s subloop, so the quotients agree
                placed[j] = true;
                cls.push_back(all[j]);
                break;
            }
        }
    }
    return out;
}

}  // namespace caloops
