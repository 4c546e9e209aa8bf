#include "caloops/fp_loop.hpp"

#include <sstream>

namespace caloops {

namespace {

void check_element(int32_t p, const FpElement& u, const char* who) {
    for (int i = 0; i < 6; ++i)
        if (u.c[i] < 0 || u.c[i] >= p)
            throw Error(std::string(who) + ": coordinate out of range");
}

}  // namespace

int32_t carry_sum(int32_t p, int64_t k, int32_t a) {
    if (a < 0 || a >= p) throw Error("carry_sum: residue out of range");
    if (k < 0) throw Error("carry_sum: negative exponent");
    int32_t total = 0;
    int32_t running = a % p;
    for (int64_t i = 1; i < k; ++i) {
        // running = (i*a) mod p
        total += carry(p, a, running);
        running = running + a >= p ? running + a - p : running + a;
    }
    return total;
}

FpElement fp_mul(int32_t p, const FpElement& u, const FpElement& v) {
    check_element(p, u, "fp_mul");
    check_element(p, v, "fp_mul");
    int64_t a1 = u.c[0], a2 = u.c[1], b1 = v.c[0], b2 = v.c[1];
    FpElement r;
    r.c[0] = static_cast<int32_t>((a1 + b1) % p);
    r.c[1] = static_cast<int32_t>((a2 + b2) % p);
    r.c[2] = mod_norm(u.c[2] + v.c[2] + carry(p, u.c[0], v.c[0]), p);
    r.c[3] = mod_norm(u.c[3] + v.c[3] + carry(p, u.c[1], v.c[1]), p);
    r.c[4] = mod_norm(u.c[4] + v.c[4] - a1 * b1 * (a2 + b2), p);
    r.c[5] = mod_norm(u.c[5] + v.c[5] + a2 * b2 * (a1 + b1), p);
    return r;
}

FpElement fp_left_divide(int32_t p, const FpElement& u, const FpElement& v) {
    check_element(p, u, "fp_left_divide");
    check_element(p, v, "fp_left_divide");
    FpElement w;
    w.c[0] = mod_norm(v.c[0] - u.c[0], p);
    w.c[1] = mod_norm(v.c[1] - u.c[1], p);
    w.c[2] = mod_norm(v.c[2] - u.c[2] - carry(p, u.c[0], w.c[0]), p);
    w.c[3] = mod_norm(v.c[3] - u.c[3] - carry(p, u.c[1], w.c[1]), p);
    int64_t a1 = u.c[0], a2 = u.c[1], w1 = w.c[0], w2 = w.c[1];
    w.c[4] = mod_norm(v.c[4] - u.c[4] + a1 * w1 * (a2 + w2), p);
    w.c[5] = mod_norm(v.c[5] - u.c[5] - a2 * w2 * (a1 + w1), p);
    return w;
}

FpElement fp_power(int32_t p, const FpElement& u, int64_t k) {
    check_element(p, u, "fp_power");
    if (k < 0) throw Error("fp_power: negative exponent");
    if (k > 2000000) throw Error("fp_power: exponent too large");
    int64_t a1 = u.c[0], a2 = u.c[1];
    // t_k = sum(i + i^2, i = 1..k-1), exact then reduced
    int64_t tk = (k - 1) * k / 2 + (k - 1) * k * (2 * k - 1) / 6;
    FpElement r;
    r.c[0] = mod_norm(k * a1, p);
    r.c[1] = mod_norm(k * a2, p);
    r.c[2] = mod_norm(k * u.c[2] + carry_sum(p, k, u.c[0]), p);
    r.c[3] = mod_norm(k * u.c[3] + carry_sum(p, k, u.c[1]), p);
    r.c[4] = mod_norm(k * u.c[4] - a1 * a1 % p * a2 % p * (tk % p), p);
    r.c[5] = mod_norm(k * u.c[5] + a1 * a2 % p * a2 % p * (tk % p), p);
    return r;
}

FpElement fp_associator(int32_t p, const FpElement& u, const FpElement& v,
                        const FpElement& w) {
    check_element(p, u, "fp_associator");
    check_element(p, v, "fp_associator");
    check_element(p, w, "fp_associator");
    int64_t d = static_cast<int64_t>(u.c[0]) * w.c[1] -
                static_cast<int64_t>(u.c[1]) * w.c[0];
    FpElement r;
    r.c[4] = mod_norm(v.c[0] * d, p);
    r.c[5] = mod_norm(v.c[1] * d, p);
    return r;
}

FpElement fp_from_free(int32_t p, const FreeElement& u) {
    int64_t p2 = static_cast<int64_t>(p) * p;
    auto euclid_mod = [](const BigInt& v, int64_t m) {
        BigInt r = v % m;
        if (r < 0) r += m;
        return static_cast<int64_t>(r);
    };
    int64_t m1 = euclid_mod(u.a1, p2), m2 = euclid_mod(u.a2, p2);
    FpElement r;
    r.c[0] = static_cast<int32_t>(m1 % p);
    r.c[1] = static_cast<int32_t>(m2 % p);
    r.c[2] = static_cast<int32_t>(m1 / p);
    r.c[3] = static_cast<int32_t>(m2 / p);
    r.c[4] = static_cast<int32_t>(euclid_mod(u.a3, p));
    r.c[5] = static_cast<int32_t>(euclid_mod(u.a4, p));
    return r;
}

std::array<int32_t, 6> fp_canonical_word(int32_t p, const FpElement& u) {
    check_element(p, u, "fp_canonical_word");
    FpElement x, y;
    x.c[0] = 1 % p;
    y.c[1] = 1 % p;
    FpElement xp = fp_power(p, x, p), yp = fp_power(p, y, p);
    FpElement aab = fp_associator(p, x, x, y), abb = fp_associator(p, x, y, y);
    FpElement r = fp_power(p, x, u.c[0]);
    r = fp_mul(p, r, fp_power(p, y, u.c[1]));
    r = fp_mul(p, r, fp_power(p, xp, u.c[2]));
    r = fp_mul(p, r, fp_power(p, yp, u.c[3]));
    r = fp_mul(p, r, fp_power(p, aab, u.c[4]));
    r = fp_mul(p, r, fp_power(p, abb, u.c[5]));
    if (!(r == u)) throw Error("fp_canonical_word: decomposition mismatch");
    return u.c;
}

ParsedFpElement fp_parse(const std::string& text) {
    size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw Error("fp_parse: expected \"p:a1,a2,a3,a4,a5,a6\"");
    int64_t p;
    try {
        p = std::stoll(text.substr(0, colon));
    } catch (const std::exception&) {
        throw Error("fp_parse: bad prime");
    }
    if (!is_prime(p)) throw Error("fp_parse: " + std::to_string(p) +
                                  " is not prime");
    std::istringstream in(text.substr(colon + 1));
    ParsedFpElement out;
    out.p = static_cast<int32_t>(p);
    for (int i = 0; i < 6; ++i) {
        int64_t v;
        char sep;
        if (!(in >> v)) throw Error("fp_parse: expected 6 coordinates");
        out.e.c[i] = mod_norm(v, out.p);
        if (i < 5 && (!(in >> sep) || sep != ','))
            throw Error("fp_parse: expected ',' between coordinates");
    }
    std::string extra;
    if (in >> extra) throw Error("fp_parse: trailing input");
    return out;
}

std::string fp_format(int32_t p, const FpElement& u) {
    std::ostringstream os;
    os << p << ":";
    for (int i = 0; i < 6; ++i) {
        if (i) os << ",";
        os << u.c[i];
    }
    return os.str();
}

FpCayley fp_cayley(int32_t p, int64_t order_cap) {
    if (!is_prime(p)) throw Error("fp_cayley: p is not prime");
    int64_t n = 1;
    for (int i = 0; i < 6; ++i) n *= p;
    if (n > order_cap)
        throw Error("fp_cayley: order cap exceeded (p^6 = " +
                    std::to_string(n) + ")");
    FpCayley fc;
    fc.p = p;
    std::vector<int32_t> table(static_cast<size_t>(n) * n);
    for (int64_t i = 0; i < n; ++i) {
        FpElement u = fc.element(i);
        for (int64_t j = 0; j < n; ++j) {
            FpElement v = fc.element(j);
            table[i * n + j] =
                static_cast<int32_t>(fc.index_of(fp_mul(p, u, v)));
        }
    }
    fc.loop = build_loop(static_cast<int32_t>(n), table, order_cap);
    return fc;
}

}  // namespace caloops
