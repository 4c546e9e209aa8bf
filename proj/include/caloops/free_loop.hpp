#pragma once

// The free 2-generated commutative automorphic loop of nilpotency class two,
// realized on integer 4-tuples. Coordinates: (a1, a2) are the exponents of
// the generators x and y; (a3, a4) are the exponents of the associators
// (x,x,y) and (x,y,y), which are central. Coordinates grow without bound
// under multiplication, hence exact big integers.

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "caloops/common.hpp"

namespace caloops {

using BigInt = boost::multiprecision::cpp_int;

struct FreeElement {
    BigInt a1, a2, a3, a4;

    bool operator==(const FreeElement&) const = default;
};

inline FreeElement free_identity() { return {0, 0, 0, 0}; }

inline FreeElement free_mul(const FreeElement& u, const FreeElement& v) {
    return {u.a1 + v.a1, u.a2 + v.a2,
            u.a3 + v.a3 - u.a1 * v.a1 * (u.a2 + v.a2),
            u.a4 + v.a4 + u.a2 * v.a2 * (u.a1 + v.a1)};
}

// Unique w with u*w = v, by back substitution.
inline FreeElement free_left_divide(const FreeElement& u,
                                    const FreeElement& v) {
    BigInt t1 = v.a1 - u.a1;
    BigInt t2 = v.a2 - u.a2;
    BigInt t3 = v.a3 - u.a3 + u.a1 * t1 * (u.a2 + t2);
    BigInt t4 = v.a4 - u.a4 - u.a2 * t2 * (u.a1 + t1);
    return {t1, t2, t3, t4};
}

// Closed form of the associator (u,v,w); central, so only the last two
// coordinates are populated.
inline FreeElement free_associator(const FreeElement& u, const FreeElement& v,
                                   const FreeElement& w) {
    BigInt d = u.a1 * w.a2 - u.a2 * w.a1;
    return {0, 0, v.a1 * d, v.a2 * d};
}

// Text form "a1,a2,a3,a4", optional signs.
FreeElement free_parse(const std::string& text);
std::string free_format(const FreeElement& u);

}  // namespace caloops
