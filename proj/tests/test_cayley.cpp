#include <doctest.h>

#include <string>
#include <vector>

#include "caloops/cayley.hpp"
#include "caloops/standard_loops.hpp"

#include "test_util.hpp"

using namespace caloops;
using caloops_test::contains;
using caloops_test::thrown_message;

TEST_CASE("build_loop accepts the trivial loop") {
    CayleyLoop q = build_loop(1, {0});
    CHECK(q.order() == 1);
    CHECK(q.mul(0, 0) == 0);
}

TEST_CASE("build_loop accepts the exceptional order-8 table") {
    CayleyLoop q = exceptional_loop_8();
    CHECK(q.order() == 8);
    // rebuilding from the flat table revalidates it
    CHECK(build_loop(8, q.table()).order() == 8);
}

TEST_CASE("build_loop rejects a repeated row entry") {
    std::string msg = thrown_message([] { build_loop(2, {0, 1, 1, 1}); });
    CHECK(contains(msg, "not a Latin square"));
}

TEST_CASE("build_loop rejects a repeated column entry") {
    // rows are Latin but column 1 repeats entry 1
    std::string msg =
        thrown_message([] { build_loop(3, {0, 1, 2, 1, 2, 0, 2, 1, 0}); });
    CHECK(contains(msg, "not a Latin square"));
}

TEST_CASE("build_loop rejects a table whose index 0 is not an identity") {
    std::string msg = thrown_message([] { build_loop(2, {1, 0, 0, 1}); });
    CHECK(contains(msg, "identity"));
}

TEST_CASE("build_loop rejects out-of-range entries") {
    std::string msg = thrown_message([] { build_loop(2, {0, 1, 1, 7}); });
    CHECK(msg != "");
}

TEST_CASE("build_loop enforces the order cap") {
    std::string msg = thrown_message([] {
        std::vector<int32_t> t(9, 0);
        build_loop(3, t, 2);
    });
    CHECK(contains(msg, "cap"));
}

TEST_CASE("divide by the identity is trivial") {
    CayleyLoop q = exceptional_loop_8();
    for (int32_t b = 0; b < q.order(); ++b) {
        CHECK(divide(q, 0, b, Side::left) == b);
        CHECK(divide(q, 0, b, Side::right) == b);
    }
}

TEST_CASE("divide pinned values") {
    CayleyLoop e8 = exceptional_loop_8();
    CHECK(divide(e8, 6, 5, Side::left) == 3);

    CayleyLoop z3 = cyclic_group(3);
    CHECK(divide(z3, 1, 0, Side::left) == 2);
}

TEST_CASE("division inverts multiplication in both slots") {
    for (const CayleyLoop& q :
         {exceptional_loop_8(), cyclic_group(6), caloops_test::symmetric_group_3()}) {
        for (int32_t a = 0; a < q.order(); ++a) {
            for (int32_t b = 0; b < q.order(); ++b) {
                CHECK(q.mul(a, q.ldiv(a, b)) == b);
                CHECK(q.mul(q.rdiv(a, b), a) == b);
            }
        }
    }
}

TEST_CASE("element_order and power agree on cyclic groups") {
    CayleyLoop z8 = cyclic_group(8);
    CHECK(z8.element_order(0) == 1);
    CHECK(z8.element_order(1) == 8);
    CHECK(z8.element_order(2) == 4);
    CHECK(z8.element_order(4) == 2);
    for (int32_t x = 0; x < 8; ++x) {
        CHECK(z8.power(x, 0) == 0);
        CHECK(z8.power(x, 1) == x);
        CHECK(z8.power(x, z8.element_order(x)) == 0);
    }
}

TEST_CASE("text format round trip is bit-exact") {
    for (const CayleyLoop& q : {exceptional_loop_8(), cyclic_group(5)}) {
        std::string s = format_cayley(q);
        CayleyLoop back = parse_cayley(s);
        CHECK(back.order() == q.order());
        CHECK(back.table() == q.table());
        CHECK(format_cayley(back) == s);
    }
}

TEST_CASE("parse_cayley skips comments and blank lines") {
    CayleyLoop q = parse_cayley("# a comment\n\norder 2\n0 1\n1 0\n");
    CHECK(q.order() == 2);
    CHECK(q.mul(1, 1) == 0);
}

TEST_CASE("parse_cayley reports the offending line") {
    std::string msg =
        thrown_message([] { parse_cayley("order 2\n0 1\n1 zebra\n"); });
    CHECK(contains(msg, "line 3"));

    msg = thrown_message([] { parse_cayley("order 2\n0 1\n"); });
    CHECK(msg != "");

    msg = thrown_message([] { parse_cayley("0 1\n1 0\n"); });
    CHECK(contains(msg, "order"));
}
