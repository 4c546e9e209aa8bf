#include <doctest.h>

#include <json.hpp>

#include <set>
#include <string>
#include <vector>

#include "caloops/classify.hpp"
#include "caloops/report.hpp"

#include "test_util.hpp"

using namespace caloops;
using caloops_test::contains;
using caloops_test::thrown_message;

namespace {

const CatalogEntry* find_entry(const ClassificationReport& r,
                               const std::string& name) {
    for (const CatalogEntry& e : r.entries)
        if (e.name == name) return &e;
    return nullptr;
}

}  // namespace

TEST_CASE("classify_p3 at p = 2") {
    ClassificationReport r = classify_p3(2);
    CHECK(r.p == 2);
    REQUIRE(r.entries.size() == 7);
    CHECK(r.q1_group == "Z2xZ4");

    // the preamble sweeps the order-64 loop exhaustively
    CHECK(r.preamble_ran);
    CHECK(r.preamble.automorphic);
    CHECK(r.preamble.exhaustive);
    CHECK(r.preamble.checked == 4096ULL * 4096ULL);

    std::set<std::string> names;
    for (const CatalogEntry& e : r.entries) names.insert(e.name);
    CHECK(names == std::set<std::string>{"Z8", "Z2xZ4", "Z2^3", "Q2", "Q3",
                                         "Q4", "E8"});

    int groups = 0, nonassoc = 0;
    for (const CatalogEntry& e : r.entries) {
        CHECK(e.axioms);
        CHECK(e.commutative);
        CHECK(e.automorphic.automorphic);
        CHECK(e.loop.order() == 8);
        if (e.profile.is_group)
            ++groups;
        else
            ++nonassoc;
    }
    CHECK(groups == 3);
    CHECK(nonassoc == 4);

    const CatalogEntry* e8 = find_entry(r, "E8");
    REQUIRE(e8 != nullptr);
    CHECK(e8->construction == "exceptional-8");
    CHECK(e8->profile.center_size == 1);
    CHECK_FALSE(e8->from_orbit);

    // all 21 pairs separated by raw backtracking at p = 2
    int64_t evidences = 0;
    for (const CatalogEntry& e : r.entries) {
        for (const NonIsoEvidence& ev : e.noniso) {
            CHECK(ev.method == "backtracking");
            ++evidences;
        }
    }
    CHECK(evidences == 21);
}

TEST_CASE("classify_p3 at p = 3") {
    ClassificationReport r = classify_p3(3);
    REQUIRE(r.entries.size() == 7);
    CHECK(r.q1_group == "Z3xZ9");

    // sampled preamble on the order-729 loop
    CHECK(r.preamble_ran);
    CHECK(r.preamble.automorphic);
    CHECK_FALSE(r.preamble.exhaustive);
    CHECK(r.preamble.checked == 1000000);

    for (const std::string& name : {"Q2", "Q3", "Q4", "Q5"}) {
        const CatalogEntry* e = find_entry(r, name);
        REQUIRE(e != nullptr);
        CHECK(e->from_orbit);
        CHECK_FALSE(e->profile.is_group);
        CHECK(e->loop.order() == 27);
        CHECK(e->automorphic.automorphic);
        CHECK(e->automorphic.exhaustive);
    }

    // quotient pairs are told apart by generator-pair scans, pairs
    // involving a group by profiles
    for (const CatalogEntry& e : r.entries) {
        for (const NonIsoEvidence& ev : e.noniso) {
            const CatalogEntry* other = find_entry(r, ev.other);
            REQUIRE(other != nullptr);
            if (e.from_orbit && other->from_orbit) {
                CHECK(ev.method == "hom-scan");
                CHECK(contains(ev.detail, "729"));
            } else {
                CHECK(ev.method == "profile");
            }
        }
    }

    // orbit census travels with the report
    REQUIRE(r.orbits.orbits.size() == 5);
    CHECK(r.orbits.orbits[0].members.size() == 4);
}

TEST_CASE("classify_p3 rejects bad input") {
    CHECK(contains(thrown_message([] { classify_p3(4); }), "4 is not prime"));
    CHECK(contains(thrown_message([] { classify_p3(11); }), "cap"));
    CHECK(contains(thrown_message([] { classify_p3(5, {.max_p = 3}); }),
                   "cap"));
}

TEST_CASE("classification reports are deterministic") {
    std::string a = classification_report_json(classify_p3(2));
    std::string b = classification_report_json(classify_p3(2));
    CHECK(a == b);
}

TEST_CASE("classification JSON carries the certificates") {
    nlohmann::json j =
        nlohmann::json::parse(classification_report_json(classify_p3(2)));
    CHECK(j["schema_version"] == 1);
    CHECK(j["kind"] == "classification-report");
    CHECK(j["p"] == 2);
    CHECK(j["loop_count"] == 7);
    REQUIRE(j["entries"].size() == 7);
    for (const auto& e : j["entries"]) {
        CHECK(e["certificates"]["axioms"] == true);
        CHECK(e["certificates"]["commutative"] == true);
        CHECK(e["certificates"]["automorphic"]["holds"] == true);
        CHECK(e["certificates"]["noniso_witnesses"].is_array());
        CHECK(e.contains("cayley_table"));
        CHECK(e["profile"].contains("order_spectrum"));
    }
    // tables embedded in the report parse back to valid loops
    CayleyLoop q =
        parse_cayley(j["entries"][0]["cayley_table"].get<std::string>());
    CHECK(q.order() == 8);

    CHECK(j["identity_a_preamble"]["order"] == 64);
    CHECK(j["orbits"]["orbit_sizes"].size() == 4);
    CHECK(j["q1"]["coincides_with"] == "Z2xZ4");
}

TEST_CASE("orbit JSON layout") {
    nlohmann::json j =
        nlohmann::json::parse(orbit_report_json(compute_orbits(2)));
    CHECK(j["schema_version"] == 1);
    CHECK(j["kind"] == "orbit-report");
    CHECK(j["total_subspaces"] == 15);
    CHECK(j["group_order"] == 6);
    REQUIRE(j["orbits"].size() == 4);
    std::set<std::string> keys;
    size_t total = 0;
    for (const auto& o : j["orbits"]) {
        total += o["size"].get<size_t>();
        for (const auto& m : o["members"]) keys.insert(m.get<std::string>());
    }
    CHECK(total == 15);
    CHECK(keys.size() == 15);
}

TEST_CASE("the exhaustive option upgrades every certificate") {
    ClassificationReport r = classify_p3(2, {.exhaustive = true});
    for (const CatalogEntry& e : r.entries) {
        CHECK(e.auto_method == "identity-a");
        CHECK(e.automorphic.exhaustive);
        CHECK(e.automorphic.checked == 64ULL * 64ULL);
    }
}
