#include "caloops/report.hpp"

#include <json.hpp>

namespace caloops {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json orbit_json(const OrbitReport& rep) {
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["kind"] = "orbit-report";
    j["p"] = rep.p;
    j["total_subspaces"] = rep.total_subspaces;
    j["group_order"] = rep.group_order;
    ordered_json sizes = ordered_json::array();
    for (const Orbit& o : rep.orbits) sizes.push_back(o.members.size());
    j["orbit_sizes"] = sizes;
    ordered_json orbits = ordered_json::array();
    for (const Orbit& o : rep.orbits) {
        ordered_json oj;
        oj["label"] = o.label;
        oj["size"] = o.members.size();
        oj["representative"] = o.representative.key(rep.p);
        oj["representative_min"] = o.representative_min.key(rep.p);
        ordered_json members = ordered_json::array();
        for (const Subspace3& s : o.members) members.push_back(s.key(rep.p));
        oj["members"] = members;
        orbits.push_back(oj);
    }
    j["orbits"] = orbits;
    return j;
}

ordered_json automorphic_json(const AutomorphicResult& r,
                              const std::string& method) {
    ordered_json j;
    j["holds"] = r.automorphic;
    j["method"] = method;
    j["exhaustive"] = r.exhaustive;
    j["checked"] = r.checked;
    if (!r.automorphic) {
        j["witness_kind"] = std::string(1, r.witness_kind);
        j["witness"] = r.witness;
    }
    return j;
}

ordered_json profile_json(const StructureProfile& p) {
    ordered_json j;
    ordered_json spec;
    for (const auto& [ord, count] : p.order_spectrum)
        spec[std::to_string(ord)] = count;
    j["order_spectrum"] = spec;
    j["center_size"] = p.center_size;
    j["associator_subloop_size"] = p.associator_subloop_size;
    if (p.nilpotency_class)
        j["nilpotency_class"] = *p.nilpotency_class;
    else
        j["nilpotency_class"] = nullptr;
    j["is_group"] = p.is_group;
    j["is_commutative"] = p.is_commutative;
    j["is_power_associative"] = p.is_power_associative;
    return j;
}

}  // namespace

std::string orbit_report_json(const OrbitReport& rep) {
    return orbit_json(rep).dump(2) + "\n";
}

std::string classification_report_json(const ClassificationReport& rep) {
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["kind"] = "classification-report";
    j["p"] = rep.p;
    j["loop_count"] = rep.entries.size();
    if (rep.preamble_ran) {
        ordered_json pre = automorphic_json(rep.preamble, "identity-a");
        int64_t n = static_cast<int64_t>(rep.p) * rep.p;
        pre["order"] = n * n * n;
        j["identity_a_preamble"] = pre;
    } else {
        j["identity_a_preamble"] = nullptr;
    }
    j["q1"] = ordered_json{{"orbit", "O1"}, {"coincides_with", rep.q1_group}};
    ordered_json entries = ordered_json::array();
    for (const CatalogEntry& e : rep.entries) {
        ordered_json ej;
        ej["name"] = e.name;
        ej["construction"] = e.construction;
        ej["order"] = e.loop.order();
        if (e.from_orbit) ej["kernel"] = e.kernel.key(rep.p);
        ej["profile"] = profile_json(e.profile);
        ordered_json certs;
        certs["axioms"] = e.axioms;
        certs["commutative"] = e.commutative;
        certs["automorphic"] = automorphic_json(e.automorphic, e.auto_method);
        ordered_json wit = ordered_json::array();
        for (const NonIsoEvidence& ev : e.noniso)
            wit.push_back(ordered_json{{"other", ev.other},
                                       {"method", ev.method},
                                       {"detail", ev.detail}});
        certs["noniso_witnesses"] = wit;
        ej["certificates"] = certs;
        ej["cayley_table"] = format_cayley(e.loop);
        entries.push_back(ej);
    }
    j["entries"] = entries;
    j["orbits"] = orbit_json(rep.orbits);
    return j.dump(2) + "\n";
}

}  // namespace caloops
