#include "isofrag/json_io.hpp"

#include <nlohmann/json.hpp>

namespace isofrag {

using nlohmann::json;

json to_json(const ElementSet& s) { return json(s.indices()); }

ElementSet element_set_from_json(const json& j, int universe) {
    if (!j.is_array()) throw Error("element set JSON must be an array of indices");
    ElementSet s(universe);
    for (const auto& v : j) {
        int i = v.get<int>();
        if (i < 0 || i >= universe) throw Error("element index out of range");
        s.add(i);
    }
    return s;
}

json to_json(const GroupDescriptor& d) {
    json j;
    switch (d.family) {
        case GroupDescriptor::Family::Cyclic:
            j["family"] = "cyclic";
            j["n"] = d.n;
            break;
        case GroupDescriptor::Family::Dihedral:
            j["family"] = "dihedral";
            j["order"] = d.n;
            break;
        case GroupDescriptor::Family::Quaternion: j["family"] = "quaternion"; break;
        case GroupDescriptor::Family::Symmetric:
            j["family"] = "symmetric";
            j["degree"] = d.n;
            break;
        case GroupDescriptor::Family::Product: {
            j["family"] = "product";
            json parts = json::array();
            for (const auto& p : d.parts) parts.push_back(to_json(p));
            j["parts"] = parts;
            break;
        }
        case GroupDescriptor::Family::Table: j["table"] = d.table; break;
    }
    return j;
}

GroupDescriptor group_descriptor_from_json(const json& j) {
    if (j.contains("table"))
        return GroupDescriptor::explicit_table(j.at("table").get<std::vector<std::vector<int>>>());
    std::string family = j.at("family").get<std::string>();
    if (family == "cyclic") return GroupDescriptor::cyclic(j.at("n").get<int>());
    if (family == "dihedral") return GroupDescriptor::dihedral(j.at("order").get<int>());
    if (family == "quaternion") return GroupDescriptor::quaternion();
    if (family == "symmetric") return GroupDescriptor::symmetric(j.at("degree").get<int>());
    if (family == "product") {
        std::vector<GroupDescriptor> parts;
        for (const auto& p : j.at("parts")) parts.push_back(group_descriptor_from_json(p));
        return GroupDescriptor::product(std::move(parts));
    }
    throw Error("unknown group family: " + family);
}

json to_json(const Relation& r) {
    json rows = json::array();
    for (int v = 0; v < r.vertex_count(); ++v) rows.push_back(to_json(r.row(v)));
    return json{{"n", r.vertex_count()}, {"rows", rows}};
}

Relation relation_from_json(const json& j) {
    int n = j.at("n").get<int>();
    const auto& jrows = j.at("rows");
    if (!jrows.is_array() || static_cast<int>(jrows.size()) != n)
        throw Error("relation JSON needs exactly n rows");
    std::vector<ElementSet> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (const auto& row : jrows) rows.push_back(element_set_from_json(row, n));
    return Relation(std::move(rows));
}

json to_json(const FragmentReport& report) {
    json atoms = json::array(), supers = json::array();
    for (const auto& a : report.atoms) atoms.push_back(to_json(a));
    for (const auto& s : report.super_fragments) supers.push_back(to_json(s));
    return json{{"schemaVersion", kSchemaVersion},
                {"k", report.k},
                {"kappa", report.kappa},
                {"atoms", atoms},
                {"superFragments", supers},
                {"fragmentCount", report.fragment_count},
                {"faithful", report.faithful}};
}

FragmentReport fragment_report_from_json(const json& j, int universe) {
    FragmentReport rep;
    rep.k = j.at("k").get<int>();
    rep.kappa = j.at("kappa").get<int>();
    for (const auto& a : j.at("atoms")) rep.atoms.push_back(element_set_from_json(a, universe));
    for (const auto& s : j.at("superFragments"))
        rep.super_fragments.push_back(element_set_from_json(s, universe));
    rep.fragment_count = j.at("fragmentCount").get<std::uint64_t>();
    rep.faithful = j.at("faithful").get<bool>();
    return rep;
}

json to_json(const Classification& c) {
    json j{{"schemaVersion", kSchemaVersion},
           {"tag", to_string(c.tag)},
           {"cauchy", c.cauchy},
           {"vosperVacuous", c.vosper_vacuous},
           {"cauchyBoundAgrees", c.cauchy_bound_agrees}};
    if (c.kappa1) j["kappa1"] = *c.kappa1;
    if (c.kappa2) j["kappa2"] = *c.kappa2;
    if (c.witness) j["witness"] = to_json(*c.witness);
    if (c.bound_violator) j["boundViolator"] = to_json(*c.bound_violator);
    return j;
}

namespace {

json witness_to_json(const TheoremWitness& w) {
    json j = json::object();
    if (w.subgroup) j["subgroup"] = to_json(*w.subgroup);
    if (w.element) j["element"] = *w.element;
    if (w.set) j["set"] = to_json(*w.set);
    if (w.progression)
        j["progression"] = json{{"ratio", w.progression->ratio},
                                {"side", w.progression->side == Side::Right ? "right" : "left"},
                                {"start", w.progression->start},
                                {"length", w.progression->length}};
    if (!w.note.empty()) j["note"] = w.note;
    return j;
}

}  // namespace

json to_json(const VerdictRecord& rec) {
    json clauses = json::array();
    for (const auto& c : rec.clauses) {
        json jc{{"id", c.id}, {"holds", c.holds}};
        if (c.witness) jc["witness"] = witness_to_json(*c.witness);
        clauses.push_back(jc);
    }
    json sets = json::array();
    for (const auto& s : rec.sets) sets.push_back(to_json(s));
    json j{{"schemaVersion", kSchemaVersion},
           {"theoremId", rec.theorem_id},
           {"group", to_json(rec.group)},
           {"groupName", rec.group_name},
           {"sets", sets},
           {"hypothesisMet", rec.hypothesis_met},
           {"verdict", to_string(rec.verdict)},
           {"clauses", clauses}};
    if (!rec.note.empty()) j["note"] = rec.note;
    return j;
}

json to_json(const ScanSummary& summary) {
    json clause_counts = json::object();
    for (const auto& [id, count] : summary.clause_counts) clause_counts[id] = count;
    json failures = json::array();
    for (const auto& f : summary.failures) failures.push_back(to_json(f));
    return json{{"schemaVersion", kSchemaVersion},
                {"theoremId", summary.theorem_id},
                {"instances", summary.instances},
                {"canonicalInstances", summary.canonical_instances},
                {"pass", summary.pass},
                {"fail", summary.fail},
                {"hypothesisNotMet", summary.hypothesis_not_met},
                {"clauseCounts", clause_counts},
                {"witnesses", failures}};
}

std::string scan_summary_csv(const ScanSummary& summary) {
    std::string out = "theoremId,canonicalInstances,instances,pass,hypothesisNotMet,fail\n";
    out += summary.theorem_id + "," + std::to_string(summary.canonical_instances) + "," +
           std::to_string(summary.instances) + "," + std::to_string(summary.pass) + "," +
           std::to_string(summary.hypothesis_not_met) + "," + std::to_string(summary.fail) + "\n";
    return out;
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

}  // namespace isofrag
