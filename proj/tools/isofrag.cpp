// isofrag command line: build groups and Cayley graphs, compute exact
// connectivities / atoms / classifications, and run theorem scans.
//
// Exit codes: 0 success (or scan with zero failures), 1 scan/verify found a
// counterexample, 2 usage or validation error, 3 search budget exceeded.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "isofrag/cayley.hpp"
#include "isofrag/json_io.hpp"
#include "isofrag/theorems.hpp"

using namespace isofrag;
using nlohmann::json;

namespace {

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    try {
        return std::stoi(v);
    } catch (...) {
        return fallback;
    }
}

GroupDescriptor parse_group_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw Error("cannot open group file " + arg.substr(1));
        json j;
        in >> j;
        return group_descriptor_from_json(j);
    }
    return GroupDescriptor::parse(arg);
}

ElementSet parse_set_arg(const std::string& arg, int universe) {
    ElementSet s(universe);
    if (arg.empty()) return s;
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        int v = std::stoi(tok);
        if (v < 0 || v >= universe)
            throw Error("set element " + tok + " outside 0.." + std::to_string(universe - 1));
        s.add(v);
    }
    return s;
}

Relation parse_relation_arg(const std::string& arg) {
    json j;
    if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw Error("cannot open relation file " + arg.substr(1));
        in >> j;
    } else {
        j = json::parse(arg);
    }
    return relation_from_json(j);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error("cannot open output file " + out_path);
    out << text;
}

struct CommonArgs {
    std::string group;
    std::string relation;
    std::string set;
    std::string out;
    int k = 1;
    int threads = env_int("ISOFRAG_THREADS", 1);
    int max_enum = env_int("ISOFRAG_MAX_ENUM", 24);
    int max_kappa = env_int("ISOFRAG_MAX_KAPPA", 32);

    SearchOptions search() const {
        SearchOptions opts;
        opts.threads = threads;
        opts.max_enumeration_order = max_enum;
        opts.max_kappa_order = max_kappa;
        return opts;
    }

    // Graph from either --relation or --group + --set; the Cayley descriptor
    // is echoed into the report when present.
    std::pair<Relation, json> load_graph() const {
        if (!relation.empty()) {
            Relation r = parse_relation_arg(relation);
            return {r, json{{"relation", to_json(r)}}};
        }
        if (group.empty()) throw Error("need --group with --set, or --relation");
        GroupDescriptor desc = parse_group_arg(group);
        FiniteGroup g = FiniteGroup::build(desc);
        ElementSet s = parse_set_arg(set, g.order());
        Relation r = cayley_relation(g, s);
        return {r, json{{"group", to_json(desc)}, {"groupName", g.name()}, {"set", to_json(s)}}};
    }
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_k) {
    cmd->add_option("--group,-g", args.group, "group descriptor (family:params or @file.json)");
    cmd->add_option("--set,-s", args.set, "connection set / subset, comma-separated indices");
    cmd->add_option("--relation,-r", args.relation, "relation JSON (@file.json or inline)");
    cmd->add_option("--out,-o", args.out, "write the report to a file instead of stdout");
    cmd->add_option("--threads,-t", args.threads, "worker threads (env ISOFRAG_THREADS)");
    cmd->add_option("--max-enum", args.max_enum,
                    "fragment enumeration budget on n (env ISOFRAG_MAX_ENUM)");
    cmd->add_option("--max-kappa", args.max_kappa, "kappa budget on n (env ISOFRAG_MAX_KAPPA)");
    if (with_k) cmd->add_option("--k,-k", args.k, "connectivity level k >= 1")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact isoperimetric connectivities, atoms and fragment structure "
                 "of finite relations and Cayley graphs"};
    app.require_subcommand(1);

    CommonArgs kappa_args, atoms_args, classify_args;
    auto* cmd_kappa = app.add_subcommand("kappa", "compute the k-th connectivity");
    add_common(cmd_kappa, kappa_args, true);
    auto* cmd_atoms = app.add_subcommand("atoms", "enumerate k-fragments, atoms, super-fragments");
    add_common(cmd_atoms, atoms_args, true);
    auto* cmd_classify =
        app.add_subcommand("classify", "Cauchy / degenerate / Vosper classification");
    add_common(cmd_classify, classify_args, false);

    CommonArgs product_args;
    std::string product_b;
    auto* cmd_product = app.add_subcommand("product", "Minkowski product of two subsets");
    cmd_product->add_option("--group,-g", product_args.group, "group descriptor")->required();
    cmd_product->add_option("--a,-a", product_args.set, "left operand, comma-separated")->required();
    cmd_product->add_option("--b,-b", product_b, "right operand, comma-separated")->required();
    cmd_product->add_option("--out,-o", product_args.out, "output file");

    CommonArgs verify_args;
    std::string verify_theorem;
    auto* cmd_verify = app.add_subcommand("verify", "run one theorem verifier on one instance");
    add_common(cmd_verify, verify_args, false);
    cmd_verify->add_option("--theorem", verify_theorem, "theorem id")->required();

    CommonArgs scan_args;
    std::string scan_theorem, scan_records, scan_csv;
    std::vector<std::string> scan_families, scan_groups;
    int scan_max_order = 12;
    bool scan_non_generating = false, scan_no_orbit = false;
    auto* cmd_scan = app.add_subcommand("scan", "run a theorem verifier over a group roster");
    cmd_scan->add_option("--theorem", scan_theorem, "theorem id")->required();
    cmd_scan->add_option("--family", scan_families,
                         "restrict the default roster to a family (cyclic, dihedral, ...)");
    cmd_scan->add_option("--group,-g", scan_groups, "explicit group descriptor, repeatable");
    cmd_scan->add_option("--max-order", scan_max_order, "largest group order scanned");
    cmd_scan->add_flag("--include-non-generating", scan_non_generating,
                       "keep connection sets that do not generate the group");
    cmd_scan->add_flag("--no-orbit-reduce", scan_no_orbit, "scan every subset, not orbit reps");
    cmd_scan->add_option("--records", scan_records, "write one VerdictRecord JSON per line");
    cmd_scan->add_option("--csv", scan_csv, "write the summary as CSV");
    cmd_scan->add_option("--out,-o", scan_args.out, "summary output file");
    cmd_scan->add_option("--threads,-t", scan_args.threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_kappa->parsed()) {
            auto [r, echo] = kappa_args.load_graph();
            json j = echo;
            j["schemaVersion"] = kSchemaVersion;
            j["k"] = kappa_args.k;
            j["kappa"] = kappa(r, kappa_args.k, kappa_args.search());
            emit(dump_report(j), kappa_args.out);
        } else if (cmd_atoms->parsed()) {
            auto [r, echo] = atoms_args.load_graph();
            FragmentReport rep = fragment_report(r, atoms_args.k, atoms_args.search());
            json j = to_json(rep);
            j.update(echo);
            emit(dump_report(j), atoms_args.out);
        } else if (cmd_classify->parsed()) {
            auto [r, echo] = classify_args.load_graph();
            Classification c = classify(r, classify_args.search());
            json j = to_json(c);
            j.update(echo);
            emit(dump_report(j), classify_args.out);
        } else if (cmd_product->parsed()) {
            GroupDescriptor desc = parse_group_arg(product_args.group);
            FiniteGroup g = FiniteGroup::build(desc);
            ElementSet a = parse_set_arg(product_args.set, g.order());
            ElementSet b = parse_set_arg(product_b, g.order());
            json j{{"schemaVersion", kSchemaVersion},
                   {"group", to_json(desc)},
                   {"groupName", g.name()},
                   {"a", to_json(a)},
                   {"b", to_json(b)},
                   {"product", to_json(set_product(g, a, b))}};
            emit(dump_report(j), product_args.out);
        } else if (cmd_verify->parsed()) {
            if (verify_args.group.empty()) throw Error("verify needs --group");
            GroupDescriptor desc = parse_group_arg(verify_args.group);
            FiniteGroup g = FiniteGroup::build(desc);
            ElementSet s = parse_set_arg(verify_args.set, g.order());
            VerdictRecord rec;
            SearchOptions opts = verify_args.search();
            if (verify_theorem == "kneser") rec = verify_main_theorem(g, s, opts);
            else if (verify_theorem == "cauchycayley") rec = verify_cauchy_cayley(g, s, opts);
            else if (verify_theorem == "2atomcay") rec = verify_2atom_structure(g, s, opts);
            else if (verify_theorem == "dl") rec = verify_dl(g, s, opts);
            else if (verify_theorem == "astercay") rec = verify_astercay(g, s, opts);
            else if (verify_theorem == "groupfrag") rec = verify_groupfrag(g, s, opts);
            else if (verify_theorem == "vtvosper") rec = verify_vtvosper(g, s, opts);
            else throw UnknownTheoremError(verify_theorem);
            emit(dump_report(to_json(rec)), verify_args.out);
            return rec.verdict == Verdict::Fail ? 1 : 0;
        } else if (cmd_scan->parsed()) {
            ScanConfig config;
            config.max_order = scan_max_order;
            config.generating_only = !scan_non_generating;
            config.orbit_reduce = !scan_no_orbit;
            config.threads = scan_args.threads;
            for (const auto& gtext : scan_groups) config.groups.push_back(parse_group_arg(gtext));
            if (config.groups.empty() && !scan_families.empty()) {
                for (const auto& d : default_roster(scan_max_order)) {
                    std::string fam;
                    switch (d.family) {
                        case GroupDescriptor::Family::Cyclic: fam = "cyclic"; break;
                        case GroupDescriptor::Family::Dihedral: fam = "dihedral"; break;
                        case GroupDescriptor::Family::Quaternion: fam = "quaternion"; break;
                        case GroupDescriptor::Family::Symmetric: fam = "symmetric"; break;
                        case GroupDescriptor::Family::Product: fam = "product"; break;
                        case GroupDescriptor::Family::Table: fam = "table"; break;
                    }
                    if (std::find(scan_families.begin(), scan_families.end(), fam) !=
                        scan_families.end())
                        config.groups.push_back(d);
                }
            }
            std::ofstream records_file;
            RecordSink sink;
            if (!scan_records.empty()) {
                if (scan_records == "-") {
                    sink = [](const VerdictRecord& rec, int) {
                        std::cout << to_json(rec).dump() << "\n";
                    };
                } else {
                    records_file.open(scan_records);
                    if (!records_file) throw Error("cannot open records file " + scan_records);
                    sink = [&records_file](const VerdictRecord& rec, int) {
                        records_file << to_json(rec).dump() << "\n";
                    };
                }
            }
            ScanSummary summary = scan(config, scan_theorem, sink);
            emit(dump_report(to_json(summary)), scan_args.out);
            if (!scan_csv.empty()) emit(scan_summary_csv(summary), scan_csv);
            return summary.fail > 0 ? 1 : 0;
        }
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
