// Acceptance suite: one line per criterion, [PASS]/[FAIL] with timing.
// Exit 0 iff every criterion passes inside its stated budget.

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "isofrag/cayley.hpp"
#include "isofrag/json_io.hpp"
#include "isofrag/theorems.hpp"
#include "oracle.hpp"
#include "parallel_util.hpp"
#include "random_relations.hpp"

using namespace isofrag;

namespace {

int g_max_threads = 4;

std::uint64_t mask_of(const ElementSet& s) { return oracle::set_mask(s); }

ElementSet set_of(int n, std::uint64_t mask) {
    ElementSet s(n);
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1) s.add(i);
    return s;
}

// ---------------------------------------------------------------------------
// Shared corpora

struct GraphData {
    Relation r;
    Relation rev;
    // index 0 -> k=1, index 1 -> k=2; reports absent when not k-separable
    std::optional<FragmentReport> fwd[2], bwd[2];

    explicit GraphData(Relation rel) : r(std::move(rel)), rev(reverse(r)) {
        for (int k = 1; k <= 2; ++k) {
            if (!is_k_separable(r, k)) continue;
            fwd[k - 1] = fragment_report(r, k);
            bwd[k - 1] = fragment_report(rev, k);
        }
    }
};

std::vector<Relation>& criterion1_graphs() {
    static std::vector<Relation> graphs = [] {
        testgen::RelationGen gen(0xC0FFEE);
        std::vector<Relation> out;
        out.reserve(200);
        for (int i = 0; i < 200; ++i) out.push_back(gen.next_corpus_graph());
        return out;
    }();
    return graphs;
}

std::vector<GraphData>& criterion1_data() {
    static std::vector<GraphData> data = [] {
        std::vector<GraphData> out;
        out.reserve(200);
        for (const auto& r : criterion1_graphs()) out.emplace_back(r);
        return out;
    }();
    return data;
}

std::vector<GroupDescriptor> roster_not_above(int max_order) {
    return default_roster(max_order);
}

// All Cayley graphs on groups of order <= 10 with e in S.
std::vector<GraphData>& cayley10_data() {
    static std::vector<GraphData> data = [] {
        std::vector<GraphData> out;
        for (const auto& desc : roster_not_above(10)) {
            FiniteGroup g = FiniteGroup::build(desc);
            const int n = g.order();
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2)
                out.emplace_back(cayley_relation(g, set_of(n, mask)));
        }
        return out;
    }();
    return data;
}

// ---------------------------------------------------------------------------
// Criterion bodies. Each returns true/false and may append detail text.

bool criterion1(std::string& detail) {
    const auto& graphs = criterion1_graphs();
    std::vector<int> bad(graphs.size(), 0);
    isofrag::detail::run_tasks(g_max_threads, graphs.size(), [&](std::size_t i) {
        const Relation& r = graphs[i];
        for (int k = 1; k <= 2; ++k) {
            auto brute = oracle::brute_fragments(r, k);
            bool impl_separable = is_k_separable(r, k);
            if (impl_separable != brute.separable) {
                bad[i] = 1;
                return;
            }
            if (!brute.separable) continue;
            FragmentReport rep = fragment_report(r, k);
            if (rep.kappa != brute.kappa || kappa(r, k) != brute.kappa ||
                oracle::set_masks(rep.fragments) != brute.fragments ||
                oracle::set_masks(rep.atoms) != brute.atoms ||
                oracle::set_masks(rep.super_fragments) != brute.super_fragments ||
                rep.fragment_count != brute.fragments.size())
                bad[i] = 1;
        }
    });
    int violations = 0;
    for (int b : bad) violations += b;
    detail = "200 graphs, k in {1,2}, violations: " + std::to_string(violations);
    return violations == 0;
}

bool criterion2(std::string& detail) {
    long violations = 0;
    for (const auto& gd : criterion1_data()) {
        const int n = gd.r.vertex_count();
        for (int k = 1; k <= 2; ++k) {
            if (!gd.fwd[k - 1]) {
                if (gd.bwd[k - 1]) ++violations;  // separability must be mutual
                continue;
            }
            const FragmentReport& f = *gd.fwd[k - 1];
            const FragmentReport& b = *gd.bwd[k - 1];
            if (f.kappa != b.kappa) ++violations;  // kappa_k = kappa_{-k}

            std::unordered_set<std::uint64_t> rev_frags, fwd_frags;
            for (const auto& y : b.fragments) rev_frags.insert(mask_of(y));
            for (const auto& x : f.fragments) fwd_frags.insert(mask_of(x));

            // nabla maps fragments bijectively onto reverse fragments
            if (f.fragments.size() != b.fragments.size()) ++violations;
            for (const auto& x : f.fragments) {
                ElementSet ext = exterior(gd.r, x);
                if (!rev_frags.count(mask_of(ext))) ++violations;
                if (board(gd.rev, ext) != board(gd.r, x)) ++violations;   // Eq. (2)
                if (exterior(gd.rev, ext) != x) ++violations;             // Eq. (3)
            }
            // super-fragments <-> reverse atoms (both directions)
            std::set<std::uint64_t> super_ext, rev_atoms;
            for (const auto& x : f.super_fragments) super_ext.insert(mask_of(exterior(gd.r, x)));
            for (const auto& y : b.atoms) rev_atoms.insert(mask_of(y));
            if (super_ext != rev_atoms) ++violations;
            std::set<std::uint64_t> atom_masks, rev_super_ext;
            for (const auto& x : f.atoms) atom_masks.insert(mask_of(x));
            for (const auto& y : b.super_fragments)
                rev_super_ext.insert(mask_of(exterior(gd.rev, y)));
            if (atom_masks != rev_super_ext) ++violations;

            // Eq. (4): inclusion reverses through nabla, on fragment pairs
            for (const auto& x : f.fragments)
                for (const auto& y : f.fragments) {
                    bool xy = y.contains(x);
                    bool ee = exterior(gd.r, x).contains(exterior(gd.r, y));
                    if (xy != ee) ++violations;
                }
        }
        // Cauchy and degenerate are self-dual
        if (is_cauchy(gd.r) != is_cauchy(gd.rev)) ++violations;
        bool deg_f = gd.fwd[1] && gd.fwd[0] && gd.fwd[1]->kappa == gd.fwd[0]->kappa;
        bool deg_b = gd.bwd[1] && gd.bwd[0] && gd.bwd[1]->kappa == gd.bwd[0]->kappa;
        if (deg_f != deg_b) ++violations;

        // Lemma "degenerate": kappa_1 <= kappa_2 and the equality case
        if (gd.fwd[1]) {
            if (gd.fwd[0]->kappa > gd.fwd[1]->kappa) ++violations;
            if (gd.fwd[0]->kappa == gd.fwd[1]->kappa) {
                std::set<std::uint64_t> expect;
                for (const auto& x : gd.fwd[0]->fragments)
                    if (x.count() >= 2 && exterior(gd.r, x).count() >= 2)
                        expect.insert(mask_of(x));
                std::set<std::uint64_t> got;
                for (const auto& x : gd.fwd[1]->fragments) got.insert(mask_of(x));
                if (expect != got) ++violations;
            }
        }
        (void)n;
    }
    detail = "duality violations: " + std::to_string(violations);
    return violations == 0;
}

// Everything criterion 3 needs from one graph at one level.
struct LevelData {
    const Relation& r;
    const Relation& rev;
    const FragmentReport& f;
    const FragmentReport& b;
    std::vector<ElementSet> semi;  // k-semi-fragments
};

long check_intersections(const LevelData& d, int k, int kappa_km1, bool know_km1) {
    long violations = 0;
    const int n = d.r.vertex_count();
    std::unordered_set<std::uint64_t> frags;
    for (const auto& x : d.f.fragments) frags.insert(mask_of(x));

    // lem1977(i): X fragment, Y semi-fragment
    for (const auto& x : d.f.fragments) {
        ElementSet bx = board(d.r, x), ex = exterior(d.r, x);
        for (const auto& y : d.semi) {
            if ((x & y).count() < k) continue;
            if ((exterior(d.r, y) & bx).count() > (x & board(d.r, y)).count()) ++violations;
        }
        // lem1977(ii)/(iii): Y ranges over fragments
        for (const auto& y : d.f.fragments) {
            if ((x & y).count() < k) continue;
            ElementSet ey = exterior(d.r, y);
            bool ii = (ex & ey).count() >= k;
            bool iii = x.count() <= ey.count();
            if ((ii || iii) && !frags.count(mask_of(x & y))) ++violations;
        }
    }

    // fourf: faithful or reverse faithful
    if (!d.f.faithful && !d.b.faithful) ++violations;

    // antiatom, stated side (reverse non-faithful -> supers of the graph) and
    // its mirror
    auto antiatom = [&](const FragmentReport& side, const FragmentReport& other_side) {
        if (other_side.faithful) return;
        for (const auto& x : side.super_fragments)
            for (const auto& y : side.super_fragments) {
                if (x == y) continue;
                int cap = (x & y).count();
                if (cap >= k) ++violations;
                if (k >= 2 && know_km1 && side.kappa == kappa_km1 && cap >= k - 1) ++violations;
            }
    };
    antiatom(d.f, d.b);
    antiatom(d.b, d.f);

    // katomdegree on both directions
    auto katomdegree = [&](const FragmentReport& rep, const Relation& bwd) {
        for (const auto& a : rep.atoms) {
            if (a.count() <= k) continue;
            a.for_each([&](int x) {
                if ((bwd.row(x) & a) == ElementSet::single(n, x)) ++violations;
            });
        }
    };
    katomdegree(d.f, d.rev);
    katomdegree(d.b, d.r);
    return violations;
}

long check_two_faithful(const GraphData& gd) {
    long violations = 0;
    if (!gd.fwd[1]) return 0;
    const FragmentReport& f2 = *gd.fwd[1];
    const FragmentReport& b2 = *gd.bwd[1];
    bool degenerate = gd.fwd[0]->kappa == f2.kappa;

    auto faithful_side = [&](const Relation& r, const Relation& rev, const FragmentReport& rep,
                             const FragmentReport& rrep, bool deg) {
        if (!rep.faithful) return;
        // distinct 2-atoms of a 2-faithful graph intersect in < 2 elements
        for (const auto& x : rep.atoms)
            for (const auto& y : rep.atoms)
                if (x != y && (x & y).count() >= 2) ++violations;
        if (!deg) return;

        // full statement with X over 2-fragments (the semi-fragment form is
        // false in finite graphs, e.g. Cay(Z6,{0,2}) with A={0,2,4}, X={0,2})
        for (const auto& x : rep.fragments) {
            ElementSet ex = exterior(r, x);
            for (const auto& a : rep.atoms) {
                if (x.contains(a)) continue;
                bool cond = a.count() <= ex.count() || (exterior(r, a) & ex).count() > 0;
                if (cond && (a & x).count() >= 2) ++violations;
            }
        }
        (void)rrep;

        // lem19771 Eqs. (9)-(10) over distinct 2-atom pairs
        for (const auto& x : rep.atoms)
            for (const auto& y : rep.atoms) {
                if (x == y) continue;
                ElementSet cap = x & y;
                int bd_cap = board(r, cap).count();
                int common = (image(r, x) & image(r, y)).count() - cap.count();
                if (bd_cap > common || common > rep.kappa) ++violations;  // (9)
                int lhs = (exterior(r, x) - exterior(r, y)).count();
                if (lhs > (y - x).count() + rep.kappa - bd_cap) ++violations;  // (10)
            }
        (void)rev;
    };
    faithful_side(gd.r, gd.rev, f2, b2, degenerate);
    bool rev_degenerate = gd.bwd[0]->kappa == b2.kappa;
    faithful_side(gd.rev, gd.r, b2, f2, rev_degenerate);

    // superatoms
    if (degenerate && rev_degenerate && f2.faithful && b2.faithful) {
        bool size2 = f2.atom_size() == 2 || b2.atom_size() == 2;
        if (!size2) {
            const int n = gd.r.vertex_count();
            for (int v = 0; v < n; ++v) {
                int cf = 0, cb = 0;
                for (const auto& a : f2.atoms) cf += a.test(v);
                for (const auto& a : b2.atoms) cb += a.test(v);
                if (cf >= 3 && cb >= 3) ++violations;
            }
        }
    }
    return violations;
}

long criterion3_one(const GraphData& gd) {
    long violations = 0;
    for (int k = 1; k <= 2; ++k) {
        if (!gd.fwd[k - 1]) continue;
        const int n = gd.r.vertex_count();
        // k-semi-fragments: fragments plus sets whose exterior is a reverse
        // k-fragment
        std::unordered_set<std::uint64_t> rev_frags;
        for (const auto& y : gd.bwd[k - 1]->fragments) rev_frags.insert(mask_of(y));
        std::vector<ElementSet> semi;
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
            ElementSet x = set_of(n, m);
            ElementSet ex = exterior(gd.r, x);
            bool frag = x.count() >= k && ex.count() >= k &&
                        board(gd.r, x).count() == gd.fwd[k - 1]->kappa;
            if (frag || rev_frags.count(mask_of(ex))) semi.push_back(x);
        }
        LevelData d{gd.r, gd.rev, *gd.fwd[k - 1], *gd.bwd[k - 1], std::move(semi)};
        bool know_km1 = k == 2 && gd.fwd[0].has_value();
        violations += check_intersections(d, k, know_km1 ? gd.fwd[0]->kappa : -1, know_km1);
    }
    violations += check_two_faithful(gd);
    return violations;
}

bool criterion3(std::string& detail) {
    const auto& random_graphs = criterion1_data();
    const auto& cayley_graphs = cayley10_data();
    std::vector<long> partial(random_graphs.size() + cayley_graphs.size(), 0);
    isofrag::detail::run_tasks(g_max_threads, partial.size(), [&](std::size_t i) {
        partial[i] = i < random_graphs.size()
                         ? criterion3_one(random_graphs[i])
                         : criterion3_one(cayley_graphs[i - random_graphs.size()]);
    });
    long violations = 0;
    for (long v : partial) violations += v;
    detail = std::to_string(random_graphs.size()) + " random + " +
             std::to_string(cayley_graphs.size()) +
             " Cayley graphs, violations: " + std::to_string(violations);
    return violations == 0;
}

bool criterion4(std::string& detail) {
    long violations = 0, instances = 0;
    for (int p : {2, 3, 5, 7, 11, 13}) {
        FiniteGroup g = FiniteGroup::build(GroupDescriptor::cyclic(p));
        std::vector<std::uint64_t> sets;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << p); mask += 2) {
            ElementSet s = set_of(p, mask);
            if (generated_subgroup(g, s).elements().count() != p) continue;
            if (s.count() == p) continue;  // complete graph, not 1-separable
            sets.push_back(mask);
        }
        std::vector<int> bad(sets.size(), 0);
        isofrag::detail::run_tasks(g_max_threads, sets.size(), [&](std::size_t i) {
            ElementSet s = set_of(p, sets[i]);
            Relation r = cayley_relation(g, s);
            if (!is_k_separable(r, 1)) {
                bad[i] = 1;
                return;
            }
            Classification c = classify(r);
            if (!c.cauchy || !c.kappa1 || *c.kappa1 != s.count() - 1) bad[i] = 1;
        });
        instances += static_cast<long>(sets.size());
        for (int b : bad) violations += b;
    }
    detail = std::to_string(instances) + " prime Cayley graphs, violations: " +
             std::to_string(violations);
    return violations == 0;
}

bool criterion5(std::string& detail) {
    auto z7 = FiniteGroup::build(GroupDescriptor::cyclic(7));
    auto z6 = FiniteGroup::build(GroupDescriptor::cyclic(6));
    Classification vosper = classify(cayley_relation(z7, ElementSet::of(7, {0, 1, 3})));
    Classification degen = classify(cayley_relation(z7, ElementSet::of(7, {0, 1, 2})));
    Classification nonc = classify(cayley_relation(z6, ElementSet::of(6, {0, 2, 4})));
    bool ok = vosper.tag == GraphClass::Vosper && vosper.kappa1 == 2 && vosper.kappa2 == 3 &&
              degen.tag == GraphClass::Degenerate && degen.kappa1 == 2 && degen.kappa2 == 2 &&
              nonc.tag == GraphClass::NonCauchy && nonc.kappa1 == 0;
    detail = std::string("Z7/{0,1,3}: ") + to_string(vosper.tag) + ", Z7/{0,1,2}: " +
             to_string(degen.tag) + ", Z6/{0,2,4}: " + to_string(nonc.tag);
    return ok;
}

bool criterion6(std::string& detail) {
    long violations = 0, instances = 0;
    for (int p : {5, 7, 11, 13}) {  // p <= 13 with p-3 >= 2
        FiniteGroup g = FiniteGroup::build(GroupDescriptor::cyclic(p));
        std::set<std::uint64_t> seen;
        for (int d = 1; d < p; ++d)
            for (int b = 0; b < p; ++b)
                for (int len = 2; len <= p - 3; ++len) {
                    ElementSet s(p);
                    for (int i = 0; i < len; ++i) s.add((b + i * d) % p);
                    if (!s.test(0) || s.count() != len) continue;
                    if (!seen.insert(mask_of(s)).second) continue;
                    Relation r = cayley_relation(g, s);
                    if (!is_k_separable(r, 2)) continue;
                    ++instances;
                    if (kappa(r, 2) != kappa(r, 1)) ++violations;
                }
    }
    detail = std::to_string(instances) +
             " progression graphs, kappa2 != kappa1 violations: " + std::to_string(violations);
    return violations == 0;
}

ScanSummary run_kneser_census(int threads) {
    ScanConfig config;
    config.max_order = 16;
    config.threads = threads;
    return scan(config, "kneser");
}

bool criterion7(std::string& detail) {
    ScanSummary summary = run_kneser_census(g_max_threads);
    detail = "instances " + std::to_string(summary.instances) + " (canonical " +
             std::to_string(summary.canonical_instances) + "), pass " +
             std::to_string(summary.pass) + ", fail " + std::to_string(summary.fail) +
             "; clauses:";
    for (const auto& [id, count] : summary.clause_counts)
        detail += " " + id + "=" + std::to_string(count);
    return summary.fail == 0 && summary.pass > 0;
}

std::vector<ScanSummary> run_structure_scans(int threads) {
    std::vector<ScanSummary> out;
    for (const char* id : {"cauchycayley", "2atomcay", "dl", "astercay", "groupfrag"}) {
        ScanConfig config;
        config.max_order = 12;
        config.threads = threads;
        out.push_back(scan(config, id));
    }
    return out;
}

bool criterion8(std::string& detail) {
    auto summaries = run_structure_scans(g_max_threads);
    bool ok = true;
    for (const auto& s : summaries) {
        detail += s.theorem_id + "(pass " + std::to_string(s.pass) + ", hnm " +
                  std::to_string(s.hypothesis_not_met) + ", fail " + std::to_string(s.fail) +
                  ") ";
        ok = ok && s.fail == 0 && s.pass > 0;
    }
    return ok;
}

bool criterion9(std::string& detail) {
    // criterion 5 classifications
    auto z7 = FiniteGroup::build(GroupDescriptor::cyclic(7));
    auto z6 = FiniteGroup::build(GroupDescriptor::cyclic(6));
    std::string c5[2];
    for (int t = 0; t < 2; ++t) {
        SearchOptions opts;
        opts.threads = t == 0 ? 1 : g_max_threads;
        c5[t] = dump_report(to_json(classify(cayley_relation(z7, ElementSet::of(7, {0, 1, 3})), opts))) +
                dump_report(to_json(classify(cayley_relation(z7, ElementSet::of(7, {0, 1, 2})), opts))) +
                dump_report(to_json(classify(cayley_relation(z6, ElementSet::of(6, {0, 2, 4})), opts)));
    }
    bool ok5 = c5[0] == c5[1];

    std::string kneser1 = dump_report(to_json(run_kneser_census(1)));
    std::string kneserN = dump_report(to_json(run_kneser_census(g_max_threads)));
    bool ok7 = kneser1 == kneserN;

    auto scans1 = run_structure_scans(1);
    auto scansN = run_structure_scans(g_max_threads);
    bool ok8 = scans1.size() == scansN.size();
    for (std::size_t i = 0; ok8 && i < scans1.size(); ++i)
        ok8 = dump_report(to_json(scans1[i])) == dump_report(to_json(scansN[i]));

    detail = std::string("criterion5 byte-identical: ") + (ok5 ? "yes" : "no") +
             ", criterion7: " + (ok7 ? "yes" : "no") + ", criterion8: " + (ok8 ? "yes" : "no");
    return ok5 && ok7 && ok8;
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    unsigned hw = std::thread::hardware_concurrency();
    g_max_threads = hw ? static_cast<int>(hw) : 4;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--threads" && i + 1 < argc) g_max_threads = std::atoi(argv[++i]);
    }

    std::vector<Criterion> criteria = {
        {1, "definition-oracle equivalence", 60, criterion1},
        {2, "duality suite", 300, criterion2},
        {3, "intersection suite", 300, criterion3},
        {4, "Cauchy-Davenport check", 120, criterion4},
        {5, "Vosper fixed points", 60, criterion5},
        {6, "progression degeneracy", 60, criterion6},
        {7, "main-theorem census", 600, criterion7},
        {8, "structure scans", 900, criterion8},
        {9, "determinism", 1800, criterion9},
    };

    bool all_ok = true;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.budget_seconds) {
            ok = false;
            detail += " [over budget " + std::to_string(c.budget_seconds) + "s]";
        }
        std::printf("[%s] criterion %d (%s): %s (%.1fs)\n", ok ? "PASS" : "FAIL", c.id, c.name,
                    detail.c_str(), secs);
        std::fflush(stdout);
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
