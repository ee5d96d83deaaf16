#include <algorithm>
#include <map>

#include "isofrag/theorems.hpp"
#include "parallel_util.hpp"

namespace isofrag {

namespace {

using VerifierFn = VerdictRecord (*)(const FiniteGroup&, const ElementSet&,
                                     const SearchOptions&);

// How a theorem's instance space is generated from a group.
enum class InstanceKind {
    Subsets,    // all nonempty A, orbit classes {a^-1 A : a in A}
    CayleySets  // S with e in S (optional), generating (optional), classes {S a^-1 : a in S}
};

struct TheoremEntry {
    VerifierFn fn;
    InstanceKind kind;
};

const std::map<std::string, TheoremEntry>& registry() {
    static const std::map<std::string, TheoremEntry> reg = {
        {"kneser", {&verify_main_theorem, InstanceKind::Subsets}},
        {"cauchycayley", {&verify_cauchy_cayley, InstanceKind::CayleySets}},
        {"2atomcay", {&verify_2atom_structure, InstanceKind::CayleySets}},
        {"dl", {&verify_dl, InstanceKind::CayleySets}},
        {"astercay", {&verify_astercay, InstanceKind::CayleySets}},
        {"groupfrag", {&verify_groupfrag, InstanceKind::CayleySets}},
        {"vtvosper", {&verify_vtvosper, InstanceKind::CayleySets}},
    };
    return reg;
}

struct Instance {
    ElementSet set;
    int orbit_size = 1;
};

// Canonical representative of the e-normalized class {a^-1 A : a in A}. The
// class is invariant under every left translation of A, and each member is a
// single a^-1-move from A, so the verdict extends to the whole left orbit
// {gA}; the representative therefore stands for full-orbit-size many subsets.
std::optional<Instance> subsets_canonical(const FiniteGroup& g, const ElementSet& a,
                                          bool reduce) {
    if (!reduce) return Instance{a, 1};
    std::vector<ElementSet> forms;
    a.for_each([&](int x) {
        ElementSet t = translate(g, a, g.inv(x), Side::Left);
        if (!std::count(forms.begin(), forms.end(), t)) forms.push_back(t);
    });
    ElementSet best = forms.front();
    for (const auto& f : forms)
        if (ElementSet::lex_less(f, best)) best = f;
    if (best != a) return std::nullopt;
    return Instance{a, orbit_index(g, a).orbit_size};
}

// Canonical representative of {S a^-1 : a in S}; every member contains e.
std::optional<Instance> cayley_canonical(const FiniteGroup& g, const ElementSet& s,
                                         bool reduce) {
    if (!reduce) return Instance{s, 1};
    std::vector<ElementSet> forms;
    s.for_each([&](int x) {
        ElementSet t = translate(g, s, g.inv(x), Side::Right);
        if (!std::count(forms.begin(), forms.end(), t)) forms.push_back(t);
    });
    ElementSet best = forms.front();
    for (const auto& f : forms)
        if (ElementSet::lex_less(f, best)) best = f;
    if (best != s) return std::nullopt;
    return Instance{s, static_cast<int>(forms.size())};
}

}  // namespace

std::vector<std::string> known_theorems() {
    std::vector<std::string> out;
    for (const auto& [id, entry] : registry()) out.push_back(id);
    return out;
}

std::vector<GroupDescriptor> default_roster(int max_order) {
    std::vector<GroupDescriptor> roster;
    for (int n = 1; n <= std::min(max_order, 16); ++n)
        roster.push_back(GroupDescriptor::cyclic(n));
    for (int n = 6; n <= std::min(max_order, 16); n += 2)
        roster.push_back(GroupDescriptor::dihedral(n));
    roster.push_back(GroupDescriptor::quaternion());
    roster.push_back(GroupDescriptor::product({GroupDescriptor::cyclic(2), GroupDescriptor::cyclic(2)}));
    roster.push_back(GroupDescriptor::product({GroupDescriptor::cyclic(2), GroupDescriptor::cyclic(4)}));
    roster.push_back(GroupDescriptor::product(
        {GroupDescriptor::cyclic(2), GroupDescriptor::cyclic(2), GroupDescriptor::cyclic(2)}));
    roster.push_back(GroupDescriptor::product({GroupDescriptor::cyclic(3), GroupDescriptor::cyclic(3)}));
    roster.push_back(GroupDescriptor::symmetric(3));
    roster.push_back(GroupDescriptor::symmetric(4));
    std::vector<GroupDescriptor> out;
    for (auto& d : roster)
        if (d.order() <= max_order) out.push_back(std::move(d));
    return out;
}

ScanSummary scan(const ScanConfig& config, const std::string& theorem_id, const RecordSink& sink) {
    auto it = registry().find(theorem_id);
    if (it == registry().end()) throw UnknownTheoremError(theorem_id);
    const TheoremEntry& entry = it->second;

    std::vector<GroupDescriptor> groups =
        config.groups.empty() ? default_roster(config.max_order) : config.groups;

    ScanSummary summary;
    summary.theorem_id = theorem_id;

    for (const auto& desc : groups) {
        if (desc.order() > config.max_order) continue;
        if (desc.order() > 24)
            throw BudgetExceededError("scan instance space on order " +
                                      std::to_string(desc.order()));
        auto g = FiniteGroup::build_shared(desc);
        const int n = g->order();

        // deterministic instance list, ascending by subset mask
        std::vector<Instance> instances;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            ElementSet s(n);
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) s.add(i);
            std::optional<Instance> inst;
            if (entry.kind == InstanceKind::Subsets) {
                inst = subsets_canonical(*g, s, config.orbit_reduce);
            } else {
                if (config.require_identity && !s.test(FiniteGroup::identity)) continue;
                inst = cayley_canonical(*g, s, config.orbit_reduce);
                if (inst && config.generating_only &&
                    generated_subgroup(*g, inst->set).elements().count() != n)
                    inst.reset();
            }
            if (inst) instances.push_back(std::move(*inst));
        }

        std::vector<VerdictRecord> records(instances.size());
        detail::run_tasks(config.threads, instances.size(), [&](std::size_t i) {
            records[i] = entry.fn(*g, instances[i].set, config.search);
        });

        for (std::size_t i = 0; i < records.size(); ++i) {
            const VerdictRecord& rec = records[i];
            auto weight = static_cast<std::uint64_t>(instances[i].orbit_size);
            summary.canonical_instances += 1;
            summary.instances += weight;
            switch (rec.verdict) {
                case Verdict::Pass: summary.pass += weight; break;
                case Verdict::Fail:
                    summary.fail += weight;
                    summary.failures.push_back(rec);
                    break;
                case Verdict::HypothesisNotMet: summary.hypothesis_not_met += weight; break;
            }
            if (rec.verdict != Verdict::HypothesisNotMet) {
                for (const auto& c : rec.clauses)
                    if (c.holds) summary.clause_counts[c.id] += weight;
                if (!rec.note.empty() && rec.note == "relies on H=G")
                    summary.clause_counts["(relies on H=G)"] += weight;
            }
            if (sink) sink(rec, instances[i].orbit_size);
        }
    }
    return summary;
}

}  // namespace isofrag
