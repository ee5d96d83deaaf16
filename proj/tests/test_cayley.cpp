#include <doctest.h>

#include "isofrag/cayley.hpp"
#include "isofrag/isoperimetry.hpp"
#include "oracle.hpp"

using namespace isofrag;

TEST_CASE("cayley construction") {
    auto z5 = FiniteGroup::build_shared(GroupDescriptor::cyclic(5));
    CayleyGraph g(z5, ElementSet::of(5, {0, 1}));
    for (int v = 0; v < 5; ++v)
        CHECK(g.relation().row(v) == ElementSet::of(5, {v, (v + 1) % 5}));

    CHECK_THROWS_AS(CayleyGraph(z5, ElementSet::of(5, {1, 2})), NotReflexiveError);

    // Cay(G,{e}) is the identity relation, Cay(G,G) the complete one.
    auto d8 = FiniteGroup::build_shared(GroupDescriptor::dihedral(8));
    CayleyGraph ident(d8, ElementSet::of(8, {0}));
    CayleyGraph complete(d8, ElementSet::full_set(8));
    for (int v = 0; v < 8; ++v) {
        CHECK(ident.relation().row(v) == ElementSet::single(8, v));
        CHECK(complete.relation().row(v) == ElementSet::full_set(8));
    }
}

TEST_CASE("image equals Minkowski product: Gamma(F) = FS") {
    auto d10 = FiniteGroup::build_shared(GroupDescriptor::dihedral(10));
    ElementSet s = ElementSet::of(10, {0, 1, 5, 7});
    CayleyGraph g(d10, s);
    for (std::uint64_t mask = 0; mask < 1024; mask += 11) {
        ElementSet f(10);
        for (int i = 0; i < 10; ++i)
            if (mask >> i & 1) f.add(i);
        CHECK(image(g.relation(), f) == set_product(*d10, f, s));
    }
    auto p = degree_profile(g.relation());
    CHECK(p.regular);
    CHECK(p.delta == s.count());
}

TEST_CASE("normalize_connection_set") {
    auto z7 = FiniteGroup::build(GroupDescriptor::cyclic(7));
    auto [s, a] = normalize_connection_set(z7, ElementSet::of(7, {1, 2, 4}));
    CHECK(a == 1);
    CHECK(s == ElementSet::of(7, {0, 1, 3}));
    CHECK(s.test(FiniteGroup::identity));

    ElementSet with_e = ElementSet::of(7, {0, 2});
    auto [s2, a2] = normalize_connection_set(z7, with_e);
    CHECK(a2 == 0);
    CHECK(s2 == with_e);

    CHECK_THROWS_AS(normalize_connection_set(z7, ElementSet(7)), EmptySetError);
}

TEST_CASE("translation keeps fragments: Cay(G,S) vs Cay(G,Sa^-1)") {
    std::vector<GroupDescriptor> roster;
    for (int n = 2; n <= 10; ++n) roster.push_back(GroupDescriptor::cyclic(n));
    roster.push_back(GroupDescriptor::dihedral(8));
    roster.push_back(GroupDescriptor::dihedral(10));
    roster.push_back(GroupDescriptor::quaternion());
    roster.push_back(GroupDescriptor::symmetric(3));
    for (const auto& desc : roster) {
        FiniteGroup g = FiniteGroup::build(desc);
        const int n = g.order();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            if (!(mask & 1)) continue;  // e in S
            ElementSet s(n);
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) s.add(i);
            Relation base = cayley_relation(g, s);
            for (int k : {1, 2}) {
                if (!is_k_separable(base, k)) continue;
                auto frags = oracle::set_masks(fragment_report(base, k).fragments);
                std::vector<int> picks = {s.lowest()};
                if (s.count() > 1) picks.push_back(s.indices().back());
                for (int a : picks) {
                    ElementSet sa = translate(g, s, g.inv(a), Side::Right);
                    Relation shifted = cayley_relation(g, sa);
                    CHECK(oracle::set_masks(fragment_report(shifted, k).fragments) == frags);
                }
            }
        }
    }
}

TEST_CASE("blocks under translations") {
    auto z5 = FiniteGroup::build_shared(GroupDescriptor::cyclic(5));
    CayleyGraph g5(z5, ElementSet::of(5, {0, 1}));
    CHECK_FALSE(is_block_under_translations(g5, ElementSet::of(5, {0, 1})));

    auto z6 = FiniteGroup::build(GroupDescriptor::cyclic(6));
    CHECK(is_block_under_translations(z6, ElementSet::of(6, {0, 2, 4})));  // subgroup
    CHECK(is_block_under_translations(z6, ElementSet::of(6, {1, 3, 5})));  // coset

    auto d8 = FiniteGroup::build(GroupDescriptor::dihedral(8));
    for (const auto& h : all_subgroups(d8)) {
        CHECK(is_block_under_translations(d8, h.elements()));
        for (int x = 0; x < 8; ++x)
            CHECK(is_block_under_translations(d8, translate(d8, h.elements(), x, Side::Right)));
    }
}

TEST_CASE("orbit_canonical") {
    auto z5 = FiniteGroup::build(GroupDescriptor::cyclic(5));
    CHECK(orbit_canonical(z5, ElementSet::of(5, {2, 3})) == ElementSet::of(5, {0, 1}));
    CHECK(orbit_canonical(z5, ElementSet::of(5, {0})) == ElementSet::of(5, {0}));

    auto q8 = FiniteGroup::build(GroupDescriptor::quaternion());
    for (std::uint64_t mask = 0; mask < 256; mask += 3) {
        ElementSet x(8);
        for (int i = 0; i < 8; ++i)
            if (mask >> i & 1) x.add(i);
        ElementSet canon = orbit_canonical(q8, x);
        CHECK(orbit_canonical(q8, canon) == canon);  // idempotent
        for (int t = 0; t < 8; ++t)
            CHECK(orbit_canonical(q8, translate(q8, x, t, Side::Left)) == canon);
        CHECK_FALSE(ElementSet::lex_less(x, canon));

        auto oi = orbit_index(q8, x);
        CHECK(oi.representative == canon);
        CHECK((x.count() == 0 ? oi.orbit_size == 1 : 8 % oi.orbit_size == 0));
    }
}

TEST_CASE("the 1-atom containing e of a generating Cayley graph is a subgroup (one side)") {
    // Structure half of the Cauchy-Cayley theorem, unit-scale roster.
    std::vector<GroupDescriptor> roster = {GroupDescriptor::cyclic(6), GroupDescriptor::cyclic(8),
                                           GroupDescriptor::dihedral(8),
                                           GroupDescriptor::quaternion(),
                                           GroupDescriptor::symmetric(3)};
    for (const auto& desc : roster) {
        FiniteGroup g = FiniteGroup::build(desc);
        const int n = g.order();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {
            ElementSet s(n);
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) s.add(i);
            if (generated_subgroup(g, s).elements().count() != n) continue;
            Relation fwd = cayley_relation(g, s);
            if (!is_k_separable(fwd, 1)) continue;
            auto has_subgroup_atom = [&](const Relation& r) {
                for (const auto& a : fragment_report(r, 1).atoms) {
                    if (!a.test(0)) continue;
                    bool closed = true;
                    a.for_each([&](int p) {
                        a.for_each([&](int q) {
                            if (!a.test(g.mul(p, q))) closed = false;
                        });
                    });
                    if (closed && a.test(0)) return true;
                }
                return false;
            };
            bool ok = has_subgroup_atom(fwd) || has_subgroup_atom(reverse(fwd));
            INFO(g.name(), " S=", oracle::set_mask(s));
            CHECK(ok);
        }
    }
}
