#include "isofrag/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace isofrag {

// ---------------------------------------------------------------------------
// GroupDescriptor

GroupDescriptor GroupDescriptor::cyclic(int n) {
    GroupDescriptor d;
    d.family = Family::Cyclic;
    d.n = n;
    return d;
}

GroupDescriptor GroupDescriptor::dihedral(int order) {
    GroupDescriptor d;
    d.family = Family::Dihedral;
    d.n = order;
    return d;
}

GroupDescriptor GroupDescriptor::quaternion() {
    GroupDescriptor d;
    d.family = Family::Quaternion;
    d.n = 8;
    return d;
}

GroupDescriptor GroupDescriptor::symmetric(int degree) {
    GroupDescriptor d;
    d.family = Family::Symmetric;
    d.n = degree;
    return d;
}

GroupDescriptor GroupDescriptor::product(std::vector<GroupDescriptor> parts) {
    GroupDescriptor d;
    d.family = Family::Product;
    d.parts = std::move(parts);
    return d;
}

GroupDescriptor GroupDescriptor::explicit_table(std::vector<std::vector<int>> table) {
    GroupDescriptor d;
    d.family = Family::Table;
    d.table = std::move(table);
    return d;
}

int GroupDescriptor::order() const {
    switch (family) {
        case Family::Cyclic: return n;
        case Family::Dihedral: return n;
        case Family::Quaternion: return 8;
        case Family::Symmetric: {
            int f = 1;
            for (int i = 2; i <= n; ++i) f *= i;
            return f;
        }
        case Family::Product: {
            int p = 1;
            for (const auto& part : parts) p *= part.order();
            return p;
        }
        case Family::Table: return static_cast<int>(table.size());
    }
    return 0;
}

std::string GroupDescriptor::name() const {
    switch (family) {
        case Family::Cyclic: return "Z" + std::to_string(n);
        case Family::Dihedral: return "D" + std::to_string(n);
        case Family::Quaternion: return "Q8";
        case Family::Symmetric: return "S" + std::to_string(n);
        case Family::Product: {
            std::string s;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i) s += "x";
                s += parts[i].name();
            }
            return s;
        }
        case Family::Table: return "table[" + std::to_string(table.size()) + "]";
    }
    return "?";
}

GroupDescriptor GroupDescriptor::parse(const std::string& text) {
    auto lower = text;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    auto colon = lower.find(':');
    std::string head = lower.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : lower.substr(colon + 1);

    auto parse_int = [&](const std::string& s) {
        if (s.empty() || !std::all_of(s.begin(), s.end(),
                                      [](unsigned char c) { return std::isdigit(c); }))
            throw Error("bad group descriptor: " + text);
        return std::stoi(s);
    };

    if (head == "cyclic" || head == "z") return cyclic(parse_int(args));
    if (head == "dihedral" || head == "d") return dihedral(parse_int(args));
    if (head == "q8" || head == "quaternion") return quaternion();
    if (head == "s3") return symmetric(3);
    if (head == "s4") return symmetric(4);
    if (head == "symmetric" || head == "s") return symmetric(parse_int(args));
    if (head == "product") {
        // product:2x4 -> Z2 x Z4 (cyclic factors)
        std::vector<GroupDescriptor> parts;
        std::string cur;
        for (char c : args + "x") {
            if (c == 'x') {
                if (!cur.empty()) parts.push_back(cyclic(parse_int(cur)));
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (parts.empty()) throw Error("bad group descriptor: " + text);
        return product(std::move(parts));
    }
    throw Error("bad group descriptor: " + text);
}

// ---------------------------------------------------------------------------
// FiniteGroup

namespace {

std::vector<std::vector<int>> cyclic_table(int n) {
    if (n <= 0) throw NotAGroupError("cyclic order must be positive");
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return t;
}

// Elements r^i (index i) and r^i s (index m+i); s r^j = r^-j s.
std::vector<std::vector<int>> dihedral_table(int order) {
    if (order < 2 || order % 2 != 0) throw NotAGroupError("dihedral order must be even and >= 2");
    int m = order / 2;
    auto idx = [m](int i, int f) { return f * m + i; };
    std::vector<std::vector<int>> t(static_cast<std::size_t>(order), std::vector<int>(order));
    for (int i = 0; i < m; ++i)
        for (int f = 0; f < 2; ++f)
            for (int j = 0; j < m; ++j)
                for (int e = 0; e < 2; ++e) {
                    int k = f == 0 ? (i + j) % m : ((i - j) % m + m) % m;
                    t[static_cast<std::size_t>(idx(i, f))][static_cast<std::size_t>(idx(j, e))] =
                        idx(k, f ^ e);
                }
    return t;
}

// 1,i,j,k,-1,-i,-j,-k at indices 0..7.
std::vector<std::vector<int>> quaternion_table() {
    // sign-tracking multiplication of the basis {1,i,j,k}
    auto base_mul = [](int a, int b, int& sign) {
        // returns basis index of a*b with sign in {+1,-1}
        static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sgn[4][4] = {{+1, +1, +1, +1},
                                      {+1, -1, +1, -1},
                                      {+1, -1, -1, +1},
                                      {+1, +1, -1, -1}};
        sign = sgn[a][b];
        return prod[a][b];
    };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int sa = a < 4 ? 1 : -1, sb = b < 4 ? 1 : -1;
            int s = 0;
            int basis = base_mul(a % 4, b % 4, s);
            int total = sa * sb * s;
            t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                total > 0 ? basis : basis + 4;
        }
    return t;
}

std::vector<std::vector<int>> symmetric_table(int degree) {
    if (degree < 1 || degree > 5) throw NotAGroupError("symmetric degree out of range");
    std::vector<int> base(static_cast<std::size_t>(degree));
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> perms;
    std::vector<int> p = base;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    // lexicographic order puts the identity first
    int n = static_cast<int>(perms.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < n; ++i) index[perms[static_cast<std::size_t>(i)]] = i;
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> c(static_cast<std::size_t>(degree));
            for (int x = 0; x < degree; ++x)
                c[static_cast<std::size_t>(x)] =
                    perms[static_cast<std::size_t>(a)]
                         [static_cast<std::size_t>(perms[static_cast<std::size_t>(b)]
                                                        [static_cast<std::size_t>(x)])];
            t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = index[c];
        }
    return t;
}

std::vector<std::vector<int>> product_table(const std::vector<GroupDescriptor>& parts) {
    if (parts.empty()) throw NotAGroupError("empty product");
    std::vector<FiniteGroup> groups;
    groups.reserve(parts.size());
    for (const auto& p : parts) groups.push_back(FiniteGroup::build(p));
    int n = 1;
    for (const auto& g : groups) n *= g.order();
    if (n > kMaxUniverse) throw BudgetExceededError("product order exceeds universe cap");
    auto decode = [&](int x) {
        std::vector<int> coords(groups.size());
        for (std::size_t i = groups.size(); i-- > 0;) {
            coords[i] = x % groups[i].order();
            x /= groups[i].order();
        }
        return coords;
    };
    auto encode = [&](const std::vector<int>& coords) {
        int x = 0;
        for (std::size_t i = 0; i < groups.size(); ++i) x = x * groups[i].order() + coords[i];
        return x;
    };
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        auto ca = decode(a);
        for (int b = 0; b < n; ++b) {
            auto cb = decode(b);
            std::vector<int> cc(groups.size());
            for (std::size_t i = 0; i < groups.size(); ++i) cc[i] = groups[i].mul(ca[i], cb[i]);
            t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = encode(cc);
        }
    }
    return t;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::string name)
    : name_(std::move(name)) {
    int n = static_cast<int>(table.size());
    if (n == 0) throw NotAGroupError("empty table");
    if (n > kMaxUniverse)
        throw BudgetExceededError("group order " + std::to_string(n) + " exceeds universe cap " +
                                  std::to_string(kMaxUniverse));
    order_ = n;
    table_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(table[static_cast<std::size_t>(a)].size()) != n)
            throw NotAGroupError("table is not square");
        for (int b = 0; b < n; ++b) {
            int v = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            if (v < 0 || v >= n) throw NotAGroupError("table entry out of range");
            table_[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(v);
        }
    }
    // Latin square
    for (int a = 0; a < n; ++a) {
        ElementSet row(n), col(n);
        for (int b = 0; b < n; ++b) {
            row.add(mul(a, b));
            col.add(mul(b, a));
        }
        if (row.count() != n) throw NotAGroupError("row " + std::to_string(a) + " is not a permutation");
        if (col.count() != n) throw NotAGroupError("column " + std::to_string(a) + " is not a permutation");
    }
    // identity canonically at index 0
    for (int a = 0; a < n; ++a)
        if (mul(identity, a) != a || mul(a, identity) != a)
            throw NotAGroupError("index 0 is not a two-sided identity");
    // two-sided inverses
    inv_.assign(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a) {
        int found = -1;
        for (int b = 0; b < n; ++b)
            if (mul(a, b) == identity && mul(b, a) == identity) found = b;
        if (found < 0) throw NotAGroupError("no two-sided inverse for " + std::to_string(a));
        inv_[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(found);
    }
    // associativity, O(n^3)
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw NotAGroupError("non-associative triple (" + std::to_string(a) + "," +
                                         std::to_string(b) + "," + std::to_string(c) + ")");
    if (name_.empty()) name_ = "table[" + std::to_string(n) + "]";
    descriptor_ = GroupDescriptor::explicit_table(std::move(table));
}

FiniteGroup FiniteGroup::build(const GroupDescriptor& spec) {
    std::vector<std::vector<int>> table;
    switch (spec.family) {
        case GroupDescriptor::Family::Cyclic: table = cyclic_table(spec.n); break;
        case GroupDescriptor::Family::Dihedral: table = dihedral_table(spec.n); break;
        case GroupDescriptor::Family::Quaternion: table = quaternion_table(); break;
        case GroupDescriptor::Family::Symmetric: table = symmetric_table(spec.n); break;
        case GroupDescriptor::Family::Product: table = product_table(spec.parts); break;
        case GroupDescriptor::Family::Table: table = spec.table; break;
    }
    FiniteGroup g(std::move(table), spec.name());
    g.descriptor_ = spec;
    return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::build_shared(const GroupDescriptor& spec) {
    return std::make_shared<const FiniteGroup>(build(spec));
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Subgroup and set algebra

Subgroup::Subgroup(const FiniteGroup& group, ElementSet elements) : elements_(std::move(elements)) {
    if (!elements_.test(FiniteGroup::identity))
        throw NotAGroupError("subgroup does not contain the identity");
    bool closed = true;
    elements_.for_each([&](int a) {
        if (!elements_.test(group.inv(a))) closed = false;
        elements_.for_each([&](int b) {
            if (!elements_.test(group.mul(a, b))) closed = false;
        });
    });
    if (!closed) throw NotAGroupError("subset is not closed under product/inverse");
}

ElementSet set_product(const FiniteGroup& g, const ElementSet& a, const ElementSet& b) {
    ElementSet out(g.order());
    a.for_each([&](int x) {
        b.for_each([&](int y) { out.add(g.mul(x, y)); });
    });
    return out;
}

ElementSet set_inverse(const FiniteGroup& g, const ElementSet& a) {
    ElementSet out(g.order());
    a.for_each([&](int x) { out.add(g.inv(x)); });
    return out;
}

ElementSet translate(const FiniteGroup& g, const ElementSet& a, int x, Side side) {
    ElementSet out(g.order());
    a.for_each([&](int y) { out.add(side == Side::Left ? g.mul(x, y) : g.mul(y, x)); });
    return out;
}

Subgroup generated_subgroup(const FiniteGroup& g, const ElementSet& s) {
    ElementSet cur = ElementSet::single(g.order(), FiniteGroup::identity);
    ElementSet gens = s | set_inverse(g, s);
    for (;;) {
        ElementSet next = cur;
        cur.for_each([&](int a) {
            gens.for_each([&](int x) { next.add(g.mul(a, x)); });
        });
        if (next == cur) break;
        cur = next;
    }
    return Subgroup(g, cur);
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int budget) {
    if (g.order() > budget)
        throw BudgetExceededError("all_subgroups on order " + std::to_string(g.order()) +
                                  " > budget " + std::to_string(budget));
    // closure of cyclic subgroups under pairwise join
    std::set<std::vector<int>> seen;
    std::vector<ElementSet> subs;
    auto add = [&](const ElementSet& h) {
        auto key = h.indices();
        if (seen.insert(key).second) {
            subs.push_back(h);
            return true;
        }
        return false;
    };
    add(ElementSet::single(g.order(), FiniteGroup::identity));
    std::vector<ElementSet> cyclics;
    for (int x = 0; x < g.order(); ++x) {
        ElementSet h = generated_subgroup(g, ElementSet::single(g.order(), x)).elements();
        if (add(h)) cyclics.push_back(h);
    }
    for (std::size_t i = 0; i < subs.size(); ++i) {  // subs grows during the loop
        for (const auto& c : cyclics) {
            if (subs[i].contains(c)) continue;
            add(generated_subgroup(g, subs[i] | c).elements());
        }
    }
    std::sort(subs.begin(), subs.end(), ElementSet::CanonicalLess{});
    std::vector<Subgroup> out;
    out.reserve(subs.size());
    for (auto& h : subs) out.emplace_back(g, h);
    return out;
}

CosetDecomposition stabilizer_and_cosets(const FiniteGroup& g, const ElementSet& a) {
    if (a.empty()) throw EmptySetError("stabilizer_and_cosets");
    ElementSet q(g.order());
    for (int x = 0; x < g.order(); ++x)
        if (translate(g, a, x, Side::Left) == a) q.add(x);
    Subgroup stab(g, q);
    std::set<std::vector<int>> distinct;
    a.for_each([&](int x) { distinct.insert(translate(g, a, g.inv(x), Side::Left).indices()); });
    int t = static_cast<int>(distinct.size());
    // Lemma "tcoset": A is exactly the union of the t right Q-cosets Qa.
    ElementSet rebuilt(g.order());
    a.for_each([&](int x) { rebuilt |= translate(g, q, x, Side::Right); });
    if (rebuilt != a || t * stab.order() != a.count())
        throw Error("stabilizer coset decomposition failed");  // unreachable by the lemma
    return {std::move(stab), t};
}

std::optional<ProgressionWitness> is_progression(const FiniteGroup& g, const ElementSet& s) {
    int size = s.count();
    if (size <= 1) {
        ProgressionWitness w;
        w.ratio = FiniteGroup::identity;
        w.side = Side::Right;
        w.start = s.empty() ? FiniteGroup::identity : s.lowest();
        w.length = size;
        return w;
    }
    for (int r = 0; r < g.order(); ++r) {
        for (int a = 0; a < g.order(); ++a) {
            if (!s.test(a)) continue;
            for (Side side : {Side::Right, Side::Left}) {
                // right-r-progression: a, ra, r^2 a, ...; left: a, ar, ar^2, ...
                ElementSet walk(g.order());
                int x = a;
                int len = 0;
                while (true) {
                    if (!s.test(x)) break;
                    walk.add(x);
                    ++len;
                    if (walk.count() == size) {
                        ProgressionWitness w;
                        w.ratio = r;
                        w.side = side;
                        w.start = a;
                        w.length = len;
                        return w;
                    }
                    x = side == Side::Right ? g.mul(r, x) : g.mul(x, r);
                    if (walk.test(x)) break;  // cycle closed short of S
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace isofrag
