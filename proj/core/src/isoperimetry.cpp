#include "isofrag/isoperimetry.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include "parallel_util.hpp"

namespace isofrag {

namespace {

// The one search of the whole library: index-ordered subset DFS. A node is
// (X, image(X), next free index i); children add a vertex j >= i. Sound
// prunes, valid for enumerating every member of F_k with board <= bound:
//   * exterior: image only grows along a branch, so |exterior(X)| < k kills
//     the subtree;
//   * locked board: board vertices below i can never be absorbed into X,
//     so |board(X) \ {i..n-1}| > bound kills the subtree;
//   * room: |X| + |{i..n-1}| < k can never reach size k.
// No cardinality cap is applied beyond the exterior prune: a cap derived
// from an evolving incumbent would be unsound (fragments of size up to
// n-k-kappa must stay reachable while the incumbent still exceeds kappa).

struct Frame {
    ElementSet x;
    ElementSet img;
    int next;
};

struct SearchSpace {
    const Relation& r;
    int k;
    std::vector<ElementSet> suffix;  // suffix[i] = {i..n-1}

    SearchSpace(const Relation& rel, int level) : r(rel), k(level) {
        const int n = r.vertex_count();
        suffix.assign(static_cast<std::size_t>(n) + 1, ElementSet(n));
        for (int i = n - 1; i >= 0; --i) {
            suffix[static_cast<std::size_t>(i)] = suffix[static_cast<std::size_t>(i) + 1];
            suffix[static_cast<std::size_t>(i)].add(i);
        }
    }
};

template <typename OnMember>
void dfs(const SearchSpace& sp, const std::atomic<int>& bound, Frame root, OnMember&& on_member) {
    const int n = sp.r.vertex_count();
    const int k = sp.k;
    std::vector<Frame> stack;
    stack.push_back(std::move(root));
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        int cx = f.x.count();
        int cimg = f.img.count();
        int ext = n - cimg;
        int b = bound.load(std::memory_order_relaxed);
        if (cx >= k && ext >= k && cimg - cx <= b) on_member(f.x, cimg - cx);
        if (f.next >= n) continue;
        if (ext < k) continue;
        if (cx + (n - f.next) < k) continue;
        const ElementSet& pool = sp.suffix[static_cast<std::size_t>(f.next)];
        if (((f.img - f.x) - pool).count() > b) continue;
        for (int j = f.next; j < n; ++j) {
            Frame child;
            child.x = f.x;
            child.x.add(j);
            child.img = f.img | sp.r.row(j);
            child.next = j + 1;
            stack.push_back(std::move(child));
        }
    }
}

struct TaskRoot {
    ElementSet x;
    ElementSet img;
    int next;
    bool leaf_only;  // evaluate the root set itself, do not descend
};

// Two-level partition of the nonempty subsets: {v} as leaf tasks plus the
// subtrees rooted at {v,w}, v < w. Covers every subset exactly once.
std::vector<TaskRoot> make_tasks(const Relation& r) {
    const int n = r.vertex_count();
    std::vector<TaskRoot> tasks;
    for (int v = 0; v < n; ++v) {
        TaskRoot leaf;
        leaf.x = ElementSet::single(n, v);
        leaf.img = r.row(v);
        leaf.next = n;
        leaf.leaf_only = true;
        tasks.push_back(leaf);
        for (int w = v + 1; w < n; ++w) {
            TaskRoot t;
            t.x = ElementSet::of(n, {v, w});
            t.img = r.row(v) | r.row(w);
            t.next = w + 1;
            t.leaf_only = false;
            tasks.push_back(t);
        }
    }
    return tasks;
}

template <typename OnMember>
void run_search(const SearchSpace& sp, const std::vector<TaskRoot>& tasks,
                const std::atomic<int>& bound, int threads, OnMember&& on_member) {
    const int n = sp.r.vertex_count();
    const int k = sp.k;
    detail::run_tasks(threads, tasks.size(), [&](std::size_t t) {
        const TaskRoot& root = tasks[t];
        if (root.leaf_only) {
            int cx = root.x.count();
            int cimg = root.img.count();
            if (cx >= k && n - cimg >= k && cimg - cx <= bound.load(std::memory_order_relaxed))
                on_member(t, root.x, cimg - cx);
        } else {
            dfs(sp, bound, Frame{root.x, root.img, root.next},
                [&](const ElementSet& x, int bd) { on_member(t, x, bd); });
        }
    });
}

void check_budget(const Relation& r, int k, int cap, const char* what) {
    if (k < 1) throw Error("k must be >= 1");
    if (r.vertex_count() > cap)
        throw BudgetExceededError(std::string(what) + " on " + std::to_string(r.vertex_count()) +
                                  " vertices > budget " + std::to_string(cap));
}

}  // namespace

bool is_k_separable(const Relation& r, int k) {
    if (k < 1) throw Error("k must be >= 1");
    const int n = r.vertex_count();
    if (n < 2 * k) return false;  // |X| + |exterior| <= n
    // Only k-subsets need testing: exteriors shrink under inclusion.
    struct Rec {
        const Relation& r;
        int n, k;
        bool found = false;
        void go(const ElementSet& x, const ElementSet& img, int next, int size) {
            if (found) return;
            if (n - img.count() < k) return;
            if (size == k) {
                found = true;
                return;
            }
            if (size + (n - next) < k) return;
            for (int j = next; j < n && !found; ++j) {
                ElementSet nx = x;
                nx.add(j);
                go(nx, img | r.row(j), j + 1, size + 1);
            }
        }
    } rec{r, n, k};
    rec.go(ElementSet(n), ElementSet(n), 0, 0);
    return rec.found;
}

int kappa(const Relation& r, int k, const SearchOptions& opts) {
    check_budget(r, k, opts.max_kappa_order, "kappa");
    const int n = r.vertex_count();
    SearchSpace sp(r, k);
    auto tasks = make_tasks(r);
    std::atomic<int> bound{n + 1};
    run_search(sp, tasks, bound, opts.threads, [&](std::size_t, const ElementSet&, int bd) {
        int cur = bound.load(std::memory_order_relaxed);
        while (bd < cur && !bound.compare_exchange_weak(cur, bd, std::memory_order_relaxed)) {
        }
    });
    int result = bound.load();
    if (result > n) throw NotSeparableError(k);
    return result;
}

FragmentReport fragment_report(const Relation& r, int k, const SearchOptions& opts) {
    check_budget(r, k, opts.max_enumeration_order, "fragment enumeration");
    FragmentReport rep;
    rep.k = k;
    rep.kappa = kappa(r, k, opts);

    // Second pass with the bound pinned at kappa: every visited member of
    // F_k has board >= kappa, so a visit at the bound is a fragment, and the
    // fixed bound prunes nothing that qualifies. Per-task buckets merged by
    // task index keep the result independent of thread scheduling.
    const std::atomic<int> fixed{rep.kappa};
    SearchSpace sp(r, k);
    auto tasks = make_tasks(r);
    struct Local {
        std::vector<ElementSet> all;
        std::vector<ElementSet> atoms, supers;
        int min_size = std::numeric_limits<int>::max();
        int max_size = -1;
        std::uint64_t count = 0;
    };
    std::vector<Local> locals(tasks.size());
    run_search(sp, tasks, fixed, opts.threads, [&](std::size_t t, const ElementSet& x, int) {
        Local& loc = locals[t];
        ++loc.count;
        if (opts.collect_fragments) loc.all.push_back(x);
        int c = x.count();
        if (c < loc.min_size) {
            loc.min_size = c;
            loc.atoms.clear();
        }
        if (c == loc.min_size) loc.atoms.push_back(x);
        if (c > loc.max_size) {
            loc.max_size = c;
            loc.supers.clear();
        }
        if (c == loc.max_size) loc.supers.push_back(x);
    });

    int min_size = std::numeric_limits<int>::max(), max_size = -1;
    for (const auto& loc : locals) {
        rep.fragment_count += loc.count;
        min_size = std::min(min_size, loc.min_size);
        max_size = std::max(max_size, loc.max_size);
    }
    for (auto& loc : locals) {
        if (opts.collect_fragments)
            rep.fragments.insert(rep.fragments.end(), loc.all.begin(), loc.all.end());
        if (loc.min_size == min_size)
            rep.atoms.insert(rep.atoms.end(), loc.atoms.begin(), loc.atoms.end());
        if (loc.max_size == max_size)
            rep.super_fragments.insert(rep.super_fragments.end(), loc.supers.begin(),
                                       loc.supers.end());
    }
    ElementSet::CanonicalLess less;
    std::sort(rep.fragments.begin(), rep.fragments.end(), less);
    std::sort(rep.atoms.begin(), rep.atoms.end(), less);
    std::sort(rep.super_fragments.begin(), rep.super_fragments.end(), less);
    // |exterior(A)| = n - kappa - |A| for every fragment
    rep.faithful = min_size <= r.vertex_count() - rep.kappa - min_size;
    return rep;
}

bool is_semi_fragment(const Relation& r, const ElementSet& x, int k, const SearchOptions& opts) {
    const int n = r.vertex_count();
    auto is_fragment = [&](const Relation& rel, const ElementSet& s, int kap) {
        if (s.count() < k) return false;
        ElementSet img = image(rel, s);
        if (n - img.count() < k) return false;
        return img.count() - s.count() == kap;
    };
    if (is_k_separable(r, k) && is_fragment(r, x, kappa(r, k, opts))) return true;
    Relation rev = reverse(r);
    if (!is_k_separable(rev, k)) return false;
    return is_fragment(rev, exterior(r, x), kappa(rev, k, opts));
}

namespace {

// Independent scan for the Cauchy neighborhood bound: a violating X has
// |image(X)| < min(n, |X| + delta - 1). Full-image subtrees cannot violate
// and are skipped.
std::optional<ElementSet> find_bound_violator(const Relation& r) {
    const int n = r.vertex_count();
    int delta = degree_profile(r).delta;
    struct Rec {
        const Relation& r;
        int n, delta;
        std::optional<ElementSet> hit;
        void go(const ElementSet& x, const ElementSet& img, int next) {
            if (hit) return;
            int ci = img.count();
            if (!x.empty() && ci < std::min(n, x.count() + delta - 1)) {
                hit = x;
                return;
            }
            if (ci == n) return;
            for (int j = next; j < n && !hit; ++j) {
                ElementSet nx = x;
                nx.add(j);
                go(nx, img | r.row(j), j + 1);
            }
        }
    } rec{r, n, delta, std::nullopt};
    rec.go(ElementSet(n), ElementSet(n), 0);
    return rec.hit;
}

// Smallest qualifying singleton board, or n+1 when no singleton is in F_1.
int min_singleton_board(const Relation& r) {
    const int n = r.vertex_count();
    int best = n + 1;
    for (int v = 0; v < n; ++v) {
        int d = r.row(v).count();
        if (d < n) best = std::min(best, d - 1);
    }
    return best;
}

}  // namespace

bool is_cauchy(const Relation& r, const SearchOptions& opts) {
    if (!is_k_separable(r, 1)) return true;
    // Some 1-atom of r or of reverse(r) is a singleton.
    if (min_singleton_board(r) == kappa(r, 1, opts)) return true;
    Relation rev = reverse(r);
    return min_singleton_board(rev) == kappa(rev, 1, opts);
}

Classification classify(const Relation& r, const SearchOptions& opts) {
    SearchOptions local = opts;
    local.collect_fragments = false;  // only atoms are consulted here
    Classification c;
    if (!is_k_separable(r, 1)) {
        c.tag = GraphClass::NotSeparable;
        c.cauchy = true;  // non-1-separable graphs are Cauchy by definition
        c.cauchy_bound_agrees = !find_bound_violator(r).has_value();
        return c;
    }
    FragmentReport rep1 = fragment_report(r, 1, local);
    c.kappa1 = rep1.kappa;
    Relation rev = reverse(r);
    FragmentReport rev1 = fragment_report(rev, 1, local);
    c.cauchy = rep1.atom_size() == 1 || rev1.atom_size() == 1;

    bool two_sep = is_k_separable(r, 2);
    std::optional<FragmentReport> rep2;
    if (two_sep) {
        rep2 = fragment_report(r, 2, local);
        c.kappa2 = rep2->kappa;
    }

    if (!c.cauchy) {
        c.tag = GraphClass::NonCauchy;
        c.witness = rep1.atoms.front();
    } else if (two_sep) {
        c.tag = *c.kappa2 == *c.kappa1 ? GraphClass::Degenerate : GraphClass::Vosper;
        c.witness = rep2->atoms.front();
    } else {
        // 1-separable Cauchy graph with no 2-separable witness: the Vosper
        // condition kappa2 > kappa1 is vacuous.
        c.tag = GraphClass::Vosper;
        c.vosper_vacuous = true;
    }

    c.bound_violator = find_bound_violator(r);
    bool bound_cauchy = !c.bound_violator.has_value();
    c.cauchy_bound_agrees = bound_cauchy == c.cauchy;
    if (c.cauchy_bound_agrees) c.bound_violator.reset();
    return c;
}

const char* to_string(GraphClass tag) {
    switch (tag) {
        case GraphClass::NotSeparable: return "NotSeparable";
        case GraphClass::Degenerate: return "Degenerate";
        case GraphClass::NonCauchy: return "NonCauchy";
        case GraphClass::Vosper: return "Vosper";
    }
    return "?";
}

}  // namespace isofrag
