#pragma once

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "hyperfield/core.hpp"
#include "hyperfield/groups.hpp"
#include "hyperfield/morphisms.hpp"
#include "hyperfield/verify.hpp"

namespace hyperfield {

/**
 * Candidate elements for -1 during enumeration: one representative per
 * orbit of Aut(G) acting on the self-inverse elements (the largest index
 * in each orbit, which matches the conventional labels a² for C4 and ab
 * for C2,2). Returned sorted ascending.
 */
inline std::vector<Element> negation_representatives(const FiniteMonoid& g) {
    auto autos = automorphisms(g);
    std::vector<Element> reps;
    std::vector<bool> seen(g.order, false);
    for (Element e = 1; e < g.order; ++e) {
        if (g.mul(e, e) != 1 || seen[e]) continue;
        Element rep = e;
        for (const auto& sigma : autos) {
            seen[sigma[e]] = true;
            rep = std::max(rep, sigma[e]);
        }
        reps.push_back(rep);
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

struct EnumerationOptions {
    std::optional<GroupSpec> group;   // restrict to one unit group
    std::optional<Element> neg_one;   // restrict to one designated -1
    int threads = 0;                  // 0 = HYPERFIELD_THREADS or hardware
};

struct HyperfieldClass {
    HyperStructure rep;   // canonical representative over the standard monoid
    std::string canonical;
    GroupSpec group;
    Element neg_rep = 1;  // orbit representative of -1
};

struct Subtotal {
    GroupSpec group;
    Element neg_rep = 1;
    std::string neg_name;
    long long count = 0;
};

struct EnumerationResult {
    int order = 0;
    std::vector<HyperfieldClass> classes;  // sorted by canonical form
    std::vector<Subtotal> subtotals;
    long long candidates = 0;  // fully assigned row families / naive tables
    long long verified = 0;    // candidates passing the full axiom check
    long long duplicates = 0;  // verified candidates merged into an existing class
    double seconds = 0;
};

namespace detail {

// Assembles the full table from the first-row family S_g = 1 ⊞ g via the
// translation identity x ⊞ y = x · S_{x⁻¹y} forced by distributivity.
inline HyperStructure assemble(const FiniteMonoid& g, Element e,
                               const std::vector<std::uint32_t>& rows) {
    int n = g.order;
    HyperStructure h;
    h.monoid = g;
    h.neg_one = e;
    h.add_table.assign(n * n, {});
    for (Element x = 0; x < n; ++x) {
        h.set_cell(0, x, ElementSet::single(x));
        h.set_cell(x, 0, ElementSet::single(x));
    }
    for (Element x = 1; x < n; ++x) {
        Element xinv = g.inverse(x);
        for (Element y = 1; y < n; ++y)
            h.set_cell(x, y, g.act(x, ElementSet::from_mask(rows[g.mul(xinv, y)])));
    }
    return h;
}

struct SearchSink {
    std::map<std::string, HyperfieldClass>* classes;
    long long candidates = 0;
    long long verified = 0;
};

// Backtracking over the rows S_g in increasing index order; candidate
// masks ascend so traversal is reproducible. Only constraints that are
// consequences of the axioms prune the search:
//   (a) 0 ∈ S_g  ⟺  g = e                          (unique hyperinverse)
//   (b) S_g = g · S_{g⁻¹}                           (commutativity)
//   (c) x ∈ S_z  ⟺  x⁻¹z ∈ S_{e·x⁻¹}, x,z nonzero  (reversibility)
// Every assembled table is re-verified in full, so soundness never rests
// on these derivations.
class RowSearch {
public:
    RowSearch(const FiniteMonoid& g, Element e, const GroupSpec& spec, Element neg_rep)
        : g_(g), e_(e), spec_(spec), neg_rep_(neg_rep), n_(g.order), rows_(g.order, 0) {}

    void run(SearchSink& sink, Element from_row = 1) {
        sink_ = &sink;
        descend(from_row);
    }

    // Seeds for parallel splitting: the admissible masks of the first row.
    std::vector<std::uint32_t> first_row_choices() const {
        std::vector<std::uint32_t> out;
        for (std::uint32_t m = 1; m < (1u << n_); ++m)
            if (row_ok(1, m)) out.push_back(m);
        return out;
    }

    void set_row(Element gx, std::uint32_t mask) { rows_[gx] = mask; }

    bool row_ok(Element gx, std::uint32_t mask) const {
        if (mask == 0) return false;
        if (((mask & 1u) != 0) != (gx == e_)) return false;
        Element ginv = g_.inverse(gx);
        if (ginv == gx &&
            g_.act(gx, ElementSet::from_mask(mask)).mask() != mask) return false;
        // reversibility against rows already fixed (indices <= gx)
        for (Element x = 1; x < n_; ++x) {
            Element xinv = g_.inverse(x);
            Element w = g_.mul(e_, xinv);
            if (w <= gx) {
                std::uint32_t wmask = w == gx ? mask : rows_[w];
                bool lhs = (mask >> x) & 1u;
                bool rhs = (wmask >> g_.mul(xinv, gx)) & 1u;
                if (lhs != rhs) return false;
            }
        }
        // pairs (x0, z) with e·x0⁻¹ = gx for earlier rows z
        Element x0 = g_.mul(e_, g_.inverse(gx));
        Element x0inv = g_.inverse(x0);
        for (Element z = 1; z < gx; ++z) {
            bool lhs = (rows_[z] >> x0) & 1u;
            bool rhs = (mask >> g_.mul(x0inv, z)) & 1u;
            if (lhs != rhs) return false;
        }
        return true;
    }

    void descend(Element gx) {
        if (gx == n_) {
            leaf();
            return;
        }
        Element ginv = g_.inverse(gx);
        if (ginv < gx) {
            // forced by commutativity
            std::uint32_t m = g_.act(gx, ElementSet::from_mask(rows_[ginv])).mask();
            if (!row_ok(gx, m)) return;
            rows_[gx] = m;
            descend(gx + 1);
            rows_[gx] = 0;
            return;
        }
        for (std::uint32_t m = 1; m < (1u << n_); ++m) {
            if (!row_ok(gx, m)) continue;
            rows_[gx] = m;
            descend(gx + 1);
            rows_[gx] = 0;
        }
    }

private:
    void leaf() {
        ++sink_->candidates;
        HyperStructure h = assemble(g_, e_, rows_);
        if (!is_hyperfield(h)) return;
        ++sink_->verified;
        CanonicalForm canon = canonical_decompose(h);
        if (sink_->classes->count(canon.key)) return;
        sink_->classes->emplace(
            canon.key, HyperfieldClass{std::move(canon.rep), canon.key, spec_, neg_rep_});
    }

    const FiniteMonoid& g_;
    Element e_;
    GroupSpec spec_;
    Element neg_rep_;
    int n_;
    std::vector<std::uint32_t> rows_;
    SearchSink* sink_ = nullptr;
};

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("HYPERFIELD_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? (int)hw : 1;
}

}  // namespace detail

/**
 * All hyperfields of the given order up to isomorphism. For each abelian
 * unit group and each negation representative, backtracks over row
 * families, assembles the table by the translation identity, re-verifies
 * every axiom, and deduplicates by canonical form. The class set (and its
 * sorted canonical list) is identical for serial and parallel runs.
 */
inline EnumerationResult enumerate_hyperfields(int order, EnumerationOptions opts = {}) {
    if (order < 2) throw error("enumerate: order must be at least 2");
    if (order > 7) throw error("enumerate: orders beyond 7 are not supported");
    auto t0 = std::chrono::steady_clock::now();

    EnumerationResult result;
    result.order = order;

    std::vector<GroupSpec> groups;
    if (opts.group) {
        if (opts.group->group_order() != order - 1)
            throw error("enumerate: group order must be one less than the carrier order");
        groups = {*opts.group};
    } else {
        groups = abelian_groups(order - 1);
    }

    struct Task {
        const FiniteMonoid* monoid;
        GroupSpec spec;
        Element e;
        Element neg_rep;
        std::uint32_t first_row;
    };
    std::vector<FiniteMonoid> monoids;
    monoids.reserve(groups.size());
    std::vector<Task> tasks;
    std::vector<std::pair<GroupSpec, Element>> subtotal_keys;

    for (const GroupSpec& spec : groups) {
        monoids.push_back(group_monoid(spec));
        const FiniteMonoid& m = monoids.back();
        std::vector<Element> negs;
        if (opts.neg_one) {
            Element e = *opts.neg_one;
            if (e < 1 || e >= m.order || m.mul(e, e) != 1)
                throw error("enumerate: designated -1 must be a self-inverse unit");
            negs = {e};
        } else {
            negs = negation_representatives(m);
        }
        for (Element e : negs) {
            subtotal_keys.push_back({spec, e});
            detail::RowSearch probe(m, e, spec, e);
            for (std::uint32_t m1 : probe.first_row_choices())
                tasks.push_back({&monoids.back(), spec, e, e, m1});
        }
    }

    int threads = detail::resolve_threads(opts.threads);
    std::map<std::string, HyperfieldClass> classes;
    std::atomic<long long> candidates{0}, verified{0};

    if (threads <= 1 || tasks.size() <= 1) {
        detail::SearchSink sink{&classes};
        for (const Task& t : tasks) {
            detail::RowSearch search(*t.monoid, t.e, t.spec, t.neg_rep);
            search.set_row(1, t.first_row);
            search.run(sink, 2);
        }
        candidates = sink.candidates;
        verified = sink.verified;
    } else {
        // branches share nothing; per-thread class maps merge by key union
        std::vector<std::map<std::string, HyperfieldClass>> partial(threads);
        std::atomic<std::size_t> next{0};
        auto worker = [&](int tid) {
            detail::SearchSink sink{&partial[tid]};
            for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
                const Task& t = tasks[i];
                detail::RowSearch search(*t.monoid, t.e, t.spec, t.neg_rep);
                search.set_row(1, t.first_row);
                search.run(sink, 2);
            }
            candidates += sink.candidates;
            verified += sink.verified;
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
        for (auto& p : partial)
            for (auto& kv : p) classes.emplace(kv.first, std::move(kv.second));
    }

    for (auto& kv : classes) result.classes.push_back(std::move(kv.second));
    for (auto& [spec, e] : subtotal_keys) {
        Subtotal st{spec, e, group_monoid(spec).names[e], 0};
        for (const HyperfieldClass& c : result.classes)
            if (c.group == spec && c.neg_rep == e) ++st.count;
        result.subtotals.push_back(std::move(st));
    }
    result.candidates = candidates;
    result.verified = verified;
    result.duplicates = result.verified - (long long)result.classes.size();
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

/**
 * Independent oracle for small orders: enumerates every commutative table
 * cell by cell, constraining only 0 ⊞ x = {x} and the 0-membership pattern
 * (one hyperinverse per element), then runs the full verifier on each.
 * The search space explodes beyond order 4, so larger inputs are rejected.
 */
inline EnumerationResult naive_enumerate(int order) {
    if (order < 2) throw error("naive_enumerate: order must be at least 2");
    if (order > 4)
        throw error("naive_enumerate: capacity is order <= 4 (the unconstrained space "
                    "at order 5 exceeds 10^11 candidates)");
    auto t0 = std::chrono::steady_clock::now();

    EnumerationResult result;
    result.order = order;
    int n = order;

    std::map<std::string, HyperfieldClass> classes;
    long long candidates = 0, verified = 0;

    for (const GroupSpec& spec : abelian_groups(n - 1)) {
        FiniteMonoid m = group_monoid(spec);
        auto autos = automorphisms(m);

        // all involutions of the units, as candidate hyperinverse patterns
        std::vector<std::vector<Element>> involutions;
        std::vector<Element> inv_map(n, -1);
        auto build = [&](auto&& self, Element x) -> void {
            while (x < n && inv_map[x] >= 0) ++x;
            if (x >= n) {
                involutions.push_back(std::vector<Element>(inv_map.begin(), inv_map.end()));
                return;
            }
            inv_map[x] = x;
            self(self, x + 1);
            inv_map[x] = -1;
            for (Element y = x + 1; y < n; ++y) {
                if (inv_map[y] >= 0) continue;
                inv_map[x] = y;
                inv_map[y] = x;
                self(self, x + 1);
                inv_map[x] = -1;
                inv_map[y] = -1;
            }
        };
        build(build, 1);

        // cells of the upper triangle over nonzero pairs
        std::vector<std::pair<Element, Element>> cells;
        for (Element x = 1; x < n; ++x)
            for (Element y = x; y < n; ++y) cells.push_back({x, y});

        for (const auto& sigma : involutions) {
            HyperStructure h;
            h.monoid = m;
            h.add_table.assign(n * n, {});
            for (Element x = 0; x < n; ++x) {
                h.set_cell(0, x, ElementSet::single(x));
                h.set_cell(x, 0, ElementSet::single(x));
            }
            h.neg_one = sigma[1];

            auto fill = [&](auto&& self, std::size_t ci) -> void {
                if (ci == cells.size()) {
                    ++candidates;
                    if (!is_hyperfield(h)) return;
                    ++verified;
                    CanonicalForm canon = canonical_decompose(h);
                    if (classes.count(canon.key)) return;
                    Element neg_rep = sigma[1];
                    for (const auto& a : autos) neg_rep = std::max(neg_rep, a[sigma[1]]);
                    classes.emplace(canon.key,
                                    HyperfieldClass{std::move(canon.rep), canon.key, spec, neg_rep});
                    return;
                }
                auto [x, y] = cells[ci];
                bool zero_bit = sigma[x] == y;
                std::uint32_t units = ElementSet::full(n).mask() & ~1u;
                for (std::uint32_t t = 0; t <= units; ++t) {
                    if (t & ~units) continue;
                    std::uint32_t mask = t | (zero_bit ? 1u : 0u);
                    if (mask == 0) continue;
                    h.set_cell(x, y, ElementSet::from_mask(mask));
                    h.set_cell(y, x, ElementSet::from_mask(mask));
                    self(self, ci + 1);
                }
                h.set_cell(x, y, {});
                h.set_cell(y, x, {});
            };
            fill(fill, 0);
        }
    }

    for (auto& kv : classes) result.classes.push_back(std::move(kv.second));
    // subtotals keyed like the fast path: (group, negation orbit representative)
    for (const GroupSpec& spec : abelian_groups(n - 1)) {
        FiniteMonoid m = group_monoid(spec);
        for (Element e : negation_representatives(m)) {
            Subtotal st{spec, e, m.names[e], 0};
            for (const HyperfieldClass& c : result.classes)
                if (c.group == spec && c.neg_rep == e) ++st.count;
            result.subtotals.push_back(std::move(st));
        }
    }
    result.candidates = candidates;
    result.verified = verified;
    result.duplicates = result.verified - (long long)result.classes.size();
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

}  // namespace hyperfield
