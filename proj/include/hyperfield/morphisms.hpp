#pragma once

#include <algorithm>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperfield/core.hpp"
#include "hyperfield/groups.hpp"
#include "hyperfield/verify.hpp"

namespace hyperfield {

enum class HomKind { Weak, Strong };

/**
 * A total map between two hyperfield carriers together with what it
 * preserves. `map[x]` is the image of x; flags are filled in by the
 * search/verification routines, never assumed.
 */
struct MorphismMap {
    std::vector<Element> map;
    bool weak = false;
    bool strong = false;
    bool injective = false;
    bool iso = false;
};

namespace detail {

inline bool multiplicative_ok(const HyperStructure& f, const HyperStructure& l,
                              const std::vector<Element>& map) {
    if (map[0] != 0 || map[1] != 1) return false;
    for (Element x = 0; x < f.order(); ++x)
        for (Element y = x; y < f.order(); ++y)
            if (map[f.monoid.mul(x, y)] != l.monoid.mul(map[x], map[y])) return false;
    return true;
}

inline ElementSet image_set(const std::vector<Element>& map, ElementSet s) {
    ElementSet out;
    for (Element x : s.members()) out.insert(map[x]);
    return out;
}

inline bool weak_ok(const HyperStructure& f, const HyperStructure& l,
                    const std::vector<Element>& map) {
    for (Element x = 0; x < f.order(); ++x)
        for (Element y = x; y < f.order(); ++y)
            if (!image_set(map, f.cell(x, y)).subset_of(l.cell(map[x], map[y])))
                return false;
    return true;
}

inline bool strong_ok(const HyperStructure& f, const HyperStructure& l,
                      const std::vector<Element>& map) {
    for (Element x = 0; x < f.order(); ++x)
        for (Element y = x; y < f.order(); ++y)
            if (!(image_set(map, f.cell(x, y)) == l.cell(map[x], map[y]))) return false;
    return true;
}

inline bool injective_ok(const std::vector<Element>& map, int target_order) {
    std::vector<bool> seen(target_order, false);
    for (Element v : map) {
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

// Greedy generating set of the unit group: repeatedly adjoin the smallest
// element outside the running closure.
inline std::vector<Element> generating_set(const FiniteMonoid& m) {
    int n = m.order;
    std::vector<bool> in(n, false);
    in[1] = true;
    int covered = 1;
    std::vector<Element> gens;
    auto close = [&]() {
        bool grew = true;
        while (grew) {
            grew = false;
            for (Element x = 1; x < n; ++x)
                if (in[x])
                    for (Element y = 1; y < n; ++y)
                        if (in[y] && !in[m.mul(x, y)]) {
                            in[m.mul(x, y)] = true;
                            ++covered;
                            grew = true;
                        }
        }
    };
    while (covered < n - 1) {
        Element g = 1;
        while (g < n && in[g]) ++g;
        gens.push_back(g);
        in[g] = true;
        ++covered;
        close();
    }
    return gens;
}

// All unit-group homomorphisms F* -> L*, extended by 0 -> 0. Enumerates
// generator images and grows each assignment through the group closure,
// then re-verifies multiplicativity on all pairs.
inline std::vector<std::vector<Element>> all_unit_homs(const HyperStructure& f,
                                                       const HyperStructure& l) {
    const FiniteMonoid& mf = f.monoid;
    const FiniteMonoid& ml = l.monoid;
    std::vector<Element> gens = generating_set(mf);
    std::vector<std::vector<Element>> out;

    std::vector<Element> map(mf.order, -1);
    map[0] = 0;
    map[1] = 1;

    auto grow = [&](auto&& self, std::size_t gi) -> void {
        if (gi == gens.size()) {
            // close the partial map under multiplication
            std::vector<Element> full = map;
            bool ok = true, grew = true;
            while (grew && ok) {
                grew = false;
                for (Element x = 1; x < mf.order && ok; ++x)
                    for (Element y = 1; y < mf.order && ok; ++y) {
                        if (full[x] < 0 || full[y] < 0) continue;
                        Element p = mf.mul(x, y);
                        Element img = ml.mul(full[x], full[y]);
                        if (full[p] < 0) {
                            full[p] = img;
                            grew = true;
                        } else if (full[p] != img) {
                            ok = false;
                        }
                    }
            }
            for (Element v : full) ok = ok && v >= 0;
            if (ok && multiplicative_ok(f, l, full)) out.push_back(full);
            return;
        }
        for (Element img = 1; img < ml.order; ++img) {
            map[gens[gi]] = img;
            self(self, gi + 1);
        }
        map[gens[gi]] = -1;
    };
    grow(grow, 0);

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::string hex_mask(std::uint32_t m) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%04x", m);
    return buf;
}

}  // namespace detail

/**
 * Canonical byte string deciding isomorphism: the lexicographically
 * smallest serialization of (group, -1, hyperaddition rows 1⊞g) over all
 * automorphisms of the unit group. Two verified hyperfields are isomorphic
 * iff their canonical forms are equal; structures over non-isomorphic unit
 * groups never compare equal (the group name prefixes the string).
 *
 * Layout: "<group name>;e=<idx>;r=<mask>,<mask>,…" with one 4-digit hex
 * cell mask per nonzero g in index order.
 */
struct CanonicalForm {
    std::string key;
    HyperStructure rep;  // the orbit-minimal relabeling over the standard monoid
};

inline CanonicalForm canonical_decompose(const HyperStructure& h) {
    if (!is_hyperfield(h)) throw error("canonical_form: input is not a verified hyperfield");

    Standardization std_form = standardize_monoid(h.monoid);
    HyperStructure hs = relabel(h, std_form.to_standard);
    FiniteMonoid g = group_monoid(std_form.spec);
    hs.monoid = g;  // restore standard factor data and display names

    std::string best;
    const std::vector<Element>* best_sigma = nullptr;
    auto autos = automorphisms(g);
    for (const auto& sigma : autos) {
        std::string s = std::to_string(hs.neg_one >= 0 ? sigma[hs.neg_one] : -1);
        // row of sigma·H at g equals sigma applied to the row at sigma⁻¹(g)
        std::vector<Element> inv(sigma.size());
        for (Element x = 0; x < (int)sigma.size(); ++x) inv[sigma[x]] = x;
        std::string rows;
        for (Element gx = 1; gx < hs.order(); ++gx) {
            ElementSet row = detail::image_set(sigma, hs.cell(1, inv[gx]));
            rows += detail::hex_mask(row.mask());
            rows += ',';
        }
        std::string cand = "e=" + s + ";r=" + rows;
        if (best.empty() || cand < best) {
            best = cand;
            best_sigma = &sigma;
        }
    }
    CanonicalForm out;
    out.key = std_form.spec.name() + ";" + best;
    out.rep = relabel(hs, *best_sigma);
    out.rep.monoid = g;  // relabeling by an automorphism leaves the tables intact
    return out;
}

inline std::string canonical_form(const HyperStructure& h) {
    return canonical_decompose(h).key;
}

/**
 * Every homomorphism F → L of the requested kind: all unit-group
 * homomorphisms extended by 0 ↦ 0, filtered by the hyperaddition condition
 * on all pairs. An empty result is a valid answer.
 */
inline std::vector<MorphismMap> find_homs(const HyperStructure& f, const HyperStructure& l,
                                          HomKind kind, bool injective_only = false) {
    std::vector<MorphismMap> out;
    for (auto& map : detail::all_unit_homs(f, l)) {
        MorphismMap m;
        m.weak = detail::weak_ok(f, l, map);
        if (!m.weak) continue;
        m.strong = detail::strong_ok(f, l, map);
        if (kind == HomKind::Strong && !m.strong) continue;
        m.injective = detail::injective_ok(map, l.order());
        if (injective_only && !m.injective) continue;
        m.iso = m.injective && m.strong && f.order() == l.order();
        m.map = std::move(map);
        out.push_back(std::move(m));
    }
    return out;
}

/**
 * An explicit isomorphism when the canonical forms match, or nothing.
 * The returned map is re-verified to be a bijective strong homomorphism
 * whose inverse is a homomorphism as well.
 */
inline std::optional<MorphismMap> is_isomorphic(const HyperStructure& h1,
                                                const HyperStructure& h2) {
    if (h1.order() != h2.order()) return std::nullopt;
    if (canonical_form(h1) != canonical_form(h2)) return std::nullopt;

    Standardization s1 = standardize_monoid(h1.monoid);
    Standardization s2 = standardize_monoid(h2.monoid);
    HyperStructure a = relabel(h1, s1.to_standard);
    HyperStructure b = relabel(h2, s2.to_standard);
    FiniteMonoid g = group_monoid(s1.spec);

    for (const auto& sigma : automorphisms(g)) {
        if (!same_tables(relabel(a, sigma), b)) continue;
        // compose: h1 --s1--> std --sigma--> std --s2⁻¹--> h2
        int n = h1.order();
        std::vector<Element> inv2(n);
        for (Element x = 0; x < n; ++x) inv2[s2.to_standard[x]] = x;
        MorphismMap m;
        m.map.resize(n);
        for (Element x = 0; x < n; ++x) m.map[x] = inv2[sigma[s1.to_standard[x]]];

        m.weak = detail::weak_ok(h1, h2, m.map);
        m.strong = detail::strong_ok(h1, h2, m.map);
        m.injective = detail::injective_ok(m.map, n);
        std::vector<Element> back(n);
        for (Element x = 0; x < n; ++x) back[m.map[x]] = x;
        bool inverse_hom = detail::multiplicative_ok(h2, h1, back) &&
                           detail::weak_ok(h2, h1, back);
        m.iso = m.strong && m.injective && inverse_hom;
        if (m.iso) return m;
    }
    return std::nullopt;  // unreachable for equal canonical forms
}

/**
 * The extension relation among a list of verified hyperfields: an edge
 * F → L per kind whenever an injective homomorphism of that kind exists.
 * Self-edges are omitted; a strong edge always comes with the weak one.
 */
struct ExtensionDigraph {
    struct Node {
        std::string label;
        int order = 0;
        std::string canonical;
    };
    struct Edge {
        int from = 0, to = 0;
        bool strong = false;  // weak holds for every edge
    };
    std::vector<Node> nodes;
    std::vector<Edge> edges;

    bool has_edge(int from, int to, bool need_strong = false) const {
        for (const Edge& e : edges)
            if (e.from == from && e.to == to && (!need_strong || e.strong)) return true;
        return false;
    }
};

inline ExtensionDigraph extension_digraph(std::span<const HyperStructure> classes,
                                          std::vector<std::string> labels = {}) {
    ExtensionDigraph d;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        std::string canon = canonical_form(classes[i]);
        std::string label = i < labels.size() && !labels[i].empty() ? labels[i] : canon;
        d.nodes.push_back({label, classes[i].order(), canon});
    }
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = 0; j < classes.size(); ++j) {
            if (i == j) continue;
            auto weak = find_homs(classes[i], classes[j], HomKind::Weak, true);
            if (weak.empty()) continue;
            bool strong = std::any_of(weak.begin(), weak.end(),
                                      [](const MorphismMap& m) { return m.strong; });
            d.edges.push_back({(int)i, (int)j, strong});
        }
    return d;
}

}  // namespace hyperfield
