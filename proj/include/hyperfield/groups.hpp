#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hyperfield/core.hpp"

namespace hyperfield {

/**
 * A finite abelian group presented as a direct product of cyclic factors,
 * C_{f1} × C_{f2} × …. Elements are exponent tuples; the induced carrier
 * indexing is 0 = zero, 1 = identity, and the first factor's generator at
 * index 2 (so a cyclic group lists 1, a, a², …).
 */
struct GroupSpec {
    std::vector<int> factors;

    int group_order() const {
        int p = 1;
        for (int f : factors) p *= f;
        return p;
    }

    /// "C4", "C2,2", "C1", …
    std::string name() const {
        std::string out = "C";
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(factors[i]);
        }
        if (factors.empty()) out += '1';
        return out;
    }

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

namespace detail {

// exponent tuple <-> nonzero carrier index (first factor least significant)
inline std::vector<int> tuple_of_index(const GroupSpec& g, int idx) {
    std::vector<int> t(g.factors.size());
    int v = idx - 1;
    for (std::size_t j = 0; j < g.factors.size(); ++j) {
        t[j] = v % g.factors[j];
        v /= g.factors[j];
    }
    return t;
}

inline int index_of_tuple(const GroupSpec& g, const std::vector<int>& t) {
    int v = 0;
    for (int j = (int)g.factors.size() - 1; j >= 0; --j) v = v * g.factors[j] + t[j];
    return v + 1;
}

inline std::string element_name(const GroupSpec& g, int idx) {
    if (idx == 0) return "0";
    std::vector<int> t = tuple_of_index(g, idx);
    std::string out;
    for (std::size_t j = 0; j < t.size(); ++j) {
        if (t[j] == 0) continue;
        out += char('a' + j);
        if (t[j] > 1) out += "^" + std::to_string(t[j]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace detail

/// The monoid G ∪ {0} of a group specification, with componentwise
/// exponent arithmetic and the standard dense labeling.
inline FiniteMonoid group_monoid(const GroupSpec& g) {
    for (int f : g.factors)
        if (f < 1) throw error("group_monoid: cyclic factor order must be >= 1");
    int n = g.group_order() + 1;
    if (n > kMaxOrder) throw error("group_monoid: carrier larger than supported maximum");
    FiniteMonoid m;
    m.order = n;
    m.factors = g.factors;
    m.mul_table.assign(n * n, 0);
    for (Element x = 1; x < n; ++x)
        for (Element y = 1; y < n; ++y) {
            std::vector<int> tx = detail::tuple_of_index(g, x);
            std::vector<int> ty = detail::tuple_of_index(g, y);
            for (std::size_t j = 0; j < g.factors.size(); ++j)
                tx[j] = (tx[j] + ty[j]) % g.factors[j];
            m.mul_table[x * n + y] = detail::index_of_tuple(g, tx);
        }
    m.names.resize(n);
    for (Element x = 0; x < n; ++x) m.names[x] = detail::element_name(g, x);
    return m;
}

/**
 * One representative per isomorphism class of abelian groups of order m:
 * prime factorization, a partition of each prime's exponent, and the direct
 * product of the resulting prime-power cyclic factors.
 */
inline std::vector<GroupSpec> abelian_groups(int m) {
    if (m < 1) throw error("abelian_groups: order must be positive");

    // prime factorization
    std::vector<std::pair<int, int>> primes;  // (p, exponent)
    int v = m;
    for (int p = 2; p * p <= v; ++p)
        if (v % p == 0) {
            int e = 0;
            while (v % p == 0) v /= p, ++e;
            primes.push_back({p, e});
        }
    if (v > 1) primes.push_back({v, 1});

    // partitions of an exponent, largest parts first
    auto partitions = [](int e) {
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int rest, int maxpart) -> void {
            if (rest == 0) {
                out.push_back(cur);
                return;
            }
            for (int part = std::min(rest, maxpart); part >= 1; --part) {
                cur.push_back(part);
                self(self, rest - part, part);
                cur.pop_back();
            }
        };
        rec(rec, e, e);
        return out;
    };

    std::vector<GroupSpec> result{GroupSpec{}};
    for (auto [p, e] : primes) {
        std::vector<GroupSpec> next;
        for (const auto& part : partitions(e))
            for (const GroupSpec& base : result) {
                GroupSpec g = base;
                for (int x : part) {
                    int f = 1;
                    for (int i = 0; i < x; ++i) f *= p;
                    g.factors.push_back(f);
                }
                next.push_back(g);
            }
        result = std::move(next);
    }
    for (GroupSpec& g : result) std::sort(g.factors.begin(), g.factors.end());
    return result;
}

/**
 * All automorphisms of the unit group of a monoid, as full carrier maps
 * fixing 0 and 1, found by brute force over element permutations.
 */
inline std::vector<std::vector<Element>> automorphisms(const FiniteMonoid& m) {
    int n = m.order;
    std::vector<Element> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<Element>> out;
    // only indices 2..n-1 may move
    std::vector<Element> tail(perm.begin() + std::min(2, n), perm.end());
    do {
        std::vector<Element> f(n);
        f[0] = 0;
        if (n > 1) f[1] = 1;
        std::copy(tail.begin(), tail.end(), f.begin() + std::min(2, n));
        bool ok = true;
        for (Element x = 1; x < n && ok; ++x)
            for (Element y = x; y < n && ok; ++y)
                if (f[m.mul(x, y)] != m.mul(f[x], f[y])) ok = false;
        if (ok) out.push_back(std::move(f));
    } while (std::next_permutation(tail.begin(), tail.end()));
    return out;
}

/// Applies a carrier bijection to both tables: the image structure has
/// x ⊞' y = p(p⁻¹(x) ⊞ p⁻¹(y)), and likewise for multiplication.
inline HyperStructure relabel(const HyperStructure& h, const std::vector<Element>& p) {
    int n = h.order();
    HyperStructure out;
    out.monoid.order = n;
    out.monoid.factors = h.monoid.factors;
    out.monoid.mul_table.assign(n * n, 0);
    out.monoid.names.assign(n, "");
    out.add_table.assign(n * n, {});
    for (Element x = 0; x < n; ++x) {
        out.monoid.names[p[x]] = h.monoid.names.empty() ? "" : h.monoid.names[x];
        for (Element y = 0; y < n; ++y) {
            out.monoid.mul_table[p[x] * n + p[y]] = p[h.monoid.mul(x, y)];
            ElementSet img;
            for (Element z : h.cell(x, y).members()) img.insert(p[z]);
            out.set_cell(p[x], p[y], img);
        }
    }
    out.neg_one = h.neg_one >= 0 ? p[h.neg_one] : -1;
    return out;
}

/**
 * Identifies the isomorphism class of a monoid's unit group and produces a
 * relabeling onto the standard representative. `to_standard` maps carrier
 * indices of the input onto indices of group_monoid(spec).
 */
struct Standardization {
    GroupSpec spec;
    std::vector<Element> to_standard;
};

inline std::optional<std::vector<Element>> find_monoid_isomorphism(
    const FiniteMonoid& from, const FiniteMonoid& to) {
    if (from.order != to.order) return std::nullopt;
    int n = from.order;
    // backtracking over images of indices 2..n-1, consistency-checked early
    std::vector<Element> f(n, -1);
    std::vector<bool> used(n, false);
    f[0] = 0;
    used[0] = true;
    if (n > 1) {
        f[1] = 1;
        used[1] = true;
    }
    auto complete = [&]() {
        for (Element u = 1; u < n; ++u)
            for (Element v = u; v < n; ++v)
                if (f[from.mul(u, v)] != to.mul(f[u], f[v])) return false;
        return true;
    };
    auto rec = [&](auto&& self, Element x) -> bool {
        if (x == n) return complete();
        for (Element y = 2; y < n; ++y) {
            if (used[y]) continue;
            f[x] = y;
            used[y] = true;
            // partial consistency, only as pruning; complete() decides
            bool ok = true;
            for (Element u = 1; u <= x && ok; ++u) {
                Element p = from.mul(u, x);
                if (f[p] >= 0 && f[p] != to.mul(f[u], y)) ok = false;
            }
            if (ok && self(self, x + 1)) return true;
            used[y] = false;
            f[x] = -1;
        }
        return false;
    };
    if (n <= 2) return complete() ? std::optional(f) : std::nullopt;
    if (!rec(rec, 2)) return std::nullopt;
    return f;
}

inline Standardization standardize_monoid(const FiniteMonoid& m) {
    for (const GroupSpec& g : abelian_groups(m.order - 1)) {
        FiniteMonoid std_m = group_monoid(g);
        if (auto f = find_monoid_isomorphism(m, std_m))
            return Standardization{g, std::move(*f)};
    }
    throw error("standardize_monoid: unit group is not a known abelian group");
}

}  // namespace hyperfield
