#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "hyperfield/core.hpp"
#include "hyperfield/gf.hpp"
#include "hyperfield/groups.hpp"

namespace hyperfield {

/// The two-element hyperfield with 1 ⊞ 1 = {0,1}.
inline HyperStructure krasner() {
    HyperStructure h;
    h.monoid = group_monoid(GroupSpec{{}});
    h.add_table = {ElementSet::single(0), ElementSet::single(1),
                   ElementSet::single(1), ElementSet::of({0, 1})};
    h.neg_one = 1;
    return h;
}

/// The three-element hyperfield on {0,1,-1} with 1 ⊞ 1 = {1} and
/// 1 ⊞ (-1) = everything.
inline HyperStructure sign_hyperfield() {
    HyperStructure h;
    h.monoid = group_monoid(GroupSpec{{2}});
    h.monoid.names = {"0", "1", "-1"};
    h.add_table.assign(9, {});
    auto all = ElementSet::of({0, 1, 2});
    for (Element x = 0; x < 3; ++x) {
        h.set_cell(0, x, ElementSet::single(x));
        h.set_cell(x, 0, ElementSet::single(x));
    }
    h.set_cell(1, 1, ElementSet::single(1));
    h.set_cell(2, 2, ElementSet::single(2));
    h.set_cell(1, 2, all);
    h.set_cell(2, 1, all);
    h.neg_one = 2;
    return h;
}

/**
 * The weak hyperfield W(G,e) on G ∪ {0} for a self-inverse e: hypersums
 * are as coarse as the axioms allow: x ⊞ (e·x) = G ∪ {0}, every other
 * nonzero sum is all of G.
 */
inline HyperStructure weak_hyperfield(const GroupSpec& g, Element e) {
    HyperStructure h;
    h.monoid = group_monoid(g);
    int n = h.order();
    if (e < 1 || e >= n) throw error("weak_hyperfield: e out of range");
    if (h.monoid.mul(e, e) != 1) throw error("weak_hyperfield: e is not self-inverse");
    ElementSet units = ElementSet::from_mask(ElementSet::full(n).mask() & ~1u);
    ElementSet everything = ElementSet::full(n);
    h.add_table.assign(n * n, {});
    for (Element x = 0; x < n; ++x) {
        h.set_cell(0, x, ElementSet::single(x));
        h.set_cell(x, 0, ElementSet::single(x));
    }
    for (Element x = 1; x < n; ++x)
        for (Element y = 1; y < n; ++y)
            h.set_cell(x, y, y == h.monoid.mul(e, x) ? everything : units);
    h.neg_one = e;
    return h;
}

/// The hyperfield of a finite field: singleton cells x ⊞ y = {x+y},
/// elements labeled 0, 1, a, a², … by the smallest primitive element a.
inline HyperStructure field_hyperfield(const FiniteFieldSpec& spec) {
    validate_field_spec(spec);
    int q = spec.q();

    // carrier index -> polynomial code, walking powers of the generator
    std::vector<int> code_of(q);
    code_of[0] = 0;
    code_of[1] = 1;
    int a = smallest_primitive_code(spec);
    int pw = 1;
    for (int i = 1; i < q - 1; ++i) {
        pw = gf::mul(spec, pw, a);
        code_of[i + 1] = pw;
    }
    std::vector<int> index_of(q);
    for (int i = 0; i < q; ++i) index_of[code_of[i]] = i;

    HyperStructure h;
    h.monoid = group_monoid(GroupSpec{q > 2 ? std::vector<int>{q - 1} : std::vector<int>{}});
    h.add_table.assign(q * q, {});
    for (Element x = 0; x < q; ++x)
        for (Element y = 0; y < q; ++y) {
            int s = gf::add(spec, code_of[x], code_of[y]);
            h.set_cell(x, y, ElementSet::single(index_of[s]));
        }
    h.neg_one = detect_neg_one(h);
    return h;
}

inline HyperStructure field_hyperfield(int q) { return field_hyperfield(default_field_spec(q)); }

/**
 * The quotient hyperfield GF(q) / H for a multiplicative subgroup H:
 * carrier = cosets plus zero, coset sums computed by brute force over
 * representatives. Deliberately unoptimized; it serves as an oracle.
 */
inline HyperStructure quotient_hyperfield(const FiniteFieldSpec& spec,
                                          const std::vector<int>& subgroup) {
    validate_field_spec(spec);
    int q = spec.q();

    std::vector<bool> in_h(q, false);
    for (int c : subgroup) {
        if (c < 1 || c >= q) throw error("quotient_hyperfield: subgroup element out of range");
        in_h[c] = true;
    }
    if (!in_h[1]) throw error("quotient_hyperfield: subgroup must contain 1");
    for (int x = 1; x < q; ++x)
        for (int y = 1; y < q; ++y)
            if (in_h[x] && in_h[y] && !in_h[gf::mul(spec, x, y)])
                throw error("quotient_hyperfield: set is not closed under multiplication");

    // cosets xH, keyed by their sorted member list
    std::vector<std::vector<int>> cosets;       // cosets[i] = sorted codes, i >= 1
    std::vector<int> coset_of(q, -1);           // code -> carrier index
    coset_of[0] = 0;
    auto coset_members = [&](int x) {
        std::vector<int> ms;
        for (int c = 1; c < q; ++c)
            if (in_h[c]) ms.push_back(gf::mul(spec, x, c));
        std::sort(ms.begin(), ms.end());
        return ms;
    };
    std::vector<std::vector<int>> pending;
    for (int x = 1; x < q; ++x) {
        if (coset_of[x] != -1) continue;
        auto ms = coset_members(x);
        pending.push_back(ms);
        for (int c : ms) coset_of[c] = -2;  // claimed, index assigned below
    }
    // index 1 = the subgroup itself; the rest ordered by smallest member
    std::sort(pending.begin(), pending.end(), [](const auto& a, const auto& b) {
        bool a1 = std::find(a.begin(), a.end(), 1) != a.end();
        bool b1 = std::find(b.begin(), b.end(), 1) != b.end();
        if (a1 != b1) return a1;
        return a.front() < b.front();
    });
    for (const auto& ms : pending) {
        cosets.push_back(ms);
        for (int c : ms) coset_of[c] = (int)cosets.size();
    }

    int n = (int)cosets.size() + 1;
    if (n > kMaxOrder) throw error("quotient_hyperfield: quotient too large");
    HyperStructure h;
    h.monoid.order = n;
    h.monoid.mul_table.assign(n * n, 0);
    h.monoid.names.assign(n, "");
    h.monoid.names[0] = "0";
    for (int i = 1; i < n; ++i)
        h.monoid.names[i] = i == 1 ? "1" : "[" + std::to_string(cosets[i - 1].front()) + "]";
    for (int x = 1; x < n; ++x)
        for (int y = 1; y < n; ++y)
            h.monoid.mul_table[x * n + y] =
                coset_of[gf::mul(spec, cosets[x - 1].front(), cosets[y - 1].front())];

    h.add_table.assign(n * n, {});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            std::vector<int> xs = x == 0 ? std::vector<int>{0} : cosets[x - 1];
            std::vector<int> ys = y == 0 ? std::vector<int>{0} : cosets[y - 1];
            ElementSet out;
            for (int u : xs)
                for (int v : ys) out.insert(coset_of[gf::add(spec, u, v)]);
            h.set_cell(x, y, out);
        }
    h.neg_one = detect_neg_one(h);
    return h;
}

inline HyperStructure quotient_hyperfield(int q, const std::vector<int>& subgroup) {
    return quotient_hyperfield(default_field_spec(q), subgroup);
}

}  // namespace hyperfield
