#include "helpers.hpp"

using namespace hftest;

TEST_CASE("krasner hyperfield") {
    HyperStructure k = krasner();
    CHECK(k.order() == 2);
    CHECK(k.hyperadd(1, 1) == set({0, 1}));
    CHECK(k.hyperadd(1, 0) == set({1}));
    CHECK(verify(k).ok());
    CHECK(same_tables(k, named("K")));
}

TEST_CASE("sign hyperfield") {
    HyperStructure s = sign_hyperfield();
    CHECK(s.hyperadd(1, 1) == set({1}));
    CHECK(s.hyperadd(2, 2) == set({2}));
    CHECK(s.neg(1) == 2);
    CHECK(verify(s).ok());
    CHECK(same_tables(s, named("S")));
}

TEST_CASE("field hyperfields over every supported order") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        HyperStructure f = field_hyperfield(q);
        INFO("q = " << q);
        CHECK(f.order() == q);
        CHECK(verify(f).ok());
        for (Element x = 0; x < q; ++x)
            for (Element y = 0; y < q; ++y) CHECK(f.cell(x, y).count() == 1);
        // unit group is cyclic of order q-1: a power of the generator index 2
        if (q > 2) {
            Element p = 2;
            int order = 1;
            while (p != 1) {
                p = f.monoid.mul(p, 2);
                ++order;
            }
            CHECK(order == q - 1);
        }
    }
}

TEST_CASE("field tables match plain modular arithmetic for prime q") {
    for (int q : {2, 3, 5, 7}) {
        FiniteFieldSpec spec = default_field_spec(q);
        HyperStructure f = field_hyperfield(q);
        // reconstruct the index -> residue map from powers of the generator
        std::vector<int> residue(q);
        residue[0] = 0;
        residue[1] = 1;
        int a = q > 2 ? smallest_primitive_code(spec) : 1;
        int pw = 1;
        for (int i = 2; i < q; ++i) {
            pw = pw * a % q;
            residue[i] = pw;
        }
        std::vector<int> index(q);
        for (int i = 0; i < q; ++i) index[residue[i]] = i;
        for (Element x = 0; x < q; ++x)
            for (Element y = 0; y < q; ++y)
                CHECK(f.cell(x, y) == ElementSet::single(index[(residue[x] + residue[y]) % q]));
    }
}

TEST_CASE("field examples pinned by the classification") {
    CHECK(field_hyperfield(2).hyperadd(1, 1) == set({0}));
    // in GF(5) the generator is residue 2, so 1+1 lands on index 2
    CHECK(field_hyperfield(5).hyperadd(1, 1) == set({2}));
    // the order-4 field table equals the printed case-1 table outright
    CHECK(same_tables(field_hyperfield(4), named("F4")));
    CHECK(is_isomorphic(field_hyperfield(4), named("F4")).has_value());
}

TEST_CASE("invalid field specs are rejected") {
    CHECK_THROWS_AS(field_hyperfield(6), error);
    CHECK_THROWS_AS(field_hyperfield(11), error);
    FiniteFieldSpec reducible{2, 2, {1, 0, 1}};  // x²+1 = (x+1)² over GF(2)
    CHECK_THROWS_AS(field_hyperfield(reducible), error);
    FiniteFieldSpec not_monic{2, 2, {1, 1, 0}};
    CHECK_THROWS_AS(field_hyperfield(not_monic), error);
}

TEST_CASE("weak hyperfields") {
    CHECK(same_tables(weak_hyperfield(GroupSpec{{}}, 1), krasner()));
    CHECK(same_tables(weak_hyperfield(GroupSpec{{2}}, 1), named("K^u3")));
    CHECK(same_tables(weak_hyperfield(GroupSpec{{2}}, 2), named("W")));
    CHECK(same_tables(weak_hyperfield(GroupSpec{{3}}, 1), named("K^uu4_r")));
    CHECK(same_tables(weak_hyperfield(GroupSpec{{4}}, 3), named("W^u5_rr")));
    CHECK(same_tables(weak_hyperfield(GroupSpec{{2, 2}}, 4), named("W^U5_r")));
    CHECK(same_tables(weak_hyperfield(GroupSpec{{4}}, 1), named("K^uu5_r")));
    CHECK(same_tables(weak_hyperfield(GroupSpec{{2, 2}}, 1), named("K^U5_r")));

    CHECK_THROWS_AS(weak_hyperfield(GroupSpec{{4}}, 2), error);  // a² != 1
    CHECK_THROWS_AS(weak_hyperfield(GroupSpec{{3}}, 3), error);
}

TEST_CASE("every weak hyperfield up to |G| = 6 verifies, with neg_one = e") {
    for (int m = 1; m <= 6; ++m)
        for (const GroupSpec& g : abelian_groups(m)) {
            FiniteMonoid monoid = group_monoid(g);
            for (Element e = 1; e < monoid.order; ++e) {
                if (monoid.mul(e, e) != 1) continue;
                HyperStructure w = weak_hyperfield(g, e);
                INFO(g.name() << " e=" << e);
                CHECK(verify(w).ok());
                CHECK(w.neg_one == e);
            }
        }
}

TEST_CASE("quotient hyperfields act as an independent oracle") {
    CHECK(is_isomorphic(quotient_hyperfield(3, {1, 2}), krasner()).has_value());
    for (int q : {2, 3, 4, 5, 7}) {
        HyperStructure quot = quotient_hyperfield(q, {1});
        CHECK(verify(quot).ok());
        CHECK(is_isomorphic(quot, field_hyperfield(q)).has_value());
    }
    // GF(5) mod {±1} is the three-element extension of F2
    HyperStructure h = quotient_hyperfield(5, {1, 4});
    CHECK(verify(h).ok());
    CHECK(canonical_form(h) == canonical_form(named("F2^u3")));

    // GF(7) mod squares {1,2,4} is the weak sign hyperfield (sums of two
    // nonzero squares cover both cosets); GF(9) mod {±1} lands on the
    // order-5 class K^u5; GF(9) mod all units is K
    CHECK(canonical_form(quotient_hyperfield(7, {1, 2, 4})) == canonical_form(named("W")));
    CHECK(canonical_form(quotient_hyperfield(9, {1, 2})) == canonical_form(named("K^u5")));
    std::vector<int> gf9_units;
    for (int c = 1; c < 9; ++c) gf9_units.push_back(c);
    CHECK(canonical_form(quotient_hyperfield(9, gf9_units)) == canonical_form(krasner()));

    CHECK_THROWS_AS(quotient_hyperfield(5, {1, 2}), error);  // not closed
    CHECK_THROWS_AS(quotient_hyperfield(5, {2, 3}), error);  // missing 1
}

TEST_CASE("verified all-singleton tables define fields") {
    // the converse direction of the field construction: singleton cells in
    // a verified structure give a single-valued addition that is a group
    // operation compatible with multiplication
    for (const CatalogEntry* e : clean_entries()) {
        const HyperStructure& h = e->hyperfield;
        bool singleton = true;
        for (const ElementSet& c : h.add_table) singleton = singleton && c.count() == 1;
        if (!singleton) continue;
        int n = h.order();
        auto plus = [&](Element x, Element y) { return h.cell(x, y).first(); };
        for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y) {
                for (Element z = 0; z < n; ++z)
                    CHECK(plus(plus(x, y), z) == plus(x, plus(y, z)));
                for (Element a = 0; a < n; ++a)
                    CHECK(h.monoid.mul(a, plus(x, y)) ==
                          plus(h.monoid.mul(a, x), h.monoid.mul(a, y)));
            }
    }
}

TEST_CASE("named catalog lookups") {
    CHECK(named("F2^u3").hyperadd(1, 1) == set({0, 2}));
    CHECK(named("M").hyperadd(1, 2) == set({1, 2}));
    CHECK(same_tables(named("K"), krasner()));
    CHECK_THROWS_AS(named("no-such-table"), error);
}
