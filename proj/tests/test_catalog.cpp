#include <set>

#include "helpers.hpp"

using namespace hftest;

TEST_CASE("text round-trip is bit-exact") {
    for (const char* n : {"K", "S", "W", "F4", "M", "X", "K^U5_r", "Y"}) {
        HyperStructure h = named(n);
        HyperStructure back = parse(serialize(h));
        CHECK(back == h);
        CHECK(serialize(back) == serialize(h));
    }
    HyperStructure m = named("M");
    CHECK(parse(serialize(m)) == m);
}

TEST_CASE("json round-trip mirrors the text schema") {
    for (const char* n : {"K", "S", "F5", "W^U5_r"}) {
        HyperStructure h = named(n);
        CHECK(from_json(to_json(h)) == h);
        CHECK(parse_any(to_json(h).dump(2)) == h);
        CHECK(parse_any(serialize(h)) == h);
    }
}

TEST_CASE("serializing the Krasner table shows the {0,1} cell") {
    std::string text = serialize(krasner());
    CHECK(text.find("hyperfield v1") == 0);
    CHECK(text.find("0,1") != std::string::npos);
}

TEST_CASE("parse errors carry line information") {
    CHECK_THROWS_AS(parse("nonsense"), ParseError);

    // empty hyperaddition cell is a structural error
    std::string empty_cell =
        "hyperfield v1\norder 2\nelements 0 1\nmul\n0 0\n0 1\nadd\n0 | 1\n1 | \n";
    CHECK_THROWS_WITH(parse(empty_cell), Catch::Matchers::ContainsSubstring("empty"));

    std::string bad_dim =
        "hyperfield v1\norder 2\nelements 0 1\nmul\n0 0 0\n0 1\nadd\n0 | 1\n1 | 0,1\n";
    CHECK_THROWS_AS(parse(bad_dim), ParseError);

    std::string bad_index =
        "hyperfield v1\norder 2\nelements 0 1\nmul\n0 0\n0 1\nadd\n0 | 1\n1 | 0,7\n";
    CHECK_THROWS_WITH(parse(bad_index), Catch::Matchers::ContainsSubstring("out of range"));

    std::string bad_names =
        "hyperfield v1\norder 2\nelements 0 one\nmul\n0 0\n0 1\nadd\n0 | 1\n1 | 0\n";
    CHECK_THROWS_WITH(parse(bad_names), Catch::Matchers::ContainsSubstring("named"));

    std::string dup_names =
        "hyperfield v1\norder 3\nelements 0 1 1\nmul\n0 0 0\n0 1 2\n0 2 1\nadd\n"
        "0 | 1 | 2\n1 | 1 | 0\n2 | 0 | 2\n";
    CHECK_THROWS_WITH(parse(dup_names), Catch::Matchers::ContainsSubstring("duplicate"));

    try {
        parse(empty_cell);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 9);
    }
}

TEST_CASE("parse validates shape, not axioms") {
    // a structurally fine but non-associative table parses; verify rejects it
    std::string text =
        "hyperfield v1\norder 2\nelements 0 1\nmul\n0 0\n0 1\nadd\n0 | 1\n1 | 1\n";
    HyperStructure h = parse(text);
    CHECK_FALSE(verify(h).ok());
}

TEST_CASE("catalog names are unique and the class list is complete") {
    std::set<std::string> names;
    for (const CatalogEntry& e : catalog()) {
        CHECK_FALSE(names.count(e.name));
        names.insert(e.name);
    }
    // the 41 classification names all resolve
    const char* classes[] = {
        "K", "S", "W", "F2", "F3", "F4", "F5", "F2^u3", "K^u3", "F2^u4", "K^u4",
        "F2^uu4", "F2^uu4_r", "K^uu4", "K^uu4_r", "Y", "Y_r", "S^u5", "W^u5",
        "S^u5_r", "W^u5_r", "S^u5_rr", "W^u5_rr", "K^u5", "F2^uu5", "K^uu5",
        "F2^uu5_r", "M", "M+", "K^uu5_r", "S^U5", "W^U5", "S^U5_r", "S^U5_rr",
        "X", "W^U5_r", "K^U5", "F2^U5", "F2^U5_r", "K^R5", "K^U5_r"};
    CHECK(std::size(classes) == 41);
    for (const char* n : classes) CHECK(find_entry(n) != nullptr);
}

TEST_CASE("non-errata fixtures pass every consistency check") {
    for (const CatalogEntry& e : catalog()) {
        FixtureCheck c = check_fixture(e);
        INFO(e.name << ": " << c.detail);
        CHECK(c.flagged() == e.errata);
        if (!e.errata) CHECK(verify(e.hyperfield).ok());
    }
}

TEST_CASE("the three known errata are flagged for the right reasons") {
    // header contradicts the printed table
    FixtureCheck case11 = check_fixture(*find_entry("F5,2-case11"));
    CHECK(case11.verify_ok);
    CHECK_FALSE(case11.header_ok);

    // a duplicated-member cell breaks commutativity
    FixtureCheck case14 = check_fixture(*find_entry("F5,2-case14"));
    CHECK_FALSE(case14.verify_ok);
    AxiomReport r = verify(find_entry("F5,2-case14")->hyperfield);
    CHECK(r[Axiom::Commutativity].status == AxiomCheck::Status::Fail);

    // the label of case 2 reused for a non-isomorphic table
    FixtureCheck case82 = check_fixture(*find_entry("F5,4-case8.2"));
    CHECK(case82.verify_ok);
    CHECK(case82.header_ok);
    CHECK_FALSE(case82.label_ok);
}

TEST_CASE("the further print defects are caught by the verifier") {
    for (const char* n : {"F5,3-case11.2", "F5,3-case14.2", "F5,4-case7.1", "F5,4-case8.1"}) {
        const CatalogEntry* e = find_entry(n);
        REQUIRE(e != nullptr);
        CHECK(e->errata);
        CHECK_FALSE(verify(e->hyperfield).ok());
    }
}

TEST_CASE("duplicate printed tables are isomorphic to their class entries") {
    const std::pair<const char*, const char*> pairs[] = {
        {"F4-case4.2", "F2^u4"},     {"F4-case6", "K^u4"},
        {"F5,1-case3.3b", "Y"},      {"F5,1-case4.3a", "S^u5_r"},
        {"F5,1-case4.3b", "W^u5_r"}, {"F5,3-case10", "S^U5_r"},
    };
    for (auto [alt, cls] : pairs) {
        INFO(alt << " vs " << cls);
        auto iso = is_isomorphic(named(alt), named(cls));
        REQUIRE(iso.has_value());
        CHECK(iso->strong);
    }
}

TEST_CASE("fixture coverage equals the enumeration classes for each order") {
    for (int n = 2; n <= 5; ++n) {
        std::set<std::string> from_fixtures, from_enumeration;
        for (const CatalogEntry* e : clean_entries(n))
            from_fixtures.insert(canonical_form(e->hyperfield));
        for (const HyperfieldClass& c : enumerate_hyperfields(n).classes)
            from_enumeration.insert(c.canonical);
        INFO("order " << n);
        CHECK(from_fixtures == from_enumeration);
    }
}
