#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperfield/constructors.hpp"
#include "hyperfield/core.hpp"
#include "hyperfield/groups.hpp"
#include "hyperfield/morphisms.hpp"
#include "hyperfield/verify.hpp"

namespace hyperfield {

/**
 * One cataloged hyperaddition table. The catalog holds every table of the
 * order <= 5 classification: one clean entry per isomorphism class (the
 * ASCII names encode the usual notation: ↑ -> u, ⇑ -> U, → -> r, ↱ -> R),
 * plus the duplicate tables printed for isomorphic cases and the known
 * errata, transcribed verbatim and flagged; defective tables are kept so
 * the verifier can be shown to catch them, never silently repaired.
 */
struct CatalogEntry {
    std::string name;           // unique catalog key
    std::string source;         // classification case this table comes from
    std::string claimed_label;  // class label the source case assigns, "" if none
    bool has_claimed_diag = false;
    ElementSet claimed_diag;    // the 1⊞1 value asserted by the case header
    bool errata = false;
    std::string note;
    HyperStructure hyperfield;
};

namespace detail {

// Compact table literal: rows split by '/', cells by '|', members are the
// digits of the element indices, ascending.
inline HyperStructure table_from_literal(const GroupSpec& g, const char* cells) {
    FiniteMonoid m = group_monoid(g);
    int n = m.order;
    HyperStructure h;
    h.monoid = m;
    h.add_table.assign(n * n, {});
    Element x = 0, y = 0;
    ElementSet cur;
    auto commit = [&]() {
        if (x >= n || y >= n) throw error("catalog literal: too many cells");
        h.set_cell(x, y, cur);
        cur = {};
        ++y;
    };
    for (const char* p = cells; *p; ++p) {
        if (*p == '|') {
            commit();
        } else if (*p == '/') {
            commit();
            if (y != n) throw error("catalog literal: short row");
            ++x;
            y = 0;
        } else if (*p >= '0' && *p <= '9') {
            cur.insert(*p - '0');
        } else {
            throw error("catalog literal: bad character");
        }
    }
    commit();
    if (x != n - 1 || y != n) throw error("catalog literal: wrong table size");
    h.neg_one = detect_neg_one(h);
    return h;
}

inline ElementSet set_from_digits(const char* digits) {
    ElementSet s;
    for (const char* p = digits; *p; ++p) s.insert(*p - '0');
    return s;
}

inline std::vector<CatalogEntry> build_catalog() {
    const GroupSpec c1{{}}, c2{{2}}, c3{{3}}, c4{{4}}, c22{{2, 2}};

    std::vector<CatalogEntry> out;
    auto lit = [&](const GroupSpec& g, const char* name, const char* source,
                   const char* label, const char* diag, bool errata, const char* note,
                   const char* table) {
        CatalogEntry e;
        e.name = name;
        e.source = source;
        e.claimed_label = label;
        if (diag) {
            e.has_claimed_diag = true;
            e.claimed_diag = set_from_digits(diag);
        }
        e.errata = errata;
        e.note = note;
        e.hyperfield = table_from_literal(g, table);
        out.push_back(std::move(e));
    };
    auto built = [&](const char* name, const char* source, const char* note,
                     HyperStructure h) {
        CatalogEntry e;
        e.name = name;
        e.source = source;
        e.claimed_label = name;
        e.note = note;
        e.hyperfield = std::move(h);
        out.push_back(std::move(e));
    };
    auto sign_names = [&](CatalogEntry& e) { e.hyperfield.monoid.names = {"0", "1", "-1"}; };

    // ---- order 2 ----
    built("F2", "order 2, case 1⊞1={0}", "table generated from GF(2)", field_hyperfield(2));
    lit(c1, "K", "order 2, case 1⊞1={0,1}", "K", "01", false, "", "0|1/1|01");

    // ---- order 3 ----
    built("F3", "order 3, case 1.2", "table generated from GF(3)", field_hyperfield(3));
    out.back().hyperfield.monoid.names = {"0", "1", "-1"};
    lit(c2, "S", "order 3, case 1.1 (sign table)", "S", nullptr, false, "",
        "0|1|2/1|1|012/2|012|2");
    sign_names(out.back());
    lit(c2, "W", "order 3, case 1.1 (weak sign table W(C2,-1))", "W", nullptr, false, "",
        "0|1|2/1|12|012/2|012|12");
    sign_names(out.back());
    lit(c2, "F2^u3", "order 3, case 2.2", "F2^u3", "02", false, "",
        "0|1|2/1|02|12/2|12|01");
    lit(c2, "K^u3", "order 3, case 2.3 (also W(C2,1))", "K^u3", "012", false, "",
        "0|1|2/1|012|12/2|12|012");

    // ---- order 4 ----
    lit(c3, "F4", "order 4, case 1", "F4", "0", false, "",
        "0|1|2|3/1|0|3|2/2|3|0|1/3|2|1|0");
    lit(c3, "F2^u4", "order 4, case 3.2", "F2^u4", "02", false, "",
        "0|1|2|3/1|02|13|23/2|13|03|12/3|23|12|01");
    lit(c3, "F4-case4.2", "order 4, case 4.2", "F2^u4", "03", false,
        "isomorphic to F2^u4 via (1,a,a^2,0) -> (1,a^2,a,0)",
        "0|1|2|3/1|03|23|12/2|23|01|13/3|12|13|02");
    lit(c3, "K^u4", "order 4, case 5", "K^u4", "012", false, "",
        "0|1|2|3/1|012|13|23/2|13|023|12/3|23|12|013");
    lit(c3, "F4-case6", "order 4, case 6", "K^u4", "013", false,
        "isomorphic to K^u4 via (1,a,a^2,0) -> (1,a^2,a,0)",
        "0|1|2|3/1|013|23|12/2|23|012|13/3|12|13|023");
    lit(c3, "F2^uu4", "order 4, case 7 (first table)", "F2^uu4", "023", false, "",
        "0|1|2|3/1|023|12|13/2|12|013|23/3|13|23|012");
    lit(c3, "F2^uu4_r", "order 4, case 7 (second table)", "F2^uu4_r", "023", false, "",
        "0|1|2|3/1|023|123|123/2|123|013|123/3|123|123|012");
    lit(c3, "K^uu4", "order 4, case 8 (first table)", "K^uu4", "0123", false, "",
        "0|1|2|3/1|0123|12|13/2|12|0123|23/3|13|23|0123");
    lit(c3, "K^uu4_r", "order 4, case 8 (second table, also W(C3,1))", "K^uu4_r", "0123",
        false, "", "0|1|2|3/1|0123|123|123/2|123|0123|123/3|123|123|0123");

    // ---- order 5, C4 with -1 = a^2 ----
    built("F5", "order 5 (C4, -1=a^2), case 1.1", "table generated from GF(5)",
          field_hyperfield(5));
    lit(c4, "Y", "order 5 (C4, -1=a^2), case 3.3 (first table)", "Y", nullptr, false, "",
        "0|1|2|3|4/1|23|124|024|134/2|124|34|123|013/3|024|123|14|234/4|134|013|234|12");
    lit(c4, "F5,1-case3.3b", "order 5 (C4, -1=a^2), case 3.3 (second table)", "Y", nullptr,
        false, "isomorphic to Y",
        "0|1|2|3|4/1|34|123|024|124/2|123|14|234|013/3|024|234|12|134/4|124|013|134|23");
    lit(c4, "Y_r", "order 5 (C4, -1=a^2), case 3.4", "Y_r", nullptr, false, "",
        "0|1|2|3|4/1|234|1234|024|1234/2|1234|134|1234|013/3|024|1234|124|1234/"
        "4|1234|013|1234|123");
    lit(c4, "S^u5", "order 5 (C4, -1=a^2), case 4.1 (first table)", "S^u5", nullptr, false,
        "", "0|1|2|3|4/1|1|12|01234|14/2|12|2|23|01234/3|01234|23|3|34/4|14|01234|34|4");
    lit(c4, "W^u5", "order 5 (C4, -1=a^2), case 4.1 (second table)", "W^u5", nullptr, false,
        "", "0|1|2|3|4/1|13|12|01234|14/2|12|24|23|01234/3|01234|23|13|34/4|14|01234|34|24");
    lit(c4, "S^u5_r", "order 5 (C4, -1=a^2), case 4.2 (first table)", "S^u5_r", nullptr,
        false, "",
        "0|1|2|3|4/1|14|123|01234|124/2|123|12|234|01234/3|01234|234|23|134/"
        "4|124|01234|134|34");
    lit(c4, "W^u5_r", "order 5 (C4, -1=a^2), case 4.2 (second table)", "W^u5_r", nullptr,
        false, "",
        "0|1|2|3|4/1|134|123|01234|124/2|123|124|234|01234/3|01234|234|123|134/"
        "4|124|01234|134|234");
    lit(c4, "F5,1-case4.3a", "order 5 (C4, -1=a^2), case 4.3 (first table)", "S^u5_r",
        nullptr, false, "isomorphic to S^u5_r",
        "0|1|2|3|4/1|12|124|01234|134/2|124|23|123|01234/3|01234|123|34|234/"
        "4|134|01234|234|14");
    lit(c4, "F5,1-case4.3b", "order 5 (C4, -1=a^2), case 4.3 (second table)", "W^u5_r",
        nullptr, false, "isomorphic to W^u5_r",
        "0|1|2|3|4/1|123|124|01234|134/2|124|234|123|01234/3|01234|123|134|234/"
        "4|134|01234|234|124");
    lit(c4, "S^u5_rr", "order 5 (C4, -1=a^2), case 4.4 (first table)", "S^u5_rr", nullptr,
        false, "",
        "0|1|2|3|4/1|124|1234|01234|1234/2|1234|123|1234|01234/3|01234|1234|234|1234/"
        "4|1234|01234|1234|134");
    lit(c4, "W^u5_rr", "order 5 (C4, -1=a^2), case 4.4 (second table, also W(C4,a^2))",
        "W^u5_rr", nullptr, false, "",
        "0|1|2|3|4/1|1234|1234|01234|1234/2|1234|1234|1234|01234/3|01234|1234|1234|1234/"
        "4|1234|01234|1234|1234");

    // ---- order 5, C4 with -1 = 1 ----
    lit(c4, "K^u5", "order 5 (C4, -1=1), case 2", "K^u5", "01", false, "",
        "0|1|2|3|4/1|01|34|24|23/2|34|02|14|13/3|24|14|03|12/4|23|13|12|04");
    lit(c4, "F2^uu5", "order 5 (C4, -1=1), case 9", "F2^uu5", "023", false, "",
        "0|1|2|3|4/1|023|134|1234|234/2|134|034|124|1234/3|1234|124|014|123/"
        "4|234|1234|123|012");
    lit(c4, "F5,2-case11", "order 5 (C4, -1=1), case 11", "F2^uu5", "034", true,
        "errata: the case header asserts 1⊞1={a^2,a^3,0} but the printed table repeats "
        "the case-9 table with 1⊞1={a,a^2,0}; caught by the header-consistency check",
        "0|1|2|3|4/1|023|134|1234|234/2|134|034|124|1234/3|1234|124|014|123/"
        "4|234|1234|123|012");
    lit(c4, "K^uu5", "order 5 (C4, -1=1), case 13", "K^uu5", "0123", false, "",
        "0|1|2|3|4/1|0123|134|1234|234/2|134|0234|124|1234/3|1234|124|0134|123/"
        "4|234|1234|123|0124");
    lit(c4, "F5,2-case14", "order 5 (C4, -1=1), case 14", "K^uu5", "0134", true,
        "errata: the cell a^3⊞a is printed as {1,a,a,a^3}, i.e. {1,a,a^3}, which breaks "
        "commutativity against a⊞a^3={1,a,a^2,a^3}; caught by the verifier",
        "0|1|2|3|4/1|0134|234|1234|123/2|234|0124|134|1234/3|1234|134|0123|124/"
        "4|123|124|124|0234");
    lit(c4, "M", "order 5 (C4, -1=1), case 15 (first table)", "M", "0234", false, "",
        "0|1|2|3|4/1|0234|12|13|14/2|12|0134|23|24/3|13|23|0124|34/4|14|24|34|0123");
    lit(c4, "F2^uu5_r", "order 5 (C4, -1=1), case 15 (second table)", "F2^uu5_r", "0234",
        false, "",
        "0|1|2|3|4/1|0234|1234|1234|1234/2|1234|0134|1234|1234/3|1234|1234|0124|1234/"
        "4|1234|1234|1234|0123");
    lit(c4, "M+", "order 5 (C4, -1=1), case 16 (first table)", "M+", "01234", false, "",
        "0|1|2|3|4/1|01234|12|13|14/2|12|01234|23|24/3|13|23|01234|34/4|14|24|34|01234");
    lit(c4, "K^uu5_r", "order 5 (C4, -1=1), case 16 (second table, also W(C4,1))",
        "K^uu5_r", "01234", false, "",
        "0|1|2|3|4/1|01234|1234|1234|1234/2|1234|01234|1234|1234/3|1234|1234|01234|1234/"
        "4|1234|1234|1234|01234");

    // ---- order 5, C2,2 with -1 = ab ----
    lit(c22, "S^U5", "order 5 (C2,2, -1=ab), case 1", "S^U5", "1", false, "",
        "0|1|2|3|4/1|1|12|13|01234/2|12|2|01234|24/3|13|01234|3|34/4|01234|24|34|4");
    lit(c22, "W^U5", "order 5 (C2,2, -1=ab), case 5", "W^U5", "14", false, "",
        "0|1|2|3|4/1|14|12|13|01234/2|12|23|01234|24/3|13|01234|23|34/4|01234|24|34|14");
    lit(c22, "S^U5_r", "order 5 (C2,2, -1=ab), case 9", "S^U5_r", "12", false, "",
        "0|1|2|3|4/1|12|12|1234|01234/2|12|12|01234|1234/3|1234|01234|34|34/"
        "4|01234|1234|34|34");
    lit(c22, "F5,3-case10", "order 5 (C2,2, -1=ab), case 10", "S^U5_r", "13", false,
        "isomorphic to S^U5_r",
        "0|1|2|3|4/1|13|1234|13|01234/2|1234|24|01234|24/3|13|01234|13|1234/"
        "4|01234|24|1234|24");
    lit(c22, "F5,3-case11.2", "order 5 (C2,2, -1=ab), case 11.2", "S^U5_rr", "123", true,
        "errata: the cell ab⊞ab is printed as {1,a,ab} (a copy of a⊞a) but distributivity "
        "forces ab·(1⊞1) = {a,b,ab}; caught by the verifier",
        "0|1|2|3|4/1|123|1234|1234|01234/2|1234|124|01234|1234/3|1234|01234|134|1234/"
        "4|01234|1234|1234|124");
    lit(c22, "S^U5_rr", "order 5 (C2,2, -1=ab), case 11.2 (corrected)", "S^U5_rr", "123",
        false, "case 11.2 with the forced cell ab⊞ab = {a,b,ab}; matches the enumeration",
        "0|1|2|3|4/1|123|1234|1234|01234/2|1234|124|01234|1234/3|1234|01234|134|1234/"
        "4|01234|1234|1234|234");
    lit(c22, "F5,3-case14.2", "order 5 (C2,2, -1=ab), case 14.2", "X", "234", true,
        "errata: the printed cells b⊞b and ab⊞ab repeat 1⊞1 and a⊞a; distributivity "
        "forces {1,a,ab} and {1,a,b}; caught by the verifier",
        "0|1|2|3|4/1|234|1234|1234|023/2|1234|134|014|1234/3|1234|014|234|1234/"
        "4|023|1234|1234|134");
    lit(c22, "X", "order 5 (C2,2, -1=ab), case 14.2 (corrected)", "X", "234", false,
        "case 14.2 with the forced cells b⊞b = {1,a,ab}, ab⊞ab = {1,a,b}; matches the "
        "enumeration",
        "0|1|2|3|4/1|234|1234|1234|023/2|1234|134|014|1234/3|1234|014|124|1234/"
        "4|023|1234|1234|123");
    lit(c22, "W^U5_r", "order 5 (C2,2, -1=ab), case 15.2 (also W(C2,2;ab))", "W^U5_r",
        "1234", false, "",
        "0|1|2|3|4/1|1234|1234|1234|01234/2|1234|1234|01234|1234/3|1234|01234|1234|1234/"
        "4|01234|1234|1234|1234");

    // ---- order 5, C2,2 with -1 = 1 ----
    lit(c22, "K^U5", "order 5 (C2,2, -1=1), case 2", "K^U5", "01", false, "",
        "0|1|2|3|4/1|01|34|24|23/2|34|02|14|13/3|24|14|03|12/4|23|13|12|04");
    lit(c22, "F5,4-case7.1", "order 5 (C2,2, -1=1), case 7.1", "F2^U5", "0234", true,
        "errata: the printed cell a⊞b = {1,ab} violates reversibility (1 ∈ a⊞b needs "
        "b ∈ 1⊞a = {1,a}); the forced cell is {a,b}; caught by the verifier",
        "0|1|2|3|4/1|0234|12|13|14/2|12|0134|14|24/3|13|14|0124|34/4|14|24|34|0123");
    lit(c22, "F2^U5", "order 5 (C2,2, -1=1), case 7.1 (corrected)", "F2^U5", "0234", false,
        "case 7.1 with the forced cell a⊞b = {a,b}; matches the enumeration",
        "0|1|2|3|4/1|0234|12|13|14/2|12|0134|23|24/3|13|23|0124|34/4|14|24|34|0123");
    lit(c22, "F2^U5_r", "order 5 (C2,2, -1=1), case 7.2", "F2^U5_r", "0234", false, "",
        "0|1|2|3|4/1|0234|1234|1234|1234/2|1234|0134|1234|1234/3|1234|1234|0124|1234/"
        "4|1234|1234|1234|0123");
    lit(c22, "F5,4-case8.1", "order 5 (C2,2, -1=1), case 8.1", "K^R5", "01234", true,
        "errata: the printed cell a⊞b = {1,ab} violates reversibility; the forced cell "
        "is {a,b}; caught by the verifier",
        "0|1|2|3|4/1|01234|12|13|14/2|12|01234|14|24/3|13|14|01234|34/4|14|24|34|01234");
    lit(c22, "K^R5", "order 5 (C2,2, -1=1), case 8.1 (corrected)", "K^R5", "01234", false,
        "case 8.1 with the forced cell a⊞b = {a,b}; matches the enumeration",
        "0|1|2|3|4/1|01234|12|13|14/2|12|01234|23|24/3|13|23|01234|34/4|14|24|34|01234");
    lit(c22, "F5,4-case8.2", "order 5 (C2,2, -1=1), case 8.2", "K^U5", "01234", true,
        "errata: the case labels this hyperfield with the same name as case 2 although "
        "the tables are not isomorphic; caught by the label-consistency check; "
        "cataloged under the unique name K^U5_r",
        "0|1|2|3|4/1|01234|1234|1234|1234/2|1234|01234|1234|1234/3|1234|1234|01234|1234/"
        "4|1234|1234|1234|01234");
    lit(c22, "K^U5_r", "order 5 (C2,2, -1=1), case 8.2 (uniquely renamed, also W(C2,2;1))",
        "", "01234", false, "",
        "0|1|2|3|4/1|01234|1234|1234|1234/2|1234|01234|1234|1234/3|1234|1234|01234|1234/"
        "4|1234|1234|1234|01234");

    return out;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = detail::build_catalog();
    return entries;
}

inline const CatalogEntry* find_entry(std::string_view name) {
    for (const CatalogEntry& e : catalog())
        if (e.name == name) return &e;
    return nullptr;
}

/// The cataloged table for a class name; "K" yields the Krasner table.
inline HyperStructure named(std::string_view name) {
    const CatalogEntry* e = find_entry(name);
    if (!e) throw error("named: unknown catalog name '" + std::string(name) + "'");
    return e->hyperfield;
}

/**
 * Consistency status of one fixture. A fixture is flagged when its table
 * fails the axiom verifier, when its table contradicts the 1⊞1 value its
 * case header asserts, or when it reuses an earlier entry's label for a
 * non-isomorphic table.
 */
struct FixtureCheck {
    bool verify_ok = true;
    bool header_ok = true;
    bool label_ok = true;
    std::string detail;

    bool flagged() const { return !verify_ok || !header_ok || !label_ok; }
};

inline FixtureCheck check_fixture(const CatalogEntry& entry) {
    FixtureCheck r;
    AxiomReport report = verify(entry.hyperfield);
    if (!report.ok()) {
        r.verify_ok = false;
        r.detail = report.summary();
        return r;
    }
    if (entry.has_claimed_diag && entry.hyperfield.order() > 1 &&
        !(entry.hyperfield.cell(1, 1) == entry.claimed_diag)) {
        r.header_ok = false;
        r.detail = "case header asserts 1⊞1 = " + entry.claimed_diag.to_string() +
                   " but the table has " + entry.hyperfield.cell(1, 1).to_string();
        return r;
    }
    if (!entry.claimed_label.empty()) {
        for (const CatalogEntry& other : catalog()) {
            if (&other == &entry) break;  // the earliest entry owns the label
            if (other.claimed_label != entry.claimed_label) continue;
            if (!verify(other.hyperfield).ok()) continue;
            if (canonical_form(other.hyperfield) != canonical_form(entry.hyperfield)) {
                r.label_ok = false;
                r.detail = "label '" + entry.claimed_label + "' already names entry '" +
                           other.name + "', which is not isomorphic to this table";
                return r;
            }
        }
    }
    return r;
}

}  // namespace hyperfield
