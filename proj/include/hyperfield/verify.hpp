#pragma once

#include <array>
#include <string>
#include <vector>

#include "hyperfield/core.hpp"

namespace hyperfield {

enum class Axiom {
    Structure,      // table shapes, index ranges
    UnitGroup,      // commutative monoid with absorbing 0, unit group, 0 != 1
    ZeroIdentity,   // 0 ⊞ x = {x}
    NonemptyCells,  // every cell non-empty
    Commutativity,  // x ⊞ y = y ⊞ x
    UniqueInverse,  // unique -x with 0 ∈ x ⊞ (-x), and -x = (-1)·x
    Reversibility,  // x ∈ y ⊞ z  ⟺  z ∈ x ⊞ (-y)
    Distributivity, // a·(x ⊞ y) = a·x ⊞ a·y
    Associativity,  // (x ⊞ y) ⊞ z = x ⊞ (y ⊞ z) under set extension
};

inline const char* axiom_name(Axiom a) {
    switch (a) {
        case Axiom::Structure: return "structure";
        case Axiom::UnitGroup: return "unit_group";
        case Axiom::ZeroIdentity: return "zero_identity";
        case Axiom::NonemptyCells: return "nonempty_cells";
        case Axiom::Commutativity: return "commutativity";
        case Axiom::UniqueInverse: return "unique_inverse";
        case Axiom::Reversibility: return "reversibility";
        case Axiom::Distributivity: return "distributivity";
        case Axiom::Associativity: return "associativity";
    }
    return "?";
}

/// A concrete refutation: the offending element tuple plus the two sets
/// (or set-vs-expected-set) that disagree.
struct Witness {
    std::array<Element, 3> at{-1, -1, -1};
    ElementSet lhs, rhs;
    std::string detail;
};

struct AxiomCheck {
    enum class Status { Pass, Fail, Skipped };
    Axiom axiom{};
    Status status = Status::Skipped;
    std::vector<Witness> failures;

    bool passed() const { return status == Status::Pass; }
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.passed()) return false;
        return !checks.empty();
    }

    const AxiomCheck& operator[](Axiom a) const {
        for (const auto& c : checks)
            if (c.axiom == a) return c;
        throw error("axiom not present in report");
    }

    std::string summary() const {
        std::string out;
        for (const auto& c : checks) {
            out += axiom_name(c.axiom);
            switch (c.status) {
                case AxiomCheck::Status::Pass: out += ": pass\n"; break;
                case AxiomCheck::Status::Skipped: out += ": skipped\n"; break;
                case AxiomCheck::Status::Fail:
                    out += ": FAIL (" + std::to_string(c.failures.size()) + " witness";
                    if (c.failures.size() != 1) out += "es";
                    out += ")\n";
                    for (const auto& w : c.failures) {
                        out += "  at (";
                        bool sep = false;
                        for (Element e : w.at) {
                            if (e < 0) break;
                            if (sep) out += ',';
                            out += std::to_string(e);
                            sep = true;
                        }
                        out += ") " + w.detail;
                        if (!(w.lhs == ElementSet{}) || !(w.rhs == ElementSet{}))
                            out += ": " + w.lhs.to_string() + " vs " + w.rhs.to_string();
                        out += "\n";
                    }
                    break;
            }
        }
        return out;
    }
};

namespace detail {

// Shared checker. In fast mode it stops at the first failure and the
// report contents are unspecified beyond ok() == false.
inline bool run_checks(const HyperStructure& h, AxiomReport* report, bool fast) {
    bool all_ok = true;
    AxiomCheck* cur = nullptr;

    auto begin = [&](Axiom a) {
        if (report) {
            report->checks.push_back({a, AxiomCheck::Status::Pass, {}});
            cur = &report->checks.back();
        }
    };
    auto fail = [&](std::array<Element, 3> at, ElementSet lhs, ElementSet rhs,
                    std::string detail) {
        all_ok = false;
        if (cur) {
            cur->status = AxiomCheck::Status::Fail;
            cur->failures.push_back({at, lhs, rhs, std::move(detail)});
        }
    };
    auto skip = [&](Axiom a) {
        all_ok = false;
        if (report) report->checks.push_back({a, AxiomCheck::Status::Skipped, {}});
    };

    const int n = h.order();

    // structural sanity; nothing else is checkable when this fails
    begin(Axiom::Structure);
    if (!h.shape_ok()) {
        fail({-1, -1, -1}, {}, {}, "malformed tables (order/dimension/index range)");
        for (Axiom a : {Axiom::UnitGroup, Axiom::ZeroIdentity, Axiom::NonemptyCells,
                        Axiom::Commutativity, Axiom::UniqueInverse, Axiom::Reversibility,
                        Axiom::Distributivity, Axiom::Associativity})
            skip(a);
        return false;
    }

    const FiniteMonoid& m = h.monoid;

    begin(Axiom::UnitGroup);
    if (n < 2) fail({-1, -1, -1}, {}, {}, "0 = 1: carrier has fewer than two elements");
    for (Element x = 0; x < n && (!fast || all_ok); ++x) {
        if (m.mul(0, x) != 0 || m.mul(x, 0) != 0)
            fail({x, -1, -1}, {}, {}, "zero is not absorbing");
        if (m.mul(1, x) != x || m.mul(x, 1) != x)
            fail({x, -1, -1}, {}, {}, "1 is not a multiplicative unit");
    }
    for (Element x = 1; x < n && (!fast || all_ok); ++x)
        for (Element y = x; y < n; ++y) {
            if (m.mul(x, y) != m.mul(y, x)) {
                fail({x, y, -1}, {}, {}, "multiplication is not commutative");
                if (fast) break;
            }
            if (m.mul(x, y) == 0) {
                fail({x, y, -1}, {}, {}, "nonzero product is zero");
                if (fast) break;
            }
        }
    for (Element x = 1; x < n && (!fast || all_ok); ++x)
        for (Element y = 1; y < n && (!fast || all_ok); ++y)
            for (Element z = 1; z < n; ++z)
                if (m.mul(m.mul(x, y), z) != m.mul(x, m.mul(y, z))) {
                    fail({x, y, z}, {}, {}, "multiplication is not associative");
                    if (fast) break;
                }
    for (Element x = 1; x < n && (!fast || all_ok); ++x) {
        int inverses = 0;
        for (Element y = 1; y < n; ++y)
            if (m.mul(x, y) == 1) ++inverses;
        if (inverses != 1)
            fail({x, -1, -1}, {}, {},
                 "element has " + std::to_string(inverses) + " multiplicative inverses");
    }
    if (fast && !all_ok) return false;

    begin(Axiom::ZeroIdentity);
    for (Element x = 0; x < n; ++x) {
        if (!(h.cell(0, x) == ElementSet::single(x)))
            fail({0, x, -1}, h.cell(0, x), ElementSet::single(x), "0 ⊞ x != {x}");
        if (!(h.cell(x, 0) == ElementSet::single(x)))
            fail({x, 0, -1}, h.cell(x, 0), ElementSet::single(x), "x ⊞ 0 != {x}");
        if (fast && !all_ok) return false;
    }

    begin(Axiom::NonemptyCells);
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            if (h.cell(x, y).empty()) {
                fail({x, y, -1}, {}, {}, "empty hyperaddition cell");
                if (fast) return false;
            }

    begin(Axiom::Commutativity);
    for (Element x = 0; x < n; ++x)
        for (Element y = x + 1; y < n; ++y)
            if (!(h.cell(x, y) == h.cell(y, x))) {
                fail({x, y, -1}, h.cell(x, y), h.cell(y, x), "x ⊞ y != y ⊞ x");
                if (fast) return false;
            }

    begin(Axiom::UniqueInverse);
    std::vector<Element> neg(n, -1);
    bool neg_ok = true;
    for (Element x = 0; x < n; ++x) {
        int count = 0;
        for (Element y = 0; y < n; ++y)
            if (h.cell(x, y).contains(0)) {
                neg[x] = y;
                ++count;
            }
        if (count != 1) {
            neg_ok = false;
            fail({x, -1, -1}, {}, {},
                 std::to_string(count) + " hyperinverses (expected exactly one)");
            if (fast) return false;
        }
    }
    if (neg_ok) {
        if (h.neg_one != neg[1])
            fail({1, -1, -1}, {}, {},
                 "designated -1 is " + std::to_string(h.neg_one) +
                     " but 0 ∈ 1 ⊞ " + std::to_string(neg[1]));
        for (Element x = 0; x < n; ++x)
            if (neg[x] != m.mul(neg[1], x))
                fail({x, -1, -1}, ElementSet::single(neg[x]),
                     ElementSet::single(m.mul(neg[1], x)), "-x != (-1)·x");
    }
    if (fast && !all_ok) return false;

    // distributivity before the cubic checks: it prunes random tables fastest
    begin(Axiom::Distributivity);
    for (Element a = 0; a < n; ++a)
        for (Element x = 0; x < n; ++x)
            for (Element y = x; y < n; ++y) {
                ElementSet lhs = m.act(a, h.cell(x, y));
                ElementSet rhs = h.cell(m.mul(a, x), m.mul(a, y));
                if (!(lhs == rhs)) {
                    fail({a, x, y}, lhs, rhs, "a·(x ⊞ y) != a·x ⊞ a·y");
                    if (fast) return false;
                }
            }

    if (neg_ok) {
        begin(Axiom::Reversibility);
        for (Element y = 0; y < n; ++y)
            for (Element z = 0; z < n; ++z) {
                ElementSet yz = h.cell(y, z);
                for (Element x = 0; x < n; ++x) {
                    bool fwd = yz.contains(x);
                    bool bwd = h.cell(x, neg[y]).contains(z);
                    if (fwd != bwd) {
                        fail({x, y, z}, yz, h.cell(x, neg[y]),
                             "x ∈ y ⊞ z does not match z ∈ x ⊞ (-y)");
                        if (fast) return false;
                    }
                }
            }
    } else {
        skip(Axiom::Reversibility);
    }

    begin(Axiom::Associativity);
    bool cells_ok = true;
    for (const ElementSet& c : h.add_table) cells_ok = cells_ok && !c.empty();
    if (cells_ok) {
        for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y)
                for (Element z = 0; z < n; ++z) {
                    ElementSet lhs = h.set_hyperadd(h.cell(x, y), ElementSet::single(z));
                    ElementSet rhs = h.set_hyperadd(ElementSet::single(x), h.cell(y, z));
                    if (!(lhs == rhs)) {
                        fail({x, y, z}, lhs, rhs, "(x ⊞ y) ⊞ z != x ⊞ (y ⊞ z)");
                        if (fast) return false;
                    }
                }
    } else {
        skip(Axiom::Associativity);
    }

    return all_ok;
}

}  // namespace detail

/**
 * Exhaustively checks every hyperfield axiom over all pairs/triples of the
 * tables. The verdict "is a hyperfield" holds iff every check passes; each
 * failure carries a concrete witness tuple. All failures are collected, not
 * just the first, so defective fixtures can be diagnosed in full.
 */
inline AxiomReport verify(const HyperStructure& h) {
    AxiomReport report;
    detail::run_checks(h, &report, /*fast=*/false);
    return report;
}

/// Same checks as verify() but stops at the first failure.
inline bool is_hyperfield(const HyperStructure& h) {
    return detail::run_checks(h, nullptr, /*fast=*/true);
}

/**
 * Oddness properties of a verified hyperfield with -1 != 1: the order is
 * odd, and every a ⊞ (-a) has odd cardinality and is closed under negation.
 * Vacuously passes when -1 = 1.
 */
struct ParityReport {
    bool vacuous = false;
    bool pass = true;
    std::string detail;
};

inline ParityReport parity_check(const HyperStructure& h) {
    ParityReport r;
    if (h.neg_one == 1) {
        r.vacuous = true;
        return r;
    }
    if (h.order() % 2 == 0) {
        r.pass = false;
        r.detail = "order " + std::to_string(h.order()) + " is even although -1 != 1";
        return r;
    }
    for (Element a = 0; a < h.order(); ++a) {
        ElementSet cell = h.cell(a, h.neg(a));
        if (cell.count() % 2 == 0) {
            r.pass = false;
            r.detail = "|a ⊞ (-a)| = " + std::to_string(cell.count()) +
                       " is even for a = " + std::to_string(a);
            return r;
        }
        for (Element x : cell.members())
            if (!cell.contains(h.monoid.mul(h.neg_one, x))) {
                r.pass = false;
                r.detail = "a ⊞ (-a) not closed under negation at a = " +
                           std::to_string(a) + ", x = " + std::to_string(x);
                return r;
            }
    }
    return r;
}

}  // namespace hyperfield
