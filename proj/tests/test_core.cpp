#include <random>
#include <set>

#include "helpers.hpp"

using namespace hftest;

namespace {

// Candidate table over the standard group monoid, rows given as masks for
// the nonzero block; zero row/column filled in.
HyperStructure candidate(const GroupSpec& g, std::vector<std::vector<ElementSet>> cells) {
    HyperStructure h;
    h.monoid = group_monoid(g);
    int n = h.order();
    h.add_table.assign(n * n, {});
    for (Element x = 0; x < n; ++x) {
        h.set_cell(0, x, ElementSet::single(x));
        h.set_cell(x, 0, ElementSet::single(x));
    }
    for (Element x = 1; x < n; ++x)
        for (Element y = 1; y < n; ++y) h.set_cell(x, y, cells[x - 1][y - 1]);
    h.neg_one = detect_neg_one(h);
    return h;
}

}  // namespace

TEST_CASE("hyperadd returns the stored cells") {
    HyperStructure k = krasner();
    CHECK(k.hyperadd(1, 1) == set({0, 1}));
    CHECK(k.hyperadd(1, 0) == set({1}));

    HyperStructure s = sign_hyperfield();
    CHECK(s.hyperadd(1, 2) == set({0, 1, 2}));  // 1 ⊞ (-1) = {0,1,-1}
    CHECK(s.hyperadd(1, 1) == set({1}));

    for (const CatalogEntry* e : clean_entries())
        for (Element x = 0; x < e->hyperfield.order(); ++x)
            CHECK(e->hyperfield.hyperadd(0, x) == ElementSet::single(x));

    CHECK_THROWS_AS(k.hyperadd(0, 2), error);
}

TEST_CASE("set_hyperadd unions pairwise cells") {
    HyperStructure k = krasner();
    CHECK(k.set_hyperadd(set({0, 1}), set({1})) == set({0, 1}));
    CHECK(k.set_hyperadd(set({0}), set({1})) == set({1}));

    // {a,0} ⊞ {a} over the order-4 case-3.2 table: (a ⊞ a) ∪ (0 ⊞ a)
    // = {a²,0} ∪ {a} = {0,a,a²}
    HyperStructure h = named("F2^u4");
    CHECK(h.set_hyperadd(set({2, 0}), set({2})) == set({0, 2, 3}));

    CHECK_THROWS_AS(k.set_hyperadd({}, set({1})), error);
    CHECK_THROWS_AS(k.set_hyperadd(set({1}), {}), error);
}

TEST_CASE("set_hyperadd is monotone and commutative on verified structures") {
    std::mt19937 rng(20240811);
    for (const CatalogEntry* e : clean_entries()) {
        const HyperStructure& h = e->hyperfield;
        std::uint32_t full = ElementSet::full(h.order()).mask();
        for (int trial = 0; trial < 24; ++trial) {
            std::uint32_t a = rng() & full, b = rng() & full, extra = rng() & full;
            if (!a || !b) continue;
            ElementSet sa = ElementSet::from_mask(a), sb = ElementSet::from_mask(b);
            ElementSet wider = ElementSet::from_mask(a | extra);
            CHECK(h.set_hyperadd(sa, sb) == h.set_hyperadd(sb, sa));
            CHECK(h.set_hyperadd(sa, sb).subset_of(h.set_hyperadd(wider, sb)));
        }
    }
}

TEST_CASE("hypersum follows the recursive definition") {
    HyperStructure k = krasner();
    CHECK(k.hypersum({1, 1, 1}) == set({0, 1}));  // 1 ⊞ {0,1} = {1} ∪ {0,1}

    HyperStructure f3 = field_hyperfield(3);
    CHECK(f3.hypersum({1, 1, 1}) == set({0}));  // 1+1+1 = 0 in GF(3)

    for (const CatalogEntry* e : clean_entries())
        for (Element x = 0; x < e->hyperfield.order(); ++x)
            CHECK(e->hyperfield.hypersum({x}) == ElementSet::single(x));

    CHECK_THROWS_AS(k.hypersum(std::span<const Element>{}), error);
}

TEST_CASE("hypersum equals the left fold on verified structures") {
    for (const CatalogEntry* e : clean_entries()) {
        const HyperStructure& h = e->hyperfield;
        int n = h.order();
        std::vector<Element> xs = {1, n - 1, n / 2, 1};
        ElementSet folded = ElementSet::single(xs[0]);
        for (std::size_t i = 1; i < xs.size(); ++i)
            folded = h.set_hyperadd(folded, ElementSet::single(xs[i]));
        CHECK(h.hypersum(xs) == folded);
    }
}

TEST_CASE("hypersum is invariant under permutations of its input") {
    for (const char* name : {"K", "S", "M", "X", "K^u5", "W^u5_r"}) {
        HyperStructure h = named(name);
        int n = h.order();
        std::vector<Element> xs = {1, n - 1, 1, n > 2 ? 2 : 1};
        std::sort(xs.begin(), xs.end());
        ElementSet expected = h.hypersum(xs);
        do {
            CHECK(h.hypersum(xs) == expected);
        } while (std::next_permutation(xs.begin(), xs.end()));
    }
}

TEST_CASE("neg picks the unique hyperinverse") {
    HyperStructure s = sign_hyperfield();
    CHECK(s.neg(1) == 2);
    CHECK(s.neg(2) == 1);

    CHECK(named("Y").neg(1) == 3);  // -1 = a² in Y

    for (const CatalogEntry* e : clean_entries()) {
        const HyperStructure& h = e->hyperfield;
        CHECK(h.neg(0) == 0);
        for (Element x = 0; x < h.order(); ++x) {
            CHECK(h.neg(h.neg(x)) == x);                     // involution
            CHECK(h.neg(x) == h.monoid.mul(h.neg_one, x));   // -x = (-1)·x
            for (Element y = 0; y < h.order(); ++y)
                CHECK(h.cell(x, y).contains(0) == (y == h.neg(x)));
        }
        if (h.neg_one == 1)
            for (Element x = 0; x < h.order(); ++x) CHECK(h.neg(x) == x);
    }

    // broken candidate: no hyperinverse for a
    HyperStructure broken = candidate(GroupSpec{{2}}, {{set({0, 1}), set({1, 2})},
                                                       {set({1, 2}), set({1})}});
    CHECK_THROWS_WITH(broken.neg(2), Catch::Matchers::ContainsSubstring("no hyperinverse"));
}

TEST_CASE("translation identity holds on every verified structure") {
    for (const CatalogEntry* e : clean_entries()) {
        const HyperStructure& h = e->hyperfield;
        for (Element x = 1; x < h.order(); ++x)
            for (Element y = 0; y < h.order(); ++y) {
                Element xinv = h.monoid.inverse(x);
                ElementSet translated = h.monoid.act(x, h.cell(1, h.monoid.mul(xinv, y)));
                CHECK(h.cell(x, y) == translated);
            }
    }
}

TEST_CASE("verify accepts the catalog classes") {
    for (const CatalogEntry* e : clean_entries()) {
        AxiomReport r = verify(e->hyperfield);
        INFO(e->name << "\n" << r.summary());
        CHECK(r.ok());
        CHECK(is_hyperfield(e->hyperfield));
    }
}

TEST_CASE("verify pinpoints associativity failure with a witness") {
    // order-4 candidate with 1⊞1 = {1,0}: rows completed by translation,
    // associativity must fail at (1,1,a)
    GroupSpec c3{{3}};
    FiniteMonoid m = group_monoid(c3);
    auto row = [&](Element x, ElementSet s1, ElementSet sa, ElementSet sa2) {
        (void)x;
        return std::vector<ElementSet>{s1, sa, sa2};
    };
    HyperStructure h = candidate(
        c3, {row(1, set({0, 1}), set({3}), set({2})),
             row(2, set({3}), set({0, 2}), set({1})),
             row(3, set({2}), set({1}), set({0, 3}))});
    AxiomReport r = verify(h);
    CHECK_FALSE(r.ok());
    const AxiomCheck& assoc = r[Axiom::Associativity];
    REQUIRE(assoc.status == AxiomCheck::Status::Fail);
    bool witness_11a = false;
    for (const Witness& w : assoc.failures)
        if (w.at == std::array<Element, 3>{1, 1, 2}) witness_11a = true;
    CHECK(witness_11a);
}

TEST_CASE("verify flags a broken zero row") {
    HyperStructure h = krasner();
    h.set_cell(0, 1, set({0}));
    AxiomReport r = verify(h);
    CHECK_FALSE(r.ok());
    CHECK(r[Axiom::ZeroIdentity].status == AxiomCheck::Status::Fail);
}

TEST_CASE("verify reports structural breakage before axioms") {
    HyperStructure h = krasner();
    h.add_table.pop_back();
    AxiomReport r = verify(h);
    CHECK_FALSE(r.ok());
    CHECK(r[Axiom::Structure].status == AxiomCheck::Status::Fail);
    CHECK(r[Axiom::Associativity].status == AxiomCheck::Status::Skipped);
}

TEST_CASE("verify collects all failures, not just the first") {
    HyperStructure h = named("M");
    h.set_cell(1, 2, set({1}));  // breaks commutativity and more
    h.set_cell(3, 4, set({2}));
    AxiomReport r = verify(h);
    CHECK_FALSE(r.ok());
    std::size_t total = 0;
    for (const auto& c : r.checks) total += c.failures.size();
    CHECK(total >= 2);
}

TEST_CASE("parity properties") {
    CHECK(parity_check(sign_hyperfield()).pass);       // |1 ⊞ (-1)| = 3
    CHECK(parity_check(krasner()).vacuous);            // -1 = 1
    HyperStructure y = named("Y");
    CHECK(y.cell(1, 3) == set({0, 2, 4}));             // 1 ⊞ a² = {0,a,a³}
    CHECK(parity_check(y).pass);
}

// ---------------------------------------------------------------------
// A second, independently coded checker: a literal restatement of the
// axioms with plain std::set arithmetic. verify() must agree with it on
// every small candidate table.
// ---------------------------------------------------------------------
namespace literal {

using Set = std::set<int>;

Set cell(const HyperStructure& h, int x, int y) {
    Set s;
    for (Element m : h.cell(x, y).members()) s.insert(m);
    return s;
}

Set sum_sets(const HyperStructure& h, const Set& a, const Set& b) {
    Set out;
    for (int x : a)
        for (int y : b) {
            Set c = cell(h, x, y);
            out.insert(c.begin(), c.end());
        }
    return out;
}

bool is_hyperfield(const HyperStructure& h) {
    int n = h.order();
    if (n < 2) return false;
    // commutative monoid with unit 1, absorbing 0, inverses for nonzero
    for (int x = 0; x < n; ++x)
        if (h.monoid.mul(0, x) != 0 || h.monoid.mul(x, 0) != 0 || h.monoid.mul(1, x) != x)
            return false;
    for (int x = 1; x < n; ++x) {
        int count = 0;
        for (int y = 1; y < n; ++y) {
            if (h.monoid.mul(x, y) != h.monoid.mul(y, x)) return false;
            if (h.monoid.mul(x, y) == 0) return false;
            if (h.monoid.mul(x, y) == 1) ++count;
            for (int z = 1; z < n; ++z)
                if (h.monoid.mul(h.monoid.mul(x, y), z) != h.monoid.mul(x, h.monoid.mul(y, z)))
                    return false;
        }
        if (count != 1) return false;
    }
    // hypergroup
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (cell(h, x, y).empty()) return false;
            if (cell(h, x, y) != cell(h, y, x)) return false;
        }
    for (int x = 0; x < n; ++x)
        if (cell(h, 0, x) != Set{x}) return false;
    std::vector<int> neg(n, -1);
    for (int x = 0; x < n; ++x) {
        int count = 0;
        for (int y = 0; y < n; ++y)
            if (cell(h, x, y).count(0)) {
                neg[x] = y;
                ++count;
            }
        if (count != 1) return false;
    }
    if (neg[1] != h.neg_one) return false;
    for (int x = 0; x < n; ++x)
        if (neg[x] != h.monoid.mul(neg[1], x)) return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (cell(h, y, z).count(x) != cell(h, x, neg[y]).count(z)) return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (sum_sets(h, cell(h, x, y), Set{z}) != sum_sets(h, Set{x}, cell(h, y, z)))
                    return false;
    // distributivity (both sides; multiplication is commutative anyway)
    for (int a = 0; a < n; ++a)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                Set lhs;
                for (int v : cell(h, x, y)) lhs.insert(h.monoid.mul(a, v));
                if (lhs != cell(h, h.monoid.mul(a, x), h.monoid.mul(a, y))) return false;
            }
    return true;
}

}  // namespace literal

TEST_CASE("verify agrees with an independent literal checker on order <= 3") {
    long long agree = 0;
    for (int n = 2; n <= 3; ++n) {
        GroupSpec g = abelian_groups(n - 1).front();
        int cells = (n - 1) * n / 2;
        std::vector<std::pair<int, int>> pos;
        for (int x = 1; x < n; ++x)
            for (int y = x; y < n; ++y) pos.push_back({x, y});
        long long total = 1;
        for (int i = 0; i < cells; ++i) total *= (1 << n) - 1;
        for (long long code = 0; code < total; ++code) {
            long long c = code;
            std::vector<std::vector<ElementSet>> block(n - 1,
                                                       std::vector<ElementSet>(n - 1));
            for (auto [x, y] : pos) {
                std::uint32_t mask = (std::uint32_t)(c % ((1 << n) - 1)) + 1;
                c /= (1 << n) - 1;
                block[x - 1][y - 1] = ElementSet::from_mask(mask);
                block[y - 1][x - 1] = ElementSet::from_mask(mask);
            }
            HyperStructure h = candidate(g, block);
            bool fast = is_hyperfield(h);
            bool full = verify(h).ok();
            bool lit = literal::is_hyperfield(h);
            CHECK(fast == lit);
            CHECK(full == lit);
            agree += fast == lit;
        }
    }
    CHECK(agree == 3 + 343);  // every symmetric nonzero-cell assignment
}

TEST_CASE("verify agrees with the literal checker on the errata fixtures") {
    for (const CatalogEntry& e : catalog())
        CHECK(verify(e.hyperfield).ok() == literal::is_hyperfield(e.hyperfield));
}

TEST_CASE("verify agrees with the literal checker under random cell mutations") {
    std::mt19937 rng(577);
    for (const CatalogEntry* e : clean_entries()) {
        int n = e->hyperfield.order();
        for (int trial = 0; trial < 40; ++trial) {
            HyperStructure h = e->hyperfield;
            Element x = rng() % n, y = rng() % n;
            std::uint32_t mask = rng() & ElementSet::full(n).mask();
            h.set_cell(x, y, ElementSet::from_mask(mask));
            if (rng() % 2) h.set_cell(y, x, ElementSet::from_mask(mask));
            bool fast = is_hyperfield(h);
            bool full = verify(h).ok();
            bool lit = literal::is_hyperfield(h);
            INFO(e->name << " cell (" << x << "," << y << ") := " <<
                 ElementSet::from_mask(mask).to_string());
            CHECK(fast == lit);
            CHECK(full == lit);
        }
    }
}
