#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperfield {

/// Carrier elements are dense indices into a structure of order n.
/// Index 0 is always the additive zero, index 1 the multiplicative unit.
using Element = int;

/// Upper bound on the carrier size; keeps every cell in one 16-bit mask.
inline constexpr int kMaxOrder = 16;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * A subset of carrier elements, stored as a bitmask.
 *
 * Hyperaddition is set-valued: every cell of the addition table is an
 * ElementSet. Cells of a well-formed structure are non-empty, but empty
 * sets are representable so that broken candidates can be diagnosed.
 */
class ElementSet {
public:
    constexpr ElementSet() = default;

    static constexpr ElementSet from_mask(std::uint32_t m) {
        ElementSet s;
        s.bits_ = m;
        return s;
    }
    static constexpr ElementSet single(Element x) { return from_mask(1u << x); }
    static constexpr ElementSet full(int n) { return from_mask((1u << n) - 1u); }
    static ElementSet of(std::initializer_list<Element> xs) {
        ElementSet s;
        for (Element x : xs) s.insert(x);
        return s;
    }

    constexpr std::uint32_t mask() const { return bits_; }
    constexpr bool contains(Element x) const { return (bits_ >> x) & 1u; }
    constexpr bool empty() const { return bits_ == 0; }
    int count() const { return __builtin_popcount(bits_); }
    void insert(Element x) { bits_ |= (1u << x); }
    void erase(Element x) { bits_ &= ~(1u << x); }

    /// Smallest member; set must be non-empty.
    Element first() const { return __builtin_ctz(bits_); }

    std::vector<Element> members() const {
        std::vector<Element> out;
        for (std::uint32_t m = bits_; m; m &= m - 1) out.push_back(__builtin_ctz(m));
        return out;
    }

    constexpr bool subset_of(ElementSet other) const {
        return (bits_ & ~other.bits_) == 0;
    }

    friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
        return from_mask(a.bits_ | b.bits_);
    }
    friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
        return from_mask(a.bits_ & b.bits_);
    }
    ElementSet& operator|=(ElementSet o) {
        bits_ |= o.bits_;
        return *this;
    }
    friend constexpr bool operator==(ElementSet a, ElementSet b) = default;

    /// "{0,1,3}" with members ascending; "{}" when empty.
    std::string to_string() const {
        std::string out = "{";
        bool sep = false;
        for (Element x : members()) {
            if (sep) out += ',';
            out += std::to_string(x);
            sep = true;
        }
        return out + "}";
    }

private:
    std::uint32_t bits_ = 0;
};

/**
 * Multiplication table of a carrier G ∪ {0}: absorbing zero at index 0,
 * unit at index 1, and (for a valid structure) the nonzero elements form
 * a finite abelian group.
 *
 * `factors` records the cyclic factor orders when the monoid was built
 * from a group specification; it is empty for tables read from files.
 */
struct FiniteMonoid {
    int order = 0;
    std::vector<Element> mul_table;        // row-major order×order
    std::vector<int> factors;              // cyclic factor orders, if known
    std::vector<std::string> names;        // element display names

    Element mul(Element x, Element y) const { return mul_table[x * order + y]; }

    /// Elementwise product x·S (zero stays put under the absorbing law).
    ElementSet act(Element x, ElementSet s) const {
        ElementSet out;
        for (std::uint32_t m = s.mask(); m; m &= m - 1)
            out.insert(mul(x, __builtin_ctz(m)));
        return out;
    }

    /// Multiplicative inverse of a nonzero element, or -1 if there is none.
    Element inverse(Element x) const {
        for (Element y = 1; y < order; ++y)
            if (mul(x, y) == 1) return y;
        return -1;
    }

    bool shape_ok() const {
        if (order < 1 || order > kMaxOrder) return false;
        if ((int)mul_table.size() != order * order) return false;
        for (Element v : mul_table)
            if (v < 0 || v >= order) return false;
        return true;
    }

    friend bool operator==(const FiniteMonoid& a, const FiniteMonoid& b) {
        return a.order == b.order && a.mul_table == b.mul_table && a.names == b.names;
    }
};

/**
 * A candidate finite hyperfield: multiplicative monoid, hyperaddition
 * table and the designated hyperinverse of 1 (−1, the unique e with
 * 0 ∈ 1⊞e). Candidates are plain data; whether the axioms hold is
 * decided by verify() and never assumed by the representation.
 *
 * All values are immutable after construction; every operation below is
 * a pure function of the tables.
 */
struct HyperStructure {
    FiniteMonoid monoid;
    std::vector<ElementSet> add_table;     // row-major order×order
    Element neg_one = -1;

    int order() const { return monoid.order; }

    bool shape_ok() const {
        return monoid.shape_ok() &&
               (int)add_table.size() == monoid.order * monoid.order;
    }

    ElementSet cell(Element x, Element y) const { return add_table[x * order() + y]; }
    void set_cell(Element x, Element y, ElementSet v) { add_table[x * order() + y] = v; }

    ElementSet hyperadd(Element x, Element y) const {
        if (x < 0 || x >= order() || y < 0 || y >= order())
            throw error("hyperadd: element index out of range");
        return cell(x, y);
    }

    /// Set-extended hyperaddition: A ⊞ B = union of a ⊞ b over all pairs.
    ElementSet set_hyperadd(ElementSet a, ElementSet b) const {
        if (a.empty() || b.empty())
            throw error("set_hyperadd: empty operand");
        ElementSet out;
        for (std::uint32_t ma = a.mask(); ma; ma &= ma - 1) {
            Element x = __builtin_ctz(ma);
            for (std::uint32_t mb = b.mask(); mb; mb &= mb - 1)
                out |= cell(x, __builtin_ctz(mb));
        }
        return out;
    }

    /// n-ary hypersum x1 ⊞ (x2 ⊞ (… ⊞ xm)); a single element yields {x1}.
    ElementSet hypersum(std::span<const Element> xs) const {
        if (xs.empty()) throw error("hypersum: empty element list");
        for (Element x : xs)
            if (x < 0 || x >= order()) throw error("hypersum: element index out of range");
        ElementSet acc = ElementSet::single(xs.back());
        for (int i = (int)xs.size() - 2; i >= 0; --i)
            acc = set_hyperadd(ElementSet::single(xs[i]), acc);
        return acc;
    }
    ElementSet hypersum(std::initializer_list<Element> xs) const {
        return hypersum(std::span<const Element>(xs.begin(), xs.size()));
    }

    /// The unique y with 0 ∈ x ⊞ y. Throws with a witness if the table
    /// has no such y or more than one (only possible for unverified input).
    Element neg(Element x) const {
        if (x < 0 || x >= order()) throw error("neg: element index out of range");
        Element found = -1;
        for (Element y = 0; y < order(); ++y) {
            if (!cell(x, y).contains(0)) continue;
            if (found >= 0)
                throw error("neg: hyperinverse of " + std::to_string(x) +
                            " is not unique (candidates " + std::to_string(found) +
                            " and " + std::to_string(y) + ")");
            found = y;
        }
        if (found < 0)
            throw error("neg: element " + std::to_string(x) + " has no hyperinverse");
        return found;
    }

    friend bool operator==(const HyperStructure& a, const HyperStructure& b) {
        return a.monoid == b.monoid && a.add_table == b.add_table && a.neg_one == b.neg_one;
    }
};

/// Table-level equality ignoring element display names.
inline bool same_tables(const HyperStructure& a, const HyperStructure& b) {
    return a.monoid.order == b.monoid.order &&
           a.monoid.mul_table == b.monoid.mul_table &&
           a.add_table == b.add_table;
}

/// The hyperinverse of 1 read off the table, or -1 if absent/ambiguous.
inline Element detect_neg_one(const HyperStructure& h) {
    if (!h.shape_ok() || h.order() < 2) return -1;
    Element found = -1;
    for (Element y = 0; y < h.order(); ++y) {
        if (!h.cell(1, y).contains(0)) continue;
        if (found >= 0) return -1;
        found = y;
    }
    return found;
}

}  // namespace hyperfield
