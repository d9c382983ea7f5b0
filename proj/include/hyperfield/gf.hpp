#pragma once

#include <vector>

#include "hyperfield/core.hpp"

namespace hyperfield {

/**
 * A small finite field GF(p^k), q = p^k <= 9, with a pinned irreducible
 * polynomial so the tables are reproducible bit for bit. Elements are
 * polynomial codes: code = c0 + c1·p + c2·p² for coefficients ci of
 * 1, x, x².
 */
struct FiniteFieldSpec {
    int p = 0;
    int k = 0;
    std::vector<int> irreducible;  // monic, degree k, coefficient list c0..ck

    int q() const {
        int v = 1;
        for (int i = 0; i < k; ++i) v *= p;
        return v;
    }
};

namespace gf {

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline std::vector<int> code_digits(const FiniteFieldSpec& f, int code) {
    std::vector<int> d(f.k);
    for (int i = 0; i < f.k; ++i) {
        d[i] = code % f.p;
        code /= f.p;
    }
    return d;
}

inline int digits_code(const FiniteFieldSpec& f, const std::vector<int>& d) {
    int code = 0;
    for (int i = (int)d.size() - 1; i >= 0; --i) code = code * f.p + d[i];
    return code;
}

inline int add(const FiniteFieldSpec& f, int a, int b) {
    auto da = code_digits(f, a), db = code_digits(f, b);
    for (int i = 0; i < f.k; ++i) da[i] = (da[i] + db[i]) % f.p;
    return digits_code(f, da);
}

inline int mul(const FiniteFieldSpec& f, int a, int b) {
    auto da = code_digits(f, a), db = code_digits(f, b);
    std::vector<int> prod(2 * f.k - 1, 0);
    for (int i = 0; i < f.k; ++i)
        for (int j = 0; j < f.k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % f.p;
    // reduce modulo the (monic) irreducible polynomial
    for (int d = (int)prod.size() - 1; d >= f.k; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < f.k; ++i)
            prod[d - f.k + i] = ((prod[d - f.k + i] - c * f.irreducible[i]) % f.p + f.p * f.p) % f.p;
    }
    prod.resize(f.k);
    return digits_code(f, prod);
}

inline int element_order(const FiniteFieldSpec& f, int a) {
    int x = a, ord = 1;
    while (x != 1) {
        x = mul(f, x, a);
        ++ord;
        if (ord > f.q()) return -1;  // not a unit
    }
    return ord;
}

/// Exhaustive root search; for k <= 3 a reducible polynomial has a linear
/// factor, so root-freeness decides irreducibility at the sizes used here.
inline bool irreducible_ok(const FiniteFieldSpec& f) {
    if ((int)f.irreducible.size() != f.k + 1 || f.irreducible[f.k] != 1) return false;
    if (f.k == 1) return true;
    if (f.k > 3) return false;
    for (int r = 0; r < f.p; ++r) {
        int value = 0, power = 1;
        for (int c : f.irreducible) {
            value = (value + c * power) % f.p;
            power = (power * r) % f.p;
        }
        if (value == 0) return false;
    }
    return true;
}

}  // namespace gf

/// The pinned polynomial for each supported prime power.
inline FiniteFieldSpec default_field_spec(int q) {
    switch (q) {
        case 2: return {2, 1, {0, 1}};
        case 3: return {3, 1, {0, 1}};
        case 5: return {5, 1, {0, 1}};
        case 7: return {7, 1, {0, 1}};
        case 4: return {2, 2, {1, 1, 1}};      // x² + x + 1
        case 8: return {2, 3, {1, 1, 0, 1}};   // x³ + x + 1
        case 9: return {3, 2, {1, 0, 1}};      // x² + 1
    }
    throw error("default_field_spec: supported orders are 2,3,4,5,7,8,9");
}

inline void validate_field_spec(const FiniteFieldSpec& f) {
    if (!gf::is_prime(f.p)) throw error("field spec: p is not prime");
    if (f.k < 1) throw error("field spec: exponent must be >= 1");
    int q = f.q();
    if (q != 2 && q != 3 && q != 4 && q != 5 && q != 7 && q != 8 && q != 9)
        throw error("field spec: q = " + std::to_string(q) + " is not supported");
    if (!gf::irreducible_ok(f))
        throw error("field spec: polynomial is not monic irreducible of degree k");
}

/// Smallest polynomial code that generates the whole unit group.
inline int smallest_primitive_code(const FiniteFieldSpec& f) {
    if (f.q() == 2) return 1;  // trivial unit group
    for (int c = 2; c < f.q(); ++c)
        if (gf::element_order(f, c) == f.q() - 1) return c;
    throw error("field spec: no primitive element found");
}

}  // namespace hyperfield
