#pragma once

#include <catch2/catch_amalgamated.hpp>

#include "hyperfield/hyperfield.hpp"

namespace hftest {

using namespace hyperfield;

inline ElementSet set(std::initializer_list<Element> xs) { return ElementSet::of(xs); }

/// Non-errata catalog entries of one order (all of them for order = 0).
inline std::vector<const CatalogEntry*> clean_entries(int order = 0) {
    std::vector<const CatalogEntry*> out;
    for (const CatalogEntry& e : catalog())
        if (!e.errata && (order == 0 || e.hyperfield.order() == order)) out.push_back(&e);
    return out;
}

}  // namespace hftest
