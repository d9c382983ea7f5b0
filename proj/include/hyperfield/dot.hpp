#pragma once

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "hyperfield/morphisms.hpp"

namespace hyperfield {

namespace detail {

// stable 64-bit FNV-1a, used to shorten canonical forms into node ids
inline std::string short_hash(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%08llx", (unsigned long long)(h & 0xffffffffull));
    return buf;
}

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace detail

/**
 * DOT rendering of an extension digraph. Nodes carry the catalog label
 * when one was supplied, otherwise a hash of the canonical form. Weak
 * extensions are plain arrows; edges that are also strong extensions are
 * drawn bold with a "strong" label. Nodes of equal order share a rank.
 * Output is deterministic: nodes and edges are emitted sorted.
 */
inline std::string to_dot(const ExtensionDigraph& d,
                          const std::string& graph_name = "hyperfield_extensions") {
    std::vector<std::string> label(d.nodes.size());
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        const auto& nd = d.nodes[i];
        label[i] = nd.label == nd.canonical
                       ? "o" + std::to_string(nd.order) + "_" + detail::short_hash(nd.canonical)
                       : nd.label;
    }

    std::ostringstream out;
    out << "digraph " << detail::dot_quote(graph_name) << " {\n";
    out << "  rankdir=LR;\n  node [shape=box];\n";

    std::vector<int> order(d.nodes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (d.nodes[a].order != d.nodes[b].order) return d.nodes[a].order < d.nodes[b].order;
        return label[a] < label[b];
    });

    int prev_order = -1;
    bool open = false;
    for (int i : order) {
        if (d.nodes[i].order != prev_order) {
            if (open) out << "  }\n";
            out << "  { rank=same;\n";
            open = true;
            prev_order = d.nodes[i].order;
        }
        out << "    " << detail::dot_quote(label[i]) << ";\n";
    }
    if (open) out << "  }\n";

    std::vector<std::string> lines;
    for (const auto& e : d.edges) {
        std::string line = "  " + detail::dot_quote(label[e.from]) + " -> " +
                           detail::dot_quote(label[e.to]);
        if (e.strong) line += " [style=bold, label=\"strong\"]";
        line += ";\n";
        lines.push_back(std::move(line));
    }
    std::sort(lines.begin(), lines.end());
    for (const std::string& l : lines) out << l;
    out << "}\n";
    return out.str();
}

}  // namespace hyperfield
