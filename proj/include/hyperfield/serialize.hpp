#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hyperfield/core.hpp"

namespace hyperfield {

struct ParseError : error {
    int line = 0;
    ParseError(int line_, const std::string& msg)
        : error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

/**
 * Line-oriented text format, version 1. Human-diffable and bit-exact under
 * round-trip:
 *
 *   hyperfield v1
 *   order 3
 *   elements 0 1 -1
 *   mul
 *   0 0 0
 *   0 1 2
 *   0 2 1
 *   add
 *   0 | 1 | 2
 *   1 | 1 | 0,1,2
 *   2 | 0,1,2 | 2
 *
 * Multiplication entries and cell members are element indices; cell members
 * are sorted ascending. Lines starting with '#' are comments.
 */
inline std::string serialize(const HyperStructure& h) {
    int n = h.order();
    std::ostringstream out;
    out << "hyperfield v1\n";
    out << "order " << n << "\n";
    out << "elements";
    for (int i = 0; i < n; ++i) {
        std::string name = i < (int)h.monoid.names.size() && !h.monoid.names[i].empty()
                               ? h.monoid.names[i]
                               : "e" + std::to_string(i);
        out << ' ' << name;
    }
    out << "\nmul\n";
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) out << (y ? " " : "") << h.monoid.mul(x, y);
        out << "\n";
    }
    out << "add\n";
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            if (y) out << " | ";
            bool sep = false;
            for (Element m : h.cell(x, y).members()) {
                if (sep) out << ',';
                out << m;
                sep = true;
            }
        }
        out << "\n";
    }
    return out.str();
}

namespace detail {

inline std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

inline int parse_index(const std::string& tok, int n, int line) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &pos);
    } catch (...) {
        throw ParseError(line, "expected an element index, got '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError(line, "trailing characters in '" + tok + "'");
    if (v < 0 || v >= n)
        throw ParseError(line, "element index " + std::to_string(v) + " out of range");
    return v;
}

}  // namespace detail

/// Parses the text format. Shape is validated (dimensions, index ranges,
/// non-empty cells, the fixed names of 0 and 1); the axioms are not checked
/// here, verification stays an explicit, separate step.
inline HyperStructure parse(std::string_view text) {
    std::vector<std::pair<int, std::string>> lines;  // (line number, content)
    {
        std::istringstream in{std::string(text)};
        std::string line;
        int no = 0;
        while (std::getline(in, line)) {
            ++no;
            std::size_t start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos || line[start] == '#') continue;
            lines.push_back({no, line});
        }
    }
    std::size_t at = 0;
    auto next_line = [&]() -> std::pair<int, std::string> {
        if (at >= lines.size())
            throw ParseError(lines.empty() ? 1 : lines.back().first, "unexpected end of input");
        return lines[at++];
    };

    auto [l0, header] = next_line();
    if (detail::tokens_of(header) != std::vector<std::string>{"hyperfield", "v1"})
        throw ParseError(l0, "expected header 'hyperfield v1'");

    auto [l1, order_line] = next_line();
    auto order_toks = detail::tokens_of(order_line);
    if (order_toks.size() != 2 || order_toks[0] != "order")
        throw ParseError(l1, "expected 'order N'");
    int n = 0;
    try {
        n = std::stoi(order_toks[1]);
    } catch (...) {
        throw ParseError(l1, "order is not a number");
    }
    if (n < 1 || n > kMaxOrder)
        throw ParseError(l1, "order must be between 1 and " + std::to_string(kMaxOrder));

    auto [l2, elems_line] = next_line();
    auto elems = detail::tokens_of(elems_line);
    if (elems.empty() || elems[0] != "elements")
        throw ParseError(l2, "expected 'elements <name>...'");
    elems.erase(elems.begin());
    if ((int)elems.size() != n)
        throw ParseError(l2, "expected " + std::to_string(n) + " element names, got " +
                                 std::to_string(elems.size()));
    if (elems[0] != "0") throw ParseError(l2, "element 0 must be named '0'");
    if (n > 1 && elems[1] != "1") throw ParseError(l2, "element 1 must be named '1'");
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            if (elems[i] == elems[j])
                throw ParseError(l2, "duplicate element name '" + elems[i] + "'");

    HyperStructure h;
    h.monoid.order = n;
    h.monoid.names = elems;
    h.monoid.mul_table.assign(n * n, 0);
    h.add_table.assign(n * n, {});

    auto [l3, mul_kw] = next_line();
    if (detail::tokens_of(mul_kw) != std::vector<std::string>{"mul"})
        throw ParseError(l3, "expected 'mul'");
    for (Element x = 0; x < n; ++x) {
        auto [ln, row] = next_line();
        auto toks = detail::tokens_of(row);
        if ((int)toks.size() != n)
            throw ParseError(ln, "multiplication row has " + std::to_string(toks.size()) +
                                     " entries, expected " + std::to_string(n));
        for (Element y = 0; y < n; ++y)
            h.monoid.mul_table[x * n + y] = detail::parse_index(toks[y], n, ln);
    }

    auto [l4, add_kw] = next_line();
    if (detail::tokens_of(add_kw) != std::vector<std::string>{"add"})
        throw ParseError(l4, "expected 'add'");
    for (Element x = 0; x < n; ++x) {
        auto [ln, row] = next_line();
        // split on '|'
        std::vector<std::string> cells;
        std::string cur;
        for (char c : row) {
            if (c == '|') {
                cells.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        cells.push_back(cur);
        if ((int)cells.size() != n)
            throw ParseError(ln, "hyperaddition row has " + std::to_string(cells.size()) +
                                     " cells, expected " + std::to_string(n));
        for (Element y = 0; y < n; ++y) {
            std::string body = cells[y];
            for (char& c : body)
                if (c == ',') c = ' ';
            ElementSet set;
            for (const std::string& tok : detail::tokens_of(body))
                set.insert(detail::parse_index(tok, n, ln));
            if (set.empty())
                throw ParseError(ln, "empty hyperaddition cell at column " + std::to_string(y));
            h.set_cell(x, y, set);
        }
    }
    if (at != lines.size()) throw ParseError(lines[at].first, "trailing content");

    h.neg_one = detect_neg_one(h);
    return h;
}

/// JSON mirror of the same schema.
inline nlohmann::json to_json(const HyperStructure& h) {
    int n = h.order();
    nlohmann::json j;
    j["format"] = "hyperfield";
    j["version"] = 1;
    j["order"] = n;
    j["elements"] = h.monoid.names;
    auto& mul = j["mul"] = nlohmann::json::array();
    for (Element x = 0; x < n; ++x) {
        nlohmann::json row = nlohmann::json::array();
        for (Element y = 0; y < n; ++y) row.push_back(h.monoid.mul(x, y));
        mul.push_back(row);
    }
    auto& add = j["add"] = nlohmann::json::array();
    for (Element x = 0; x < n; ++x) {
        nlohmann::json row = nlohmann::json::array();
        for (Element y = 0; y < n; ++y) row.push_back(h.cell(x, y).members());
        add.push_back(row);
    }
    return j;
}

inline HyperStructure from_json(const nlohmann::json& j) {
    try {
        if (j.at("format") != "hyperfield" || j.at("version") != 1)
            throw error("json: not a hyperfield v1 document");
        int n = j.at("order");
        if (n < 1 || n > kMaxOrder) throw error("json: order out of range");
        HyperStructure h;
        h.monoid.order = n;
        h.monoid.names = j.at("elements").get<std::vector<std::string>>();
        if ((int)h.monoid.names.size() != n) throw error("json: wrong number of element names");
        if (h.monoid.names[0] != "0" || (n > 1 && h.monoid.names[1] != "1"))
            throw error("json: elements 0 and 1 must be named '0' and '1'");
        h.monoid.mul_table.assign(n * n, 0);
        h.add_table.assign(n * n, {});
        const auto& mul = j.at("mul");
        const auto& add = j.at("add");
        if ((int)mul.size() != n || (int)add.size() != n) throw error("json: table dimensions");
        for (Element x = 0; x < n; ++x) {
            if ((int)mul[x].size() != n || (int)add[x].size() != n)
                throw error("json: table dimensions");
            for (Element y = 0; y < n; ++y) {
                int v = mul[x][y];
                if (v < 0 || v >= n) throw error("json: multiplication index out of range");
                h.monoid.mul_table[x * n + y] = v;
                ElementSet set;
                for (int m : add[x][y].get<std::vector<int>>()) {
                    if (m < 0 || m >= n) throw error("json: cell member out of range");
                    set.insert(m);
                }
                if (set.empty()) throw error("json: empty hyperaddition cell");
                h.set_cell(x, y, set);
            }
        }
        h.neg_one = detect_neg_one(h);
        return h;
    } catch (const nlohmann::json::exception& e) {
        throw error(std::string("json: ") + e.what());
    }
}

/// Accepts either format; JSON documents start with '{'.
inline HyperStructure parse_any(std::string_view text) {
    std::size_t start = text.find_first_not_of(" \t\r\n");
    if (start != std::string_view::npos && text[start] == '{') {
        nlohmann::json j = nlohmann::json::parse(std::string(text), nullptr, true, true);
        return from_json(j);
    }
    return parse(text);
}

}  // namespace hyperfield
