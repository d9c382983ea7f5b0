// Command-line front end: enumeration, verification, classification,
// homomorphism search, extension lattices, and catalog display.
//
// Exit codes: 0 success / verified, 1 verification failure, 2 usage or
// I/O error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperfield/hyperfield.hpp"

using namespace hyperfield;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct LoadedStructure {
    HyperStructure h;
    std::string display;              // name or path, for messages
    const CatalogEntry* entry = nullptr;  // set when loaded from the catalog
};

// A source is either a catalog name (optionally "fixture:NAME") or a path.
LoadedStructure load_structure(const std::string& source) {
    std::string name = source;
    if (name.rfind("fixture:", 0) == 0) name = name.substr(8);
    if (const CatalogEntry* e = find_entry(name)) return {e->hyperfield, name, e};
    std::ifstream in(source);
    if (!in) throw error("cannot open '" + source + "' (and no catalog entry has that name)");
    std::stringstream buf;
    buf << in.rdbuf();
    return {parse_any(buf.str()), source, nullptr};
}

GroupSpec parse_group_option(const std::string& text) {
    auto fail = [&] {
        throw error("bad --group '" + text + "': expected cyclic:K or product:K1,K2,...");
    };
    std::size_t colon = text.find(':');
    if (colon == std::string::npos) fail();
    std::string kind = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    GroupSpec g;
    std::stringstream in(rest);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            g.factors.push_back(std::stoi(tok));
        } catch (...) {
            fail();
        }
    }
    if (g.factors.empty()) fail();
    if (kind == "cyclic") {
        if (g.factors.size() != 1) fail();
    } else if (kind != "product") {
        fail();
    }
    return g;
}

std::string matched_name(const std::string& canonical) {
    for (const CatalogEntry& e : catalog())
        if (!e.errata && canonical_form(e.hyperfield) == canonical) return e.name;
    return "";
}

nlohmann::json result_to_json(const EnumerationResult& r) {
    nlohmann::json j;
    j["order"] = r.order;
    j["count"] = r.classes.size();
    j["candidates"] = r.candidates;
    j["verified"] = r.verified;
    j["duplicates"] = r.duplicates;
    j["seconds"] = r.seconds;
    j["subtotals"] = nlohmann::json::array();
    for (const Subtotal& s : r.subtotals)
        j["subtotals"].push_back({{"group", s.group.name()},
                                  {"neg_one", s.neg_name},
                                  {"count", s.count}});
    j["classes"] = nlohmann::json::array();
    for (const HyperfieldClass& c : r.classes) {
        std::string name = matched_name(c.canonical);
        j["classes"].push_back({{"name", name},
                                {"group", c.group.name()},
                                {"canonical", c.canonical},
                                {"hyperfield", to_json(c.rep)}});
    }
    return j;
}

std::string result_to_text(const EnumerationResult& r) {
    std::ostringstream out;
    out << "# order " << r.order << ": " << r.classes.size() << " classes\n";
    for (const HyperfieldClass& c : r.classes) {
        std::string name = matched_name(c.canonical);
        out << "\n# class " << (name.empty() ? "(unnamed)" : name) << "\n";
        out << "# canonical " << c.canonical << "\n";
        out << serialize(c.rep);
    }
    return out.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw error("cannot write '" + path + "'");
    out << content;
}

int cmd_enumerate(int order, const std::optional<GroupSpec>& group,
                  std::optional<int> neg, bool naive, const std::string& format,
                  const std::string& out_path) {
    if (naive && (group || neg))
        throw error("--naive does not combine with --group/--neg");
    EnumerationOptions opts;
    opts.group = group;
    if (neg) opts.neg_one = *neg;
    EnumerationResult r = naive ? naive_enumerate(order) : enumerate_hyperfields(order, opts);

    // json without --out goes to stdout, so the summary moves to stderr
    std::ostream& info = (format == "json" && out_path.empty()) ? std::cerr : std::cout;
    info << "order " << order << ": " << r.classes.size() << " classes\n";
    for (const Subtotal& s : r.subtotals)
        info << "  " << s.group.name() << ", -1=" << s.neg_name << ": " << s.count << "\n";
    info << "  candidates=" << r.candidates << " verified=" << r.verified
         << " duplicates=" << r.duplicates << " elapsed=" << r.seconds << "s\n";

    if (format == "json")
        write_output(out_path, result_to_json(r).dump(2) + "\n");
    else if (!out_path.empty())
        write_output(out_path, result_to_text(r));
    return 0;
}

int cmd_verify(const std::string& source) {
    LoadedStructure s = load_structure(source);
    AxiomReport report = verify(s.h);
    std::cout << report.summary();
    bool ok = report.ok();
    if (s.entry) {
        FixtureCheck check = check_fixture(*s.entry);
        if (!check.header_ok || !check.label_ok) {
            std::cout << "fixture consistency: FAIL\n  " << check.detail << "\n";
            ok = false;
        } else if (ok) {
            std::cout << "fixture consistency: pass\n";
        }
        if (s.entry->errata) std::cout << "note: " << s.entry->note << "\n";
    }
    std::cout << (ok ? "verdict: hyperfield\n" : "verdict: NOT a hyperfield\n");
    return ok ? 0 : kExitVerifyFailure;
}

int cmd_classify(const std::vector<std::string>& sources) {
    int rc = 0;
    for (const std::string& source : sources) {
        LoadedStructure s = load_structure(source);
        if (!verify(s.h).ok()) {
            std::cout << s.display << ": not a hyperfield (run verify for the witnesses)\n";
            rc = kExitVerifyFailure;
            continue;
        }
        std::string canon = canonical_form(s.h);
        std::string name = matched_name(canon);
        Standardization std_form = standardize_monoid(s.h.monoid);
        std::cout << s.display << ": order " << s.h.order() << ", group "
                  << std_form.spec.name() << ", class "
                  << (name.empty() ? "(unnamed)" : name) << "\n  canonical " << canon << "\n";
    }
    return rc;
}

int cmd_hom(const std::string& from, const std::string& to, const std::string& kind,
            bool injective) {
    LoadedStructure f = load_structure(from);
    LoadedStructure l = load_structure(to);
    HomKind k = kind == "strong" ? HomKind::Strong : HomKind::Weak;
    auto homs = find_homs(f.h, l.h, k, injective);
    std::cout << homs.size() << (injective ? " injective " : " ") << kind
              << " homomorphism" << (homs.size() == 1 ? "" : "s") << " from " << f.display
              << " to " << l.display << "\n";
    for (const MorphismMap& m : homs) {
        std::cout << " ";
        for (std::size_t x = 0; x < m.map.size(); ++x)
            std::cout << " " << f.h.monoid.names[x] << "->" << l.h.monoid.names[m.map[x]];
        std::cout << (m.strong ? "  [strong" : "  [weak");
        if (m.injective) std::cout << ", injective";
        if (m.iso) std::cout << ", iso";
        std::cout << "]\n";
    }
    return 0;
}

int cmd_lattice(int max_order, const std::string& dot_path) {
    std::vector<HyperStructure> classes;
    std::vector<std::string> labels;
    for (int n = 2; n <= max_order; ++n) {
        EnumerationResult r = enumerate_hyperfields(n);
        for (const HyperfieldClass& c : r.classes) {
            classes.push_back(c.rep);
            labels.push_back(matched_name(c.canonical));
        }
    }
    ExtensionDigraph d = extension_digraph(classes, labels);
    write_output(dot_path, to_dot(d));
    std::cerr << d.nodes.size() << " classes, " << d.edges.size() << " extension edges\n";
    return 0;
}

int cmd_show(const std::string& name) {
    std::cout << serialize(named(name));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite hyperfield toolkit: verification, classification, extensions"};
    app.require_subcommand(1);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "classify all hyperfields of an order");
    int order = 0;
    std::string group_text, format = "text", out_path;
    int neg = -1;
    bool naive = false;
    enumerate->add_option("--order", order, "carrier order (>= 2)")->required();
    enumerate->add_option("--group", group_text,
                          "restrict the unit group: cyclic:K or product:K1,K2,...");
    enumerate->add_option("--neg", neg, "restrict the designated -1 to this element index");
    enumerate->add_flag("--naive", naive, "use the brute-force oracle (order <= 4)");
    enumerate->add_option("--format", format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    enumerate->add_option("--out", out_path, "write the full class list to this path");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check every hyperfield axiom");
    std::string verify_source;
    verify_cmd->add_option("input", verify_source, "path or catalog name")->required();

    // classify
    auto* classify = app.add_subcommand("classify", "match tables to their classes");
    std::vector<std::string> classify_sources;
    classify->add_option("inputs", classify_sources, "paths or catalog names")->required();

    // hom
    auto* hom = app.add_subcommand("hom", "list homomorphisms between two hyperfields");
    std::string hom_from, hom_to, hom_kind = "weak";
    bool hom_injective = false;
    hom->add_option("--from", hom_from, "source (path or catalog name)")->required();
    hom->add_option("--to", hom_to, "target (path or catalog name)")->required();
    hom->add_option("--kind", hom_kind, "weak|strong")
        ->check(CLI::IsMember({"weak", "strong"}));
    hom->add_flag("--injective", hom_injective, "only injective maps");

    // lattice
    auto* lattice = app.add_subcommand("lattice", "extension digraph of all small classes");
    int max_order = 4;
    std::string dot_path;
    lattice->add_option("--max-order", max_order, "largest carrier order to include")
        ->required();
    lattice->add_option("--dot", dot_path, "write DOT output here ('-' for stdout)")
        ->required();

    // show
    auto* show = app.add_subcommand("show", "print a cataloged table");
    std::string show_name;
    show->add_option("name", show_name, "catalog name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;  // normalize usage errors; --help stays 0
    }

    try {
        if (enumerate->parsed()) {
            std::optional<GroupSpec> group;
            if (!group_text.empty()) group = parse_group_option(group_text);
            std::optional<int> neg_opt;
            if (neg >= 0) neg_opt = neg;
            return cmd_enumerate(order, group, neg_opt, naive, format, out_path);
        }
        if (verify_cmd->parsed()) return cmd_verify(verify_source);
        if (classify->parsed()) return cmd_classify(classify_sources);
        if (hom->parsed()) return cmd_hom(hom_from, hom_to, hom_kind, hom_injective);
        if (lattice->parsed()) return cmd_lattice(max_order, dot_path);
        if (show->parsed()) return cmd_show(show_name);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
