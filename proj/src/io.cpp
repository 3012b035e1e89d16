#include "interact/io.hpp"

#include "interact/error.hpp"
#include "interact/relations.hpp"
#include "interact/zoo.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace interact::io {

json to_json(const Interaction& inter) {
    json edges = json::array();
    for (const auto& e : inter.edges()) {
        if (e.from != e.to) {
            edges.push_back({{e.from.first, e.from.second}, {e.to.first, e.to.second}});
        }
    }
    return {{"states", inter.states().labels()}, {"edges", std::move(edges)}};
}

Interaction interaction_from_json(const json& doc) {
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    try {
        labels = doc.at("states").get<std::vector<std::string>>();
        for (const auto& e : doc.at("edges")) {
            if (e.size() != 2 || e[0].size() != 2 || e[1].size() != 2) {
                throw Error(ErrorKind::io, "edge " + e.dump() + " is not [[a,b],[c,d]]");
            }
            edges.push_back({{e[0][0].get<std::size_t>(), e[0][1].get<std::size_t>()},
                             {e[1][0].get<std::size_t>(), e[1][1].get<std::size_t>()}});
        }
    } catch (const json::exception& ex) {
        throw Error(ErrorKind::io, std::string("malformed interaction: ") + ex.what());
    }
    return make_interaction(StateSet(std::move(labels)), edges);
}

std::size_t edge_count(const Interaction& inter) {
    std::size_t count = 0;
    for (const auto& e : inter.edges()) {
        count += e.from != e.to ? 1 : 0;
    }
    return count;
}

namespace {

Interaction from_zoo(std::string_view spec) {
    const auto colon = spec.find(':');
    const auto name = spec.substr(0, colon);
    std::vector<int> params;
    if (colon != std::string_view::npos) {
        auto rest = spec.substr(colon + 1);
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const auto item = rest.substr(0, comma);
            int value = 0;
            const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
            if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
                throw Error(ErrorKind::domain, "bad zoo parameter '" + std::string(item) + "'");
            }
            params.push_back(value);
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
    }
    return zoo::build(name, params);
}

} // namespace

Interaction load_interaction(std::string_view path) {
    if (path.starts_with("zoo:")) {
        return from_zoo(path.substr(4));
    }
    std::ifstream in{std::string(path)};
    if (!in) {
        throw Error(ErrorKind::io, "cannot open '" + std::string(path) + "'");
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& ex) {
        throw Error(ErrorKind::io, "'" + std::string(path) + "' is not valid JSON: " + ex.what());
    }
    return interaction_from_json(doc);
}

void save_interaction(const Interaction& inter, const std::string& path) {
    write_output(path, to_json(inter).dump(2) + "\n");
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out || !(out << text) || !out.flush()) {
        throw Error(ErrorKind::io, "cannot write '" + path + "'");
    }
}

namespace {

json rational_rows(const RationalMatrix& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& x : row) {
            r.push_back(to_string(x));
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

RationalVector parse_row(const json& row) {
    RationalVector out;
    for (const auto& x : row) {
        out.push_back(parse_rational(x.get<std::string>()));
    }
    return out;
}

std::string join(const RationalVector& row, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < row.size(); ++i) {
        s += (i ? sep : "") + to_string(row[i]);
    }
    return s;
}

std::string vertex_label(const Interaction& inter, Vertex v) {
    return "(" + inter.states().label(v.first) + "," + inter.states().label(v.second) + ")";
}

} // namespace

AnalysisReport analyze(const Interaction& inter) {
    const auto basis = compute_consv(inter);
    AnalysisReport r;
    r.states = inter.states().labels();
    r.edge_count = edge_count(inter);
    r.dim = basis.dim();
    r.basis = basis.vectors;
    r.separable = is_separable(basis);
    r.exchangeable = is_exchangeable(inter);
    const auto parts = components(inter);
    for (const auto& cell : parts.cells()) {
        r.cells.push_back({cell, conserved_values(basis, cell.front())});
    }
    const int kappa = static_cast<int>(inter.size()) - 1;
    if (kappa >= 1 && kappa <= kMaxClassifyKappa) {
        if (const auto rec = identify(inter); rec && rec->name) {
            r.class_name = rec->name;
        }
    }
    return r;
}

json to_json(const AnalysisReport& r) {
    json cells = json::array();
    for (const auto& c : r.cells) {
        json vs = json::array();
        for (const auto& v : c.vertices) {
            vs.push_back({v.first, v.second});
        }
        cells.push_back({{"vertices", std::move(vs)}, {"values", rational_rows({c.values})[0]}});
    }
    return {
        {"states", r.states},
        {"state_count", r.states.size()},
        {"edge_count", r.edge_count},
        {"dim", r.dim},
        {"basis", rational_rows(r.basis)},
        {"separable", r.separable},
        {"exchangeable", r.exchangeable},
        {"cells", std::move(cells)},
        {"class", r.class_name ? json(*r.class_name) : json(nullptr)},
    };
}

AnalysisReport analysis_from_json(const json& doc) {
    try {
        AnalysisReport r;
        r.states = doc.at("states").get<std::vector<std::string>>();
        r.edge_count = doc.at("edge_count").get<std::size_t>();
        r.dim = doc.at("dim").get<std::size_t>();
        for (const auto& row : doc.at("basis")) {
            r.basis.push_back(parse_row(row));
        }
        r.separable = doc.at("separable").get<bool>();
        r.exchangeable = doc.at("exchangeable").get<bool>();
        for (const auto& c : doc.at("cells")) {
            CellReport cell;
            for (const auto& v : c.at("vertices")) {
                cell.vertices.push_back({v.at(0).get<std::size_t>(), v.at(1).get<std::size_t>()});
            }
            cell.values = parse_row(c.at("values"));
            r.cells.push_back(std::move(cell));
        }
        if (!doc.at("class").is_null()) {
            r.class_name = doc.at("class").get<std::string>();
        }
        return r;
    } catch (const json::exception& ex) {
        throw Error(ErrorKind::io, std::string("malformed analysis report: ") + ex.what());
    }
}

std::string to_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "states: " << r.states.size() << " (";
    for (std::size_t i = 0; i < r.states.size(); ++i) {
        os << (i ? " " : "") << r.states[i];
    }
    os << ")\n";
    os << "edges: " << r.edge_count << "\n";
    os << "dim: " << r.dim << "\n";
    os << "basis:\n";
    for (const auto& row : r.basis) {
        os << "  " << join(row, " ") << "\n";
    }
    os << "separable: " << (r.separable ? "true" : "false") << "\n";
    os << "exchangeable: " << (r.exchangeable ? "true" : "false") << "\n";
    os << "class: " << r.class_name.value_or("-") << "\n";
    os << "components: " << r.cells.size() << "\n";
    for (const auto& c : r.cells) {
        os << "  [" << join(c.values, ",") << "]";
        for (const auto& v : c.vertices) {
            os << " " << to_string(v);
        }
        os << "\n";
    }
    return os.str();
}

json to_json(const ClassCatalog& catalog, bool separable_only) {
    json classes = json::array();
    for (const auto& rec : catalog.classes) {
        classes.push_back({
            {"dim", rec.dim},
            {"separable", rec.separable},
            {"name", rec.name ? json(*rec.name) : json(nullptr)},
            {"basis", rational_rows(rec.canonical.matrix)},
            {"representative_edges", edge_count(rec.representative)},
        });
    }
    return {{"kappa", catalog.kappa}, {"separable_only", separable_only}, {"classes", std::move(classes)}};
}

std::string to_text(const ClassCatalog& catalog) {
    std::ostringstream os;
    os << "kappa " << catalog.kappa << ": " << catalog.classes.size() << " classes\n";
    os << "dim  separable  name                    edges  basis\n";
    for (const auto& rec : catalog.classes) {
        std::string basis;
        for (const auto& row : rec.canonical.matrix) {
            basis += (basis.empty() ? "" : " | ") + join(row, " ");
        }
        std::string name = rec.name.value_or("-");
        name.resize(std::max<std::size_t>(name.size(), 22), ' ');
        std::string sep = rec.separable ? "yes" : "no";
        sep.resize(9, ' ');
        std::string edges = std::to_string(edge_count(rec.representative));
        edges.resize(std::max<std::size_t>(edges.size(), 5), ' ');
        std::string dim = std::to_string(rec.dim);
        dim.resize(3, ' ');
        os << dim << "  " << sep << "  " << name << "  " << edges << "  " << (basis.empty() ? "-" : basis) << "\n";
    }
    return os.str();
}

json to_json(const IqReport& report, const DerivedChecks& checks) {
    json graphs = json::array();
    for (const auto& g : report.graphs) {
        graphs.push_back({{"graph", g.graph},
                          {"configurations", g.config_count},
                          {"components", g.component_count},
                          {"fibers", g.fiber_count},
                          {"match", g.match}});
    }
    json witness = nullptr;
    if (report.witness) {
        witness = {{"graph", *report.witness_graph},
                   {"eta", report.witness->first.values},
                   {"eta_prime", report.witness->second.values}};
    }
    return {{"verdict", report.pass ? "PASS" : "FAIL"},
            {"separable", checks.separable},
            {"exchangeable", checks.exchangeable},
            {"graphs", std::move(graphs)},
            {"witness", std::move(witness)},
            {"note", report.pass ? "PASS certifies only the listed graphs" : "FAIL is a counterexample"}};
}

std::string to_text(const IqReport& report, const DerivedChecks& checks) {
    std::ostringstream os;
    os << "separable: " << (checks.separable ? "yes" : "no") << "\n";
    os << "exchangeable: " << (checks.exchangeable ? "yes" : "no") << "\n";
    for (const auto& g : report.graphs) {
        os << g.graph << ": " << g.config_count << " configurations, " << g.component_count << " components, "
           << g.fiber_count << " fibers, " << (g.match ? "MATCH" : "MISMATCH") << "\n";
    }
    if (report.pass) {
        os << "verdict: PASS (bounded: only the listed graphs were checked)\n";
    } else {
        os << "verdict: FAIL on " << *report.witness_graph << "\n";
        os << "witness: " << to_string(report.witness->first) << " and " << to_string(report.witness->second)
           << " have equal conserved sums but are not connected\n";
    }
    return os.str();
}

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out + "\"";
}

std::string node_id(Vertex v) {
    return "v" + std::to_string(v.first) + "_" + std::to_string(v.second);
}

} // namespace

std::string to_dot(const Interaction& inter) {
    const auto basis = compute_consv(inter);
    const auto parts = components(inter);
    std::ostringstream os;
    os << "graph interaction {\n";
    os << "  node [shape=plaintext];\n";
    for (std::size_t i = 0; i < parts.cell_count(); ++i) {
        const auto& cell = parts.cell(i);
        os << "  subgraph cluster_" << i << " {\n";
        os << "    label=" << quoted("(" + join(conserved_values(basis, cell.front()), ",") + ")") << ";\n";
        for (const auto& v : cell) {
            os << "    " << node_id(v) << " [label=" << quoted(vertex_label(inter, v)) << "];\n";
        }
        os << "  }\n";
    }
    for (const auto& e : inter.edges()) {
        if (e.from < e.to) {
            os << "  " << node_id(e.from) << " -- " << node_id(e.to) << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

} // namespace interact::io
