#pragma once

#include "interact/classify.hpp"
#include "interact/configspace.hpp"
#include "interact/consv.hpp"
#include "interact/core.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace interact::io {

using nlohmann::json;

/// {"states": [...], "edges": [[[a,b],[c,d]], ...]}: symmetric closure, sorted, no self-loops.
[[nodiscard]] json to_json(const Interaction& inter);
/// Symmetrizes. Throws Error(io) on a malformed document, Error(domain) on bad indices.
[[nodiscard]] Interaction interaction_from_json(const json& doc);

/// Number of directed edges that are not self-loops.
[[nodiscard]] std::size_t edge_count(const Interaction& inter);

/// Reads a JSON file, or builds "zoo:<name>[:p1,p2,...]" directly.
[[nodiscard]] Interaction load_interaction(std::string_view path);
void save_interaction(const Interaction& inter, const std::string& path);

/// Writes text to a file, or to stdout when path is empty or "-".
void write_output(const std::string& path, const std::string& text);

struct CellReport {
    std::vector<Vertex> vertices;
    RationalVector values;

    bool operator==(const CellReport&) const = default;
};

struct AnalysisReport {
    std::vector<std::string> states;
    std::size_t edge_count = 0;
    std::size_t dim = 0;
    RationalMatrix basis;
    bool separable = false;
    bool exchangeable = false;
    std::vector<CellReport> cells;
    std::optional<std::string> class_name;

    bool operator==(const AnalysisReport&) const = default;
};

/// Conserved basis, separability, exchangeability, and component cells labelled by
/// their conserved values. The class name is looked up when 2 <= |S| <= 5.
[[nodiscard]] AnalysisReport analyze(const Interaction& inter);
[[nodiscard]] json to_json(const AnalysisReport& report);
[[nodiscard]] AnalysisReport analysis_from_json(const json& doc);
[[nodiscard]] std::string to_text(const AnalysisReport& report);

[[nodiscard]] json to_json(const ClassCatalog& catalog, bool separable_only);
[[nodiscard]] std::string to_text(const ClassCatalog& catalog);

[[nodiscard]] json to_json(const IqReport& report, const DerivedChecks& checks);
[[nodiscard]] std::string to_text(const IqReport& report, const DerivedChecks& checks);

/// Graphviz source of (S x S, phi): one node per vertex labelled "(s1,s2)", one
/// cluster per component labelled with its conserved values, undirected edges.
[[nodiscard]] std::string to_dot(const Interaction& inter);

} // namespace interact::io
