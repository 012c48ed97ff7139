#include "ecq/graph_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ecq {

std::string graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["format_version"] = 1;
    j["n"] = g.node_count();
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    auto labels = nlohmann::json::object();
    for (const auto& [id, name] : g.labels()) labels[std::to_string(id)] = name;
    j["labels"] = std::move(labels);
    return j.dump(2) + "\n";
}

std::string graph_to_dot(const Graph& g, const std::vector<int>& category,
                         const std::vector<std::string>& palette) {
    if (static_cast<int>(category.size()) != g.node_count())
        throw std::invalid_argument("category size must equal the node count");
    std::ostringstream out;
    out << "// format-version 1\n";
    out << "graph G {\n";
    out << "  node [style=filled];\n";
    for (int v = 0; v < g.node_count(); ++v) {
        const int c = category[static_cast<std::size_t>(v)];
        if (c < 0 || c >= static_cast<int>(palette.size()))
            throw std::invalid_argument("category out of palette range");
        out << "  " << v << " [label=\"" << g.node_name(v) << "\", fillcolor=\""
            << palette[static_cast<std::size_t>(c)] << "\"];\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::vector<int> categories_from_highlight(int n, const std::vector<int>& highlight) {
    std::vector<int> cat(static_cast<std::size_t>(n), 0);
    for (int v : highlight) {
        if (v < 0 || v >= n) throw std::invalid_argument("highlight node out of range");
        cat[static_cast<std::size_t>(v)] = 1;
    }
    return cat;
}

std::vector<int> categories_from_scores(const std::vector<double>& scores, int buckets) {
    if (buckets < 1) throw std::invalid_argument("at least one bucket required");
    const auto [lo_it, hi_it] = std::minmax_element(scores.begin(), scores.end());
    const double lo = *lo_it, hi = *hi_it;
    std::vector<int> cat(scores.size(), 0);
    if (hi <= lo) return cat;  // all equal
    for (std::size_t i = 0; i < scores.size(); ++i) {
        int b = static_cast<int>(static_cast<double>(buckets) * (scores[i] - lo) / (hi - lo));
        cat[i] = std::min(b, buckets - 1);
    }
    return cat;
}

const std::vector<std::string>& default_palette() {
    // least central -> most central
    static const std::vector<std::string> p{"#440154", "#35b779", "#fde725"};
    return p;
}

}  // namespace ecq
