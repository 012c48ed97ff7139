#include "ecq/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ecq/error.hpp"
#include "ecq/rng.hpp"

namespace ecq {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        std::map<int, std::string> labels) {
    if (n < 1) throw std::invalid_argument("graph needs at least one node");
    Graph g;
    g.n_ = n;
    std::set<std::pair<int, int>> uniq;
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self-loop at node " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range: {" + std::to_string(u) +
                                        "," + std::to_string(v) + "}");
        uniq.emplace(std::min(u, v), std::max(u, v));
    }
    g.edges_.assign(uniq.begin(), uniq.end());
    g.adj_.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : g.edges_) {
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    for (const auto& [id, name] : labels)
        if (id < 0 || id >= n) throw std::invalid_argument("label for unknown node " + std::to_string(id));
    g.labels_ = std::move(labels);
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj_[static_cast<std::size_t>(u)]) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == n_;
}

std::string Graph::node_name(int v) const {
    auto it = labels_.find(v);
    return it != labels_.end() ? it->second : std::to_string(v);
}

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    long explicit_n = -1;
    int max_id = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto pos = line.find('#'); pos != std::string::npos) line = line.substr(0, pos);
        line = strip(line);
        if (line.empty()) continue;
        if (line.rfind("n=", 0) == 0) {
            try {
                explicit_n = std::stol(line.substr(2));
            } catch (const std::exception&) {
                throw ParseError(line_no, "invalid node count header '" + line + "'");
            }
            if (explicit_n < 1) throw ParseError(line_no, "node count must be >= 1");
            continue;
        }
        std::istringstream ls(line);
        long u, v;
        if (!(ls >> u >> v)) throw ParseError(line_no, "expected 'u v', got '" + line + "'");
        std::string rest;
        if (ls >> rest) throw ParseError(line_no, "trailing content '" + rest + "'");
        if (u < 0 || v < 0) throw ParseError(line_no, "negative node id");
        if (u == v) throw ParseError(line_no, "self-loop at node " + std::to_string(u));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_id = std::max({max_id, static_cast<int>(u), static_cast<int>(v)});
    }
    long n = max_id + 1;
    if (explicit_n >= 0) {
        if (explicit_n < n)
            throw std::invalid_argument("declared n=" + std::to_string(explicit_n) +
                                        " smaller than max node id " + std::to_string(max_id));
        n = explicit_n;
    }
    if (n < 1) throw std::invalid_argument("empty edge list and no n= header");
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "# format-version 1\n";
    out << "n=" << g.node_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

Graph make(int n, EdgeList edges, std::map<int, std::string> labels = {}) {
    return Graph::from_edges(n, edges, std::move(labels));
}

Graph complete_graph(long k) {
    if (k < 1) throw std::invalid_argument("complete(k): k >= 1 required");
    EdgeList e;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) e.emplace_back(u, v);
    return make(static_cast<int>(k), e);
}

Graph complete_bipartite(long m, long k) {
    if (m < 1 || k < 1) throw std::invalid_argument("complete_bipartite(m,k): m,k >= 1 required");
    EdgeList e;
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < k; ++v) e.emplace_back(u, static_cast<int>(m) + v);
    return make(static_cast<int>(m + k), e);
}

Graph path_graph(long k) {
    if (k < 1) throw std::invalid_argument("path(k): k >= 1 required");
    EdgeList e;
    for (int u = 0; u + 1 < k; ++u) e.emplace_back(u, u + 1);
    return make(static_cast<int>(k), e);
}

Graph star_graph(long k) {
    if (k < 1) throw std::invalid_argument("star(k): k >= 1 required");
    EdgeList e;
    for (int v = 1; v <= k; ++v) e.emplace_back(0, v);
    return make(static_cast<int>(k + 1), e);
}

// Complete K_m on 0..m-1 plus a k-node path hanging off node m-1.
Graph lollipop_graph(long m, long k) {
    if (m < 3) throw std::invalid_argument("lollipop(m,k): m >= 3 required");
    if (k < 0) throw std::invalid_argument("lollipop(m,k): k >= 0 required");
    EdgeList e;
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) e.emplace_back(u, v);
    for (int t = 0; t < k; ++t) e.emplace_back(static_cast<int>(m) - 1 + t, static_cast<int>(m) + t);
    return make(static_cast<int>(m + k), e);
}

// Center 0 joined to hubs 1,2,3; each hub carries four leaves.
Graph g8_spider() {
    EdgeList e{{0, 1}, {0, 2}, {0, 3}};
    for (int l = 4; l < 8; ++l) e.emplace_back(1, l);
    for (int l = 8; l < 12; ++l) e.emplace_back(2, l);
    for (int l = 12; l < 16; ++l) e.emplace_back(3, l);
    return make(16, e);
}

Graph sedgewick_maze() {
    return make(8, {{0, 2}, {0, 5}, {0, 7}, {1, 7}, {2, 6}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {4, 7}});
}

Graph bull_graph() { return make(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}}); }

Graph florentine_families() {
    EdgeList e{{0, 1}, {1, 5}, {1, 6}, {1, 7}, {1, 8}, {1, 9}, {2, 3}, {2, 4}, {2, 5}, {3, 4},
               {3, 11}, {4, 6}, {4, 11}, {6, 7}, {7, 12}, {8, 12}, {8, 13}, {9, 10}, {11, 12}, {12, 14}};
    std::map<int, std::string> labels{
        {0, "Acciaiuoli"}, {1, "Medici"},   {2, "Castellani"},    {3, "Peruzzi"},
        {4, "Strozzi"},    {5, "Barbadori"}, {6, "Ridolfi"},       {7, "Tornabuoni"},
        {8, "Albizzi"},    {9, "Salviati"},  {10, "Pazzi"},        {11, "Bischeri"},
        {12, "Guadagni"},  {13, "Ginori"},   {14, "Lamberteschi"}};
    return make(15, e, std::move(labels));
}

Graph karate_club() {
    EdgeList e{{0, 1},   {0, 2},   {0, 3},   {0, 4},   {0, 5},   {0, 6},   {0, 7},   {0, 8},
               {0, 10},  {0, 11},  {0, 12},  {0, 13},  {0, 17},  {0, 19},  {0, 21},  {0, 31},
               {1, 2},   {1, 3},   {1, 7},   {1, 13},  {1, 17},  {1, 19},  {1, 21},  {1, 30},
               {2, 3},   {2, 7},   {2, 8},   {2, 9},   {2, 13},  {2, 27},  {2, 28},  {2, 32},
               {3, 7},   {3, 12},  {3, 13},  {4, 6},   {4, 10},  {5, 6},   {5, 10},  {5, 16},
               {6, 16},  {8, 30},  {8, 32},  {8, 33},  {9, 33},  {13, 33}, {14, 32}, {14, 33},
               {15, 32}, {15, 33}, {18, 32}, {18, 33}, {19, 33}, {20, 32}, {20, 33}, {22, 32},
               {22, 33}, {23, 25}, {23, 27}, {23, 29}, {23, 32}, {23, 33}, {24, 25}, {24, 27},
               {24, 31}, {25, 31}, {26, 29}, {26, 33}, {27, 33}, {28, 31}, {28, 33}, {29, 32},
               {29, 33}, {30, 32}, {30, 33}, {31, 32}, {31, 33}, {32, 33}};
    return make(34, e);
}

Graph tutte_graph() {
    EdgeList e{{0, 1},   {0, 2},   {0, 3},   {1, 4},   {1, 26},  {2, 10},  {2, 11},  {3, 18},
               {3, 19},  {4, 5},   {4, 33},  {5, 6},   {5, 29},  {6, 7},   {6, 27},  {7, 8},
               {7, 14},  {8, 9},   {8, 38},  {9, 10},  {9, 37},  {10, 39}, {11, 12}, {11, 39},
               {12, 13}, {12, 35}, {13, 14}, {13, 15}, {14, 34}, {15, 16}, {15, 22}, {16, 17},
               {16, 44}, {17, 18}, {17, 43}, {18, 45}, {19, 20}, {19, 45}, {20, 21}, {20, 41},
               {21, 22}, {21, 23}, {22, 40}, {23, 24}, {23, 27}, {24, 25}, {24, 32}, {25, 26},
               {25, 31}, {26, 33}, {27, 28}, {28, 29}, {28, 32}, {29, 30}, {30, 31}, {30, 33},
               {31, 32}, {34, 35}, {34, 38}, {35, 36}, {36, 37}, {36, 39}, {37, 38}, {40, 41},
               {40, 44}, {41, 42}, {42, 43}, {42, 45}, {43, 44}};
    return make(46, e);
}

// Preferential attachment by a repeated-nodes urn, growing from a complete
// seed on m nodes. Every endpoint of every edge enters the urn, so a node's
// draw probability tracks its degree. Deterministic for a fixed seed.
Graph barabasi_albert(long n, long m, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("barabasi_albert(n,m): m >= 1 required");
    if (n < m + 1) throw std::invalid_argument("barabasi_albert(n,m): n > m required");
    Rng rng(seed);
    EdgeList edges;
    std::vector<int> urn;
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) {
            edges.emplace_back(u, v);
            urn.push_back(u);
            urn.push_back(v);
        }
    std::set<int> targets;
    for (int v = static_cast<int>(m); v < n; ++v) {
        targets.clear();
        while (static_cast<long>(targets.size()) < m) {
            int t = urn.empty() ? static_cast<int>(rng.below(static_cast<std::uint64_t>(v)))
                                : urn[rng.below(urn.size())];
            targets.insert(t);
        }
        for (int t : targets) {
            edges.emplace_back(t, v);
            urn.push_back(v);
            urn.push_back(t);
        }
    }
    return make(static_cast<int>(n), edges);
}

}  // namespace

Graph builtin(const std::string& name, const std::vector<long>& params, std::uint64_t seed) {
    auto want = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("builtin '" + name + "' expects " + std::to_string(k) +
                                        " parameter(s)");
    };
    if (name == "bull") { want(0); return bull_graph(); }
    if (name == "sedgewick_maze") { want(0); return sedgewick_maze(); }
    if (name == "florentine_families") { want(0); return florentine_families(); }
    if (name == "karate_club") { want(0); return karate_club(); }
    if (name == "tutte") { want(0); return tutte_graph(); }
    if (name == "g8_spider") { want(0); return g8_spider(); }
    if (name == "complete") { want(1); return complete_graph(params[0]); }
    if (name == "path") { want(1); return path_graph(params[0]); }
    if (name == "star") { want(1); return star_graph(params[0]); }
    if (name == "complete_bipartite") { want(2); return complete_bipartite(params[0], params[1]); }
    if (name == "lollipop") { want(2); return lollipop_graph(params[0], params[1]); }
    if (name == "barabasi_albert") {
        if (params.size() == 3)
            return barabasi_albert(params[0], params[1], static_cast<std::uint64_t>(params[2]));
        want(2);
        return barabasi_albert(params[0], params[1], seed);
    }
    throw std::invalid_argument("unknown builtin graph '" + name + "'");
}

Graph load_graph(const std::string& source) {
    // Anything that looks like a path is read as an edge-list file.
    bool is_path = source.find('/') != std::string::npos || source.find('.') != std::string::npos;
    if (is_path) {
        std::ifstream in(source);
        if (!in) throw std::invalid_argument("cannot open graph file '" + source + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_edge_list(buf.str());
    }
    std::string name = source;
    std::vector<long> params;
    if (auto pos = source.find(':'); pos != std::string::npos) {
        name = source.substr(0, pos);
        std::string rest = source.substr(pos + 1);
        std::istringstream ps(rest);
        std::string tok;
        while (std::getline(ps, tok, ',')) {
            try {
                params.push_back(std::stol(strip(tok)));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad graph parameter '" + tok + "' in '" + source + "'");
            }
        }
        if (params.empty())
            throw std::invalid_argument("empty parameter list in '" + source + "'");
    }
    return builtin(name, params);
}

Matrix adjacency(const Graph& g) {
    Matrix a(g.node_count(), g.node_count());
    for (auto [u, v] : g.edges()) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    return a;
}

DegreeVector degrees(const Graph& g) {
    DegreeVector dv;
    dv.d.resize(static_cast<std::size_t>(g.node_count()));
    for (int v = 0; v < g.node_count(); ++v) dv.d[static_cast<std::size_t>(v)] = g.degree(v);
    if (g.edge_count() == 0)
        throw std::domain_error("degree normalization undefined: graph has no edges");
    double norm = 0.0;
    for (int d : dv.d) norm += static_cast<double>(d) * static_cast<double>(d);
    norm = std::sqrt(norm);
    dv.dhat.resize(dv.d.size());
    for (std::size_t i = 0; i < dv.d.size(); ++i) dv.dhat[i] = static_cast<double>(dv.d[i]) / norm;
    return dv;
}

double density(const Graph& g) {
    const int n = g.node_count();
    if (n < 2) throw std::invalid_argument("density undefined for n < 2");
    return 2.0 * static_cast<double>(g.edge_count()) / (static_cast<double>(n) * (n - 1));
}

}  // namespace ecq
