#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecq/matrix.hpp"

namespace ecq {

/// Undirected simple graph over dense node ids 0..n-1. Immutable after
/// construction; the adjacency lists are built once so downstream matrix
/// caches stay valid.
class Graph {
  public:
    /// Validates: n >= 1, endpoints in range, no self-loops. Duplicate edges
    /// collapse. Labels, when present, attach display names to node ids.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            std::map<int, std::string> labels = {});

    int node_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Sorted unique pairs with u < v.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<std::vector<int>>& neighbors() const { return adj_; }
    const std::map<int, std::string>& labels() const { return labels_; }

    bool has_edge(int u, int v) const;
    bool connected() const;
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    /// Display name: label when present, otherwise the numeric id.
    std::string node_name(int v) const;

  private:
    Graph() = default;
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::map<int, std::string> labels_;
};

/// Degree sequence d plus its unit 2-norm copy dhat.
struct DegreeVector {
    std::vector<int> d;
    std::vector<double> dhat;
};

/// Text format: one "u v" pair per line, '#' starts a comment, an optional
/// "n=<k>" line raises the node count above 1 + max id. Self-loops and
/// malformed lines are rejected with their line number.
Graph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const Graph& g);

/// Canonical graphs used throughout: bull, complete(k),
/// complete_bipartite(m,k), path(k), star(k), lollipop(m,k), sedgewick_maze,
/// florentine_families, karate_club, tutte, g8_spider,
/// barabasi_albert(n,m[,seed]). For barabasi_albert the third parameter
/// overrides `seed`.
Graph builtin(const std::string& name, const std::vector<long>& params = {},
              std::uint64_t seed = 1);

/// "name", "name:p1,p2,...", or a path to an edge-list file.
Graph load_graph(const std::string& source);

/// Dense symmetric 0/1 matrix with zero diagonal.
Matrix adjacency(const Graph& g);

/// Throws if the graph has no edges (dhat would be undefined).
DegreeVector degrees(const Graph& g);

/// 2|E| / (n(n-1)); requires n >= 2.
double density(const Graph& g);

}  // namespace ecq
