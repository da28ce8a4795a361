#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cactusmp {

/// Undirected simple graph on vertex ids 0..n-1. Adjacency lists are kept
/// sorted so traversals are deterministic. Instances are treated as
/// immutable once built; all algorithms take them by const reference.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;
    std::map<int, std::string> labels;  // optional display names
    bool connected = false;
    std::vector<int> component_reps;  // smallest vertex id per component

    bool has_edge(int u, int v) const;
    int edge_count() const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    /// Edges as sorted (u,v) pairs with u < v.
    std::vector<std::pair<int, int>> edges() const;
};

struct GraphError : std::runtime_error {
    explicit GraphError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown by operations that require a connected graph.
struct DisconnectedError : GraphError {
    std::vector<int> component_reps;
    explicit DisconnectedError(std::vector<int> reps);
};

/// Builds a graph from an edge list. Rejects out-of-range endpoints and
/// self-loops; duplicate edges collapse to one.
Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);
Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges,
                     const std::map<int, std::string>& labels);

void require_connected(const Graph& g);

/// BFS distances from source; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, int source);

/// All-pairs distances, row-major.
struct DistMatrix {
    int n = 0;
    std::vector<int> d;
    int at(int u, int v) const { return d[static_cast<size_t>(u) * n + v]; }
};
DistMatrix all_pairs_distances(const Graph& g);

/// A path as the sequence of its vertices.
using PathSeq = std::vector<int>;

/// Broadcast assignment: vertex -> positive power (zero entries are omitted).
using Broadcast = std::map<int, int>;

/// True when p is a simple path: distinct vertices, consecutive ones adjacent.
bool is_path(const Graph& g, const PathSeq& p);

/// True when p is a shortest path between its endpoints (hence between every
/// pair of its vertices).
bool is_isometric_path(const Graph& g, const PathSeq& p);

struct RadiusReport {
    int radius = 0;
    int diameter = 0;
    std::vector<int> centers;  // ascending vertex ids with ecc == radius
    std::vector<int> ecc;      // per-vertex eccentricity
};

/// Reference implementation: one BFS per vertex.
RadiusReport radius_center_bfs(const Graph& g);

/// Near-linear implementation. On cacti it runs a block-tree DP (each cycle
/// handled with sliding-window maxima over the doubled position array);
/// other graphs fall back to the BFS version. Both produce identical reports.
RadiusReport radius_center(const Graph& g);

struct Block {
    enum class Type { Edge, Cycle };
    Type type = Type::Edge;
    /// Edge blocks: {u,v} with u < v. Cycle blocks: the cycle in canonical
    /// rotation (smallest vertex first, then its smaller neighbour).
    std::vector<int> vertices;
};

struct CactusCertificate {
    bool is_cactus = false;
    std::vector<Block> blocks;  // sorted by vertex sequence
    /// When not a cactus: two distinct cycles sharing at least one edge.
    std::vector<std::vector<int>> witness;
};

/// Decomposes g into biconnected blocks and checks that each is a single
/// edge or an induced cycle.
CactusCertificate validate_cactus(const Graph& g);

}  // namespace cactusmp
