#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace slh {

/// Simple undirected graph. Vertices are 0-based internally; all file
/// formats and the CLI speak 1-based labels and convert at the boundary.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate edges are dropped (and
    /// counted), self-loops and out-of-range labels throw.
    static Graph build(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int max_degree() const { return max_degree_; }
    int duplicate_edges_dropped() const { return duplicates_dropped_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const;

    /// All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

private:
    int n_ = 0;
    int m_ = 0;
    int max_degree_ = 0;
    int duplicates_dropped_ = 0;
    std::vector<std::vector<int>> adj_;
    // Packed adjacency matrix, only allocated for small n.
    std::vector<uint64_t> matrix_;
    bool use_matrix_ = false;

    bool matrix_bit(int u, int v) const {
        uint64_t idx = static_cast<uint64_t>(u) * n_ + v;
        return (matrix_[idx >> 6] >> (idx & 63)) & 1;
    }
};

/// A candidate Hamiltonian cycle: a sequence of vertices read cyclically.
struct Cycle {
    std::vector<int> seq;
};

/// True iff c visits every vertex exactly once and consecutive vertices
/// (cyclically) are all edges of g. Malformed input yields false.
bool verify_hamiltonian_cycle(const Graph& g, const Cycle& c);

enum class PresolveReason {
    None,
    TooFewVertices,
    DegreeBelowTwo,
    Disconnected,
};

struct PresolveResult {
    bool pass = true;
    PresolveReason reason = PresolveReason::None;
    int witness = -1;  // offending vertex where applicable

    std::string describe() const;
};

/// Cheap necessary conditions: n >= 3, min degree >= 2, connectivity.
PresolveResult presolve(const Graph& g);

}  // namespace slh
