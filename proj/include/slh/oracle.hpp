#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "slh/graph.hpp"

namespace slh {

struct OracleResult {
    /// Canonical cycles found (anchored at vertex 0, second vertex smaller
    /// than last), in lexicographic order, up to the requested limit.
    std::vector<Cycle> cycles;
    uint64_t count = 0;  // exact when completed
    bool completed = true;
    uint64_t nodes_expanded = 0;
};

/// Exhaustive depth-first enumeration of Hamiltonian cycles. Prunes on
/// forced-degree and connectivity conditions; deterministic order. Stops
/// recording cycles beyond `limit` but keeps counting; stops entirely when
/// `node_budget` search nodes have been expanded (completed = false).
OracleResult enumerate_hamiltonian_cycles(const Graph& g, uint64_t limit = UINT64_MAX,
                                          uint64_t node_budget = UINT64_MAX);

enum class PathAnswer { Yes, No, Unknown };

struct PathResult {
    PathAnswer answer = PathAnswer::No;
    std::optional<std::vector<int>> path;
    uint64_t nodes_expanded = 0;
};

/// Does the graph contain a Hamiltonian path (any endpoints)?
PathResult has_hamiltonian_path(const Graph& g, uint64_t node_budget = UINT64_MAX);

}  // namespace slh
