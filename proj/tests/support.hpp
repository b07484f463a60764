#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "slh/graph.hpp"
#include "slh/moves.hpp"
#include "slh/ordering.hpp"

namespace slh::test {

// --- small graph builders (1-based edge pairs for readability) ---

Graph graph_from_1based(int n, const std::vector<std::pair<int, int>>& edges);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);

// 1-based sequence helper.
std::vector<int> seq0(const std::vector<int>& one_based);

// --- independent re-implementations used as test oracles ---

// Least rotation by explicitly materializing all n rotations.
int naive_least_rotation(const std::vector<int>& s);

// Canonical key by materializing all 2n candidates.
std::vector<int> naive_canonical_key(std::vector<int> seq);

// Gamma via rotate/reverse on plain vectors.
std::vector<int> naive_gamma(const Graph& g, const std::vector<int>& seq, int y, int x, int a);

// All eligible specs of one kind around one pivot orientation, found by
// scanning every combination of positions directly against the pattern
// definition (no adjacency-list shortcuts).
std::vector<TransformSpec> brute_force_specs(const CircleOrdering& o, MoveKind kind,
                                             int x, int y);

// All eligible specs over the whole ordering for a set of kinds, in an
// order-insensitive canonical sort (for set comparisons).
std::vector<TransformSpec> brute_force_all(const CircleOrdering& o,
                                           const std::vector<MoveKind>& kinds);

std::string spec_sort_key(const TransformSpec& sp);

// --- isomorphism-free graph enumeration (n <= 8) ---

// Edge-set bitmask over the C(n,2) pairs in lexicographic order.
using EdgeMask = uint32_t;

int pair_index(int n, int u, int v);
Graph graph_from_mask(int n, EdgeMask mask);

// All non-isomorphic simple graphs on exactly n labeled-canonical vertices.
const std::vector<EdgeMask>& all_graphs(int n);

// Filtered variants (connected / min degree), by copy.
std::vector<EdgeMask> connected_graphs(int n, int min_degree = 0);

// Representatives of ordering equivalence classes: seq[0] = 0 and
// seq[1] < seq[n-1].
std::vector<std::vector<int>> ordering_class_reps(int n);

// Seeded Erdos-Renyi-style graph (each pair kept with probability p).
Graph random_er_graph(int n, double p, uint64_t seed);

// Seeded uniform permutation of 0..n-1.
std::vector<int> random_permutation(int n, uint64_t seed);

}  // namespace slh::test
