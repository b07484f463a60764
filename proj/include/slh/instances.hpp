#pragma once

#include <cstdint>

#include "slh/graph.hpp"

namespace slh {

/// Deterministic PRNG behind all seeded generation: splitmix64. The exact
/// algorithm is part of the corpus contract — identical seeds must yield
/// identical graphs on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound), bound >= 1, by rejection sampling.
    uint64_t below(uint64_t bound) {
        const uint64_t threshold = UINT64_MAX - UINT64_MAX % bound;
        for (;;) {
            uint64_t v = next();
            if (v < threshold) return v % bound;
        }
    }

private:
    uint64_t state_;
};

/// Generalized Petersen graph GP(n, k): 2n vertices. Outer vertices are
/// 0..n-1 (cycle), inner vertex i is n+i, spokes i--(n+i), inner edges
/// (n+i)--(n+(i+k mod n)). Cubic with 3n edges.
Graph gen_generalized_petersen(int n, int k);

/// Flower snark J_k for odd k >= 5: 4k vertices. Center i (= vertex i) is
/// adjacent to x_i = k+i, y_i = 2k+i, z_i = 3k+i; the x row forms a k-cycle
/// and the y/z rows one 2k-cycle joined at the wrap. Cubic, 6k edges.
Graph gen_flower_snark(int k);

/// Dense graph with exactly one Hamiltonian cycle (even n >= 6): the cycle
/// 0..n-1, a complete graph on the even vertices, and chords from vertex 1
/// to every even vertex it is not already adjacent to. Every odd vertex
/// except 1 has degree 2, which forces the cycle; uniqueness is checked by
/// the oracle in tests.
Graph gen_sheehan(int n);

/// Edge count of gen_sheehan(n).
int sheehan_edge_count(int n);

/// Uniform random cubic graph via the pairing model: random perfect
/// matching on 3n stubs, resampled from scratch until simple.
Graph gen_random_cubic(int n, uint64_t seed);

/// Isomorphic copy under a seeded uniform relabeling.
Graph relabel_random(const Graph& g, uint64_t seed);

}  // namespace slh
