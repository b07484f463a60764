#include "slh/instances.hpp"

#include <numeric>
#include <stdexcept>

namespace slh {

Graph gen_generalized_petersen(int n, int k) {
    if (n < 3) throw std::invalid_argument("GP(n,k) requires n >= 3");
    if (k < 1 || 2 * k >= n) throw std::invalid_argument("GP(n,k) requires 1 <= k < n/2");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(3 * n);
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);          // outer cycle
        edges.emplace_back(i, n + i);                // spoke
        edges.emplace_back(n + i, n + (i + k) % n);  // inner cycle
    }
    return Graph::build(2 * n, edges);
}

Graph gen_flower_snark(int k) {
    if (k < 5 || k % 2 == 0) throw std::invalid_argument("flower snark requires odd k >= 5");
    auto x = [k](int i) { return k + i; };
    auto y = [k](int i) { return 2 * k + i; };
    auto z = [k](int i) { return 3 * k + i; };
    std::vector<std::pair<int, int>> edges;
    edges.reserve(6 * k);
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(i, x(i));
        edges.emplace_back(i, y(i));
        edges.emplace_back(i, z(i));
        edges.emplace_back(x(i), x((i + 1) % k));
    }
    for (int i = 0; i + 1 < k; ++i) {
        edges.emplace_back(y(i), y(i + 1));
        edges.emplace_back(z(i), z(i + 1));
    }
    edges.emplace_back(y(k - 1), z(0));
    edges.emplace_back(z(k - 1), y(0));
    return Graph::build(4 * k, edges);
}

int sheehan_edge_count(int n) {
    const int half = n / 2;
    return n + half * (half - 1) / 2 + (half - 2);
}

Graph gen_sheehan(int n) {
    if (n < 6 || n % 2 != 0) throw std::invalid_argument("sheehan family requires even n >= 6");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    for (int u = 0; u < n; u += 2) {
        for (int v = u + 2; v < n; v += 2) edges.emplace_back(u, v);
    }
    for (int v = 4; v <= n - 2; v += 2) edges.emplace_back(1, v);
    Graph g = Graph::build(n, edges);
    if (g.edge_count() != sheehan_edge_count(n)) {
        throw std::logic_error("sheehan edge count mismatch");
    }
    return g;
}

Graph gen_random_cubic(int n, uint64_t seed) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("cubic graphs require even n >= 4");
    SplitMix64 rng(seed);
    const int points = 3 * n;
    std::vector<int> stub;
    for (;;) {
        stub.resize(points);
        std::iota(stub.begin(), stub.end(), 0);
        std::vector<std::pair<int, int>> edges;
        edges.reserve(points / 2);
        bool simple = true;
        // Sequential uniform matching: pair the first live stub with a
        // uniformly chosen other live stub.
        int live = points;
        while (live > 0 && simple) {
            int i = stub[0];
            int pick = 1 + static_cast<int>(rng.below(live - 1));
            int j = stub[pick];
            int u = i / 3, v = j / 3;
            if (u == v) {
                simple = false;
                break;
            }
            for (auto [a, b] : edges) {
                if ((a == u && b == v) || (a == v && b == u)) {
                    simple = false;
                    break;
                }
            }
            if (!simple) break;
            edges.emplace_back(u, v);
            // Remove the two matched stubs, preserving order.
            stub.erase(stub.begin() + pick);
            stub.erase(stub.begin());
            live -= 2;
        }
        if (simple) return Graph::build(n, edges);
        // Whole-sample rejection: restart with fresh randomness.
    }
}

Graph relabel_random(const Graph& g, uint64_t seed) {
    SplitMix64 rng(seed);
    const int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.below(i + 1));
        std::swap(perm[i], perm[j]);
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph::build(n, edges);
}

}  // namespace slh
