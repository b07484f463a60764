#include "slh/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace slh {

namespace {
constexpr int kMatrixMaxVertices = 8192;
}

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    g.use_matrix_ = n <= kMatrixMaxVertices;
    if (g.use_matrix_) {
        g.matrix_.assign((static_cast<uint64_t>(n) * n + 63) / 64, 0);
    }

    auto set_bit = [&](int u, int v) {
        uint64_t idx = static_cast<uint64_t>(u) * n + v;
        g.matrix_[idx >> 6] |= uint64_t{1} << (idx & 63);
    };

    std::vector<std::pair<int, int>> sorted;
    sorted.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::invalid_argument("edge endpoint out of range: (" +
                                        std::to_string(u + 1) + "," +
                                        std::to_string(v + 1) + ")");
        }
        if (u == v) {
            throw std::invalid_argument("self-loop at vertex " +
                                        std::to_string(u + 1));
        }
        if (u > v) std::swap(u, v);
        sorted.emplace_back(u, v);
    }
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (i > 0 && sorted[i] == sorted[i - 1]) {
            ++g.duplicates_dropped_;
            continue;
        }
        auto [u, v] = sorted[i];
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        if (g.use_matrix_) {
            set_bit(u, v);
            set_bit(v, u);
        }
        ++g.m_;
    }
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        g.max_degree_ = std::max(g.max_degree_, static_cast<int>(nbrs.size()));
    }
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    if (use_matrix_) return matrix_bit(u, v);
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u) {
        for (int v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

bool verify_hamiltonian_cycle(const Graph& g, const Cycle& c) {
    const int n = g.vertex_count();
    if (static_cast<int>(c.seq.size()) != n || n < 3) return false;
    std::vector<char> seen(n, 0);
    for (int v : c.seq) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (int i = 0; i < n; ++i) {
        if (!g.has_edge(c.seq[i], c.seq[(i + 1) % n])) return false;
    }
    return true;
}

std::string PresolveResult::describe() const {
    switch (reason) {
        case PresolveReason::None:
            return "pass";
        case PresolveReason::TooFewVertices:
            return "fewer than 3 vertices";
        case PresolveReason::DegreeBelowTwo:
            return "vertex " + std::to_string(witness + 1) + " has degree < 2";
        case PresolveReason::Disconnected:
            return "graph is disconnected";
    }
    return "?";
}

PresolveResult presolve(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3) return {false, PresolveReason::TooFewVertices, -1};
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) < 2) return {false, PresolveReason::DegreeBelowTwo, v};
    }
    // BFS from 0.
    std::vector<char> seen(n, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
        for (int w : g.neighbors(queue[head])) {
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    if (static_cast<int>(queue.size()) != n) {
        return {false, PresolveReason::Disconnected, -1};
    }
    return {};
}

}  // namespace slh
