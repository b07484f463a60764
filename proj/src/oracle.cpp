#include "slh/oracle.hpp"

#include <algorithm>

namespace slh {

namespace {

// Backtracking core shared by cycle enumeration (closed = true) and
// Hamiltonian path search. Cycles are anchored at vertex 0 and counted once
// per equivalence class by demanding second vertex < last vertex; paths are
// counted once by demanding last vertex > first vertex.
struct Search {
    const Graph& g;
    int n;
    bool closed;
    uint64_t limit;        // cycles stored / paths found before stopping
    uint64_t store_limit;  // cycles kept in the result list
    uint64_t node_budget;

    std::vector<char> visited;
    std::vector<int> path;
    std::vector<int> stamp;
    std::vector<int> queue;
    int stamp_gen = 0;
    OracleResult out;

    Search(const Graph& graph, bool want_cycles, uint64_t stop_after, uint64_t keep,
           uint64_t budget)
        : g(graph),
          n(graph.vertex_count()),
          closed(want_cycles),
          limit(stop_after),
          store_limit(keep),
          node_budget(budget) {
        visited.assign(n, 0);
        stamp.assign(n, 0);
        queue.reserve(n);
    }

    bool prune(int tail) {
        const int unvisited = n - static_cast<int>(path.size());
        if (unvisited == 0) return false;
        int start = -1;
        for (int v = 0; v < n; ++v) {
            if (!visited[v]) {
                start = v;
                break;
            }
        }
        // Unvisited region must be connected.
        ++stamp_gen;
        queue.clear();
        queue.push_back(start);
        stamp[start] = stamp_gen;
        size_t head = 0;
        int seen = 1;
        while (head < queue.size()) {
            for (int w : g.neighbors(queue[head++])) {
                if (!visited[w] && stamp[w] != stamp_gen) {
                    stamp[w] = stamp_gen;
                    queue.push_back(w);
                    ++seen;
                }
            }
        }
        if (seen != unvisited) return true;
        // The free end of the partial path must reach the region.
        bool touches = false;
        for (int w : g.neighbors(tail)) {
            if (!visited[w]) {
                touches = true;
                break;
            }
        }
        if (!touches) return true;
        // Every unvisited vertex still needs enough usable incidences. The
        // tail (and in cycle mode the anchor) may serve as one of them.
        const int anchor = closed ? path.front() : -1;
        int weak = 0;
        for (int v = 0; v < n; ++v) {
            if (visited[v]) continue;
            int usable = 0;
            for (int w : g.neighbors(v)) {
                if (!visited[w] || w == tail || w == anchor) {
                    if (++usable >= 2) break;
                }
            }
            if (closed) {
                if (usable < 2) return true;
            } else {
                if (usable == 0) return true;
                if (usable == 1 && ++weak > 1) return true;  // one far endpoint allowed
            }
        }
        return false;
    }

    // Returns true when the whole search should stop (budget or limit).
    bool extend(int tail) {
        if (out.nodes_expanded >= node_budget) {
            out.completed = false;
            return true;
        }
        ++out.nodes_expanded;
        if (static_cast<int>(path.size()) == n) {
            if (closed) {
                if (g.has_edge(tail, path.front()) && path[1] < path[n - 1]) {
                    ++out.count;
                    if (out.count <= store_limit) out.cycles.push_back(Cycle{path});
                }
                return false;  // keep searching for the exact count
            }
            if (path.back() > path.front()) {
                ++out.count;
                if (out.count <= store_limit) out.cycles.push_back(Cycle{path});
                return out.count >= limit;
            }
            return false;
        }
        if (prune(tail)) return false;
        for (int w : g.neighbors(tail)) {
            if (visited[w]) continue;
            visited[w] = 1;
            path.push_back(w);
            bool stop = extend(w);
            path.pop_back();
            visited[w] = 0;
            if (stop) return true;
        }
        return false;
    }
};

}  // namespace

OracleResult enumerate_hamiltonian_cycles(const Graph& g, uint64_t limit,
                                          uint64_t node_budget) {
    const int n = g.vertex_count();
    if (n < 3) return {};
    Search s(g, true, UINT64_MAX, limit, node_budget);
    s.visited[0] = 1;
    s.path.push_back(0);
    s.extend(0);
    return std::move(s.out);
}

PathResult has_hamiltonian_path(const Graph& g, uint64_t node_budget) {
    const int n = g.vertex_count();
    PathResult res;
    if (n == 0) return res;
    if (n == 1) {
        res.answer = PathAnswer::Yes;
        res.path = std::vector<int>{0};
        return res;
    }
    uint64_t spent = 0;
    for (int start = 0; start < n; ++start) {
        Search s(g, false, 1, 1, node_budget > spent ? node_budget - spent : 0);
        s.visited[start] = 1;
        s.path.push_back(start);
        s.extend(start);
        spent += s.out.nodes_expanded;
        res.nodes_expanded = spent;
        if (!s.out.cycles.empty()) {
            res.answer = PathAnswer::Yes;
            res.path = s.out.cycles.front().seq;
            return res;
        }
        if (!s.out.completed) {
            res.answer = PathAnswer::Unknown;
            return res;
        }
    }
    res.answer = PathAnswer::No;
    return res;
}

}  // namespace slh
