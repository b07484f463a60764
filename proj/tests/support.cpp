#include "support.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "slh/instances.hpp"

namespace slh::test {

Graph graph_from_1based(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::pair<int, int>> zero;
    zero.reserve(edges.size());
    for (auto [u, v] : edges) zero.emplace_back(u - 1, v - 1);
    return Graph::build(n, zero);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::build(n, edges);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph::build(n, edges);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::build(n, edges);
}

std::vector<int> seq0(const std::vector<int>& one_based) {
    std::vector<int> out;
    out.reserve(one_based.size());
    for (int v : one_based) out.push_back(v - 1);
    return out;
}

int naive_least_rotation(const std::vector<int>& s) {
    const int n = static_cast<int>(s.size());
    int best = 0;
    std::vector<int> bestv = s;
    for (int r = 1; r < n; ++r) {
        std::vector<int> cand(n);
        for (int i = 0; i < n; ++i) cand[i] = s[(r + i) % n];
        if (cand < bestv) {
            bestv = cand;
            best = r;
        }
    }
    return best;
}

std::vector<int> naive_canonical_key(std::vector<int> seq) {
    const int n = static_cast<int>(seq.size());
    std::vector<int> best;
    for (int pass = 0; pass < 2; ++pass) {
        for (int r = 0; r < n; ++r) {
            std::vector<int> cand(n);
            for (int i = 0; i < n; ++i) cand[i] = seq[(r + i) % n];
            if (best.empty() || cand < best) best = cand;
        }
        std::reverse(seq.begin(), seq.end());
    }
    return best;
}

std::vector<int> naive_gamma(const Graph& g, const std::vector<int>& seq, int y, int x,
                             int a) {
    (void)g;
    const int n = static_cast<int>(seq.size());
    // Rotate so x leads, going away from y.
    int px = -1;
    for (int i = 0; i < n; ++i) {
        if (seq[i] == x) px = i;
    }
    std::vector<int> line(n);
    int dir = seq[(px + 1) % n] == y ? -1 : 1;
    for (int i = 0; i < n; ++i) line[i] = seq[((px + dir * i) % n + n) % n];
    auto it = std::find(line.begin(), line.end(), a);
    std::reverse(line.begin(), it);
    return line;
}

namespace {

// Direct pattern checks, written from the pattern grammar with the honest
// ladder/snake predicates of CircleOrdering.
void collect_kind(const CircleOrdering& o, MoveKind kind, int x, int y,
                  std::vector<TransformSpec>& out) {
    const int n = o.size();
    std::vector<int> line(n);
    int px = o.position_of(x);
    int dir = o.at(o.next(px)) == y ? -1 : 1;
    for (int i = 0; i < n; ++i) {
        line[i] = o.at(((px + dir * i) % n + n) % n);
    }
    auto lad = [&](int u, int v) { return o.is_ladder(u, v); };
    auto snk = [&](int u, int v) { return o.is_snake(u, v); };

    switch (kind) {
        case MoveKind::C2a:
        case MoveKind::C2b:
        case MoveKind::F2: {
            for (int ia = 2; ia <= n - 2; ++ia) {
                int a = line[ia], b = line[ia - 1];
                if (!lad(x, a)) continue;
                if (kind == MoveKind::C2a && o.graph().has_edge(b, a)) continue;
                if (kind == MoveKind::C2b && !lad(y, b)) continue;
                out.push_back(TransformSpec{kind, x, y, a, b});
            }
            break;
        }
        case MoveKind::C3:
        case MoveKind::F3: {
            for (int ia = 2; ia <= n - 4; ++ia) {
                int a = line[ia], c = line[ia - 1];
                if (!lad(x, a)) continue;
                for (int ib = ia + 1; ib <= n - 3; ++ib) {
                    int b = line[ib], d = line[ib + 1];
                    bool cd = lad(c, d), by = lad(b, y);
                    bool ok = kind == MoveKind::C3 ? (cd && by) : (cd || by);
                    if (ok) out.push_back(TransformSpec{kind, x, y, a, b, c, d});
                }
            }
            break;
        }
        case MoveKind::F4a: {
            for (int ia = 3; ia <= n - 5; ++ia) {
                int a = line[ia], b = line[ia + 1];
                if (!lad(x, a) || !lad(b, y)) continue;
                for (int ic = 2; ic <= ia - 1; ++ic) {
                    int c = line[ic], e = line[ic - 1];
                    for (int id = ia + 2; id <= n - 3; ++id) {
                        int d = line[id], f = line[id + 1];
                        if (!lad(c, d)) continue;
                        TransformSpec sp{kind, x, y, a, b, c, d};
                        sp.e = e;
                        sp.f = f;
                        out.push_back(sp);
                    }
                }
            }
            break;
        }
        case MoveKind::F4b: {
            for (int ia = 3; ia <= n - 4; ++ia) {
                int a = line[ia], b = line[ia + 1];
                if (!lad(x, a)) continue;
                for (int ic = 2; ic <= ia - 1; ++ic) {
                    int c = line[ic], e = line[ic - 1];
                    for (int id = ia + 2; id <= n - 2; ++id) {
                        int d = line[id], f = line[id - 1];
                        if (!lad(c, d)) continue;
                        if (!lad(e, b) && !lad(f, y)) continue;
                        TransformSpec sp{kind, x, y, a, b, c, d};
                        sp.e = e;
                        sp.f = f;
                        out.push_back(sp);
                    }
                }
            }
            break;
        }
        case MoveKind::O4: {
            for (int ia = 3; ia <= n - 3; ++ia) {
                int a = line[ia];
                if (!lad(x, a)) continue;
                for (int ic = 2; ic <= ia - 1; ++ic) {
                    int c = line[ic], e = line[ic - 1];
                    if (!snk(e, c)) continue;
                    for (int id = ia + 1; id <= n - 2; ++id) {
                        int d = line[id];
                        if (!lad(c, d)) continue;
                        TransformSpec sp{kind, x, y, a, -1, c, d};
                        sp.e = e;
                        if (id == ia + 1) {
                            if (!snk(a, d)) continue;
                        } else {
                            int b = line[ia + 1], f = line[id - 1];
                            if (!snk(a, b) || !snk(f, d)) continue;
                            sp.b = b;
                            sp.f = f;
                        }
                        out.push_back(sp);
                    }
                }
            }
            break;
        }
        case MoveKind::F5: {
            for (int ia = 3; ia <= n - 5; ++ia) {
                int a = line[ia], f = line[ia + 1];
                if (!lad(x, a)) continue;
                for (int ie = 1; ie <= ia - 2; ++ie) {
                    int e = line[ie], c = line[ie + 1];
                    if (!lad(f, e)) continue;
                    for (int id = ia + 3; id <= n - 2; ++id) {
                        int d = line[id];
                        if (!lad(c, d)) continue;
                        int j = line[id - 1], h = line[id + 1];
                        for (int ib = ia + 2; ib <= id - 1; ++ib) {
                            int b = line[ib];
                            if (!lad(b, y)) continue;
                            TransformSpec sp{kind, x, y, a, b, c, d};
                            sp.e = e;
                            sp.f = f;
                            sp.g = line[ib - 1];
                            sp.h = h;
                            sp.j = j;
                            out.push_back(sp);
                        }
                    }
                }
            }
            break;
        }
    }
}

}  // namespace

std::vector<TransformSpec> brute_force_specs(const CircleOrdering& o, MoveKind kind,
                                             int x, int y) {
    std::vector<TransformSpec> out;
    if (!o.circle_adjacent(x, y) || o.graph().has_edge(x, y)) return out;
    collect_kind(o, kind, x, y, out);
    return out;
}

std::vector<TransformSpec> brute_force_all(const CircleOrdering& o,
                                           const std::vector<MoveKind>& kinds) {
    std::vector<TransformSpec> out;
    const int n = o.size();
    for (int slot = 0; slot < n; ++slot) {
        int u = o.at(slot), v = o.at(o.next(slot));
        if (o.graph().has_edge(u, v)) continue;
        int lower = (slot == n - 1) ? v : u;
        int other = lower == u ? v : u;
        for (int orient = 0; orient < 2; ++orient) {
            int x = orient == 0 ? lower : other;
            int y = orient == 0 ? other : lower;
            for (MoveKind k : kinds) collect_kind(o, k, x, y, out);
        }
    }
    return out;
}

std::string spec_sort_key(const TransformSpec& sp) {
    return sp.describe_external();
}

int pair_index(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

Graph graph_from_mask(int n, EdgeMask mask) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (mask & (EdgeMask{1} << pair_index(n, u, v))) edges.emplace_back(u, v);
        }
    }
    return Graph::build(n, edges);
}

namespace {

// Canonical form: minimum relabeled mask over all permutations that respect
// the (degree, sorted neighbor degrees) partition, classes placed in
// signature order. The partition is isomorphism-invariant, so equal
// canonical masks <=> isomorphic graphs.
EdgeMask canonical_mask(int n, EdgeMask mask) {
    std::vector<std::vector<int>> adj(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (mask & (EdgeMask{1} << pair_index(n, u, v))) {
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
        }
    }
    using Sig = std::pair<int, std::vector<int>>;
    std::vector<Sig> sig(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> nd;
        for (int w : adj[v]) nd.push_back(static_cast<int>(adj[w].size()));
        std::sort(nd.begin(), nd.end());
        sig[v] = {static_cast<int>(adj[v].size()), std::move(nd)};
    }
    std::map<Sig, std::vector<int>> classes;
    for (int v = 0; v < n; ++v) classes[sig[v]].push_back(v);

    // Permutations are assembled class by class; positions are allocated to
    // classes in signature order.
    std::vector<std::vector<int>> members;
    for (auto& [s, vs] : classes) members.push_back(vs);

    std::vector<int> pos(n, -1);
    EdgeMask best = ~EdgeMask{0};
    auto relabel = [&]() {
        EdgeMask m = 0;
        for (int u = 0; u < n; ++u) {
            for (int v : adj[u]) {
                if (v > u) m |= EdgeMask{1} << pair_index(n, pos[u], pos[v]);
            }
        }
        if (m < best) best = m;
    };
    // Odometer over per-class permutations.
    std::vector<std::vector<int>> perms = members;  // current arrangement
    int base = 0;
    std::vector<int> bases;
    for (auto& cl : members) {
        bases.push_back(base);
        base += static_cast<int>(cl.size());
    }
    auto assign = [&]() {
        for (size_t c = 0; c < perms.size(); ++c) {
            for (size_t i = 0; i < perms[c].size(); ++i) {
                pos[perms[c][i]] = bases[c] + static_cast<int>(i);
            }
        }
        relabel();
    };
    // Recursive product of next_permutation streams.
    auto rec = [&](auto&& self, size_t c) -> void {
        if (c == perms.size()) {
            assign();
            return;
        }
        std::sort(perms[c].begin(), perms[c].end());
        do {
            self(self, c + 1);
        } while (std::next_permutation(perms[c].begin(), perms[c].end()));
    };
    rec(rec, 0);
    return best;
}

}  // namespace

const std::vector<EdgeMask>& all_graphs(int n) {
    static std::vector<std::vector<EdgeMask>> cache(9);
    if (n < 1 || n > 8) throw std::invalid_argument("all_graphs supports 1..8 vertices");
    if (!cache[n].empty()) return cache[n];
    if (n == 1) {
        cache[1] = {0};
        return cache[1];
    }
    const auto& prev = all_graphs(n - 1);
    std::unordered_set<EdgeMask> seen;
    std::vector<EdgeMask> out;
    for (EdgeMask pm : prev) {
        // Remap (n-1)-vertex pair indices into the n-vertex indexing.
        EdgeMask embedded = 0;
        for (int u = 0; u < n - 1; ++u) {
            for (int v = u + 1; v < n - 1; ++v) {
                if (pm & (EdgeMask{1} << pair_index(n - 1, u, v))) {
                    embedded |= EdgeMask{1} << pair_index(n, u, v);
                }
            }
        }
        for (EdgeMask sub = 0; sub < (EdgeMask{1} << (n - 1)); ++sub) {
            EdgeMask cand = embedded;
            for (int u = 0; u < n - 1; ++u) {
                if (sub & (EdgeMask{1} << u)) cand |= EdgeMask{1} << pair_index(n, u, n - 1);
            }
            EdgeMask canon = canonical_mask(n, cand);
            if (seen.insert(canon).second) out.push_back(canon);
        }
    }
    std::sort(out.begin(), out.end());
    cache[n] = std::move(out);
    return cache[n];
}

std::vector<EdgeMask> connected_graphs(int n, int min_degree) {
    std::vector<EdgeMask> out;
    for (EdgeMask m : all_graphs(n)) {
        std::vector<int> deg(n, 0);
        std::vector<std::vector<int>> adj(n);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (m & (EdgeMask{1} << pair_index(n, u, v))) {
                    ++deg[u];
                    ++deg[v];
                    adj[u].push_back(v);
                    adj[v].push_back(u);
                }
            }
        }
        if (*std::min_element(deg.begin(), deg.end()) < min_degree) continue;
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    stack.push_back(w);
                }
            }
        }
        if (cnt == n) out.push_back(m);
    }
    return out;
}

Graph random_er_graph(int n, double p, uint64_t seed) {
    SplitMix64 rng(seed);
    const uint64_t threshold = static_cast<uint64_t>(p * 1000000.0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.below(1000000) < threshold) edges.emplace_back(u, v);
        }
    }
    return Graph::build(n, edges);
}

std::vector<int> random_permutation(int n, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<int> seq(n);
    for (int i = 0; i < n; ++i) seq[i] = i;
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.below(i + 1));
        std::swap(seq[i], seq[j]);
    }
    return seq;
}

std::vector<std::vector<int>> ordering_class_reps(int n) {
    std::vector<std::vector<int>> reps;
    std::vector<int> tail(n - 1);
    for (int i = 0; i < n - 1; ++i) tail[i] = i + 1;
    do {
        if (n >= 3 && tail.front() > tail.back()) continue;
        std::vector<int> seq;
        seq.reserve(n);
        seq.push_back(0);
        seq.insert(seq.end(), tail.begin(), tail.end());
        reps.push_back(std::move(seq));
    } while (std::next_permutation(tail.begin(), tail.end()));
    return reps;
}

}  // namespace slh::test
