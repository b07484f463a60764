#include "slh/ordering.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace slh {

CircleOrdering::CircleOrdering(const Graph& g, std::vector<int> seq)
    : g_(&g), seq_(std::move(seq)) {
    const int n = static_cast<int>(seq_.size());
    pos_.assign(g.vertex_count(), -1);
    for (int i = 0; i < n; ++i) pos_[seq_[i]] = i;
    gap_count_ = recount_gaps();
}

bool CircleOrdering::circle_adjacent(int u, int v) const {
    const int n = size();
    int d = pos_[u] - pos_[v];
    if (d < 0) d = -d;
    return d == 1 || d == n - 1;
}

int CircleOrdering::recount_gaps() const {
    const int n = size();
    int gaps = 0;
    for (int i = 0; i < n; ++i) {
        if (!g_->has_edge(seq_[i], seq_[next(i)])) ++gaps;
    }
    return gaps;
}

CircleOrdering make_ordering(const Graph& g, std::vector<int> seq) {
    const int n = g.vertex_count();
    if (static_cast<int>(seq.size()) != n) {
        throw std::invalid_argument("ordering length does not match vertex count");
    }
    std::vector<char> seen(n, 0);
    for (int v : seq) {
        if (v < 0 || v >= n || seen[v]) {
            throw std::invalid_argument("ordering is not a permutation of the vertices");
        }
        seen[v] = 1;
    }
    return CircleOrdering(g, std::move(seq));
}

std::vector<Gap> list_gaps(const CircleOrdering& o) {
    std::vector<Gap> gaps;
    const int n = o.size();
    for (int i = 0; i < n; ++i) {
        int u = o.at(i), v = o.at(o.next(i));
        if (!o.graph().has_edge(u, v)) gaps.emplace_back(u, v);
    }
    return gaps;
}

int least_rotation(const std::vector<int>& s) {
    // Booth's least-rotation algorithm, O(n).
    const int n = static_cast<int>(s.size());
    if (n == 0) return 0;
    std::vector<int> f(2 * n, -1);
    int k = 0;
    for (int j = 1; j < 2 * n; ++j) {
        int i = f[j - k - 1];
        while (i != -1 && s[j % n] != s[(k + i + 1) % n]) {
            if (s[j % n] < s[(k + i + 1) % n]) k = j - i - 1;
            i = f[i];
        }
        if (i == -1 && s[j % n] != s[(k + i + 1) % n]) {
            if (s[j % n] < s[(k + i + 1) % n]) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k;
}

CanonicalKey canonical_key_of_seq(std::vector<int> seq) {
    const int n = static_cast<int>(seq.size());
    if (n == 0) return {};
    auto rotated = [n](const std::vector<int>& s, int start) {
        std::vector<int> out(n);
        for (int i = 0; i < n; ++i) out[i] = s[(start + i) % n];
        return out;
    };
    std::vector<int> fwd = rotated(seq, least_rotation(seq));
    std::reverse(seq.begin(), seq.end());
    std::vector<int> rev = rotated(seq, least_rotation(seq));
    return {fwd <= rev ? std::move(fwd) : std::move(rev)};
}

CanonicalKey canonical_key(const CircleOrdering& o) {
    return canonical_key_of_seq(o.seq());
}

KeyHash hash_key(const CanonicalKey& k) {
    uint64_t h1 = 1469598103934665603ull;  // FNV-1a
    uint64_t h2 = 0x2545f4914f6cdd1dull;
    for (int v : k.key) {
        h1 = (h1 ^ static_cast<uint32_t>(v)) * 1099511628211ull;
        uint64_t z = h2 ^ (static_cast<uint32_t>(v) + 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        h2 = z ^ (z >> 27);
    }
    h2 *= 0x94d049bb133111ebull;
    return {h1, h2 ^ (h2 >> 31)};
}

namespace {

// Linearization of the circle starting at x, walking away from y so that y
// lands at index n-1. Requires x and y circle-adjacent.
std::vector<int> linearize(const CircleOrdering& o, int x, int y) {
    const int n = o.size();
    const int px = o.position_of(x);
    int step = (o.at(o.next(px)) == y) ? -1 : +1;
    std::vector<int> line(n);
    int p = px;
    for (int i = 0; i < n; ++i) {
        line[i] = o.at(p);
        p = step > 0 ? o.next(p) : o.prev(p);
    }
    return line;
}

}  // namespace

CircleOrdering apply_gamma(const CircleOrdering& o, int y, int x, int a) {
    if (!o.circle_adjacent(x, y)) {
        throw std::invalid_argument("gamma: x and y must be circle-adjacent");
    }
    if (a == x || a == y) {
        throw std::invalid_argument("gamma: a must differ from x and y");
    }
    std::vector<int> line = linearize(o, x, y);
    const int n = static_cast<int>(line.size());
    int ia = -1;
    for (int i = 1; i < n - 1; ++i) {
        if (line[i] == a) {
            ia = i;
            break;
        }
    }
    assert(ia != -1);
    std::reverse(line.begin(), line.begin() + ia);
    return CircleOrdering(o.graph(), std::move(line));
}

CircleOrdering apply_kappa(const CircleOrdering& o, int x, int a, int c, int d) {
    const int n = o.size();
    if (x == a || x == c || x == d || a == c || a == d || c == d) {
        throw std::invalid_argument("kappa: parameters must be distinct");
    }
    // Pick the direction around the circle in which c comes before a before d.
    auto index_in = [&](int step, int v) {
        int diff = (o.position_of(v) - o.position_of(x)) * step;
        return ((diff % n) + n) % n;
    };
    int step = +1;
    if (!(index_in(step, c) < index_in(step, a) && index_in(step, a) < index_in(step, d))) {
        step = -1;
        if (!(index_in(step, c) < index_in(step, a) && index_in(step, a) < index_in(step, d))) {
            throw std::invalid_argument("kappa: no direction orders c before a before d");
        }
    }
    const int ic = index_in(step, c), ia = index_in(step, a), id = index_in(step, d);
    if (ic == 0) throw std::invalid_argument("kappa: segment A would be empty");
    std::vector<int> line(n);
    int p = o.position_of(x);
    for (int i = 0; i < n; ++i) {
        line[i] = o.at(p);
        p = step > 0 ? o.next(p) : o.prev(p);
    }
    // (A,B,C,D) -> (A^R, B^R, D, C^R); C = (a..d exclusive) may be empty.
    std::vector<int> out;
    out.reserve(n);
    for (int i = ic - 1; i >= 0; --i) out.push_back(line[i]);
    for (int i = ia; i >= ic; --i) out.push_back(line[i]);
    for (int i = id; i < n; ++i) out.push_back(line[i]);
    for (int i = id - 1; i > ia; --i) out.push_back(line[i]);
    return CircleOrdering(o.graph(), std::move(out));
}

}  // namespace slh
