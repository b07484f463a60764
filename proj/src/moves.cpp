#include "slh/moves.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace slh {

const char* move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::C2a: return "C2a";
        case MoveKind::C2b: return "C2b";
        case MoveKind::C3: return "C3";
        case MoveKind::F2: return "F2";
        case MoveKind::F3: return "F3";
        case MoveKind::F4a: return "F4a";
        case MoveKind::F4b: return "F4b";
        case MoveKind::F5: return "F5";
        case MoveKind::O4: return "O4";
    }
    return "?";
}

bool is_closing(MoveKind k) {
    return k == MoveKind::C2a || k == MoveKind::C2b || k == MoveKind::C3;
}

bool is_floating(MoveKind k) {
    return k == MoveKind::F2 || k == MoveKind::F3 || k == MoveKind::F4a ||
           k == MoveKind::F4b || k == MoveKind::F5;
}

int TransformSpec::gamma_count() const {
    switch (kind) {
        case MoveKind::C2a:
        case MoveKind::C2b:
        case MoveKind::F2: return 1;
        case MoveKind::C3:
        case MoveKind::F3:
        case MoveKind::F4a: return 2;
        default: return 0;
    }
}

int TransformSpec::kappa_count() const {
    switch (kind) {
        case MoveKind::F4a:
        case MoveKind::F4b:
        case MoveKind::O4: return 1;
        case MoveKind::F5: return 2;
        default: return 0;
    }
}

std::string TransformSpec::describe_external() const {
    std::string s = move_kind_name(kind);
    const std::pair<const char*, int> fields[] = {
        {"x", x}, {"y", y}, {"a", a}, {"b", b}, {"c", c}, {"d", d},
        {"e", e}, {"f", f}, {"g", g}, {"h", h}, {"j", j},
    };
    for (auto [name, v] : fields) {
        if (v >= 0) {
            s += ' ';
            s += name;
            s += '=';
            s += std::to_string(v + 1);
        }
    }
    return s;
}

namespace {

// Linearization of the circle from x (index 0) to y (index n-1).
struct LinearView {
    std::vector<int> line;
    std::vector<int> idx;

    void build(const CircleOrdering& o, int x, int y) {
        const int n = o.size();
        line.resize(n);
        idx.assign(o.graph().vertex_count(), -1);
        const int px = o.position_of(x);
        int step = (o.at(o.next(px)) == y) ? -1 : +1;
        int p = px;
        for (int i = 0; i < n; ++i) {
            line[i] = o.at(p);
            idx[line[i]] = i;
            p = step > 0 ? o.next(p) : o.prev(p);
        }
    }
};

// Segment decomposition of one move: inclusive index ranges of the
// linearization in circle order, plus the output arrangement.
struct MovePlan {
    struct Piece {
        int seg;
        bool rev;
    };
    std::pair<int, int> segs[6];
    Piece out[6];
    int count = 0;

    void add_plan(std::initializer_list<std::pair<int, int>> s,
                  std::initializer_list<Piece> ord) {
        count = 0;
        auto it = ord.begin();
        for (auto seg : s) {
            segs[count] = seg;
            out[count] = *it++;
            ++count;
        }
    }
};

MovePlan plan_for(const TransformSpec& sp, const LinearView& L) {
    const int n = static_cast<int>(L.line.size());
    MovePlan p;
    switch (sp.kind) {
        case MoveKind::C2a:
        case MoveKind::C2b:
        case MoveKind::F2: {
            int ia = L.idx[sp.a];
            p.add_plan({{0, ia - 1}, {ia, n - 1}}, {{0, true}, {1, false}});
            break;
        }
        case MoveKind::C3:
        case MoveKind::F3: {
            int ia = L.idx[sp.a], ib = L.idx[sp.b];
            p.add_plan({{0, ia - 1}, {ia, ib}, {ib + 1, n - 1}},
                       {{2, false}, {1, true}, {0, false}});
            break;
        }
        case MoveKind::F4a: {
            int ic = L.idx[sp.c], ia = L.idx[sp.a], id = L.idx[sp.d];
            p.add_plan({{0, ic - 1}, {ic, ia}, {ia + 1, id}, {id + 1, n - 1}},
                       {{2, true}, {3, true}, {0, true}, {1, true}});
            break;
        }
        case MoveKind::F4b:
        case MoveKind::O4: {
            int ic = L.idx[sp.c], ia = L.idx[sp.a], id = L.idx[sp.d];
            // Segment between a and d may be empty.
            p.add_plan({{0, ic - 1}, {ic, ia}, {ia + 1, id - 1}, {id, n - 1}},
                       {{0, true}, {1, true}, {3, false}, {2, true}});
            break;
        }
        case MoveKind::F5: {
            int ie = L.idx[sp.e], ia = L.idx[sp.a], ib = L.idx[sp.b], id = L.idx[sp.d];
            p.add_plan({{0, ie},
                        {ie + 1, ia},
                        {ia + 1, ib - 1},
                        {ib, id - 1},
                        {id, id},
                        {id + 1, n - 1}},
                       {{3, false}, {4, false}, {1, false}, {0, false}, {2, false}, {5, false}});
            break;
        }
    }
    return p;
}

bool seg_empty(const std::pair<int, int>& s) { return s.first > s.second; }

void plan_junctions(const MovePlan& p, const LinearView& L,
                    std::vector<std::pair<int, int>>& destroyed,
                    std::vector<std::pair<int, int>>& created) {
    destroyed.clear();
    created.clear();
    // Boundaries between consecutive non-empty segments in circle order,
    // including the wrap (y, x).
    int order[6], k = 0;
    for (int i = 0; i < p.count; ++i) {
        if (!seg_empty(p.segs[i])) order[k++] = i;
    }
    for (int i = 0; i < k; ++i) {
        int s = order[i], t = order[(i + 1) % k];
        destroyed.emplace_back(L.line[p.segs[s].second], L.line[p.segs[t].first]);
    }
    int outk = 0;
    MovePlan::Piece pieces[6];
    for (int i = 0; i < p.count; ++i) {
        if (!seg_empty(p.segs[p.out[i].seg])) pieces[outk++] = p.out[i];
    }
    for (int i = 0; i < outk; ++i) {
        const auto& cur = pieces[i];
        const auto& nxt = pieces[(i + 1) % outk];
        int end = cur.rev ? L.line[p.segs[cur.seg].first] : L.line[p.segs[cur.seg].second];
        int start = nxt.rev ? L.line[p.segs[nxt.seg].second] : L.line[p.segs[nxt.seg].first];
        created.emplace_back(end, start);
    }
}

std::vector<int> plan_apply(const MovePlan& p, const LinearView& L) {
    std::vector<int> out;
    out.reserve(L.line.size());
    for (int i = 0; i < p.count; ++i) {
        const auto& piece = p.out[i];
        auto [b, e] = p.segs[piece.seg];
        if (b > e) continue;
        if (piece.rev) {
            for (int q = e; q >= b; --q) out.push_back(L.line[q]);
        } else {
            for (int q = b; q <= e; ++q) out.push_back(L.line[q]);
        }
    }
    return out;
}

// Per-kind parameter enumeration, resumable via cur.p1..p4/phase. Yields
// candidates in the canonical order: free vertices ascending along the
// relevant adjacency list, positional choices ascending.
bool next_candidate(const CircleOrdering& o, const LinearView& L, int x, int y,
                    MoveKind kind, ScanCursor& cur, TransformSpec& out) {
    const Graph& g = o.graph();
    const int n = o.size();
    const auto& ax = g.neighbors(x);
    const int degx = static_cast<int>(ax.size());

    switch (kind) {
        case MoveKind::C2a:
        case MoveKind::C2b:
        case MoveKind::F2: {
            while (cur.p1 < degx) {
                int a = ax[cur.p1++];
                int ia = L.idx[a];
                if (ia < 2 || ia > n - 2) continue;
                int b = L.line[ia - 1];
                if (kind == MoveKind::C2a && g.has_edge(b, a)) continue;
                if (kind == MoveKind::C2b && !g.has_edge(y, b)) continue;
                out = TransformSpec{kind, x, y, a, b};
                return true;
            }
            return false;
        }
        case MoveKind::C3: {
            const auto& ay = g.neighbors(y);
            const int degy = static_cast<int>(ay.size());
            while (cur.p1 < degx) {
                int a = ax[cur.p1];
                int ia = L.idx[a];
                if (ia < 2 || ia > n - 4) {
                    ++cur.p1;
                    cur.p2 = 0;
                    continue;
                }
                int c = L.line[ia - 1];
                while (cur.p2 < degy) {
                    int b = ay[cur.p2++];
                    int ib = L.idx[b];
                    if (ib < ia + 1 || ib > n - 3) continue;
                    int d = L.line[ib + 1];
                    if (!g.has_edge(c, d)) continue;
                    out = TransformSpec{kind, x, y, a, b, c, d};
                    return true;
                }
                ++cur.p1;
                cur.p2 = 0;
            }
            return false;
        }
        case MoveKind::F3: {
            const auto& ay = g.neighbors(y);
            const int degy = static_cast<int>(ay.size());
            while (cur.p1 < degx) {
                int a = ax[cur.p1];
                int ia = L.idx[a];
                if (ia < 2 || ia > n - 4) {
                    ++cur.p1;
                    cur.p2 = cur.p3 = cur.phase = 0;
                    continue;
                }
                int c = L.line[ia - 1];
                if (cur.phase == 0) {
                    // Candidates carrying the (c,d) ladder.
                    const auto& ac = g.neighbors(c);
                    const int degc = static_cast<int>(ac.size());
                    while (cur.p2 < degc) {
                        int d = ac[cur.p2++];
                        int id = L.idx[d];
                        if (id < ia + 2 || id > n - 2) continue;
                        int b = L.line[id - 1];
                        out = TransformSpec{kind, x, y, a, b, c, d};
                        return true;
                    }
                    cur.phase = 1;
                }
                // Candidates carrying only the (b,y) ladder.
                while (cur.p3 < degy) {
                    int b = ay[cur.p3++];
                    int ib = L.idx[b];
                    if (ib < ia + 1 || ib > n - 3) continue;
                    int d = L.line[ib + 1];
                    if (g.has_edge(c, d)) continue;  // yielded in phase 0
                    out = TransformSpec{kind, x, y, a, b, c, d};
                    return true;
                }
                ++cur.p1;
                cur.p2 = cur.p3 = cur.phase = 0;
            }
            return false;
        }
        case MoveKind::F4a: {
            while (cur.p1 < degx) {
                int a = ax[cur.p1];
                int ia = L.idx[a];
                int b = (ia >= 3 && ia <= n - 5) ? L.line[ia + 1] : -1;
                if (b < 0 || !g.has_edge(b, y)) {
                    ++cur.p1;
                    cur.p2 = cur.p3 = 0;
                    continue;
                }
                if (cur.p2 < 2) cur.p2 = 2;
                while (cur.p2 <= ia - 1) {
                    int ic = cur.p2;
                    int c = L.line[ic], e = L.line[ic - 1];
                    const auto& ac = g.neighbors(c);
                    const int degc = static_cast<int>(ac.size());
                    while (cur.p3 < degc) {
                        int d = ac[cur.p3++];
                        int id = L.idx[d];
                        if (id < ia + 2 || id > n - 3) continue;
                        int f = L.line[id + 1];
                        TransformSpec sp{kind, x, y, a, b, c, d};
                        sp.e = e;
                        sp.f = f;
                        out = sp;
                        return true;
                    }
                    ++cur.p2;
                    cur.p3 = 0;
                }
                ++cur.p1;
                cur.p2 = cur.p3 = 0;
            }
            return false;
        }
        case MoveKind::F4b: {
            while (cur.p1 < degx) {
                int a = ax[cur.p1];
                int ia = L.idx[a];
                if (ia < 3 || ia > n - 4) {
                    ++cur.p1;
                    cur.p2 = cur.p3 = 0;
                    continue;
                }
                int b = L.line[ia + 1];
                if (cur.p2 < 2) cur.p2 = 2;
                while (cur.p2 <= ia - 1) {
                    int ic = cur.p2;
                    int c = L.line[ic], e = L.line[ic - 1];
                    const auto& ac = g.neighbors(c);
                    const int degc = static_cast<int>(ac.size());
                    while (cur.p3 < degc) {
                        int d = ac[cur.p3++];
                        int id = L.idx[d];
                        if (id < ia + 2 || id > n - 2) continue;
                        int f = L.line[id - 1];
                        if (!g.has_edge(e, b) && !g.has_edge(f, y)) continue;
                        TransformSpec sp{kind, x, y, a, b, c, d};
                        sp.e = e;
                        sp.f = f;
                        out = sp;
                        return true;
                    }
                    ++cur.p2;
                    cur.p3 = 0;
                }
                ++cur.p1;
                cur.p2 = cur.p3 = 0;
            }
            return false;
        }
        case MoveKind::O4: {
            while (cur.p1 < degx) {
                int a = ax[cur.p1];
                int ia = L.idx[a];
                if (ia < 3 || ia > n - 3) {
                    ++cur.p1;
                    cur.p2 = cur.p3 = 0;
                    continue;
                }
                if (cur.p2 < 2) cur.p2 = 2;
                while (cur.p2 <= ia - 1) {
                    int ic = cur.p2;
                    int c = L.line[ic], e = L.line[ic - 1];
                    if (!g.has_edge(e, c)) {  // replaced adjacency must be a snake
                        ++cur.p2;
                        cur.p3 = 0;
                        continue;
                    }
                    const auto& ac = g.neighbors(c);
                    const int degc = static_cast<int>(ac.size());
                    while (cur.p3 < degc) {
                        int d = ac[cur.p3++];
                        int id = L.idx[d];
                        if (id < ia + 1 || id > n - 2) continue;
                        TransformSpec sp{kind, x, y, a, -1, c, d};
                        sp.e = e;
                        if (id == ia + 1) {
                            if (!g.has_edge(a, d)) continue;
                        } else {
                            int b = L.line[ia + 1], f = L.line[id - 1];
                            if (!g.has_edge(a, b) || !g.has_edge(f, d)) continue;
                            sp.b = b;
                            sp.f = f;
                        }
                        out = sp;
                        return true;
                    }
                    ++cur.p2;
                    cur.p3 = 0;
                }
                ++cur.p1;
                cur.p2 = cur.p3 = 0;
            }
            return false;
        }
        case MoveKind::F5: {
            const auto& ay = g.neighbors(y);
            const int degy = static_cast<int>(ay.size());
            while (cur.p1 < degx) {
                int a = ax[cur.p1];
                int ia = L.idx[a];
                if (ia < 3 || ia > n - 5) {
                    ++cur.p1;
                    cur.p2 = cur.p3 = cur.p4 = 0;
                    continue;
                }
                int f = L.line[ia + 1];
                const auto& af = g.neighbors(f);
                const int degf = static_cast<int>(af.size());
                while (cur.p2 < degf) {
                    int e = af[cur.p2];
                    int ie = L.idx[e];
                    if (ie < 1 || ie > ia - 2) {
                        ++cur.p2;
                        cur.p3 = cur.p4 = 0;
                        continue;
                    }
                    int c = L.line[ie + 1];
                    const auto& ac = g.neighbors(c);
                    const int degc = static_cast<int>(ac.size());
                    while (cur.p3 < degc) {
                        int d = ac[cur.p3];
                        int id = L.idx[d];
                        if (id < ia + 3 || id > n - 2) {
                            ++cur.p3;
                            cur.p4 = 0;
                            continue;
                        }
                        int j = L.line[id - 1], h = L.line[id + 1];
                        while (cur.p4 < degy) {
                            int b = ay[cur.p4++];
                            int ib = L.idx[b];
                            if (ib < ia + 2 || ib > id - 1) continue;
                            TransformSpec sp{kind, x, y, a, b, c, d};
                            sp.e = e;
                            sp.f = f;
                            sp.g = L.line[ib - 1];
                            sp.h = h;
                            sp.j = j;
                            out = sp;
                            return true;
                        }
                        ++cur.p3;
                        cur.p4 = 0;
                    }
                    ++cur.p2;
                    cur.p3 = cur.p4 = 0;
                }
                ++cur.p1;
                cur.p2 = cur.p3 = cur.p4 = 0;
            }
            return false;
        }
    }
    return false;
}

}  // namespace

bool eligible(const CircleOrdering& o, const TransformSpec& sp) {
    const Graph& g = o.graph();
    const int n = o.size();
    auto valid = [&](int v) { return v >= 0 && v < g.vertex_count(); };
    if (!valid(sp.x) || !valid(sp.y) || sp.x == sp.y) return false;
    if (!o.circle_adjacent(sp.x, sp.y) || g.has_edge(sp.x, sp.y)) return false;

    LinearView L;
    L.build(o, sp.x, sp.y);
    auto at = [&](int i) { return L.line[i]; };
    auto pos = [&](int v) { return valid(v) ? L.idx[v] : -1; };

    switch (sp.kind) {
        case MoveKind::C2a:
        case MoveKind::C2b:
        case MoveKind::F2: {
            int ia = pos(sp.a);
            if (ia < 2 || ia > n - 2 || !g.has_edge(sp.x, sp.a)) return false;
            if (sp.b != at(ia - 1)) return false;
            if (sp.kind == MoveKind::C2a && g.has_edge(sp.b, sp.a)) return false;
            if (sp.kind == MoveKind::C2b && !g.has_edge(sp.y, sp.b)) return false;
            return true;
        }
        case MoveKind::C3:
        case MoveKind::F3: {
            int ia = pos(sp.a), ib = pos(sp.b);
            if (ia < 2 || ia > n - 4 || !g.has_edge(sp.x, sp.a)) return false;
            if (ib < ia + 1 || ib > n - 3) return false;
            if (sp.c != at(ia - 1) || sp.d != at(ib + 1)) return false;
            bool cd = g.has_edge(sp.c, sp.d), by = g.has_edge(sp.b, sp.y);
            return sp.kind == MoveKind::C3 ? (cd && by) : (cd || by);
        }
        case MoveKind::F4a: {
            int ia = pos(sp.a), ic = pos(sp.c), id = pos(sp.d);
            if (ia < 3 || ia > n - 5 || !g.has_edge(sp.x, sp.a)) return false;
            if (sp.b != at(ia + 1) || !g.has_edge(sp.b, sp.y)) return false;
            if (ic < 2 || ic > ia - 1 || sp.e != at(ic - 1)) return false;
            if (id < ia + 2 || id > n - 3 || !g.has_edge(sp.c, sp.d)) return false;
            return sp.f == at(id + 1);
        }
        case MoveKind::F4b: {
            int ia = pos(sp.a), ic = pos(sp.c), id = pos(sp.d);
            if (ia < 3 || ia > n - 4 || !g.has_edge(sp.x, sp.a)) return false;
            if (sp.b != at(ia + 1)) return false;
            if (ic < 2 || ic > ia - 1 || sp.e != at(ic - 1)) return false;
            if (id < ia + 2 || id > n - 2 || !g.has_edge(sp.c, sp.d)) return false;
            if (sp.f != at(id - 1)) return false;
            return g.has_edge(sp.e, sp.b) || g.has_edge(sp.f, sp.y);
        }
        case MoveKind::O4: {
            int ia = pos(sp.a), ic = pos(sp.c), id = pos(sp.d);
            if (ia < 3 || ia > n - 3 || !g.has_edge(sp.x, sp.a)) return false;
            if (ic < 2 || ic > ia - 1 || sp.e != at(ic - 1)) return false;
            if (!g.has_edge(sp.e, sp.c)) return false;
            if (id < ia + 1 || id > n - 2 || !g.has_edge(sp.c, sp.d)) return false;
            if (id == ia + 1) {
                return sp.b == -1 && sp.f == -1 && g.has_edge(sp.a, sp.d);
            }
            if (sp.b != at(ia + 1) || sp.f != at(id - 1)) return false;
            return g.has_edge(sp.a, sp.b) && g.has_edge(sp.f, sp.d);
        }
        case MoveKind::F5: {
            int ia = pos(sp.a), ie = pos(sp.e), ib = pos(sp.b), id = pos(sp.d);
            if (ia < 3 || ia > n - 5 || !g.has_edge(sp.x, sp.a)) return false;
            if (sp.f != at(ia + 1) || !g.has_edge(sp.f, sp.e)) return false;
            if (ie < 1 || ie > ia - 2 || sp.c != at(ie + 1)) return false;
            if (id < ia + 3 || id > n - 2 || !g.has_edge(sp.c, sp.d)) return false;
            if (sp.j != at(id - 1) || sp.h != at(id + 1)) return false;
            if (ib < ia + 2 || ib > id - 1 || !g.has_edge(sp.b, sp.y)) return false;
            return sp.g == at(ib - 1);
        }
    }
    return false;
}

CircleOrdering apply_move(const CircleOrdering& o, const TransformSpec& spec) {
    if (!eligible(o, spec)) {
        throw std::invalid_argument("apply_move: spec not eligible: " +
                                    spec.describe_external());
    }
    LinearView L;
    L.build(o, spec.x, spec.y);
    return CircleOrdering(o.graph(), plan_apply(plan_for(spec, L), L));
}

CircleOrdering apply_via_generators(const CircleOrdering& o, const TransformSpec& sp) {
    switch (sp.kind) {
        case MoveKind::C2a:
        case MoveKind::C2b:
        case MoveKind::F2:
            return apply_gamma(o, sp.y, sp.x, sp.a);
        case MoveKind::C3:
        case MoveKind::F3: {
            CircleOrdering mid = apply_gamma(o, sp.y, sp.x, sp.a);
            return apply_gamma(mid, sp.c, sp.y, sp.b);
        }
        case MoveKind::F4a: {
            CircleOrdering mid = apply_kappa(o, sp.x, sp.a, sp.c, sp.d);
            mid = apply_gamma(mid, sp.b, sp.e, sp.f);
            return apply_gamma(mid, sp.d, sp.b, sp.y);
        }
        case MoveKind::F4b:
        case MoveKind::O4:
            return apply_kappa(o, sp.x, sp.a, sp.c, sp.d);
        case MoveKind::F5: {
            CircleOrdering mid = apply_kappa(o, sp.x, sp.a, sp.c, sp.d);
            return apply_kappa(mid, sp.j, sp.d, sp.g, sp.h);
        }
    }
    throw std::logic_error("unreachable");
}

void junction_pairs(const CircleOrdering& o, const TransformSpec& spec,
                    std::vector<std::pair<int, int>>& destroyed,
                    std::vector<std::pair<int, int>>& created) {
    LinearView L;
    L.build(o, spec.x, spec.y);
    plan_junctions(plan_for(spec, L), L, destroyed, created);
}

int predicted_gap_delta(const CircleOrdering& o, const TransformSpec& spec) {
    if (!eligible(o, spec)) {
        throw std::invalid_argument("predicted_gap_delta: spec not eligible");
    }
    std::vector<std::pair<int, int>> destroyed, created;
    junction_pairs(o, spec, destroyed, created);
    const Graph& g = o.graph();
    int delta = 0;
    for (auto [u, v] : created) delta += !g.has_edge(u, v);
    for (auto [u, v] : destroyed) delta -= !g.has_edge(u, v);
    return delta;
}

namespace {

struct SlotInfo {
    int x, y;
};

// Pivot endpoints for a gap slot under the given orientation. Orientation 0
// takes x at the lower circle position of the pair.
SlotInfo slot_pivot(const CircleOrdering& o, int slot, int orient) {
    int u = o.at(slot), v = o.at(o.next(slot));
    int lower = (slot == o.size() - 1) ? v : u;
    int other = lower == u ? v : u;
    return orient == 0 ? SlotInfo{lower, other} : SlotInfo{other, lower};
}

}  // namespace

bool next_move(const CircleOrdering& o, std::span<const MoveKind> kinds, int pivot_slot,
               ScanCursor& cur, TransformSpec& out) {
    const int n = o.size();
    const Graph& g = o.graph();
    LinearView L;
    int built_slot = -1, built_orient = -1;
    while (cur.gap_pos < n) {
        int slot = cur.gap_pos;
        if (pivot_slot >= 0) {
            if (slot < pivot_slot) {
                cur.gap_pos = pivot_slot;
                continue;
            }
            if (slot > pivot_slot) return false;
        }
        if (g.has_edge(o.at(slot), o.at(o.next(slot)))) {
            ++cur.gap_pos;
            continue;
        }
        while (cur.orient < 2) {
            auto [x, y] = slot_pivot(o, slot, cur.orient);
            if (built_slot != slot || built_orient != cur.orient) {
                L.build(o, x, y);
                built_slot = slot;
                built_orient = cur.orient;
            }
            while (cur.kind < static_cast<int>(kinds.size())) {
                if (next_candidate(o, L, x, y, kinds[cur.kind], cur, out)) return true;
                ++cur.kind;
                cur.p1 = cur.p2 = cur.p3 = cur.p4 = cur.phase = 0;
            }
            ++cur.orient;
            cur.kind = 0;
            cur.p1 = cur.p2 = cur.p3 = cur.p4 = cur.phase = 0;
        }
        ++cur.gap_pos;
        cur.orient = 0;
    }
    return false;
}

std::optional<TransformSpec> scan_closing(const CircleOrdering& o) {
    ScanCursor cur;
    TransformSpec sp;
    if (next_move(o, kClosingKinds, -1, cur, sp)) return sp;
    return std::nullopt;
}

namespace {

int find_gap_slot(const CircleOrdering& o, const Gap& pivot) {
    for (int i = 0; i < o.size(); ++i) {
        Gap here(o.at(i), o.at(o.next(i)));
        if (here == pivot) {
            if (o.graph().has_edge(pivot.u, pivot.v)) break;
            return i;
        }
    }
    throw std::invalid_argument("pivot is not a live gap of the ordering");
}

}  // namespace

std::optional<std::pair<TransformSpec, CircleOrdering>> scan_floating(
    const CircleOrdering& o, const Gap& pivot,
    const std::function<bool(const CanonicalKey&)>& reject) {
    int slot = find_gap_slot(o, pivot);
    ScanCursor cur;
    TransformSpec sp;
    while (next_move(o, kFloatingKinds, slot, cur, sp)) {
        CircleOrdering result = apply_move(o, sp);
        if (!reject(canonical_key(result))) {
            return std::make_pair(sp, std::move(result));
        }
    }
    return std::nullopt;
}

std::vector<TransformSpec> enumerate_opening(const CircleOrdering& o, const Gap& pivot) {
    int slot = find_gap_slot(o, pivot);
    std::vector<TransformSpec> out;
    ScanCursor cur;
    TransformSpec sp;
    while (next_move(o, kOpeningKinds, slot, cur, sp)) out.push_back(sp);
    return out;
}

}  // namespace slh
