#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "slh/graph.hpp"

namespace slh {

/// An unordered vertex pair that is circle-adjacent but not a graph edge.
struct Gap {
    int u, v;  // normalized u < v

    Gap() : u(-1), v(-1) {}
    Gap(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Gap&, const Gap&) = default;
    uint64_t packed() const {
        return (static_cast<uint64_t>(u) << 32) | static_cast<uint32_t>(v);
    }
};

/// Representative of an ordering's equivalence class under rotation and
/// reversal: the lexicographically least of the 2n candidate sequences.
struct CanonicalKey {
    std::vector<int> key;

    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

/// 128-bit fingerprint of a canonical key, used by the solver's tabu set.
struct KeyHash {
    uint64_t lo = 0, hi = 0;
    friend bool operator==(const KeyHash&, const KeyHash&) = default;
};

/// An arrangement of all vertices on a circle. Position n wraps to 0. The
/// graph is referenced, never owned; it must outlive the ordering.
class CircleOrdering {
public:
    CircleOrdering() = default;
    CircleOrdering(const Graph& g, std::vector<int> seq);

    const Graph& graph() const { return *g_; }
    int size() const { return static_cast<int>(seq_.size()); }
    const std::vector<int>& seq() const { return seq_; }
    int at(int position) const { return seq_[position]; }
    int position_of(int vertex) const { return pos_[vertex]; }
    int gap_count() const { return gap_count_; }

    int next(int position) const { return position + 1 == size() ? 0 : position + 1; }
    int prev(int position) const { return position == 0 ? size() - 1 : position - 1; }

    bool circle_adjacent(int u, int v) const;
    /// Graph edge between circle-adjacent vertices.
    bool is_snake(int u, int v) const { return circle_adjacent(u, v) && g_->has_edge(u, v); }
    /// Graph edge between vertices that are not circle-adjacent.
    bool is_ladder(int u, int v) const { return !circle_adjacent(u, v) && g_->has_edge(u, v); }

    int recount_gaps() const;

private:
    const Graph* g_ = nullptr;
    std::vector<int> seq_;
    std::vector<int> pos_;
    int gap_count_ = 0;
};

/// Ordering with validated permutation and cached gap count.
CircleOrdering make_ordering(const Graph& g, std::vector<int> seq);

/// Gaps in ascending order of the circle position of the pair's first
/// element, i.e. pair (seq[i], seq[i+1 mod n]) listed by i.
std::vector<Gap> list_gaps(const CircleOrdering& o);

CanonicalKey canonical_key(const CircleOrdering& o);
CanonicalKey canonical_key_of_seq(std::vector<int> seq);
KeyHash hash_key(const CanonicalKey& k);

/// Index of the lexicographically least rotation of s (Booth's algorithm).
int least_rotation(const std::vector<int>& s);

/// The first generator isomorphism. With the circle linearized from x and
/// ending at x's circle-neighbor y, splits it as (A,B) where B starts at a,
/// and rebuilds the circle as (A^R, B). Pure rearrangement of seq.
CircleOrdering apply_gamma(const CircleOrdering& o, int y, int x, int a);

/// The second generator isomorphism. Linearizing from x in the direction
/// where c precedes a precedes d, splits as (A,B,C,D) with B = (c..a) and
/// D starting at d (C may be empty), and rebuilds as (A^R, B^R, D, C^R).
CircleOrdering apply_kappa(const CircleOrdering& o, int x, int a, int c, int d);

}  // namespace slh
