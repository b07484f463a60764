#pragma once

#include <string>
#include <vector>

#include "slh/graph.hpp"
#include "slh/ordering.hpp"

namespace slh {

/// How far an ordering is from a reference Hamiltonian cycle: k snakes of
/// the ordering lie on the cycle, dist = n - k, and the merit value
/// gaps/3 + dist is carried exactly in thirds (never floating point).
struct DistanceReport {
    int common_snakes = 0;
    int dist = 0;
    int delta_thirds = 0;  // 3*dist + gap_count

    friend bool operator==(const DistanceReport&, const DistanceReport&) = default;
};

/// Throws if h is not a Hamiltonian cycle of o's graph.
DistanceReport distance_report(const CircleOrdering& o, const Cycle& h);

/// One generator application; gamma binds (y, x, a), kappa binds (x, a, c, d).
struct GeneratorApp {
    bool is_kappa = false;
    int p1 = -1, p2 = -1, p3 = -1, p4 = -1;

    std::string describe() const;
};

struct ImprovingMove {
    std::vector<GeneratorApp> apps;  // applied in order (one or two)
    DistanceReport before, after;
    int gaps_before = 0, gaps_after = 0;
};

CircleOrdering apply_generator(const CircleOrdering& o, const GeneratorApp& app);

/// Searches single gamma, single kappa, and kappa-then-gamma compositions
/// for a move that brings o closer to the ordering of h: dist drops by at
/// least 1 while the gap count rises by at most 1 (at most 2 when o has no
/// gaps at all). Throws with a diagnostic dump if nothing qualifies.
ImprovingMove find_improving_generator_move(const CircleOrdering& o, const Cycle& h);

}  // namespace slh
