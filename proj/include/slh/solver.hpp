#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "slh/graph.hpp"
#include "slh/moves.hpp"
#include "slh/ordering.hpp"

namespace slh {

/// One line of the move trace. Emitted for every performed (path-extending)
/// move; evaluation-only candidates are not traced.
struct TraceEvent {
    uint64_t step = 0;
    int stage = 0;
    TransformSpec spec;
    int gap_count_after = 0;
    uint64_t orderings_listed = 0;
    uint64_t canonical_hash = 0;

    /// Stable line format: "step=N stage=S move=<kind params...> gaps=G
    /// listed=L key=<16 hex digits>". Labels are external (1-based).
    std::string format() const;
};

using TraceSink = std::function<void(const TraceEvent&)>;

struct SolverConfig {
    /// Ordering-list cap is n^budget_exponent.
    int budget_exponent = 3;
    /// Total gamma/kappa applications allowed; 0 means the default n^4.
    uint64_t generator_cap = 0;
    TraceSink trace_sink;
};

enum class Verdict { HamiltonianCycle, LikelyNonHamiltonian, CertifiedNonHamiltonian };

struct SolveStats {
    int stage_reached = 0;
    int gaps_at_exit = 0;
    uint64_t orderings_listed = 0;  // cumulative insertions, including resets
    uint64_t max_list_size = 0;     // high-water mark of the live ordering list
    uint64_t moves_applied = 0;
    uint64_t generators_applied = 0;
    int improvements = 0;
    int reentries = 0;
    bool budget_exhausted = false;
    double seconds = 0.0;
};

struct SolveResult {
    Verdict verdict = Verdict::LikelyNonHamiltonian;
    PresolveResult presolve;
    std::optional<Cycle> cycle;
    /// Moves from the initial ordering to the final one; replaying them in
    /// order reproduces final_seq exactly.
    std::vector<TransformSpec> trace;
    std::vector<int> final_seq;
    SolveStats stats;
};

enum class StageStatus { Solved, Exhausted, Improved, Budget };

/// One deterministic run over one graph. Normal use is solve(); the stage
/// methods are exposed so the stages can be driven and observed directly.
class Solver {
public:
    Solver(const Graph& g, SolverConfig config, std::optional<std::vector<int>> initial);

    /// Closing transformations to quiescence. Returns Solved or Exhausted.
    StageStatus run_stage0();
    /// Floating search over the backtrack stack with the gap-list tabu rule.
    StageStatus run_stage1();
    /// Openings from the latest plateau ordering, each followed by stage 1.
    StageStatus run_stage2();
    /// Opening + strictly-improving chase, depth first, until the ordering
    /// list fills or the pattern space is exhausted.
    StageStatus run_stage3();

    SolveResult take_result(Verdict v);
    const SolveStats& stats() const { return stats_; }
    int current_gap_count() const;

private:
    struct KeyHashHasher {
        size_t operator()(const KeyHash& k) const { return static_cast<size_t>(k.lo ^ k.hi); }
    };
    struct Node {
        KeyHash key;
        int32_t parent;
        TransformSpec spec;  // move creating this node from parent
        int gaps;
    };
    struct StackEntry {
        int32_t node;
        CircleOrdering o;
        std::vector<Gap> gaps;
        ScanCursor cur;
    };

    const Graph& g_;
    SolverConfig cfg_;
    uint64_t list_cap_;
    uint64_t generator_cap_;

    CircleOrdering root_;                  // ordering after stage 0
    std::vector<TransformSpec> stage0_moves_;
    std::vector<Node> nodes_;
    std::unordered_set<KeyHash, KeyHashHasher> tabu_;
    std::unordered_set<uint64_t> gap_list_;
    std::vector<StackEntry> stack_;
    int stage2_baseline_ = -1;  // gap count recorded when stage 2 last began
    int32_t solved_node_ = -1;
    uint64_t trace_steps_ = 0;
    SolveStats stats_;

    bool spend_generators(const TransformSpec& sp);
    bool list_node_key(const KeyHash& kh);
    int32_t add_node(int32_t parent, const TransformSpec& sp, const KeyHash& kh, int gaps);
    void push_entry(int32_t node, CircleOrdering o);
    void reset_lists_keeping(int32_t node, CircleOrdering o);
    void record_gaps_of(const std::vector<Gap>& gaps);
    CircleOrdering materialize(int32_t node) const;
    std::vector<TransformSpec> path_to(int32_t node) const;
    void emit_trace(int stage, const TransformSpec& sp, int gaps_after, const KeyHash& kh);
    StageStatus chase_improving(int stage);

    friend SolveResult solve(const Graph&, const SolverConfig&,
                             std::optional<std::vector<int>>);
};

/// Presolve, stage 0, then the stage 1 -> 2 -> 3 loop with returns to
/// stage 1 on improvement. Deterministic for identical inputs.
SolveResult solve(const Graph& g, const SolverConfig& config = {},
                  std::optional<std::vector<int>> initial = std::nullopt);

const char* verdict_name(Verdict v);

}  // namespace slh
