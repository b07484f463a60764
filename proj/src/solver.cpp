#include "slh/solver.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cstdio>
#include <stdexcept>

namespace slh {

namespace {

uint64_t pow_saturating(uint64_t base, int exp) {
    uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

int gap_delta_of(const Graph& g, const std::vector<std::pair<int, int>>& destroyed,
                 const std::vector<std::pair<int, int>>& created) {
    int delta = 0;
    for (auto [u, v] : created) delta += !g.has_edge(u, v);
    for (auto [u, v] : destroyed) delta -= !g.has_edge(u, v);
    return delta;
}

}  // namespace

std::string TraceEvent::format() const {
    char tail[64];
    std::snprintf(tail, sizeof(tail), " gaps=%d listed=%llu key=%016llx", gap_count_after,
                  static_cast<unsigned long long>(orderings_listed),
                  static_cast<unsigned long long>(canonical_hash));
    return "step=" + std::to_string(step) + " stage=" + std::to_string(stage) +
           " move=" + spec.describe_external() + tail;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::HamiltonianCycle: return "HAMILTONIAN";
        case Verdict::LikelyNonHamiltonian: return "LIKELY_NON_HAMILTONIAN";
        case Verdict::CertifiedNonHamiltonian: return "CERTIFIED_NON_HAMILTONIAN";
    }
    return "?";
}

Solver::Solver(const Graph& g, SolverConfig config, std::optional<std::vector<int>> initial)
    : g_(g), cfg_(std::move(config)) {
    const int n = g.vertex_count();
    if (cfg_.budget_exponent < 1) throw std::invalid_argument("budget_exponent must be >= 1");
    list_cap_ = pow_saturating(static_cast<uint64_t>(n), cfg_.budget_exponent);
    generator_cap_ = cfg_.generator_cap ? cfg_.generator_cap
                                        : pow_saturating(static_cast<uint64_t>(n), 4);
    if (generator_cap_ < static_cast<uint64_t>(n)) generator_cap_ = n;
    std::vector<int> seq;
    if (initial) {
        seq = std::move(*initial);
    } else {
        seq.resize(n);
        for (int i = 0; i < n; ++i) seq[i] = i;
    }
    root_ = make_ordering(g, std::move(seq));
}

bool Solver::spend_generators(const TransformSpec& sp) {
    uint64_t cost = sp.gamma_count() + sp.kappa_count();
    if (stats_.generators_applied + cost > generator_cap_) {
        stats_.budget_exhausted = true;
        return false;
    }
    stats_.generators_applied += cost;
    ++stats_.moves_applied;
    return true;
}

bool Solver::list_node_key(const KeyHash& kh) {
    if (static_cast<uint64_t>(tabu_.size()) >= list_cap_) {
        stats_.budget_exhausted = true;
        return false;
    }
    tabu_.insert(kh);
    ++stats_.orderings_listed;
    stats_.max_list_size = std::max<uint64_t>(stats_.max_list_size, tabu_.size());
    return true;
}

int32_t Solver::add_node(int32_t parent, const TransformSpec& sp, const KeyHash& kh,
                         int gaps) {
    nodes_.push_back(Node{kh, parent, sp, gaps});
    return static_cast<int32_t>(nodes_.size()) - 1;
}

void Solver::push_entry(int32_t node, CircleOrdering o) {
    StackEntry e;
    e.node = node;
    e.gaps = list_gaps(o);
    e.o = std::move(o);
    stack_.push_back(std::move(e));
}

void Solver::reset_lists_keeping(int32_t node, CircleOrdering o) {
    tabu_.clear();
    gap_list_.clear();
    tabu_.insert(nodes_[node].key);
    ++stats_.orderings_listed;
    stack_.clear();
    push_entry(node, std::move(o));
    ++stats_.improvements;
}

void Solver::record_gaps_of(const std::vector<Gap>& gaps) {
    for (const Gap& gp : gaps) gap_list_.insert(gp.packed());
    assert(gap_list_.size() <=
           static_cast<size_t>(g_.vertex_count()) * (g_.vertex_count() - 1) / 2);
}

std::vector<TransformSpec> Solver::path_to(int32_t node) const {
    std::vector<TransformSpec> path;
    for (int32_t v = node; v > 0; v = nodes_[v].parent) path.push_back(nodes_[v].spec);
    std::reverse(path.begin(), path.end());
    std::vector<TransformSpec> full = stage0_moves_;
    full.insert(full.end(), path.begin(), path.end());
    return full;
}

CircleOrdering Solver::materialize(int32_t node) const {
    std::vector<TransformSpec> path;
    for (int32_t v = node; v > 0; v = nodes_[v].parent) path.push_back(nodes_[v].spec);
    CircleOrdering o = root_;
    for (auto it = path.rbegin(); it != path.rend(); ++it) o = apply_move(o, *it);
    return o;
}

void Solver::emit_trace(int stage, const TransformSpec& sp, int gaps_after,
                        const KeyHash& kh) {
    if (!cfg_.trace_sink) {
        ++trace_steps_;
        return;
    }
    TraceEvent ev;
    ev.step = ++trace_steps_;
    ev.stage = stage;
    ev.spec = sp;
    ev.gap_count_after = gaps_after;
    ev.orderings_listed = tabu_.size();
    ev.canonical_hash = kh.lo;
    cfg_.trace_sink(ev);
}

int Solver::current_gap_count() const {
    return nodes_.empty() ? root_.gap_count() : nodes_.back().gaps;
}

StageStatus Solver::run_stage0() {
    while (root_.gap_count() > 0) {
        auto sp = scan_closing(root_);
        if (!sp) break;
        if (!spend_generators(*sp)) break;  // cap is >= n, effectively unreachable
        root_ = apply_move(root_, *sp);
        stage0_moves_.push_back(*sp);
        emit_trace(0, *sp, root_.gap_count(), hash_key(canonical_key(root_)));
    }
    // Stage boundary bookkeeping: the list starts holding only this ordering.
    KeyHash kh = hash_key(canonical_key(root_));
    nodes_.clear();
    tabu_.clear();
    gap_list_.clear();
    stack_.clear();
    add_node(-1, TransformSpec{}, kh, root_.gap_count());
    list_node_key(kh);
    push_entry(0, root_);
    if (root_.gap_count() == 0) {
        solved_node_ = 0;
        return StageStatus::Solved;
    }
    return StageStatus::Exhausted;
}

StageStatus Solver::run_stage1() {
    std::vector<std::pair<int, int>> destroyed, created;
    while (!stack_.empty()) {
        StackEntry& top = stack_.back();
        TransformSpec sp;
        if (!next_move(top.o, kFloatingKinds, -1, top.cur, sp)) {
            stack_.pop_back();
            continue;
        }
        // The pivot gap is recorded as soon as a move around it is evaluated.
        gap_list_.insert(Gap(sp.x, sp.y).packed());
        junction_pairs(top.o, sp, destroyed, created);
        const int delta = gap_delta_of(g_, destroyed, created);
        assert(delta <= 0);
        bool accepted = delta < 0;
        if (!accepted) {
            for (auto [u, v] : created) {
                if (!g_.has_edge(u, v) && !gap_list_.count(Gap(u, v).packed())) {
                    accepted = true;
                    break;
                }
            }
        }
        if (!accepted) {
            // Surviving gaps that were never recorded (possible right after a
            // reset, when the plateau ordering's own gaps are unlisted).
            for (const Gap& gp : top.gaps) {
                bool gone = false;
                for (auto [u, v] : destroyed) {
                    if (Gap(u, v) == gp) {
                        gone = true;
                        break;
                    }
                }
                if (!gone && !gap_list_.count(gp.packed())) {
                    accepted = true;
                    break;
                }
            }
        }
        if (!accepted) continue;
        if (!spend_generators(sp)) return StageStatus::Budget;
        CircleOrdering result = apply_move(top.o, sp);
        KeyHash kh = hash_key(canonical_key(result));
        if (!list_node_key(kh)) return StageStatus::Budget;
        int32_t node = add_node(top.node, sp, kh, result.gap_count());
        emit_trace(1, sp, result.gap_count(), kh);
        if (result.gap_count() == 0) {
            solved_node_ = node;
            return StageStatus::Solved;
        }
        if (delta < 0) {
            reset_lists_keeping(node, std::move(result));
        } else {
            push_entry(node, std::move(result));
            record_gaps_of(stack_.back().gaps);
        }
    }
    return StageStatus::Exhausted;
}

StageStatus Solver::run_stage2() {
    const int32_t base_node = static_cast<int32_t>(nodes_.size()) - 1;
    CircleOrdering base = materialize(base_node);
    stage2_baseline_ = base.gap_count();
    for (const Gap& gap : list_gaps(base)) {
        for (const TransformSpec& sp : enumerate_opening(base, gap)) {
            CircleOrdering result = apply_move(base, sp);
            KeyHash kh = hash_key(canonical_key(result));
            if (tabu_.count(kh)) continue;
            if (!spend_generators(sp)) return StageStatus::Budget;
            if (!list_node_key(kh)) return StageStatus::Budget;
            int32_t node = add_node(base_node, sp, kh, result.gap_count());
            emit_trace(2, sp, result.gap_count(), kh);
            if (result.gap_count() == 0) {
                solved_node_ = node;
                return StageStatus::Solved;
            }
            stack_.clear();
            push_entry(node, std::move(result));
            StageStatus st = run_stage1();
            if (st == StageStatus::Solved || st == StageStatus::Budget) return st;
            const int32_t last = static_cast<int32_t>(nodes_.size()) - 1;
            if (nodes_[last].gaps < stage2_baseline_) {
                reset_lists_keeping(last, materialize(last));
                return StageStatus::Improved;
            }
        }
    }
    return StageStatus::Exhausted;
}

StageStatus Solver::chase_improving(int stage) {
    std::vector<std::pair<int, int>> destroyed, created;
    int32_t last_stall_check = -1;
    while (!stack_.empty()) {
        StackEntry& top = stack_.back();
        TransformSpec sp;
        bool descended = false;
        while (next_move(top.o, kFloatingKinds, -1, top.cur, sp)) {
            junction_pairs(top.o, sp, destroyed, created);
            if (gap_delta_of(g_, destroyed, created) >= 0) continue;
            CircleOrdering result = apply_move(top.o, sp);
            KeyHash kh = hash_key(canonical_key(result));
            if (tabu_.count(kh)) continue;
            if (!spend_generators(sp)) return StageStatus::Budget;
            if (!list_node_key(kh)) return StageStatus::Budget;
            int32_t node = add_node(top.node, sp, kh, result.gap_count());
            emit_trace(stage, sp, result.gap_count(), kh);
            if (result.gap_count() == 0) {
                solved_node_ = node;
                return StageStatus::Solved;
            }
            push_entry(node, std::move(result));
            descended = true;
            break;
        }
        if (descended) continue;
        // Chain stalled. The deepest node listed so far is the candidate for
        // the improvement test against the stage-2 snapshot.
        const int32_t deepest = static_cast<int32_t>(nodes_.size()) - 1;
        if (deepest != last_stall_check) {
            last_stall_check = deepest;
            if (nodes_[deepest].gaps < stage2_baseline_) {
                reset_lists_keeping(deepest, materialize(deepest));
                return StageStatus::Improved;
            }
        }
        stack_.pop_back();
    }
    return StageStatus::Exhausted;
}

StageStatus Solver::run_stage3() {
    while (true) {
        const int32_t base_node = static_cast<int32_t>(nodes_.size()) - 1;
        CircleOrdering base = materialize(base_node);
        int32_t opened = -1;
        CircleOrdering opened_ordering;
        for (const Gap& gap : list_gaps(base)) {
            for (const TransformSpec& sp : enumerate_opening(base, gap)) {
                CircleOrdering result = apply_move(base, sp);
                KeyHash kh = hash_key(canonical_key(result));
                if (tabu_.count(kh)) continue;
                if (!spend_generators(sp)) return StageStatus::Budget;
                if (!list_node_key(kh)) return StageStatus::Budget;
                opened = add_node(base_node, sp, kh, result.gap_count());
                emit_trace(3, sp, result.gap_count(), kh);
                opened_ordering = std::move(result);
                break;
            }
            if (opened >= 0) break;
        }
        if (opened < 0) return StageStatus::Exhausted;  // pattern space exhausted
        if (opened_ordering.gap_count() == 0) {
            solved_node_ = opened;
            return StageStatus::Solved;
        }
        stack_.clear();
        push_entry(opened, std::move(opened_ordering));
        StageStatus st = chase_improving(3);
        if (st != StageStatus::Exhausted) return st;
    }
}

SolveResult Solver::take_result(Verdict v) {
    SolveResult res;
    res.verdict = v;
    res.stats = stats_;
    int32_t final_node = solved_node_;
    if (final_node < 0) final_node = nodes_.empty() ? -1 : static_cast<int32_t>(nodes_.size()) - 1;
    if (final_node >= 0) {
        CircleOrdering fin = materialize(final_node);
        res.final_seq = fin.seq();
        res.stats.gaps_at_exit = fin.gap_count();
        res.trace = path_to(final_node);
        if (v == Verdict::HamiltonianCycle) {
            res.cycle = Cycle{fin.seq()};
            if (!verify_hamiltonian_cycle(g_, *res.cycle)) {
                throw std::logic_error("internal error: emitted cycle failed verification");
            }
        }
    } else {
        res.final_seq = root_.seq();
        res.stats.gaps_at_exit = root_.gap_count();
        res.trace = stage0_moves_;
    }
    return res;
}

SolveResult solve(const Graph& g, const SolverConfig& config,
                  std::optional<std::vector<int>> initial) {
    auto t0 = std::chrono::steady_clock::now();
    auto finish = [&](SolveResult res) {
        res.stats.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return res;
    };

    PresolveResult pre = presolve(g);
    if (!pre.pass) {
        SolveResult res;
        res.verdict = Verdict::CertifiedNonHamiltonian;
        res.presolve = pre;
        if (initial) res.final_seq = *initial;
        return finish(res);
    }

    Solver s(g, config, std::move(initial));
    if (s.run_stage0() == StageStatus::Solved) {
        return finish(s.take_result(Verdict::HamiltonianCycle));
    }

    const int n = g.vertex_count();
    int next_stage = 1;
    while (true) {
        s.stats_.stage_reached = std::max(s.stats_.stage_reached, next_stage);
        StageStatus st = next_stage == 1   ? s.run_stage1()
                         : next_stage == 2 ? s.run_stage2()
                                           : s.run_stage3();
        if (st == StageStatus::Solved) {
            return finish(s.take_result(Verdict::HamiltonianCycle));
        }
        if (st == StageStatus::Budget) {
            return finish(s.take_result(Verdict::LikelyNonHamiltonian));
        }
        if (st == StageStatus::Improved) {
            if (++s.stats_.reentries > n) {
                s.stats_.budget_exhausted = true;
                return finish(s.take_result(Verdict::LikelyNonHamiltonian));
            }
            next_stage = 1;
            continue;
        }
        if (next_stage == 3) {  // pattern space exhausted
            return finish(s.take_result(Verdict::LikelyNonHamiltonian));
        }
        ++next_stage;
    }
}

}  // namespace slh
