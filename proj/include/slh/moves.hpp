#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slh/ordering.hpp"

namespace slh {

/// The nine circle transformations. Closing kinds always reduce the gap
/// count, floating kinds never increase it, the opening kind may add one.
enum class MoveKind : uint8_t { C2a, C2b, C3, F2, F3, F4a, F4b, F5, O4 };

const char* move_kind_name(MoveKind k);
bool is_closing(MoveKind k);
bool is_floating(MoveKind k);

/// A fully bound transformation: the pivot gap endpoints (x, y) fix the
/// linearization (x first, y last), the remaining fields are the pattern
/// vertices of the kind; -1 marks fields the kind does not use.
struct TransformSpec {
    MoveKind kind = MoveKind::F2;
    int x = -1, y = -1;
    int a = -1, b = -1, c = -1, d = -1;
    int e = -1, f = -1, g = -1, h = -1, j = -1;

    friend bool operator==(const TransformSpec&, const TransformSpec&) = default;

    int gamma_count() const;
    int kappa_count() const;
    /// "kind x=.. y=.. ..." with external (1-based) labels, fields in a
    /// fixed per-kind order. Stable; used by the trace format.
    std::string describe_external() const;
};

/// Structural revalidation of a spec against an ordering: pivot is a live
/// gap, every bound vertex sits where the kind's pattern requires, and the
/// kind's ladder/snake/gap requirements hold.
bool eligible(const CircleOrdering& o, const TransformSpec& spec);

/// Applies the spec's segment rearrangement. Throws if not eligible.
CircleOrdering apply_move(const CircleOrdering& o, const TransformSpec& spec);

/// Same result as apply_move, but built by literally composing the
/// generator isomorphisms the kind expands to. Exercised by tests.
CircleOrdering apply_via_generators(const CircleOrdering& o, const TransformSpec& spec);

/// gap_count(apply_move(o, spec)) - gap_count(o), computed from the few
/// circle adjacencies the move destroys and creates. Throws if not eligible.
int predicted_gap_delta(const CircleOrdering& o, const TransformSpec& spec);

/// Cursor over the canonical candidate stream of one ordering: gap slots in
/// circle order, per gap both pivot orientations, kinds in fixed order, free
/// vertices in ascending adjacency order. Valid only for the ordering it was
/// started on.
struct ScanCursor {
    int gap_pos = 0;  // circle slot of the pivot pair (position of its first element)
    int orient = 0;   // 0: x = endpoint at the lower circle position; 1: the other
    int kind = 0;     // index into the scan's kind list
    int p1 = 0, p2 = 0, p3 = 0, p4 = 0;
    int phase = 0;  // sub-stream selector for kinds with two enumeration routes
};

inline constexpr std::array<MoveKind, 3> kClosingKinds{MoveKind::C2a, MoveKind::C2b,
                                                       MoveKind::C3};
inline constexpr std::array<MoveKind, 5> kFloatingKinds{
    MoveKind::F2, MoveKind::F3, MoveKind::F4a, MoveKind::F4b, MoveKind::F5};
inline constexpr std::array<MoveKind, 1> kOpeningKinds{MoveKind::O4};

/// Advances cur past the next eligible candidate and returns it in out.
/// pivot_slot >= 0 restricts the scan to one gap slot. Returns false when
/// the stream is exhausted.
bool next_move(const CircleOrdering& o, std::span<const MoveKind> kinds, int pivot_slot,
               ScanCursor& cur, TransformSpec& out);

/// Unordered vertex pairs whose circle adjacency the move destroys/creates.
/// A pair present in both lists stays adjacent through the move.
void junction_pairs(const CircleOrdering& o, const TransformSpec& spec,
                    std::vector<std::pair<int, int>>& destroyed,
                    std::vector<std::pair<int, int>>& created);

/// First eligible closing transformation under the canonical scan order.
std::optional<TransformSpec> scan_closing(const CircleOrdering& o);

/// First eligible floating transformation around the given live gap whose
/// resulting ordering's canonical key the predicate does not reject.
std::optional<std::pair<TransformSpec, CircleOrdering>> scan_floating(
    const CircleOrdering& o, const Gap& pivot,
    const std::function<bool(const CanonicalKey&)>& reject);

/// All eligible opening transformations around the given live gap, both
/// orientations, in canonical scan order.
std::vector<TransformSpec> enumerate_opening(const CircleOrdering& o, const Gap& pivot);

}  // namespace slh
