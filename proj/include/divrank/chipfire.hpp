#pragma once

// Chip-firing on a multigraph.
//
// A vertex is active when it holds at least as many chips as its degree; a
// legal game fires active vertices only. Games either all halt at the same
// stable divisor or all run forever, so halting is a property of the start
// divisor.
//
// classify_halting decides it by simulation. Whenever every vertex has fired
// at least once the divisor is non-halting. Conversely, on a connected graph
// an infinite game fires every vertex. Chip counts stay bounded below (a vertex
// that has fired keeps >= 0, one that has not only gains), and the total is
// conserved, so every count is bounded above too. A vertex that never fires
// therefore sees its neighbours fire only finitely often, and by induction
// along paths the game would stop. So the simulation always reaches one of
// the two stop conditions.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "divrank/divisor.hpp"
#include "divrank/multigraph.hpp"

namespace divrank {

struct GameTrace {
    std::vector<VertexId> order;
    std::vector<std::uint64_t> counts;
    Divisor final;
};

enum class HaltKind { Halting, NonHalting };

struct HaltVerdict {
    HaltKind kind = HaltKind::Halting;
    std::optional<Divisor> stable;     // iff Halting
    std::optional<GameTrace> witness;  // iff NonHalting

    bool halting() const noexcept { return kind == HaltKind::Halting; }
};

struct RecurrenceResult {
    bool recurrent = false;
    std::optional<GameTrace> witness;  // iff recurrent; every vertex fired once
};

// Picks one of the currently active vertices (never called with an empty span).
using FiringPolicy = std::function<VertexId(std::span<const VertexId> active)>;

// Raw (not necessarily legal) firing of v.
Divisor fire(const Multigraph& g, const Divisor& f, VertexId v);

bool is_active(const Multigraph& g, const Divisor& f, VertexId v);

bool is_stable(const Multigraph& g, const Divisor& f);

// Canonical policy: fire the lowest-indexed active vertex.
HaltVerdict classify_halting(const Multigraph& g, const Divisor& f);
HaltVerdict classify_halting(const Multigraph& g, const Divisor& f, const FiringPolicy& policy);
HaltVerdict classify_halting(const Multigraph& g, const Divisor& f, std::mt19937_64& rng);

// Full log of the canonical game, stopping at a stable divisor or as soon as
// every vertex has fired.
GameTrace canonical_game(const Multigraph& g, const Divisor& f);

// Greedy exactly-once game, lowest-indexed active unfired vertex first.
// Greedy is complete: if it stalls on fired set A while some exactly-once
// order exists, the first vertex of that order outside A has received at
// least as many chips as it had when it fired there, so it is active.
RecurrenceResult is_recurrent(const Multigraph& g, const Divisor& f);

// f is winnable iff d_G - 1 - f halts. No sign assumption on d_G - 1 - f.
bool is_winnable(const Multigraph& g, const Divisor& f);

// Folds fire over seq. With require_legal, throws IllegalFiring at the first
// inactive vertex.
Divisor fire_sequence(const Multigraph& g, const Divisor& f, std::span<const VertexId> seq,
                      bool require_legal);

// Throws InputError unless g is connected and f matches its size.
void require_connected(const Multigraph& g, const Divisor& f);

}  // namespace divrank
