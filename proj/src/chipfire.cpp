#include "divrank/chipfire.hpp"

#include <string>

#include "divrank/errors.hpp"

namespace divrank {

namespace {

void check_vertex(const Multigraph& g, VertexId v) {
    if (v >= g.vertex_count()) {
        throw InputError("vertex " + std::to_string(v) + " out of range [0," +
                         std::to_string(g.vertex_count()) + ")");
    }
}

void fire_in_place(const Multigraph& g, std::vector<Chips>& chips, VertexId v) {
    chips[v] -= g.degrees()[v];
    for (const auto& nb : g.neighbors(v)) chips[nb.vertex] += nb.mult;
}

// Plays a legal game until it halts or every vertex has fired at least once.
// `choose` returns the next vertex to fire, or g.vertex_count() if none is active.
template <class Choose>
std::pair<HaltKind, GameTrace> play(const Multigraph& g, const Divisor& f, Choose&& choose) {
    const std::size_t n = g.vertex_count();
    std::vector<Chips> chips(f.begin(), f.end());
    GameTrace trace;
    trace.counts.assign(n, 0);
    std::size_t fired_distinct = 0;
    while (true) {
        if (fired_distinct == n) {
            trace.final = Divisor(std::move(chips));
            return {HaltKind::NonHalting, std::move(trace)};
        }
        VertexId v = choose(chips);
        if (v == n) {
            trace.final = Divisor(std::move(chips));
            return {HaltKind::Halting, std::move(trace)};
        }
        fire_in_place(g, chips, v);
        trace.order.push_back(v);
        if (trace.counts[v]++ == 0) ++fired_distinct;
    }
}

HaltVerdict to_verdict(std::pair<HaltKind, GameTrace> played) {
    HaltVerdict out;
    out.kind = played.first;
    if (out.kind == HaltKind::Halting) {
        out.stable = std::move(played.second.final);
    } else {
        out.witness = std::move(played.second);
    }
    return out;
}

auto lowest_active(const Multigraph& g) {
    return [&g](const std::vector<Chips>& chips) {
        const auto& deg = g.degrees();
        for (VertexId v = 0; v < chips.size(); ++v) {
            if (chips[v] >= deg[v]) return v;
        }
        return chips.size();
    };
}

}  // namespace

void require_connected(const Multigraph& g, const Divisor& f) {
    check_shape(g, f);
    if (g.vertex_count() == 0) throw InputError("graph has no vertices");
    if (!g.is_connected()) throw InputError("graph must be connected");
}

Divisor fire(const Multigraph& g, const Divisor& f, VertexId v) {
    check_shape(g, f);
    check_vertex(g, v);
    std::vector<Chips> chips(f.begin(), f.end());
    fire_in_place(g, chips, v);
    return Divisor(std::move(chips));
}

bool is_active(const Multigraph& g, const Divisor& f, VertexId v) {
    check_shape(g, f);
    check_vertex(g, v);
    return f[v] >= g.degrees()[v];
}

bool is_stable(const Multigraph& g, const Divisor& f) {
    check_shape(g, f);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (f[v] >= g.degrees()[v]) return false;
    }
    return true;
}

HaltVerdict classify_halting(const Multigraph& g, const Divisor& f) {
    require_connected(g, f);
    return to_verdict(play(g, f, lowest_active(g)));
}

HaltVerdict classify_halting(const Multigraph& g, const Divisor& f, const FiringPolicy& policy) {
    require_connected(g, f);
    std::vector<VertexId> active;
    auto choose = [&](const std::vector<Chips>& chips) -> VertexId {
        active.clear();
        for (VertexId v = 0; v < chips.size(); ++v) {
            if (chips[v] >= g.degrees()[v]) active.push_back(v);
        }
        if (active.empty()) return chips.size();
        VertexId v = policy(active);
        if (v >= chips.size() || chips[v] < g.degrees()[v]) {
            throw InputError("firing policy chose inactive vertex " + std::to_string(v));
        }
        return v;
    };
    return to_verdict(play(g, f, choose));
}

HaltVerdict classify_halting(const Multigraph& g, const Divisor& f, std::mt19937_64& rng) {
    return classify_halting(g, f, [&rng](std::span<const VertexId> active) {
        std::uniform_int_distribution<std::size_t> pick(0, active.size() - 1);
        return active[pick(rng)];
    });
}

GameTrace canonical_game(const Multigraph& g, const Divisor& f) {
    require_connected(g, f);
    return play(g, f, lowest_active(g)).second;
}

RecurrenceResult is_recurrent(const Multigraph& g, const Divisor& f) {
    require_connected(g, f);
    const std::size_t n = g.vertex_count();
    const auto& deg = g.degrees();
    std::vector<Chips> chips(f.begin(), f.end());
    std::vector<bool> fired(n, false);
    GameTrace trace;
    trace.counts.assign(n, 0);
    bool progress = true;
    while (trace.order.size() < n && progress) {
        progress = false;
        for (VertexId v = 0; v < n; ++v) {
            if (!fired[v] && chips[v] >= deg[v]) {
                fire_in_place(g, chips, v);
                fired[v] = true;
                trace.order.push_back(v);
                trace.counts[v] = 1;
                progress = true;
                break;
            }
        }
    }
    RecurrenceResult out;
    out.recurrent = trace.order.size() == n;
    if (out.recurrent) {
        trace.final = Divisor(std::move(chips));
        out.witness = std::move(trace);
    }
    return out;
}

bool is_winnable(const Multigraph& g, const Divisor& f) {
    require_connected(g, f);
    Divisor probe = degree_vector(g) - ones(g.vertex_count()) - f;
    return classify_halting(g, probe).halting();
}

Divisor fire_sequence(const Multigraph& g, const Divisor& f, std::span<const VertexId> seq,
                      bool require_legal) {
    check_shape(g, f);
    std::vector<Chips> chips(f.begin(), f.end());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        VertexId v = seq[i];
        check_vertex(g, v);
        if (require_legal && chips[v] < g.degrees()[v]) throw IllegalFiring(i, v);
        fire_in_place(g, chips, v);
    }
    return Divisor(std::move(chips));
}

}  // namespace divrank
