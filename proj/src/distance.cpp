#include "divrank/distance.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <optional>
#include <vector>

#include "divrank/chipfire.hpp"
#include "divrank/errors.hpp"

namespace divrank {

namespace {

// Stable divisor of a halting prefix; extending by one chip either reaches a
// new stable divisor or proves f + g non-halting.
class HaltingProbe {
public:
    using State = std::vector<Chips>;

    explicit HaltingProbe(const Multigraph& g) : g_(g), fired_(g.vertex_count(), 0) {}

    // Stabilises `chips` in place starting from the vertices in work_.
    // Returns false if every vertex fired (non-halting).
    bool settle(State& chips) {
        const std::size_t n = g_.vertex_count();
        const auto& deg = g_.degrees();
        std::fill(fired_.begin(), fired_.end(), 0);
        std::size_t distinct = 0;
        while (!work_.empty()) {
            VertexId u = work_.back();
            work_.pop_back();
            if (chips[u] < deg[u]) continue;
            Chips times = chips[u] / deg[u];  // deg[u] > 0 once n > 1
            chips[u] -= times * deg[u];
            for (const auto& nb : g_.neighbors(u)) {
                Chips before = chips[nb.vertex];
                chips[nb.vertex] += times * nb.mult;
                if (before < deg[nb.vertex] && chips[nb.vertex] >= deg[nb.vertex]) {
                    work_.push_back(nb.vertex);
                }
            }
            if (!fired_[u]) {
                fired_[u] = 1;
                if (++distinct == n) {
                    work_.clear();
                    return false;
                }
            }
        }
        return true;
    }

    std::optional<State> root(const Divisor& f) {
        State chips(f.begin(), f.end());
        if (g_.vertex_count() == 1) {
            if (chips[0] >= 0) return std::nullopt;
            return chips;
        }
        for (VertexId v = 0; v < chips.size(); ++v) work_.push_back(v);
        if (!settle(chips)) return std::nullopt;
        return chips;
    }

    std::optional<State> extend(const State& s, VertexId v) {
        State chips = s;
        chips[v] += 1;
        if (g_.vertex_count() == 1) {
            if (chips[0] >= 0) return std::nullopt;
            return chips;
        }
        work_.push_back(v);
        if (!settle(chips)) return std::nullopt;
        return chips;
    }

private:
    const Multigraph& g_;
    std::vector<char> fired_;
    std::vector<VertexId> work_;
};

// Greedy exactly-once closure; a full closure means recurrent.
class RecurrenceProbe {
public:
    struct State {
        std::vector<Chips> chips;
        std::vector<char> fired;
        std::size_t fired_count = 0;
    };

    explicit RecurrenceProbe(const Multigraph& g) : g_(g) {}

    std::optional<State> root(const Divisor& f) {
        State s{std::vector<Chips>(f.begin(), f.end()), std::vector<char>(f.size(), 0), 0};
        for (VertexId v = 0; v < f.size(); ++v) work_.push_back(v);
        if (!close(s)) return std::nullopt;
        return s;
    }

    std::optional<State> extend(const State& parent, VertexId v) {
        State s = parent;
        s.chips[v] += 1;
        work_.push_back(v);
        if (!close(s)) return std::nullopt;
        return s;
    }

private:
    bool close(State& s) {
        const auto& deg = g_.degrees();
        const std::size_t n = g_.vertex_count();
        while (!work_.empty()) {
            VertexId u = work_.back();
            work_.pop_back();
            if (s.fired[u] || s.chips[u] < deg[u]) continue;
            s.fired[u] = 1;
            ++s.fired_count;
            s.chips[u] -= deg[u];
            for (const auto& nb : g_.neighbors(u)) {
                s.chips[nb.vertex] += nb.mult;
                if (!s.fired[nb.vertex]) work_.push_back(nb.vertex);
            }
        }
        return s.fired_count < n;
    }

    const Multigraph& g_;
    std::vector<VertexId> work_;
};

// Depth-limited DFS over nondecreasing placements. Every proper prefix is
// known to miss, since it was a complete candidate at an earlier level.
template <class Probe>
bool search_level(Probe& probe, std::size_t n, const typename Probe::State& state,
                  std::size_t remaining, VertexId first, std::vector<VertexId>& path) {
    for (VertexId v = first; v < n; ++v) {
        auto next = probe.extend(state, v);
        path.push_back(v);
        if (!next) {
            assert(remaining == 1);
            return true;
        }
        if (remaining > 1 && search_level(probe, n, *next, remaining - 1, v, path)) return true;
        path.pop_back();
    }
    return false;
}

template <class Probe>
DistanceResult iterative_deepening(const Multigraph& g, const Divisor& f, Chips bound) {
    const std::size_t n = g.vertex_count();
    Probe probe(g);
    DistanceResult out{0, Divisor(n, 0)};
    auto root = probe.root(f);
    if (!root) return out;
    std::vector<VertexId> path;
    for (Chips k = 1; k <= bound; ++k) {
        path.clear();
        if (search_level(probe, n, *root, static_cast<std::size_t>(k), 0, path)) {
            out.value = k;
            for (VertexId v : path) out.witness[v] += 1;
            return out;
        }
    }
    throw VerificationError("no candidate within the recurrence upper bound " +
                            std::to_string(bound));
}

}  // namespace

Chips upper_bound_to_recurrent(const Multigraph& g, const Divisor& f) {
    check_shape(g, f);
    Chips total = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        total += std::max<Chips>(0, g.degrees()[v] - f[v]);
    }
    return total;
}

DistanceResult dist_nonhalt(const Multigraph& g, const Divisor& f) {
    require_connected(g, f);
    return iterative_deepening<HaltingProbe>(g, f, upper_bound_to_recurrent(g, f));
}

DistanceResult dist_rec(const Multigraph& g, const Divisor& f) {
    require_connected(g, f);
    return iterative_deepening<RecurrenceProbe>(g, f, upper_bound_to_recurrent(g, f));
}

Chips rank(const Multigraph& g, const Divisor& f) {
    require_connected(g, f);
    if (f.degree() < 0) return -1;
    Divisor probe = degree_vector(g) - ones(g.vertex_count()) - f;
    return dist_nonhalt(g, probe).value - 1;
}

}  // namespace divrank
