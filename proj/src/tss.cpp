#include "divrank/tss.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "divrank/errors.hpp"

namespace divrank {

namespace {

std::vector<char> closure_mask(const Multigraph& g, const Thresholds& tau,
                               const std::vector<VertexId>& seed) {
    const std::size_t n = g.vertex_count();
    std::vector<char> active(n, 0);
    for (VertexId v : seed) {
        if (v >= n) throw InputError("seed vertex " + std::to_string(v) + " out of range");
        active[v] = 1;
    }
    for (VertexId v = 0; v < n; ++v) {
        if (tau[v] == 0) active[v] = 1;
    }
    // Round-based; the operator is monotone so the fixed point matches any
    // fair asynchronous schedule.
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<char> next = active;
        for (VertexId v = 0; v < n; ++v) {
            if (active[v]) continue;
            Chips count = 0;
            for (const auto& nb : g.neighbors(v)) count += active[nb.vertex];
            if (count >= tau[v]) {
                next[v] = 1;
                changed = true;
            }
        }
        active = std::move(next);
    }
    return active;
}

bool covers_all(const std::vector<char>& mask) {
    return std::all_of(mask.begin(), mask.end(), [](char c) { return c != 0; });
}

// Advances `comb` (strictly increasing, values < n) to the next k-combination
// in lexicographic order. Returns false after the last one.
bool next_combination(std::vector<VertexId>& comb, std::size_t n) {
    const std::size_t k = comb.size();
    for (std::size_t i = k; i-- > 0;) {
        if (comb[i] < n - k + i) {
            ++comb[i];
            for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

void validate_tss_instance(const Multigraph& g, const Thresholds& tau) {
    if (!g.is_simple()) throw InputError("target set selection needs a simple graph");
    if (tau.size() != g.vertex_count()) {
        throw InputError("thresholds have " + std::to_string(tau.size()) +
                         " entries but the graph has " + std::to_string(g.vertex_count()) +
                         " vertices");
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (tau[v] < 0 || tau[v] > g.degrees()[v] + 1) {
            throw InputError("threshold of vertex " + std::to_string(v) + " is " +
                             std::to_string(tau[v]) + ", outside [0, degree+1]");
        }
    }
}

std::vector<VertexId> activation_closure(const Multigraph& g, const Thresholds& tau,
                                         const std::vector<VertexId>& seed) {
    validate_tss_instance(g, tau);
    auto mask = closure_mask(g, tau, seed);
    std::vector<VertexId> out;
    for (VertexId v = 0; v < mask.size(); ++v) {
        if (mask[v]) out.push_back(v);
    }
    return out;
}

bool is_target_set(const Multigraph& g, const Thresholds& tau, const std::vector<VertexId>& seed) {
    validate_tss_instance(g, tau);
    return covers_all(closure_mask(g, tau, seed));
}

TargetSet min_target_set(const Multigraph& g, const Thresholds& tau) {
    validate_tss_instance(g, tau);
    const std::size_t n = g.vertex_count();
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<VertexId> comb(k);
        std::iota(comb.begin(), comb.end(), VertexId{0});
        do {
            if (covers_all(closure_mask(g, tau, comb))) return TargetSet{comb};
        } while (next_combination(comb, n));
    }
    // Unreachable: V itself is always a target set.
    throw VerificationError("no target set found");
}

TargetSet greedy_target_set(const Multigraph& g, const Thresholds& tau) {
    validate_tss_instance(g, tau);
    const std::size_t n = g.vertex_count();
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId{0});
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        if (g.degrees()[a] != g.degrees()[b]) return g.degrees()[a] > g.degrees()[b];
        return a > b;
    });
    std::vector<char> keep(n, 1);
    for (VertexId v : order) {
        keep[v] = 0;
        std::vector<VertexId> seed;
        for (VertexId u = 0; u < n; ++u) {
            if (keep[u]) seed.push_back(u);
        }
        if (!covers_all(closure_mask(g, tau, seed))) keep[v] = 1;
    }
    TargetSet out;
    for (VertexId u = 0; u < n; ++u) {
        if (keep[u]) out.members.push_back(u);
    }
    return out;
}

}  // namespace divrank
