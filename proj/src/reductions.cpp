#include "divrank/reductions.hpp"

#include <algorithm>
#include <sstream>

#include "divrank/chipfire.hpp"
#include "divrank/errors.hpp"

namespace divrank {

std::string VertexRole::tag() const {
    switch (kind) {
    case Kind::Inner: return "i:" + std::to_string(a);
    case Kind::Core: return "c:" + std::to_string(a);
    case Kind::Outer: return "o:" + std::to_string(a);
    case Kind::Port: return "p:" + std::to_string(a) + ":" + std::to_string(b);
    case Kind::New: return "new";
    case Kind::Original: return "v:" + std::to_string(a);
    case Kind::SubdivisionPoint: return "sub:" + std::to_string(a) + ":" + std::to_string(b);
    }
    return {};
}

VertexRole VertexRole::parse(const std::string& tag) {
    if (tag == "new") return apex();
    std::vector<std::string> parts;
    std::stringstream ss(tag);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    auto number = [&](const std::string& s) -> VertexId {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw InputError("malformed role tag '" + tag + "'");
        }
        return static_cast<VertexId>(std::stoull(s));
    };
    if (parts.size() == 2) {
        VertexId v = number(parts[1]);
        if (parts[0] == "i") return inner(v);
        if (parts[0] == "c") return core(v);
        if (parts[0] == "o") return outer(v);
        if (parts[0] == "v") return original(v);
    } else if (parts.size() == 3) {
        VertexId u = number(parts[1]);
        VertexId v = number(parts[2]);
        if (parts[0] == "p") return port(u, v);
        if (parts[0] == "sub") return subdivision(u, v);
    }
    throw InputError("malformed role tag '" + tag + "'");
}

VertexId TssToRecInstance::port_id(VertexId u, VertexId v) const {
    const auto edges = source.edges();
    const VertexId lo = std::min(u, v);
    const VertexId hi = std::max(u, v);
    for (std::size_t k = 0; k < edges.size(); ++k) {
        if (edges[k].u == lo && edges[k].v == hi) {
            return 3 * source.vertex_count() + 2 * k + (u < v ? 0 : 1);
        }
    }
    throw InputError("(" + std::to_string(u) + "," + std::to_string(v) +
                     ") is not an edge of the source graph");
}

TssToRecInstance reduce_tss_to_rec(const Multigraph& g, const Thresholds& tau) {
    validate_tss_instance(g, tau);
    const std::size_t n = g.vertex_count();
    if (n < 2) throw InputError("reduction needs at least two vertices");
    if (!g.is_connected()) throw InputError("reduction needs a connected graph");

    const auto edges = g.edges();
    const Chips N = static_cast<Chips>(n) + 2;
    const std::size_t n_prime = 3 * n + 2 * edges.size();

    std::vector<VertexRole> roles(n_prime);
    std::vector<Edge> gadget;
    for (VertexId v = 0; v < n; ++v) {
        roles[TssToRecInstance::inner_id(v)] = VertexRole::inner(v);
        roles[TssToRecInstance::core_id(v)] = VertexRole::core(v);
        roles[TssToRecInstance::outer_id(v)] = VertexRole::outer(v);
        gadget.push_back({TssToRecInstance::inner_id(v), TssToRecInstance::core_id(v), N});
        gadget.push_back({TssToRecInstance::core_id(v), TssToRecInstance::outer_id(v), 1});
    }
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const VertexId u = edges[k].u;
        const VertexId v = edges[k].v;
        const VertexId p_uv = 3 * n + 2 * k;
        const VertexId p_vu = p_uv + 1;
        roles[p_uv] = VertexRole::port(u, v);
        roles[p_vu] = VertexRole::port(v, u);
        gadget.push_back({TssToRecInstance::outer_id(u), p_uv, N});
        gadget.push_back({p_uv, TssToRecInstance::inner_id(v), 1});
        gadget.push_back({TssToRecInstance::outer_id(v), p_vu, N});
        gadget.push_back({p_vu, TssToRecInstance::inner_id(u), 1});
    }

    TssToRecInstance inst;
    inst.source = g;
    inst.tau = tau;
    inst.gprime = Multigraph(n_prime, gadget);
    inst.N = N;
    inst.roles = std::move(roles);
    inst.x = Divisor(n_prime, 1);
    for (VertexId v = 0; v < n; ++v) {
        const Chips d = g.degrees()[v];
        inst.x[TssToRecInstance::inner_id(v)] = d + N - tau[v];
        inst.x[TssToRecInstance::outer_id(v)] = N * d;
    }

    for (VertexId z = 0; z < n_prime; ++z) {
        const Chips dz = inst.gprime.degrees()[z];
        if (inst.x[z] < 0 || inst.x[z] > dz) {
            throw VerificationError("chip configuration outside [0, degree] at vertex " +
                                    std::to_string(z));
        }
        if (inst.roles[z].is_bullet() && inst.x[z] != dz - N) {
            throw VerificationError("bullet vertex " + std::to_string(z) + " is not at degree - N");
        }
    }
    return inst;
}

Divisor lift_target_set(const TssToRecInstance& inst, const TargetSet& s) {
    if (!is_target_set(inst.source, inst.tau, s.members)) {
        throw InputError("not a target set of the source instance");
    }
    Divisor y(inst.gprime.vertex_count(), 0);
    for (VertexId v : s.members) y[TssToRecInstance::outer_id(v)] = 1;
    if (y.degree() != static_cast<Chips>(s.size())) {
        throw InputError("target set has repeated members");
    }
    if (!is_recurrent(inst.gprime, inst.x + y).recurrent) {
        throw VerificationError("lifted configuration is not recurrent");
    }
    return y;
}

TargetSet extract_target_set(const TssToRecInstance& inst, const Divisor& y) {
    const Multigraph& gp = inst.gprime;
    check_shape(gp, y);
    if (!y.is_effective()) throw InputError("y is not effective");
    if (!is_recurrent(gp, inst.x + y).recurrent) throw InputError("x + y is not recurrent");

    const Chips total = y.degree();
    for (VertexId z = 0; z < gp.vertex_count(); ++z) {
        if (inst.roles[z].is_bullet() && y[z] != 0) {
            throw InputError("y is not minimum: bullet vertex " + inst.roles[z].tag() +
                             " carries chips");
        }
    }

    const std::size_t n = inst.source.vertex_count();
    Divisor cur = y;
    for (VertexId v = 0; v < n; ++v) {
        const VertexId vi = TssToRecInstance::inner_id(v);
        const Chips k = cur[vi];
        if (k == 0) continue;

        auto game = is_recurrent(gp, inst.x + cur);
        std::vector<std::size_t> position(gp.vertex_count());
        for (std::size_t t = 0; t < game.witness->order.size(); ++t) {
            position[game.witness->order[t]] = t;
        }

        Divisor next = cur;
        next[vi] = 0;
        Chips placed = 0;
        for (const auto& nb : inst.source.neighbors(v)) {
            if (placed == k) break;
            const VertexId u = nb.vertex;
            if (position[inst.port_id(u, v)] > position[vi]) {
                next[TssToRecInstance::outer_id(u)] = 1;
                ++placed;
            }
        }
        if (!is_recurrent(gp, inst.x + next).recurrent) {
            throw VerificationError("normalised configuration lost recurrence at " +
                                    inst.roles[vi].tag());
        }
        if (next.degree() != total) {
            throw InputError("y is not minimum: moving chips off " + inst.roles[vi].tag() +
                             " gives a smaller recurrent witness");
        }
        cur = std::move(next);
    }

    TargetSet s;
    for (VertexId v = 0; v < n; ++v) {
        const Chips c = cur[TssToRecInstance::outer_id(v)];
        if (c > 1) {
            throw InputError("y is not minimum: outer vertex of " + std::to_string(v) +
                             " carries more than one chip");
        }
        if (c == 1) s.members.push_back(v);
    }
    if (static_cast<Chips>(s.size()) != total || !is_target_set(inst.source, inst.tau, s.members)) {
        throw InputError("y is not minimum: extracted set is not a target set of size deg(y)");
    }
    return s;
}

Chips default_apex_multiplicity(const Multigraph& g, const Divisor& f) {
    check_shape(g, f);
    Chips negative = 0;
    Chips excess = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (f[v] < 0) negative += -f[v];
        excess = std::max(excess, f[v] - g.degrees()[v]);
    }
    return 2 * g.edge_count() + negative + excess + 1;
}

RecToNonhaltInstance reduce_rec_to_nonhalt(const Multigraph& g, const Divisor& f,
                                           std::optional<Chips> m, bool verify_m) {
    require_connected(g, f);
    const std::size_t n = g.vertex_count();
    Chips apex = m.value_or(default_apex_multiplicity(g, f));
    if (apex < 1) throw InputError("M must be positive");
    if (m && verify_m) {
        Chips excess = 0;
        for (VertexId v = 0; v < n; ++v) excess = std::max(excess, f[v] - g.degrees()[v]);
        const Chips needed = dist_rec(g, f).value + excess;
        if (!(needed < apex)) {
            throw InputError("M = " + std::to_string(apex) + " does not exceed dist_rec + excess = " +
                             std::to_string(needed));
        }
    }

    auto edges = g.edges();
    for (VertexId v = 0; v < n; ++v) edges.push_back({v, n, apex});

    RecToNonhaltInstance inst;
    inst.source = g;
    inst.f = f;
    inst.gpp = Multigraph(n + 1, edges);
    inst.M = apex;
    inst.new_vertex = n;
    inst.fpp = Divisor(n + 1, 0);
    for (VertexId v = 0; v < n; ++v) {
        inst.fpp[v] = f[v] + apex;
        inst.roles.push_back(VertexRole::original(v));
    }
    inst.roles.push_back(VertexRole::apex());
    return inst;
}

TssToNonhaltInstance reduce_tss_to_nonhalt(const Multigraph& g, const Thresholds& tau) {
    TssToNonhaltInstance out;
    out.first = reduce_tss_to_rec(g, tau);
    const Chips m = static_cast<Chips>(g.vertex_count()) + 1;
    out.second = reduce_rec_to_nonhalt(out.first.gprime, out.first.x, m);
    const std::size_t expected = 3 * g.vertex_count() + 2 * static_cast<std::size_t>(g.edge_count()) + 1;
    if (out.second.gpp.vertex_count() != expected) {
        throw VerificationError("composed instance has the wrong vertex count");
    }
    return out;
}

SubdividedInstance subdivide_to_simple(const Multigraph& g, const Divisor& f) {
    require_connected(g, f);
    const std::size_t n = g.vertex_count();
    const auto edges = g.edges();
    std::vector<Edge> out_edges;
    SubdividedInstance out;
    for (VertexId v = 0; v < n; ++v) out.roles.push_back(VertexRole::original(v));
    VertexId next = n;
    for (const Edge& e : edges) {
        for (Chips c = 0; c < e.mult; ++c, ++next) {
            out_edges.push_back({e.u, next, 1});
            out_edges.push_back({next, e.v, 1});
            out.roles.push_back(VertexRole::subdivision(e.u, e.v));
        }
    }
    out.graph = Multigraph(next, out_edges);
    std::vector<Chips> chips(f.begin(), f.end());
    chips.resize(next, 0);
    out.divisor = Divisor(std::move(chips));
    return out;
}

}  // namespace divrank
