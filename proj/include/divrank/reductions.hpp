#pragma once

// Gadget reductions Min-TSS -> Dist-Rec -> Dist-Nonhalt and edge subdivision.
//
// Vertex layout of the TSS -> Dist-Rec graph G' for an input with n vertices
// and edges e_0 < e_1 < ... (pairs u < v in lexicographic order):
//
//   3v     inner(v)      N parallel edges to core(v)
//   3v+1   core(v)       one edge to outer(v)
//   3v+2   outer(v)
//   3n+2k    port(u,v)   for e_k = uv: N edges to outer(u), one edge to inner(v)
//   3n+2k+1  port(v,u)   N edges to outer(v), one edge to inner(u)
//
// with N = n + 2. The Dist-Rec -> Dist-Nonhalt step appends one apex vertex
// at id n joined to every original vertex by M parallel edges.

#include <optional>
#include <string>
#include <vector>

#include "divrank/distance.hpp"
#include "divrank/divisor.hpp"
#include "divrank/multigraph.hpp"
#include "divrank/tss.hpp"

namespace divrank {

struct VertexRole {
    enum class Kind { Inner, Core, Outer, Port, New, Original, SubdivisionPoint };

    Kind kind = Kind::Original;
    VertexId a = 0;  // the vertex, or the first endpoint
    VertexId b = 0;  // second endpoint for Port / SubdivisionPoint

    static VertexRole inner(VertexId v) { return {Kind::Inner, v, 0}; }
    static VertexRole core(VertexId v) { return {Kind::Core, v, 0}; }
    static VertexRole outer(VertexId v) { return {Kind::Outer, v, 0}; }
    static VertexRole port(VertexId u, VertexId v) { return {Kind::Port, u, v}; }
    static VertexRole apex() { return {Kind::New, 0, 0}; }
    static VertexRole original(VertexId v) { return {Kind::Original, v, 0}; }
    static VertexRole subdivision(VertexId u, VertexId v) {
        return {Kind::SubdivisionPoint, u, v};
    }

    // "i:3", "c:3", "o:3", "p:2:5", "new", "v:3", "sub:1:4"
    std::string tag() const;
    static VertexRole parse(const std::string& tag);

    // Circle vertices (inner, outer) receive the N-bundles' heavy end; bullet
    // vertices (core, ports) start with exactly one chip.
    bool is_bullet() const noexcept { return kind == Kind::Core || kind == Kind::Port; }

    friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

struct TssToRecInstance {
    Multigraph source;
    Thresholds tau;
    Multigraph gprime;
    Divisor x;
    Chips N = 0;
    std::vector<VertexRole> roles;

    static VertexId inner_id(VertexId v) { return 3 * v; }
    static VertexId core_id(VertexId v) { return 3 * v + 1; }
    static VertexId outer_id(VertexId v) { return 3 * v + 2; }

    // Id of port(u, v) for an edge of the source graph; throws if uv is not an edge.
    VertexId port_id(VertexId u, VertexId v) const;
};

struct RecToNonhaltInstance {
    Multigraph source;
    Divisor f;
    Multigraph gpp;
    Divisor fpp;
    Chips M = 0;
    VertexId new_vertex = 0;
    std::vector<VertexRole> roles;
};

struct TssToNonhaltInstance {
    TssToRecInstance first;
    RecToNonhaltInstance second;
};

struct SubdividedInstance {
    Multigraph graph;
    Divisor divisor;
    std::vector<VertexRole> roles;
};

// Requires a simple connected graph with >= 2 vertices, no isolated vertex,
// and thresholds in [0, d+1].
TssToRecInstance reduce_tss_to_rec(const Multigraph& g, const Thresholds& tau);

// y = one chip on outer(v) for v in S. Verifies x + y is recurrent.
Divisor lift_target_set(const TssToRecInstance& inst, const TargetSet& s);

// Normalises a minimum-degree y (chips on inner vertices are moved to outer
// vertices whose port into that inner vertex fires later) and reads off
// S = {v : y(outer(v)) = 1}. Throws InputError when y is not effective or
// x + y is not recurrent, and when y turns out not to be minimum.
TargetSet extract_target_set(const TssToRecInstance& inst, const Divisor& y);

// 2|E| + sum of |f(v)| over negative entries + max(0, max_v f(v) - d(v)) + 1.
Chips default_apex_multiplicity(const Multigraph& g, const Divisor& f);

// With m unset the default above is used. With verify_m, a supplied m is
// checked against dist_rec(G, f) + max(0, max_v f(v) - d(v)) < m.
RecToNonhaltInstance reduce_rec_to_nonhalt(const Multigraph& g, const Divisor& f,
                                           std::optional<Chips> m = std::nullopt,
                                           bool verify_m = false);

// Composition with M = |V| + 1.
TssToNonhaltInstance reduce_tss_to_nonhalt(const Multigraph& g, const Thresholds& tau);

// Replaces every parallel copy of every edge by a path through a new vertex
// carrying 0 chips. New vertices follow the originals, in edge order.
SubdividedInstance subdivide_to_simple(const Multigraph& g, const Divisor& f);

}  // namespace divrank
