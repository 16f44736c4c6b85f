#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace divrank {

using VertexId = std::size_t;
using Chips = std::int64_t;

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    Chips mult = 1;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected multigraph stored as a dense multiplicity matrix plus
// per-vertex neighbour lists. Immutable once constructed.
//
// Invariants: mult(u,v) == mult(v,u), mult(v,v) == 0.
class Multigraph {
public:
    struct Neighbor {
        VertexId vertex;
        Chips mult;
    };

    Multigraph() = default;
    explicit Multigraph(std::size_t n);

    // Repeated pairs accumulate. Throws InputError on self-loops, ids out of
    // range, or negative multiplicities.
    Multigraph(std::size_t n, std::span<const Edge> edges);

    std::size_t vertex_count() const noexcept { return n_; }
    Chips edge_count() const noexcept { return edge_count_; }

    Chips degree(VertexId v) const;
    Chips multiplicity(VertexId u, VertexId v) const;

    const std::vector<Chips>& degrees() const noexcept { return degree_; }
    const std::vector<Neighbor>& neighbors(VertexId v) const;

    // One entry per unordered pair with positive multiplicity, u < v,
    // in lexicographic order.
    std::vector<Edge> edges() const;

    bool is_connected() const;
    bool is_simple() const;
    bool has_isolated_vertex() const;

    // edge_count - n + 1; throws InputError on a disconnected graph.
    Chips genus() const;

    friend bool operator==(const Multigraph& a, const Multigraph& b) {
        return a.n_ == b.n_ && a.mult_ == b.mult_;
    }

private:
    void check_vertex(VertexId v) const;

    std::size_t n_ = 0;
    Chips edge_count_ = 0;
    std::vector<Chips> mult_;  // row-major n x n
    std::vector<Chips> degree_;
    std::vector<std::vector<Neighbor>> adj_;
};

}  // namespace divrank
