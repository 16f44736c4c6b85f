#include "divrank/multigraph.hpp"

#include <string>

#include "divrank/errors.hpp"

namespace divrank {

Multigraph::Multigraph(std::size_t n) : Multigraph(n, std::span<const Edge>{}) {}

Multigraph::Multigraph(std::size_t n, std::span<const Edge> edges)
    : n_(n), mult_(n * n, 0), degree_(n, 0), adj_(n) {
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n) {
            throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") references a vertex outside [0," + std::to_string(n) + ")");
        }
        if (e.u == e.v) {
            throw InputError("self-loop at vertex " + std::to_string(e.u));
        }
        if (e.mult < 0) {
            throw InputError("negative multiplicity on edge (" + std::to_string(e.u) + "," +
                             std::to_string(e.v) + ")");
        }
        mult_[e.u * n + e.v] += e.mult;
        mult_[e.v * n + e.u] += e.mult;
        degree_[e.u] += e.mult;
        degree_[e.v] += e.mult;
        edge_count_ += e.mult;
    }
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = 0; v < n; ++v) {
            if (Chips m = mult_[u * n + v]; m > 0) adj_[u].push_back({v, m});
        }
    }
}

void Multigraph::check_vertex(VertexId v) const {
    if (v >= n_) {
        throw InputError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) +
                         ")");
    }
}

Chips Multigraph::degree(VertexId v) const {
    check_vertex(v);
    return degree_[v];
}

Chips Multigraph::multiplicity(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    return mult_[u * n_ + v];
}

const std::vector<Multigraph::Neighbor>& Multigraph::neighbors(VertexId v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<Edge> Multigraph::edges() const {
    std::vector<Edge> out;
    for (VertexId u = 0; u < n_; ++u) {
        for (const auto& nb : adj_[u]) {
            if (u < nb.vertex) out.push_back({u, nb.vertex, nb.mult});
        }
    }
    return out;
}

bool Multigraph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<bool> seen(n_, false);
    std::vector<VertexId> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (const auto& nb : adj_[u]) {
            if (!seen[nb.vertex]) {
                seen[nb.vertex] = true;
                ++reached;
                stack.push_back(nb.vertex);
            }
        }
    }
    return reached == n_;
}

bool Multigraph::is_simple() const {
    for (Chips m : mult_) {
        if (m > 1) return false;
    }
    return true;
}

bool Multigraph::has_isolated_vertex() const {
    for (Chips d : degree_) {
        if (d == 0) return true;
    }
    return false;
}

Chips Multigraph::genus() const {
    if (!is_connected()) throw InputError("genus is defined only for connected graphs");
    return edge_count_ - static_cast<Chips>(n_) + 1;
}

}  // namespace divrank
