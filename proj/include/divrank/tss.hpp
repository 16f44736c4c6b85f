#pragma once

// Minimum Target Set Selection on a simple graph.

#include <vector>

#include "divrank/multigraph.hpp"

namespace divrank {

// tau(v) in [0, d(v) + 1]; d(v) + 1 means v can only be activated by seeding.
class Thresholds {
public:
    Thresholds() = default;
    explicit Thresholds(std::vector<Chips> tau) : tau_(std::move(tau)) {}

    std::size_t size() const noexcept { return tau_.size(); }
    Chips operator[](VertexId v) const { return tau_[v]; }
    const std::vector<Chips>& values() const noexcept { return tau_; }

    friend bool operator==(const Thresholds&, const Thresholds&) = default;

private:
    std::vector<Chips> tau_;
};

// Sorted, duplicate-free vertex list.
struct TargetSet {
    std::vector<VertexId> members;

    std::size_t size() const noexcept { return members.size(); }
    friend bool operator==(const TargetSet&, const TargetSet&) = default;
};

// Throws InputError unless g is simple and tau fits it (length, 0 <= tau <= d+1).
void validate_tss_instance(const Multigraph& g, const Thresholds& tau);

// Least fixed point of "activate v once >= tau(v) neighbours are active",
// seeded with S. Returned as a sorted vertex list.
std::vector<VertexId> activation_closure(const Multigraph& g, const Thresholds& tau,
                                         const std::vector<VertexId>& seed);

bool is_target_set(const Multigraph& g, const Thresholds& tau, const std::vector<VertexId>& seed);

// Exact minimum by subsets of increasing size; lexicographically least among
// the minimum ones.
TargetSet min_target_set(const Multigraph& g, const Thresholds& tau);

// Valid but not necessarily minimum: starts from V and drops vertices in
// decreasing degree order (ties to the higher id) while the rest stays a
// target set.
TargetSet greedy_target_set(const Multigraph& g, const Thresholds& tau);

}  // namespace divrank
