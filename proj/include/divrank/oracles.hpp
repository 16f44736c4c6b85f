#pragma once

// Brute-force reference implementations. None of this shares code with the
// game engine, the distance solvers, or the TSS solver; agreement between the
// two sides is the point.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "divrank/divisor.hpp"
#include "divrank/multigraph.hpp"
#include "divrank/tss.hpp"

namespace divrank::oracles {

// Linear-equivalence classes of divisors on a connected graph. With L~ the
// Laplacian minus row and column 0, h ~ h' iff L~^{-1}(h - h') restricted to
// vertices 1..n-1 is integral, i.e. adj(L~) (h - h') == 0 mod det(L~).
class LaplacianLattice {
public:
    explicit LaplacianLattice(const Multigraph& g);

    // Number of spanning trees, det(L~).
    std::int64_t tree_count() const noexcept { return det_; }

    // Class key of h among divisors of the same degree.
    std::vector<std::int64_t> class_key(const Divisor& h) const;

    bool equivalent(const Divisor& a, const Divisor& b) const;

    // Decided by comparing h against every effective divisor of its degree.
    bool winnable(const Divisor& h) const;

private:
    const std::vector<std::int64_t>& effective_keys_sorted(std::int64_t degree) const;

    std::size_t n_;
    std::int64_t det_ = 1;
    std::vector<std::int64_t> adj_;  // (n-1) x (n-1), row-major
    mutable std::vector<std::vector<std::int64_t>> cache_;  // by degree, flattened sorted keys
    mutable std::vector<bool> cached_;
};

// Winnability by enumerating firing scripts z in [0, bound]^n with min z = 0
// and testing h - Lz >= 0. Incomplete for small bounds; used as a cross-check.
bool winnable_bounded(const Multigraph& g, const Divisor& h, std::int64_t bound);

// 2 * (upper bound to recurrent + total positive chips + 1).
std::int64_t default_winnability_bound(const Multigraph& g, const Divisor& h);

enum class WinnabilityMethod { Lattice, Bounded };

// min{deg(g) : g effective, f - g not winnable} - 1, searched over
// deg(g) <= deg(f) + 1. With Bounded, winnability_bound (or the default
// above) limits the script search.
std::int64_t rank_definitional(const Multigraph& g, const Divisor& f,
                               WinnabilityMethod method = WinnabilityMethod::Lattice,
                               std::optional<std::int64_t> winnability_bound = std::nullopt);

// Tries all n! orders; n <= 9.
bool recurrent_permutation(const Multigraph& g, const Divisor& f);

// Bitmask subset enumeration; simple graphs with n <= 20.
std::size_t ts_subset_enumeration(const Multigraph& g, const Thresholds& tau);

enum class Relation { Equal, Greater };

struct OracleReport {
    std::string quantity;
    std::int64_t pipeline = 0;
    std::int64_t oracle = 0;
    Relation relation = Relation::Equal;
    bool agrees = false;
    std::string fingerprint;
};

// FNV-1a over the canonical text form of (graph, payload).
std::string fingerprint(const Multigraph& g, const std::vector<std::int64_t>& payload);

// ts by both solvers, dist_rec(G', x), dist_nonhalt(G'', x''), the N and M
// safety margins, and the pairwise equalities.
std::vector<OracleReport> verify_reduction_chain(const Multigraph& g, const Thresholds& tau);

}  // namespace divrank::oracles
