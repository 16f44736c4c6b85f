#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <vector>

#include "divrank/multigraph.hpp"

namespace divrank {

// Integer chip assignment on vertices. Entries may be negative.
class Divisor {
public:
    Divisor() = default;
    explicit Divisor(std::size_t n, Chips fill = 0) : chips_(n, fill) {}
    explicit Divisor(std::vector<Chips> chips) : chips_(std::move(chips)) {}
    Divisor(std::initializer_list<Chips> chips) : chips_(chips) {}

    std::size_t size() const noexcept { return chips_.size(); }

    Chips& operator[](VertexId v) { return chips_[v]; }
    Chips operator[](VertexId v) const { return chips_[v]; }

    Chips degree() const { return std::accumulate(chips_.begin(), chips_.end(), Chips{0}); }

    bool is_effective() const {
        return std::all_of(chips_.begin(), chips_.end(), [](Chips c) { return c >= 0; });
    }

    std::span<const Chips> values() const noexcept { return chips_; }
    const std::vector<Chips>& vector() const noexcept { return chips_; }

    auto begin() const noexcept { return chips_.begin(); }
    auto end() const noexcept { return chips_.end(); }

    Divisor& operator+=(const Divisor& o);
    Divisor& operator-=(const Divisor& o);

    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }

    friend bool operator==(const Divisor&, const Divisor&) = default;
    friend auto operator<=>(const Divisor&, const Divisor&) = default;

private:
    std::vector<Chips> chips_;
};

inline bool is_effective(const Divisor& f) { return f.is_effective(); }

// d_G viewed as a divisor.
Divisor degree_vector(const Multigraph& g);

// The all-ones divisor.
inline Divisor ones(std::size_t n) { return Divisor(n, 1); }

// Throws InputError if f does not have one entry per vertex of g.
void check_shape(const Multigraph& g, const Divisor& f);

}  // namespace divrank
