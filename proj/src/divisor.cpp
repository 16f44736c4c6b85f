#include "divrank/divisor.hpp"

#include <string>

#include "divrank/errors.hpp"

namespace divrank {

Divisor& Divisor::operator+=(const Divisor& o) {
    if (o.size() != size()) throw InputError("divisor length mismatch");
    for (std::size_t i = 0; i < chips_.size(); ++i) chips_[i] += o.chips_[i];
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
    if (o.size() != size()) throw InputError("divisor length mismatch");
    for (std::size_t i = 0; i < chips_.size(); ++i) chips_[i] -= o.chips_[i];
    return *this;
}

Divisor degree_vector(const Multigraph& g) { return Divisor(g.degrees()); }

void check_shape(const Multigraph& g, const Divisor& f) {
    if (f.size() != g.vertex_count()) {
        throw InputError("divisor has " + std::to_string(f.size()) + " entries but the graph has " +
                         std::to_string(g.vertex_count()) + " vertices");
    }
}

}  // namespace divrank
