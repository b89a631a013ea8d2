#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace csurg::pd {

// Planar diagram code. Each crossing lists its four arc labels counter-
// clockwise starting from the incoming under-strand. Arc labels are the
// edges of the 4-valent diagram graph; every label appears exactly twice.
// Crossing-free components are carried in `unknots`.
struct PDCode {
    std::vector<std::array<int, 4>> crossings;
    int unknots = 0;

    bool operator==(const PDCode&) const = default;
};

struct PDError : std::runtime_error {
    explicit PDError(const std::string& m) : std::runtime_error(m) {}
};

// Oriented diagram resolved from a PD code: over-strand directions inferred
// from the head/tail constraint (every edge enters one crossing and leaves
// one), crossing signs from the counterclockwise slot order.
struct Crossing {
    int under_in, under_out, over_in, over_out;  // edge ids
    int sign;                                    // +1 / -1
};

struct Diagram {
    int edge_count = 0;
    std::vector<Crossing> crossings;
    int unknots = 0;
    std::vector<int> next_edge;  // successor along the traversal

    int component_count() const;  // closed components with crossings
};

Diagram resolve(const PDCode& pd);
PDCode to_pd(const Diagram& d);

// Relabeling-invariant canonical form: minimal tuple list over all
// traversal starting points and component orders.
PDCode canonical_pd(const PDCode& pd);

// Monotone diagram shrinking: Reidemeister I kinks and II bigons removed
// until none are left.
PDCode simplified(const PDCode& pd);

std::string pd_key(const PDCode& pd);

}  // namespace csurg::pd
