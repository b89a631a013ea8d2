#pragma once

#include <vector>

#include "csurg/front.hpp"

namespace testfronts {

using csurg::front::cross;
using csurg::front::FrontEvent;
using csurg::front::lcusp;
using csurg::front::rcusp;

// standard tb -1 unknot
inline std::vector<FrontEvent> unknot() { return {lcusp(1), rcusp(1)}; }

// maximal right-handed trefoil, tb = 1, rot = 0
inline std::vector<FrontEvent> rh_trefoil() {
    return {lcusp(1), lcusp(1), cross(2), cross(2), cross(2), rcusp(1), rcusp(1)};
}

}  // namespace testfronts
