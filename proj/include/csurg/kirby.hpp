#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csurg/surgery.hpp"

namespace csurg::kirby {

using surgery::SurgeryComponent;
using surgery::SurgeryDiagram;

// Removes a cancelling pair: push-offs with coefficients +-1/n and -+1/n.
SurgeryDiagram cancel_pair(const SurgeryDiagram& d, int i, int j);

struct CancellingPairSpec {
    SurgeryComponent knot;         // carries the +-1/n coefficient of the first
    std::vector<Int> linking_row;  // linking with the existing components
};

SurgeryDiagram introduce_cancelling_pair(const SurgeryDiagram& d, const CancellingPairSpec& spec);

// Slide component i over component j (coefficient +-1/n_j): i is replaced by
// its connected sum with the (+-1, n_j)-cable of j. eps is the orientation
// of the cable in the sum.
SurgeryDiagram handle_slide(const SurgeryDiagram& d, int i, int j, int eps);

// Contact Rolfsen twist: component i must be a tb -1, rot 0 unknot slot with
// coefficient 1 + 1/n; it is removed, every component through it picks up the
// full-twist corrections and an n-fold stabilization with the given signs.
SurgeryDiagram rolfsen_twist_contact(const SurgeryDiagram& d, int i, const std::vector<int>& signs);

// Contact annulus presentation reduced to its surgery-diagram shadow.
struct AnnulusPresentation {
    long long tb = 1;         // tb(L_{A,gamma})
    long long rot = 0;
    long long passes = 0;     // lk(L, K_1) = lk(L, K_2)
    std::string tag = "L_Agamma";
};

// L(-1) u K_1(1/n) u K_2(-1/n); n = 0 gives the single-component diagram.
SurgeryDiagram annulus_twist_family(const AnnulusPresentation& pres, int n);

// Annulus twist then a Rolfsen twist on the (1+1/m)-meridian: the single
// surviving knot has tb = 1 - m. signs: the m stabilization signs.
SurgeryDiagram star_n_move(const AnnulusPresentation& pres, int m, const std::vector<int>& signs);

struct RGBData {
    long long tb_g = -1, rot_g = 0;
    long long tb_b = 0, rot_b = 0;
    Int lk_gb = 0;
    // R is always the tb -1, rot 0 unknot with lk(R,G) = lk(R,B) = 1.
    static RGBData family(int n);  // the twist family with tb(K_G) = 2n - 6
};

// The resolved knot: slide the tracked component off R, turn R into a
// push-off of the other one, cancel. side is 'G' or 'B'.
SurgeryComponent rgb_resolve(const RGBData& data, char side);
SurgeryDiagram rgb_resolved_diagram(const RGBData& data, char side);

// Scripted moves (JSON replay support).
struct Move {
    enum class Kind { Cancel, Introduce, Slide, Rolfsen } kind;
    int i = 0, j = 0;
    int eps = +1;
    std::vector<int> signs;
    std::optional<CancellingPairSpec> spec;
};

SurgeryDiagram replay(SurgeryDiagram d, const std::vector<Move>& script);

// Front-level handle slide for a split pair: the knot k is replaced by its
// connected sum with the (-1, n)-cable of j, drawn side by side (k's closing
// cusp absorbed into the cable's opening cusp). Returns the two-component
// front (k # J) u j.
front::LegendrianFront front_handle_slide(const front::LegendrianFront& k,
                                          const front::LegendrianFront& j, int n,
                                          int at_event = 1);

}  // namespace csurg::kirby
