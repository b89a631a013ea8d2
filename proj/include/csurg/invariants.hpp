#pragma once

#include <optional>
#include <vector>

#include "csurg/intmat.hpp"
#include "csurg/surgery.hpp"

namespace csurg::invariants {

using surgery::SurgeryDiagram;

struct HomologyPresentation {
    IMat relations;  // rows: p_i mu_i + sum_j q_j l_ij mu_j = 0
    SmithResult smith;
    std::vector<Int> invariant_factors;  // diagonal of D (zeros = free factors)

    // Smith coordinates of a class given in meridian coordinates, reduced
    // into [0, d_i) for torsion factors.
    std::vector<Int> smith_coords(const std::vector<Int>& meridian_coords) const;
    // order of the class (0 = infinite)
    Int element_order(const std::vector<Int>& meridian_coords) const;
};

HomologyPresentation first_homology(const SurgeryDiagram& d);

IMat smith_relations(const SurgeryDiagram& d);  // Q^T

struct EulerClassElement {
    std::vector<Int> coords;  // Smith coordinates
    Int order = 1;            // 0 = infinite order
    bool operator==(const EulerClassElement&) const = default;
    bool operator<(const EulerClassElement& o) const {
        return std::tie(coords, order) < std::tie(o.coords, o.order);
    }
};

struct D3Value {
    bool torsion = true;  // false: Euler class non-torsion, d3 undefined
    Rat value = Rat(0);
    bool operator==(const D3Value&) const = default;
    bool operator<(const D3Value& o) const {
        if (torsion != o.torsion) return torsion < o.torsion;
        return value < o.value;
    }
};

// Direct evaluation on a diagram whose coefficients are all +-1/n.
EulerClassElement euler_class_direct(const SurgeryDiagram& d);
D3Value d3_direct(const SurgeryDiagram& d);

// Branch sets: diagrams with general coefficients are normalized first; one
// entry per branch, in branch order.
std::vector<EulerClassElement> euler_class(const SurgeryDiagram& d);
std::vector<D3Value> d3(const SurgeryDiagram& d);

// Stein-trace forms.
IMat trace_intersection_form(long long tb);
struct TraceDouble {
    IMat form;  // 2x2
    bool odd;
};
TraceDouble trace_double_parity(long long tb_mu_image, long long lk, long long tb_lprime);

// Canonical data for comparing computed invariants of two presentations of
// the same manifold: invariant factors, the multiset of (d3, euler order)
// pairs over branches.
struct InvariantTriple {
    std::vector<Int> factors;       // nontrivial invariant factors (d != 1)
    std::vector<std::pair<D3Value, Int>> branches;  // sorted (d3, euler order)
    bool operator==(const InvariantTriple&) const = default;
};

InvariantTriple invariant_triple(const SurgeryDiagram& d);

}  // namespace csurg::invariants
