#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "csurg/front.hpp"
#include "csurg/intmat.hpp"
#include "csurg/rational.hpp"

namespace csurg::surgery {

struct SurgeryError : std::runtime_error {
    enum class Code {
        ZeroCoefficient,
        NotCancellable,
        BadCoefficient,
        NotUnknotSlot,
        NotRGB,
        BadInput,
    };
    Code code;
    SurgeryError(Code c, const std::string& m) : std::runtime_error(m), code(c) {}
};

struct SurgeryComponent {
    std::optional<front::LegendrianFront> geometry;
    std::string tag;  // label for abstract components
    long long tb = 0;
    long long rot_signed = 0;
    Rat coeff = Rat(-1);  // contact surgery coefficient, nonzero

    static SurgeryComponent abstract(std::string tag, long long tb, long long rot, Rat coeff);
    static SurgeryComponent from_front(front::LegendrianFront f, Rat coeff, std::string tag = "");
};

class SurgeryDiagram {
public:
    SurgeryDiagram() = default;
    SurgeryDiagram(std::vector<SurgeryComponent> comps, IMat linking);

    // multi-component front with one coefficient per component
    static SurgeryDiagram from_front(const front::LegendrianFront& f, const std::vector<Rat>& coeffs);

    int size() const { return int(components_.size()); }
    const SurgeryComponent& component(int i) const { return components_[i]; }
    SurgeryComponent& component(int i) { return components_[i]; }
    const IMat& linking() const { return linking_; }
    Int linking(int i, int j) const { return linking_.at(i, j); }
    void set_linking(int i, int j, const Int& v);

    void add_component(const SurgeryComponent& c, const std::vector<Int>& linking_row);
    void remove_two(int i, int j);

    // contact push-off of component i appended at the back: same tb/rot,
    // links i in tb(i), links everything else as i does
    int add_pushoff(int i, const Rat& coeff);

    void stabilize_component(int i, int sign);  // tb -= 1, rot += sign

private:
    std::vector<SurgeryComponent> components_;
    IMat linking_;
};

// contact coefficient + tb, reduced, positive denominator
Rat topological_coefficient(const SurgeryComponent& c);

// r = +-1/n for a positive integer n
bool is_reciprocal(const Rat& r);

struct GeneralizedLinkingMatrix {
    IMat Q;                 // Q_ii = p_i, Q_ij = q_j l_ij
    std::vector<Int> p, q;  // topological coefficients p_i/q_i, q_i > 0
    QMat A;                 // symmetric: A_ii = p_i/q_i, A_ij = l_ij
};

GeneralizedLinkingMatrix generalized_linking_matrix(const SurgeryDiagram& d);

// One normalized presentation: all contact coefficients are +-1.
struct NormalForm {
    SurgeryDiagram diagram;
    // per original component, the multiset of stabilization signs used on
    // each element of its expansion chain (branch label)
    std::vector<std::vector<std::vector<int>>> stab_signs;
};

// All +-1 presentations of the diagram, one per stabilization-sign branch.
std::vector<NormalForm> normalize(const SurgeryDiagram& d);

// Branch count of normalize() without enumerating diagrams.
long long normalize_branch_count(const SurgeryDiagram& d);

// Expansion of a +-1/n component into n parallel +-1 push-offs.
SurgeryDiagram pushoff_expand(const SurgeryDiagram& d, int index);

// Every +-1/n component expanded; +-1 components kept.
SurgeryDiagram pushoff_expand_all(const SurgeryDiagram& d);

}  // namespace csurg::surgery
