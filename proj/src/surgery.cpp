#include "csurg/surgery.hpp"

#include <algorithm>

namespace csurg::surgery {

using Err = SurgeryError::Code;

SurgeryComponent SurgeryComponent::abstract(std::string tag, long long tb, long long rot,
                                            Rat coeff) {
    SurgeryComponent c;
    c.tag = std::move(tag);
    c.tb = tb;
    c.rot_signed = rot;
    c.coeff = std::move(coeff);
    return c;
}

SurgeryComponent SurgeryComponent::from_front(front::LegendrianFront f, Rat coeff,
                                              std::string tag) {
    if (f.component_count() != 1)
        throw SurgeryError(Err::BadInput, "component fronts must be knots");
    auto inv = front::classical_invariants(f, 0);
    SurgeryComponent c;
    c.tb = inv.tb;
    c.rot_signed = inv.rot_signed;
    c.coeff = std::move(coeff);
    c.tag = std::move(tag);
    c.geometry = std::move(f);
    return c;
}

SurgeryDiagram::SurgeryDiagram(std::vector<SurgeryComponent> comps, IMat linking)
    : components_(std::move(comps)), linking_(std::move(linking)) {
    int n = int(components_.size());
    if (linking_.rows() != n || linking_.cols() != n)
        throw SurgeryError(Err::BadInput, "linking matrix shape mismatch");
    for (int i = 0; i < n; ++i) {
        if (components_[i].coeff == 0)
            throw SurgeryError(Err::ZeroCoefficient, "contact coefficient must be nonzero");
        if (linking_.at(i, i) != 0)
            throw SurgeryError(Err::BadInput, "linking matrix must have zero diagonal");
        for (int j = 0; j < n; ++j)
            if (linking_.at(i, j) != linking_.at(j, i))
                throw SurgeryError(Err::BadInput, "linking matrix must be symmetric");
    }
}

SurgeryDiagram SurgeryDiagram::from_front(const front::LegendrianFront& f,
                                          const std::vector<Rat>& coeffs) {
    int n = f.component_count();
    if (int(coeffs.size()) != n)
        throw SurgeryError(Err::BadInput, "one coefficient per front component required");
    std::vector<SurgeryComponent> comps;
    IMat lk(n, n);
    for (int i = 0; i < n; ++i) {
        auto inv = front::classical_invariants(f, i);
        SurgeryComponent c;
        c.tb = inv.tb;
        c.rot_signed = inv.rot_signed;
        c.coeff = coeffs[i];
        if (c.coeff == 0)
            throw SurgeryError(Err::ZeroCoefficient, "contact coefficient must be nonzero");
        comps.push_back(std::move(c));
        for (int j = 0; j < n; ++j)
            if (i != j) lk.at(i, j) = int_of(f.linking(i, j));
    }
    SurgeryDiagram d(std::move(comps), std::move(lk));
    return d;
}

void SurgeryDiagram::set_linking(int i, int j, const Int& v) {
    if (i == j) throw SurgeryError(Err::BadInput, "diagonal linking entries stay zero");
    linking_.at(i, j) = v;
    linking_.at(j, i) = v;
}

void SurgeryDiagram::add_component(const SurgeryComponent& c, const std::vector<Int>& row) {
    int n = size();
    if (int(row.size()) != n) throw SurgeryError(Err::BadInput, "linking row length mismatch");
    IMat nl(n + 1, n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) nl.at(i, j) = linking_.at(i, j);
    for (int i = 0; i < n; ++i) {
        nl.at(i, n) = row[i];
        nl.at(n, i) = row[i];
    }
    linking_ = std::move(nl);
    components_.push_back(c);
}

void SurgeryDiagram::remove_two(int i, int j) {
    if (i == j) throw SurgeryError(Err::BadInput, "need two distinct components");
    if (i > j) std::swap(i, j);
    int n = size();
    std::vector<int> keep;
    for (int k = 0; k < n; ++k)
        if (k != i && k != j) keep.push_back(k);
    IMat nl(n - 2, n - 2);
    for (size_t a = 0; a < keep.size(); ++a)
        for (size_t b = 0; b < keep.size(); ++b) nl.at(int(a), int(b)) = linking_.at(keep[a], keep[b]);
    std::vector<SurgeryComponent> nc;
    for (int k : keep) nc.push_back(std::move(components_[k]));
    components_ = std::move(nc);
    linking_ = std::move(nl);
}

int SurgeryDiagram::add_pushoff(int i, const Rat& coeff) {
    int n = size();
    std::vector<Int> row(n, Int(0));
    for (int k = 0; k < n; ++k) row[k] = linking_.at(i, k);
    row[i] = int_of(components_[i].tb);
    SurgeryComponent c = components_[i];
    c.geometry.reset();
    c.coeff = coeff;
    add_component(c, row);
    return n;
}

void SurgeryDiagram::stabilize_component(int i, int sign) {
    components_[i].tb -= 1;
    components_[i].rot_signed += sign;
    components_[i].geometry.reset();
}

Rat topological_coefficient(const SurgeryComponent& c) {
    if (c.coeff == 0) throw SurgeryError(Err::ZeroCoefficient, "zero contact coefficient");
    Rat r = c.coeff + Rat(int_of(c.tb));
    r.canonicalize();
    return r;
}

bool is_reciprocal(const Rat& r) { return num(r) == 1 || num(r) == -1; }

GeneralizedLinkingMatrix generalized_linking_matrix(const SurgeryDiagram& d) {
    int n = d.size();
    GeneralizedLinkingMatrix g;
    g.Q = IMat(n, n);
    g.A = QMat(n, n);
    for (int i = 0; i < n; ++i) {
        Rat t = topological_coefficient(d.component(i));
        g.p.push_back(num(t));
        g.q.push_back(den(t));
        g.A.at(i, i) = t;
    }
    for (int i = 0; i < n; ++i) {
        g.Q.at(i, i) = g.p[i];
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            g.Q.at(i, j) = g.q[j] * d.linking(i, j);
            g.A.at(i, j) = Rat(d.linking(i, j));
        }
    }
    return g;
}

namespace {

// negative continued fraction with entries <= -2; first surgery entry is
// floor(r) - 1, the rest the expansion of the fractional tail
std::vector<Int> stab_counts_negative(const Rat& r) {
    std::vector<Int> counts;
    Rat x = r;
    // first entry a1 = floor(x) - 1, stabilization count |a1 + 2|
    for (bool first = true;; first = false) {
        Int fl = floor_rat(x);
        Int a = first ? Int(fl - 1) : fl;
        counts.push_back(abs(a + 2));
        Rat frac = x - Rat(fl);
        if (frac == 0) break;
        x = Rat(-1) / frac;  // tail, lies in (-inf, -1)
    }
    return counts;
}

struct Expansion {
    // per chain element: stabilization count (element 0 is the component
    // itself, later ones iterated push-offs); +1 push-offs prepended first
    int plus_pushoffs = 0;
    std::vector<Int> stabs;   // for the coefficient-(-1) chain
    bool reciprocal_plus = false;  // r = +1/n: n push-offs with +1
    Int reciprocal_n = 1;
};

Expansion expand_coefficient(Rat r) {
    Expansion ex;
    if (r == 0) throw SurgeryError(Err::ZeroCoefficient, "zero contact coefficient");
    if (is_reciprocal(r)) {
        if (r > 0) {
            ex.reciprocal_plus = true;
            ex.reciprocal_n = den(r);
            return ex;
        }
        // -1/n handled by the continued fraction below (all entries -2,
        // giving n push-offs with no stabilizations)
    }
    while (r > 0) {
        // prepend a (+1) push-off; residual r / (1 - r)
        ex.plus_pushoffs += 1;
        r = r / (Rat(1) - r);
        r.canonicalize();
        if (r == 0) throw SurgeryError(Err::BadInput, "coefficient collapsed to zero");
    }
    ex.stabs = stab_counts_negative(r);
    return ex;
}

}  // namespace

long long normalize_branch_count(const SurgeryDiagram& d) {
    long long total = 1;
    for (int i = 0; i < d.size(); ++i) {
        auto ex = expand_coefficient(d.component(i).coeff);
        for (const auto& s : ex.stabs) total *= (s.get_si() + 1);
    }
    return total;
}

std::vector<NormalForm> normalize(const SurgeryDiagram& d) {
    // expansions per component
    std::vector<Expansion> ex;
    for (int i = 0; i < d.size(); ++i) ex.push_back(expand_coefficient(d.component(i).coeff));

    // enumerate sign multisets: per stabilized chain element, the number of
    // positive stabilizations 0..s
    struct Slot {
        int comp;
        int elem;
        int count;
    };
    std::vector<Slot> slots;
    for (int i = 0; i < d.size(); ++i)
        for (size_t e = 0; e < ex[i].stabs.size(); ++e)
            if (ex[i].stabs[e] > 0) slots.push_back({i, int(e), int(ex[i].stabs[e].get_si())});

    std::vector<int> choice(slots.size(), 0);
    std::vector<NormalForm> out;
    for (;;) {
        NormalForm nf;
        nf.diagram = d;
        nf.stab_signs.assign(d.size(), {});
        // keep original component indices stable: expand components one by one
        for (int i = 0; i < d.size(); ++i) {
            const auto& e = ex[i];
            auto& signs_i = nf.stab_signs[i];
            if (e.reciprocal_plus) {
                long long n = e.reciprocal_n.get_si();
                nf.diagram.component(i).coeff = Rat(1);
                signs_i.assign(size_t(n), {});
                for (long long k = 1; k < n; ++k) nf.diagram.add_pushoff(i, Rat(1));
                continue;
            }
            signs_i.assign(e.plus_pushoffs + e.stabs.size(), {});
            for (int k = 0; k < e.plus_pushoffs; ++k) nf.diagram.add_pushoff(i, Rat(1));
            // chain of (-1) components: first is the original component
            int cur = i;
            for (size_t elem = 0; elem < e.stabs.size(); ++elem) {
                if (elem > 0) cur = nf.diagram.add_pushoff(cur, Rat(-1));
                else nf.diagram.component(i).coeff = Rat(-1);
                int s = int(e.stabs[elem].get_si());
                int plus = 0;
                for (const auto& sl : slots)
                    if (sl.comp == i && sl.elem == int(elem)) {
                        plus = choice[&sl - slots.data()];
                        break;
                    }
                std::vector<int> signs;
                for (int k = 0; k < s; ++k) {
                    int sg = k < plus ? +1 : -1;
                    nf.diagram.stabilize_component(cur, sg);
                    signs.push_back(sg);
                }
                signs_i[e.plus_pushoffs + elem] = std::move(signs);
            }
        }
        out.push_back(std::move(nf));
        // odometer over multiset choices
        size_t i = 0;
        for (; i < slots.size(); ++i) {
            if (++choice[i] <= slots[i].count) break;
            choice[i] = 0;
        }
        if (i == slots.size()) break;
    }
    return out;
}

SurgeryDiagram pushoff_expand(const SurgeryDiagram& d, int index) {
    const auto& c = d.component(index);
    if (!is_reciprocal(c.coeff))
        throw SurgeryError(Err::BadCoefficient, "pushoff_expand needs a +-1/n coefficient");
    long long n = den(c.coeff).get_si();
    Rat unit = num(c.coeff) > 0 ? Rat(1) : Rat(-1);
    SurgeryDiagram out = d;
    out.component(index).coeff = unit;
    for (long long k = 1; k < n; ++k) out.add_pushoff(index, unit);
    return out;
}

SurgeryDiagram pushoff_expand_all(const SurgeryDiagram& d) {
    SurgeryDiagram out = d;
    for (int i = 0; i < d.size(); ++i) {
        // indices of original components are stable: push-offs append at the back
        const auto& c = out.component(i);
        if (den(c.coeff) != 1) out = pushoff_expand(out, i);
    }
    return out;
}

}  // namespace csurg::surgery
