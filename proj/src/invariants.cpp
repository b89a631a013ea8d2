#include "csurg/invariants.hpp"

#include <algorithm>

namespace csurg::invariants {

using surgery::generalized_linking_matrix;
using surgery::is_reciprocal;
using surgery::normalize;
using surgery::SurgeryError;

IMat smith_relations(const SurgeryDiagram& d) {
    // Relation i reads  p_i mu_i + sum_j q_j l_ij mu_j = 0  (the rows of the
    // generalized linking matrix). With the row-scaled variant
    // (q_i multiplying the linking terms) the meridian classes of a +-1/n
    // component and of its push-off expansion disagree; this scaling keeps
    // every downstream invariant identical across the two routes.
    return generalized_linking_matrix(d).Q;
}

HomologyPresentation first_homology(const SurgeryDiagram& d) {
    HomologyPresentation h;
    h.relations = smith_relations(d);
    h.smith = smith_normal_form(h.relations);
    h.invariant_factors = h.smith.invariant_factors;
    return h;
}

std::vector<Int> HomologyPresentation::smith_coords(const std::vector<Int>& mer) const {
    // rows of the relation lattice live in meridian coordinates; a class x
    // maps to x * V in the diagonal basis
    const IMat& V = smith.V;
    int n = V.rows();
    if (int(mer.size()) != n) throw std::invalid_argument("class coordinate length mismatch");
    std::vector<Int> out(n, Int(0));
    for (int j = 0; j < n; ++j) {
        Int s(0);
        for (int i = 0; i < n; ++i) s += mer[i] * V.at(i, j);
        const Int& dj = smith.D.at(j, j);
        if (dj != 0) {
            mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), dj.get_mpz_t());
        }
        out[j] = s;
    }
    return out;
}

Int HomologyPresentation::element_order(const std::vector<Int>& mer) const {
    auto c = smith_coords(mer);
    Int order(1);
    for (size_t j = 0; j < c.size(); ++j) {
        const Int& dj = smith.D.at(int(j), int(j));
        if (dj == 0) {
            if (c[j] != 0) return Int(0);
            continue;
        }
        if (c[j] == 0) continue;
        Int g;
        mpz_gcd(g.get_mpz_t(), c[j].get_mpz_t(), dj.get_mpz_t());
        Int o = dj / g;
        mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), o.get_mpz_t());
    }
    return order;
}

namespace {

void require_reciprocal(const SurgeryDiagram& d) {
    for (int i = 0; i < d.size(); ++i)
        if (!is_reciprocal(d.component(i).coeff))
            throw SurgeryError(SurgeryError::Code::BadCoefficient,
                               "direct evaluation needs +-1/n coefficients");
}

}  // namespace

EulerClassElement euler_class_direct(const SurgeryDiagram& d) {
    require_reciprocal(d);
    auto h = first_homology(d);
    std::vector<Int> e;
    for (int i = 0; i < d.size(); ++i) {
        Int n_i = den(d.component(i).coeff);
        e.push_back(n_i * int_of(d.component(i).rot_signed));
    }
    EulerClassElement el;
    el.coords = h.smith_coords(e);
    el.order = h.element_order(e);
    return el;
}

D3Value d3_direct(const SurgeryDiagram& d) {
    require_reciprocal(d);
    auto g = generalized_linking_matrix(d);
    int n = d.size();
    std::vector<Rat> rot;
    for (int i = 0; i < n; ++i) rot.push_back(Rat(int_of(d.component(i).rot_signed)));
    auto b = solve_rational(QMat::from_int(g.Q), rot);
    if (!b) return D3Value{false, Rat(0)};
    Rat acc(0);
    for (int i = 0; i < n; ++i) {
        const auto& c = d.component(i);
        Int n_i = den(c.coeff);
        int sign_i = sign_of(c.coeff);
        acc += Rat(n_i) * (*b)[i] * Rat(int_of(c.rot_signed));
        acc += Rat(Int(3) - n_i) * Rat(sign_i);
    }
    int sigma = signature(g.A);
    Rat v = acc / 4 - Rat(3, 4) * Rat(sigma);
    v.canonicalize();
    return D3Value{true, v};
}

std::vector<EulerClassElement> euler_class(const SurgeryDiagram& d) {
    bool direct = true;
    for (int i = 0; i < d.size(); ++i)
        if (!is_reciprocal(d.component(i).coeff)) direct = false;
    std::vector<EulerClassElement> out;
    if (direct) {
        out.push_back(euler_class_direct(d));
        return out;
    }
    for (const auto& nf : normalize(d)) out.push_back(euler_class_direct(nf.diagram));
    return out;
}

std::vector<D3Value> d3(const SurgeryDiagram& d) {
    bool direct = true;
    for (int i = 0; i < d.size(); ++i)
        if (!is_reciprocal(d.component(i).coeff)) direct = false;
    std::vector<D3Value> out;
    if (direct) {
        out.push_back(d3_direct(d));
        return out;
    }
    for (const auto& nf : normalize(d)) out.push_back(d3_direct(nf.diagram));
    return out;
}

IMat trace_intersection_form(long long tb) {
    IMat m(1, 1);
    m.at(0, 0) = int_of(tb) - 1;
    return m;
}

TraceDouble trace_double_parity(long long tb_mu_image, long long lk, long long tb_lprime) {
    TraceDouble t;
    t.form = IMat(2, 2);
    t.form.at(0, 0) = int_of(tb_mu_image) + 1;
    t.form.at(0, 1) = int_of(lk);
    t.form.at(1, 0) = int_of(lk);
    t.form.at(1, 1) = int_of(tb_lprime) - 1;
    t.odd = (t.form.at(0, 0) % 2 != 0) || (t.form.at(1, 1) % 2 != 0);
    return t;
}

InvariantTriple invariant_triple(const SurgeryDiagram& d) {
    InvariantTriple t;
    auto h = first_homology(d);
    for (const auto& f : h.invariant_factors)
        if (f != 1) t.factors.push_back(f);

    bool direct = true;
    for (int i = 0; i < d.size(); ++i)
        if (!is_reciprocal(d.component(i).coeff)) direct = false;
    if (direct) {
        auto e = euler_class_direct(d);
        t.branches.emplace_back(d3_direct(d), e.order);
    } else {
        for (const auto& nf : normalize(d)) {
            auto e = euler_class_direct(nf.diagram);
            t.branches.emplace_back(d3_direct(nf.diagram), e.order);
        }
    }
    std::sort(t.branches.begin(), t.branches.end());
    return t;
}

}  // namespace csurg::invariants
