#include "csurg/kirby.hpp"

#include <algorithm>

namespace csurg::kirby {

using surgery::is_reciprocal;
using surgery::SurgeryError;
using Err = SurgeryError::Code;

SurgeryDiagram cancel_pair(const SurgeryDiagram& d, int i, int j) {
    if (i == j || i < 0 || j < 0 || i >= d.size() || j >= d.size())
        throw SurgeryError(Err::BadInput, "cancel_pair: bad indices");
    const auto& a = d.component(i);
    const auto& b = d.component(j);
    if (!is_reciprocal(a.coeff) || !is_reciprocal(b.coeff) || a.coeff != -b.coeff)
        throw SurgeryError(Err::NotCancellable, "coefficients are not opposite +-1/n");
    if (a.tb != b.tb || a.rot_signed != b.rot_signed)
        throw SurgeryError(Err::NotCancellable, "components are not push-offs (tb/rot differ)");
    if (d.linking(i, j) != int_of(a.tb))
        throw SurgeryError(Err::NotCancellable, "pair does not link in tb");
    for (int k = 0; k < d.size(); ++k) {
        if (k == i || k == j) continue;
        if (d.linking(i, k) != d.linking(j, k))
            throw SurgeryError(Err::NotCancellable, "pair links the rest of the diagram unequally");
    }
    SurgeryDiagram out = d;
    out.remove_two(i, j);
    return out;
}

SurgeryDiagram introduce_cancelling_pair(const SurgeryDiagram& d, const CancellingPairSpec& spec) {
    if (!is_reciprocal(spec.knot.coeff))
        throw SurgeryError(Err::BadCoefficient, "pair coefficient must be +-1/n");
    SurgeryDiagram out = d;
    out.add_component(spec.knot, spec.linking_row);
    out.add_pushoff(out.size() - 1, -spec.knot.coeff);
    return out;
}

SurgeryDiagram handle_slide(const SurgeryDiagram& d, int i, int j, int eps) {
    if (i == j || i < 0 || j < 0 || i >= d.size() || j >= d.size())
        throw SurgeryError(Err::BadInput, "handle_slide: bad indices");
    if (eps != 1 && eps != -1) throw SurgeryError(Err::BadInput, "handle_slide: eps must be +-1");
    const auto& cj = d.component(j);
    if (!is_reciprocal(cj.coeff))
        throw SurgeryError(Err::BadCoefficient, "slide target needs a +-1/n coefficient");
    Int n = den(cj.coeff);
    int sj = sign_of(cj.coeff);
    Int c = Int(eps) * n;
    Int pj = Int(sj) + n * int_of(cj.tb);  // n * A_jj

    SurgeryDiagram out = d;
    auto& ci = out.component(i);
    Int l_ij = d.linking(i, j);
    // row/column update of the symmetric rational matrix A
    for (int k = 0; k < d.size(); ++k) {
        if (k == i || k == j) continue;
        out.set_linking(i, k, d.linking(i, k) + c * d.linking(j, k));
    }
    out.set_linking(i, j, l_ij + Int(eps) * pj);
    Int dtb = 2 * c * l_ij + n * pj;  // c^2 A_jj = n * p_j
    ci.tb += dtb.get_si();
    ci.rot_signed += Int(c * int_of(cj.rot_signed)).get_si();
    ci.geometry.reset();
    return out;
}

SurgeryDiagram rolfsen_twist_contact(const SurgeryDiagram& d, int i,
                                     const std::vector<int>& signs) {
    if (i < 0 || i >= d.size()) throw SurgeryError(Err::BadInput, "rolfsen: bad index");
    const auto& c = d.component(i);
    Rat r = c.coeff - 1;
    if (c.tb != -1 || c.rot_signed != 0 || num(r) != 1)
        throw SurgeryError(Err::NotUnknotSlot,
                           "rolfsen twist needs a tb -1, rot 0 unknot with coefficient 1+1/n");
    long long n = den(r).get_si();
    if (int(signs.size()) != n)
        throw SurgeryError(Err::BadInput, "rolfsen: need exactly n stabilization signs");
    long long sign_sum = 0;
    for (int s : signs) {
        if (s != 1 && s != -1) throw SurgeryError(Err::BadInput, "rolfsen: signs must be +-1");
        sign_sum += s;
    }
    SurgeryDiagram out = d;
    for (int a = 0; a < d.size(); ++a) {
        if (a == i) continue;
        Int w = d.linking(a, i);
        if (w == 0) continue;
        auto& ca = out.component(a);
        ca.tb -= Int(int_of(n) * w * w).get_si();
        ca.rot_signed += Int(w * int_of(sign_sum)).get_si();
        ca.geometry.reset();
        for (int b = a + 1; b < d.size(); ++b) {
            if (b == i) continue;
            Int wb = d.linking(b, i);
            out.set_linking(a, b, d.linking(a, b) - int_of(n) * w * wb);
        }
    }
    // remove the twist slot
    int last = out.size() - 1;
    if (i != last) {
        // remove_two needs two indices; drop via a scratch rebuild
        std::vector<SurgeryComponent> comps;
        std::vector<int> keep;
        for (int k = 0; k < out.size(); ++k)
            if (k != i) keep.push_back(k);
        IMat nl(int(keep.size()), int(keep.size()));
        for (size_t a = 0; a < keep.size(); ++a)
            for (size_t b = 0; b < keep.size(); ++b)
                nl.at(int(a), int(b)) = out.linking(keep[a], keep[b]);
        for (int k : keep) comps.push_back(out.component(k));
        return SurgeryDiagram(std::move(comps), std::move(nl));
    }
    std::vector<SurgeryComponent> comps;
    IMat nl(last, last);
    for (int a = 0; a < last; ++a)
        for (int b = 0; b < last; ++b) nl.at(a, b) = out.linking(a, b);
    for (int k = 0; k < last; ++k) comps.push_back(out.component(k));
    return SurgeryDiagram(std::move(comps), std::move(nl));
}

SurgeryDiagram annulus_twist_family(const AnnulusPresentation& pres, int n) {
    if (n < 0) throw SurgeryError(Err::BadInput, "annulus_twist_family: n >= 0");
    std::vector<SurgeryComponent> comps;
    comps.push_back(SurgeryComponent::abstract(pres.tag, pres.tb, pres.rot, Rat(-1)));
    if (n == 0) return SurgeryDiagram(std::move(comps), IMat(1, 1));
    comps.push_back(SurgeryComponent::abstract("K1", -1, 0, make_rat(1, n)));
    comps.push_back(SurgeryComponent::abstract("K2", -1, 0, make_rat(-1, n)));
    IMat lk(3, 3);
    lk.at(0, 1) = lk.at(1, 0) = int_of(pres.passes);
    lk.at(0, 2) = lk.at(2, 0) = int_of(pres.passes);
    lk.at(1, 2) = lk.at(2, 1) = Int(-1);
    return SurgeryDiagram(std::move(comps), std::move(lk));
}

SurgeryDiagram star_n_move(const AnnulusPresentation& pres, int m, const std::vector<int>& signs) {
    if (m < 1) throw SurgeryError(Err::BadInput, "star_n_move: m >= 1");
    SurgeryDiagram d = annulus_twist_family(pres, 1);
    // meridian of the band knot, away from the annulus
    auto mu = SurgeryComponent::abstract("mu", -1, 0, Rat(1) + make_rat(1, m));
    d.add_component(mu, {Int(1), Int(0), Int(0)});
    SurgeryDiagram twisted = rolfsen_twist_contact(d, 3, signs);
    // K1, K2 survive as a cancelling pair around the twisted knot
    return cancel_pair(twisted, 1, 2);
}

RGBData RGBData::family(int n) {
    RGBData r;
    r.tb_g = -1;
    r.rot_g = 0;
    r.tb_b = 2 * n;
    r.rot_b = 1;
    r.lk_gb = 2;
    return r;
}

namespace {

SurgeryDiagram rgb_diagram(const RGBData& data) {
    std::vector<SurgeryComponent> comps;
    comps.push_back(SurgeryComponent::abstract("R", -1, 0, Rat(1)));
    comps.push_back(SurgeryComponent::abstract("G", data.tb_g, data.rot_g, Rat(-1)));
    comps.push_back(SurgeryComponent::abstract("B", data.tb_b, data.rot_b, Rat(-1)));
    IMat lk(3, 3);
    lk.at(0, 1) = lk.at(1, 0) = Int(1);
    lk.at(0, 2) = lk.at(2, 0) = Int(1);
    lk.at(1, 2) = lk.at(2, 1) = data.lk_gb;
    return SurgeryDiagram(std::move(comps), std::move(lk));
}

}  // namespace

SurgeryDiagram rgb_resolved_diagram(const RGBData& data, char side) {
    if (side != 'G' && side != 'B') throw SurgeryError(Err::BadInput, "side must be G or B");
    SurgeryDiagram d = rgb_diagram(data);
    int tracked = side == 'G' ? 1 : 2;
    int other = side == 'G' ? 2 : 1;
    if (d.linking(0, 1) != 1 || d.linking(0, 2) != 1)
        throw SurgeryError(Err::NotRGB, "meridian linking conditions fail");
    // unlink the tracked knot from R by sliding it over the other one
    d = handle_slide(d, tracked, other, -1);
    if (d.linking(tracked, 0) != 0)
        throw SurgeryError(Err::NotRGB, "tracked component still links R after the slide");
    // R becomes a push-off of the other component
    d = handle_slide(d, 0, other, +1);
    return cancel_pair(d, 0, other);
}

SurgeryComponent rgb_resolve(const RGBData& data, char side) {
    SurgeryDiagram d = rgb_resolved_diagram(data, side);
    auto c = d.component(0);
    c.tag = side == 'G' ? "K_G" : "K_B";
    return c;
}

SurgeryDiagram replay(SurgeryDiagram d, const std::vector<Move>& script) {
    for (const auto& m : script) {
        switch (m.kind) {
            case Move::Kind::Cancel: d = cancel_pair(d, m.i, m.j); break;
            case Move::Kind::Introduce:
                if (!m.spec) throw SurgeryError(Err::BadInput, "introduce move without spec");
                d = introduce_cancelling_pair(d, *m.spec);
                break;
            case Move::Kind::Slide: d = handle_slide(d, m.i, m.j, m.eps); break;
            case Move::Kind::Rolfsen: d = rolfsen_twist_contact(d, m.i, m.signs); break;
        }
    }
    return d;
}

front::LegendrianFront front_handle_slide(const front::LegendrianFront& k,
                                          const front::LegendrianFront& j, int n, int at_event) {
    using namespace front;
    if (n < 1) throw SurgeryError(Err::BadInput, "front_handle_slide: n >= 1");
    if (k.component_count() != 1 || j.component_count() != 1)
        throw SurgeryError(Err::BadInput, "front_handle_slide: knots only");
    auto kev = k.events();
    if (kev.empty() || kev.back() != rcusp(1))
        throw SurgeryError(Err::BadInput,
                           "front_handle_slide: the sliding knot must close with rcusp(1)");
    kev.pop_back();

    // (-1, n)-cable of j with the companion kept as the top copy; the first
    // opening cusp is dropped so k's open strands thread in as the bottom
    // cable strand
    detail::InsertSpec spec;
    spec.component = 0;
    spec.event_index = at_event;
    auto& w = spec.word;
    w.push_back(lcusp(1));
    for (int t = 0; t <= n - 1; ++t) w.push_back(cross(2 + t));
    w.push_back(cross(n + 2));
    w.push_back(cross(n + 2));
    w.push_back(rcusp(n + 1));
    auto jex = detail::expand_components_with_insert(j, std::vector<int>{n + 1}, spec);
    if (jex.empty() || jex.front().kind != EventKind::LeftCusp)
        throw SurgeryError(Err::BadInput, "front_handle_slide: unexpected expansion shape");
    kev.insert(kev.end(), jex.begin() + 1, jex.end());
    auto out = validate_front(kev);
    if (out.component_count() != 2)
        throw SurgeryError(Err::BadInput, "front_handle_slide: fused front is not a 2-component link");
    return out;
}

}  // namespace csurg::kirby
