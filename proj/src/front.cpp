#include "csurg/front.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace csurg::front {

namespace {

using Err = FrontError::Code;

void fail(Err c, const std::string& m) { throw FrontError(c, m); }

}  // namespace

LegendrianFront validate_front(const std::vector<FrontEvent>& events, std::vector<int> orientation) {
    LegendrianFront f;
    f.events_ = events;

    std::vector<int> strands;  // arc ids, bottom to top
    int next_arc = 0;
    // cusp partner graph: each arc meets exactly two cusps
    std::vector<std::array<int, 2>> arc_cusp{};  // cusp indices per arc, [left_end, right_end]

    auto ensure_arc = [&](int a) {
        if (int(arc_cusp.size()) <= a) arc_cusp.resize(a + 1, {-1, -1});
    };

    for (int e = 0; e < int(events.size()); ++e) {
        const auto& ev = events[e];
        const int i = ev.pos;
        const int n = int(strands.size());
        switch (ev.kind) {
            case EventKind::LeftCusp: {
                if (i < 1 || i > n + 1)
                    fail(Err::StrandCountMismatch,
                         "left cusp position " + std::to_string(i) + " out of range at event " +
                             std::to_string(e));
                int lo = next_arc++, hi = next_arc++;
                ensure_arc(hi);
                strands.insert(strands.begin() + (i - 1), {lo, hi});
                f.cusps_.push_back({e, true, lo, hi});
                int c = int(f.cusps_.size()) - 1;
                arc_cusp[lo][0] = c;
                arc_cusp[hi][0] = c;
                break;
            }
            case EventKind::RightCusp: {
                if (i < 1 || i + 1 > n)
                    fail(Err::StrandCountMismatch,
                         "right cusp position " + std::to_string(i) + " out of range at event " +
                             std::to_string(e));
                int lo = strands[i - 1], hi = strands[i];
                f.cusps_.push_back({e, false, lo, hi});
                int c = int(f.cusps_.size()) - 1;
                arc_cusp[lo][1] = c;
                arc_cusp[hi][1] = c;
                strands.erase(strands.begin() + (i - 1), strands.begin() + (i + 1));
                break;
            }
            case EventKind::Cross: {
                if (i < 1 || i + 1 > n)
                    fail(Err::StrandCountMismatch,
                         "crossing position " + std::to_string(i) + " out of range at event " +
                             std::to_string(e));
                int under = strands[i - 1];  // ascending
                int over = strands[i];       // descending
                f.crossings_.push_back({e, under, over});
                std::swap(strands[i - 1], strands[i]);
                break;
            }
        }
    }
    if (!strands.empty())
        fail(Err::StrandCountMismatch,
             std::to_string(strands.size()) + " strands open at the end of the word");
    if (next_arc == 0) fail(Err::OpenEnds, "empty front");

    f.arc_count_ = next_arc;
    f.arc_component_.assign(next_arc, -1);
    f.arc_dir_.assign(next_arc, 0);

    // components: walk the cusp-pairing cycles
    int comp = 0;
    for (int start = 0; start < next_arc; ++start) {
        if (f.arc_component_[start] >= 0) continue;
        // traverse: begin on `start` moving right (dir +1)
        int arc = start, dir = +1;
        do {
            f.arc_component_[arc] = comp;
            f.arc_dir_[arc] = dir;
            // moving right we end at the arc's right cusp, moving left at its left cusp
            int cusp = dir > 0 ? arc_cusp[arc][1] : arc_cusp[arc][0];
            if (cusp < 0) fail(Err::OpenEnds, "arc with unmatched end");
            const auto& cu = f.cusps_[cusp];
            int partner = cu.lower_arc == arc ? cu.upper_arc : cu.lower_arc;
            arc = partner;
            dir = -dir;
        } while (arc != start);
        ++comp;
    }

    if (orientation.empty()) orientation.assign(comp, +1);
    if (int(orientation.size()) != comp)
        fail(Err::BadInput, "orientation list has " + std::to_string(orientation.size()) +
                                " entries for " + std::to_string(comp) + " components");
    for (int a = 0; a < next_arc; ++a)
        if (orientation[f.arc_component_[a]] < 0) f.arc_dir_[a] = -f.arc_dir_[a];
    f.orientation_ = std::move(orientation);
    return f;
}

long long LegendrianFront::signed_crossings(int a, int b) const {
    long long s = 0;
    for (const auto& c : crossings_) {
        int ca = arc_component_[c.under_arc], cb = arc_component_[c.over_arc];
        if ((ca == a && cb == b) || (ca == b && cb == a))
            s += arc_dir_[c.under_arc] * arc_dir_[c.over_arc];
    }
    return s;
}

long long LegendrianFront::linking(int a, int b) const {
    if (a == b) throw FrontError(Err::BadInput, "linking needs two distinct components");
    return signed_crossings(a, b) / 2;
}

ClassicalInvariants classical_invariants(const LegendrianFront& f, int component) {
    ClassicalInvariants inv;
    for (const auto& c : f.crossings()) {
        if (f.component_of_arc(c.under_arc) != component ||
            f.component_of_arc(c.over_arc) != component)
            continue;
        inv.writhe += f.arc_direction(c.under_arc) * f.arc_direction(c.over_arc);
    }
    long long right_cusps = 0;
    for (const auto& cu : f.cusps()) {
        if (f.component_of_arc(cu.lower_arc) != component) continue;
        if (!cu.left) ++right_cusps;
        // the cusp is traversed upward when we arrive on the lower arc
        bool up;
        if (!cu.left)
            up = f.arc_direction(cu.lower_arc) > 0;  // lower arrives moving right
        else
            up = f.arc_direction(cu.lower_arc) < 0;  // lower arrives moving left -> leaves upward? no: arrive lower means dir<0 at a left cusp
        // At a left cusp the strands emanate rightward; we arrive on the arc
        // that moves leftward. Arriving on the lower arc means we turn up.
        if (up)
            ++inv.cusps_up;
        else
            ++inv.cusps_down;
    }
    inv.tb = inv.writhe - right_cusps;
    inv.rot_signed = (inv.cusps_down - inv.cusps_up) / 2;
    inv.rot = std::llabs(inv.rot_signed);
    return inv;
}

LegendrianFront stabilize_at(const LegendrianFront& f, int sign, int at_event, int slot) {
    // Reconstruct the sweep to find the strand slot, then splice the zigzag.
    std::vector<FrontEvent> ev = f.events();
    if (at_event < 0 || at_event > int(ev.size()))
        throw FrontError(Err::BadInput, "stabilize: bad event index");
    // direction of the strand at (at_event, slot)
    std::vector<int> strands;
    int next_arc = 0;
    int arc_at = -1;
    for (int e = 0; e <= at_event && e < int(ev.size()) + 1; ++e) {
        if (e == at_event) {
            if (slot < 1 || slot > int(strands.size()))
                throw FrontError(Err::BadInput, "stabilize: bad slot");
            arc_at = strands[slot - 1];
            break;
        }
        const auto& x = ev[e];
        if (x.kind == EventKind::LeftCusp) {
            strands.insert(strands.begin() + (x.pos - 1), {next_arc, next_arc + 1});
            next_arc += 2;
        } else if (x.kind == EventKind::RightCusp) {
            strands.erase(strands.begin() + (x.pos - 1), strands.begin() + (x.pos + 1));
        } else {
            std::swap(strands[x.pos - 1], strands[x.pos]);
        }
    }
    if (arc_at < 0) throw FrontError(Err::BadInput, "stabilize: no strand at slice");
    int dir = f.arc_direction(arc_at);

    // Downward zigzag (pair below) raises rot_signed by one on a rightward
    // strand; the mirrored zigzag lowers it. A leftward strand swaps roles.
    bool pair_below = (sign * dir) > 0;
    std::vector<FrontEvent> word;
    if (pair_below) {
        word = {lcusp(slot), rcusp(slot + 1)};
    } else {
        word = {lcusp(slot + 1), rcusp(slot)};
    }
    ev.insert(ev.begin() + at_event, word.begin(), word.end());
    return validate_front(ev, f.orientation());
}

LegendrianFront stabilize(const LegendrianFront& f, int sign) {
    // default location: the strand created by the first left cusp
    int at_event = 1;
    return stabilize_at(f, sign, at_event, f.events().front().pos);
}

namespace detail {

namespace {

struct Emitter {
    std::vector<FrontEvent> out;
    void lc(int p) { out.push_back(lcusp(p)); }
    void rc(int p) { out.push_back(rcusp(p)); }
    void cr(int p) { out.push_back(cross(p)); }
};

// swap two adjacent blocks of widths w1 (lower) and w2 (upper), base = slot
// of the lowest strand (1-based)
void emit_block_swap(Emitter& em, int base, int w1, int w2) {
    for (int k = 1; k <= w2; ++k)
        for (int j = 0; j < w1; ++j) em.cr(base + w1 + k - 2 - j);
}

}  // namespace

std::vector<FrontEvent> expand_components_with_insert(const LegendrianFront& f,
                                                      const std::vector<int>& width,
                                                      const InsertSpec& insert) {
    Emitter em;
    std::vector<int> strands;  // original arc ids
    int next_arc = 0;
    auto w_of = [&](int arc) { return width[f.component_of_arc(arc)]; };
    auto base_of = [&](int slot0) {  // 0-based slot -> 1-based expanded base
        int b = 1;
        for (int s = 0; s < slot0; ++s) b += w_of(strands[s]);
        return b;
    };
    bool do_insert = insert.event_index >= 0 && !insert.word.empty();

    const auto& ev = f.events();
    for (int e = 0; e <= int(ev.size()); ++e) {
        if (do_insert && e == insert.event_index) {
            // locate a strand of the insert component at this slice
            int slot = -1;
            for (int s = 0; s < int(strands.size()); ++s) {
                if (f.component_of_arc(strands[s]) != insert.component) continue;
                if (f.arc_direction(strands[s]) <= 0) continue;
                if (insert.below_component >= 0 &&
                    (s == 0 || f.component_of_arc(strands[s - 1]) != insert.below_component))
                    continue;
                slot = s;
                break;
            }
            if (slot < 0)
                throw FrontError(FrontError::Code::BadInput,
                                 "no suitable strand of the component at the insertion slice");
            int base = base_of(slot);
            for (const auto& w : insert.word) em.out.push_back({w.kind, base - 1 + w.pos});
        }
        if (e == int(ev.size())) break;
        const auto& x = ev[e];
        if (x.kind == EventKind::LeftCusp) {
            int lo = next_arc++, hi = next_arc++;
            (void)hi;
            int n = w_of(lo);
            int p = base_of(x.pos - 1);
            if (n == 1) {
                em.lc(p);
            } else {
                for (int k = 0; k < n; ++k) em.lc(p + 2 * k);  // stacked
                // interleave: lowers below uppers
                for (int k = 2; k <= n; ++k)
                    for (int q = 2 * k - 2; q >= k; --q) em.cr(p - 1 + q);
            }
            strands.insert(strands.begin() + (x.pos - 1), {lo, lo + 1});
        } else if (x.kind == EventKind::RightCusp) {
            int lo = strands[x.pos - 1];
            int n = w_of(lo);
            int p = base_of(x.pos - 1);
            if (n == 1) {
                em.rc(p);
            } else {
                // un-interleave back to stacked, then close
                for (int k = n; k >= 2; --k)
                    for (int q = k; q <= 2 * k - 2; ++q) em.cr(p - 1 + q);
                for (int k = 0; k < n; ++k) em.rc(p);
            }
            strands.erase(strands.begin() + (x.pos - 1), strands.begin() + (x.pos + 1));
        } else {
            int lo = strands[x.pos - 1], hi = strands[x.pos];
            int p = base_of(x.pos - 1);
            emit_block_swap(em, p, w_of(lo), w_of(hi));
            std::swap(strands[x.pos - 1], strands[x.pos]);
        }
    }
    return em.out;
}

std::vector<FrontEvent> expand_components(const LegendrianFront& f, const std::vector<int>& width) {
    InsertSpec none;
    none.event_index = -1;
    return expand_components_with_insert(f, width, none);
}

}  // namespace detail

LegendrianFront reeb_pushoff(const LegendrianFront& f, int n) {
    if (f.component_count() != 1)
        throw FrontError(Err::BadInput, "reeb_pushoff expects a one-component front");
    if (n < 1) throw FrontError(Err::BadInput, "reeb_pushoff: n must be >= 1");
    if (n == 1) return f;
    auto ev = detail::expand_components(f, {n});
    return validate_front(ev, std::vector<int>(n, f.orientation()[0]));
}

PatternWord cable_pattern(int sign, int n) {
    if (n < 1) throw FrontError(Err::BadInput, "cable_pattern: n must be >= 1");
    if (sign != 1 && sign != -1) throw FrontError(Err::BadInput, "cable_pattern: sign must be +-1");
    PatternWord p;
    p.strands = n;
    if (sign < 0) {
        // bottom strand leaves the band through a two-cusp wrap and re-enters
        // on top
        p.events.push_back(lcusp(n + 1));
        for (int q = n; q >= 1; --q) p.events.push_back(cross(q));
        p.events.push_back(rcusp(1));
    } else {
        // cusp-free shift: bottom strand climbs to the top
        for (int q = 1; q <= n - 1; ++q) p.events.push_back(cross(q));
    }
    return p;
}

LegendrianFront legendrian_satellite(const LegendrianFront& companion, const PatternWord& pattern,
                                     int insertion_event) {
    if (companion.component_count() != 1)
        throw FrontError(Err::BadInput, "satellite expects a one-component companion");
    detail::InsertSpec spec;
    spec.component = 0;
    spec.event_index = insertion_event;
    spec.word = pattern.events;
    auto ev = detail::expand_components_with_insert(companion, {pattern.strands}, spec);
    auto bare = validate_front(ev);
    // all resulting components inherit the companion's orientation
    return validate_front(ev,
                          std::vector<int>(bare.component_count(), companion.orientation()[0]));
}

LegendrianFront cable_link(int sign, int n, const LegendrianFront& companion, int insertion_event) {
    if (companion.component_count() != 1)
        throw FrontError(Err::BadInput, "cable_link expects a one-component companion");
    // n+1 copies: the bottom copy of each block stays the companion C, the n
    // copies above it form the cable J. The clasp wraps around C.
    detail::InsertSpec spec;
    spec.component = 0;
    spec.event_index = insertion_event;
    std::vector<FrontEvent>& w = spec.word;
    if (sign < 0) {
        // block: C at 1, J at 2..n+1; J's bottom strand wraps under C
        w.push_back(lcusp(n + 2));
        for (int q = n + 1; q >= 1; --q) w.push_back(cross(q));  // descend past J-lines and C
        w.push_back(cross(1));                                   // rise back past C
        w.push_back(rcusp(2));
    } else {
        // J's bottom strand dips under C and climbs to the top
        w.push_back(cross(1));
        w.push_back(cross(1));
        for (int q = 2; q <= n; ++q) w.push_back(cross(q));
    }
    auto ev = detail::expand_components_with_insert(companion, {n + 1}, spec);
    auto bare = validate_front(ev);
    if (bare.component_count() != 2)
        throw FrontError(Err::BadInput, "cable_link: construction did not yield J u C");
    return validate_front(ev, std::vector<int>(2, companion.orientation()[0]));
}

ClassicalInvariants cable_invariants(int sign, int n, const LegendrianFront& companion) {
    auto j = legendrian_satellite(companion, cable_pattern(sign, n));
    if (j.component_count() != 1)
        throw FrontError(Err::BadInput, "cable did not close up to a knot");
    return classical_invariants(j, 0);
}

pd::PDCode front_to_pd(const LegendrianFront& f) {
    // Arc visit lists: crossings in sweep order along each arc.
    struct Visit {
        int crossing;
        bool under;
    };
    std::vector<std::vector<Visit>> visits(f.arc_count());
    for (int c = 0; c < int(f.crossings().size()); ++c) {
        visits[f.crossings()[c].under_arc].push_back({c, true});
        visits[f.crossings()[c].over_arc].push_back({c, false});
    }
    // cusp pairing per arc end
    std::vector<std::array<int, 2>> partner(f.arc_count());  // [left_end, right_end]
    for (const auto& cu : f.cusps()) {
        int side = cu.left ? 0 : 1;
        partner[cu.lower_arc][side] = cu.upper_arc;
        partner[cu.upper_arc][side] = cu.lower_arc;
    }

    pd::PDCode code;
    code.crossings.assign(f.crossings().size(), {0, 0, 0, 0});
    // per-crossing slot arcs: fill edges while traversing
    struct Slots {
        int under_in = 0, under_out = 0, over_in = 0, over_out = 0;
    };
    std::vector<Slots> slots(f.crossings().size());

    std::vector<bool> arc_done(f.arc_count(), false);
    int next_edge = 1;
    for (int start = 0; start < f.arc_count(); ++start) {
        if (arc_done[start]) continue;
        // gather the cyclic pass sequence of this component
        std::vector<std::pair<int, bool>> passes;  // (crossing, under?)
        int arc = start;
        do {
            arc_done[arc] = true;
            int dir = f.arc_direction(arc);
            auto vs = visits[arc];
            if (dir < 0) std::reverse(vs.begin(), vs.end());
            for (auto& v : vs) passes.emplace_back(v.crossing, v.under);
            arc = dir > 0 ? partner[arc][1] : partner[arc][0];
        } while (arc != start);

        if (passes.empty()) {
            ++code.unknots;
            continue;
        }
        int first_edge = next_edge;
        for (size_t k = 0; k < passes.size(); ++k) {
            int e_in = next_edge + int(k);
            int e_out = (k + 1 < passes.size()) ? e_in + 1 : first_edge;
            auto [cr, under] = passes[k];
            if (under) {
                slots[cr].under_in = e_in;
                slots[cr].under_out = e_out;
            } else {
                slots[cr].over_in = e_in;
                slots[cr].over_out = e_out;
            }
        }
        next_edge += int(passes.size());
    }

    // Compass slots at a front crossing: under strand occupies SW-NE, over
    // NW-SE; counterclockwise order is SW, SE, NE, NW.
    for (int c = 0; c < int(code.crossings.size()); ++c) {
        const auto& cr = f.crossings()[c];
        const auto& s = slots[c];
        int du = f.arc_direction(cr.under_arc);
        int dv = f.arc_direction(cr.over_arc);
        int sw = du > 0 ? s.under_in : s.under_out;
        int ne = du > 0 ? s.under_out : s.under_in;
        int nw = dv > 0 ? s.over_in : s.over_out;
        int se = dv > 0 ? s.over_out : s.over_in;
        if (du > 0)
            code.crossings[c] = {sw, se, ne, nw};
        else
            code.crossings[c] = {ne, nw, sw, se};
    }
    return code;
}

// ---- local rewrites ----

namespace {

bool is_cross(const FrontEvent& e) { return e.kind == EventKind::Cross; }

}  // namespace

std::optional<std::vector<FrontEvent>> move_r3(const std::vector<FrontEvent>& ev, int at) {
    if (at < 0 || at + 2 >= int(ev.size())) return std::nullopt;
    if (!is_cross(ev[at]) || !is_cross(ev[at + 1]) || !is_cross(ev[at + 2])) return std::nullopt;
    int i = ev[at].pos, j = ev[at + 1].pos, k = ev[at + 2].pos;
    std::vector<FrontEvent> out = ev;
    if (i == k && j == i + 1) {  // s_i s_{i+1} s_i -> s_{i+1} s_i s_{i+1}
        out[at] = cross(j);
        out[at + 1] = cross(i);
        out[at + 2] = cross(j);
        return out;
    }
    if (i == k && j + 1 == i) {  // s_i s_{i-1} s_i -> s_{i-1} s_i s_{i-1}
        out[at] = cross(j);
        out[at + 1] = cross(i);
        out[at + 2] = cross(j);
        return out;
    }
    return std::nullopt;
}

std::optional<std::vector<FrontEvent>> move_lcusp_down(const std::vector<FrontEvent>& ev, int at) {
    if (at < 0 || at >= int(ev.size())) return std::nullopt;
    if (ev[at].kind != EventKind::LeftCusp || ev[at].pos < 2) return std::nullopt;
    int i = ev[at].pos - 1;
    std::vector<FrontEvent> out = ev;
    out[at] = lcusp(i);
    out.insert(out.begin() + at + 1, {cross(i + 1), cross(i)});
    return out;
}

std::optional<std::vector<FrontEvent>> move_lcusp_down_inv(const std::vector<FrontEvent>& ev,
                                                           int at) {
    if (at < 0 || at + 2 >= int(ev.size())) return std::nullopt;
    if (ev[at].kind != EventKind::LeftCusp) return std::nullopt;
    int i = ev[at].pos;
    if (!is_cross(ev[at + 1]) || ev[at + 1].pos != i + 1) return std::nullopt;
    if (!is_cross(ev[at + 2]) || ev[at + 2].pos != i) return std::nullopt;
    std::vector<FrontEvent> out = ev;
    out[at] = lcusp(i + 1);
    out.erase(out.begin() + at + 1, out.begin() + at + 3);
    return out;
}

std::optional<std::vector<FrontEvent>> move_lcusp_up(const std::vector<FrontEvent>& ev, int at) {
    if (at < 0 || at >= int(ev.size())) return std::nullopt;
    if (ev[at].kind != EventKind::LeftCusp) return std::nullopt;
    int i = ev[at].pos;
    std::vector<FrontEvent> out = ev;
    out[at] = lcusp(i + 1);
    out.insert(out.begin() + at + 1, {cross(i), cross(i + 1)});
    return out;
}

std::optional<std::vector<FrontEvent>> move_rcusp_up(const std::vector<FrontEvent>& ev, int at) {
    if (at < 0 || at >= int(ev.size())) return std::nullopt;
    if (ev[at].kind != EventKind::RightCusp) return std::nullopt;
    int i = ev[at].pos;
    std::vector<FrontEvent> out = ev;
    out[at] = cross(i + 1);
    out.insert(out.begin() + at + 1, {cross(i), rcusp(i + 1)});
    return out;
}

std::optional<std::vector<FrontEvent>> move_rcusp_down(const std::vector<FrontEvent>& ev, int at) {
    if (at < 0 || at >= int(ev.size())) return std::nullopt;
    if (ev[at].kind != EventKind::RightCusp || ev[at].pos < 2) return std::nullopt;
    int i = ev[at].pos - 1;
    std::vector<FrontEvent> out = ev;
    out[at] = cross(i);
    out.insert(out.begin() + at + 1, {cross(i + 1), rcusp(i)});
    return out;
}

std::optional<std::vector<FrontEvent>> move_swallowtail_birth(const std::vector<FrontEvent>& ev,
                                                              int at, int slot, bool pair_above) {
    if (at < 0 || at > int(ev.size()) || slot < 1) return std::nullopt;
    std::vector<FrontEvent> out = ev;
    std::vector<FrontEvent> word;
    if (pair_above)
        word = {lcusp(slot + 1), cross(slot), rcusp(slot + 1)};
    else
        word = {lcusp(slot), cross(slot + 1), rcusp(slot)};
    out.insert(out.begin() + at, word.begin(), word.end());
    return out;
}

std::optional<std::vector<FrontEvent>> move_swallowtail_death(const std::vector<FrontEvent>& ev,
                                                              int at) {
    if (at < 0 || at + 2 >= int(ev.size())) return std::nullopt;
    if (ev[at].kind != EventKind::LeftCusp || !is_cross(ev[at + 1]) ||
        ev[at + 2].kind != EventKind::RightCusp)
        return std::nullopt;
    int i = ev[at].pos;
    bool above = ev[at + 1].pos == i - 1 && ev[at + 2].pos == i;
    bool below = ev[at + 1].pos == i + 1 && ev[at + 2].pos == i;
    if (!above && !below) return std::nullopt;
    std::vector<FrontEvent> out = ev;
    out.erase(out.begin() + at, out.begin() + at + 3);
    return out;
}

}  // namespace csurg::front
