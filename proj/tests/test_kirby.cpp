#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "csurg/invariants.hpp"
#include "csurg/kirby.hpp"
#include "fronts_common.hpp"

using namespace csurg;
using namespace csurg::kirby;
using invariants::invariant_triple;
using surgery::SurgeryComponent;
using surgery::SurgeryDiagram;

namespace {

SurgeryDiagram pair_diagram(const Rat& c1, const Rat& c2) {
    SurgeryDiagram d({SurgeryComponent::abstract("a", -1, 0, c1),
                      SurgeryComponent::abstract("b", -1, 0, c2)},
                     IMat(2, 2));
    d.set_linking(0, 1, Int(-1));
    return d;
}

std::mt19937 g_rng(20250101);

SurgeryDiagram random_diagram(int maxk) {
    std::uniform_int_distribution<int> ksz(1, maxk), link(-3, 3), tbd(-4, 2), rotd(-2, 2);
    std::vector<Rat> coeffs{Rat(1), Rat(-1), make_rat(1, 2), make_rat(-1, 2), make_rat(1, 3),
                            make_rat(-1, 3)};
    int k = ksz(g_rng);
    std::vector<SurgeryComponent> comps;
    for (int i = 0; i < k; ++i) {
        int tb = tbd(g_rng);
        int rot = rotd(g_rng);
        if (((tb + rot) % 2 + 2) % 2 == 0) rot += 1;
        comps.push_back(SurgeryComponent::abstract("", tb, rot, coeffs[g_rng() % coeffs.size()]));
    }
    SurgeryDiagram d(comps, IMat(k, k));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) d.set_linking(i, j, Int(link(g_rng)));
    return d;
}

}  // namespace

TEST_CASE("cancel_pair") {
    // (+1, -1) pair of push-offs is S^3
    auto d = cancel_pair(pair_diagram(Rat(1), Rat(-1)), 0, 1);
    CHECK(d.size() == 0);

    // (+1/2, -1/2) cancels as well
    auto d2 = cancel_pair(pair_diagram(make_rat(1, 2), make_rat(-1, 2)), 0, 1);
    CHECK(d2.size() == 0);

    // mismatched n
    CHECK_THROWS_AS(cancel_pair(pair_diagram(make_rat(1, 2), Rat(-1)), 0, 1),
                    surgery::SurgeryError);
    // not a push-off pair (wrong linking)
    SurgeryDiagram bad({SurgeryComponent::abstract("a", -1, 0, Rat(1)),
                        SurgeryComponent::abstract("b", -1, 0, Rat(-1))},
                       IMat(2, 2));
    CHECK_THROWS_AS(cancel_pair(bad, 0, 1), surgery::SurgeryError);
}

TEST_CASE("introduce then cancel is the identity") {
    for (int iter = 0; iter < 30; ++iter) {
        auto d = random_diagram(3);
        CancellingPairSpec spec;
        std::uniform_int_distribution<int> tbd(-3, 1), nd(1, 3), link(-2, 2);
        int tb = tbd(g_rng);
        spec.knot = SurgeryComponent::abstract("p", tb, (tb % 2 == 0) ? 1 : 0,
                                               make_rat(g_rng() % 2 ? 1 : -1, nd(g_rng)));
        for (int i = 0; i < d.size(); ++i) spec.linking_row.push_back(Int(link(g_rng)));
        auto with = introduce_cancelling_pair(d, spec);
        REQUIRE(with.size() == d.size() + 2);
        auto back = cancel_pair(with, d.size(), d.size() + 1);
        REQUIRE(back.size() == d.size());
        for (int i = 0; i < d.size(); ++i) {
            CHECK(back.component(i).tb == d.component(i).tb);
            CHECK(back.component(i).coeff == d.component(i).coeff);
            for (int j = 0; j < d.size(); ++j) CHECK(back.linking(i, j) == d.linking(i, j));
        }
        // and the pair does not change the invariants
        auto t1 = invariant_triple(d);
        auto t2 = invariant_triple(with);
        CHECK(t1.factors == t2.factors);
        CHECK(t1.branches == t2.branches);
    }
}

TEST_CASE("handle slide congruence: slide and slide back") {
    SurgeryDiagram d({SurgeryComponent::abstract("K", -2, 1, make_rat(-3, 2)),
                      SurgeryComponent::abstract("L", -1, 0, Rat(-1))},
                     IMat(2, 2));
    auto once = handle_slide(d, 0, 1, +1);
    CHECK(once.component(0).tb == -2 + 1 * (-1) + 1 * (-1));  // 2 eps n l + n eps_j + n^2 t_j
    auto back = handle_slide(once, 0, 1, -1);
    CHECK(back.component(0).tb == d.component(0).tb);
    CHECK(back.component(0).rot_signed == d.component(0).rot_signed);
    CHECK(back.linking(0, 1) == d.linking(0, 1));
    CHECK(back.component(0).coeff == d.component(0).coeff);
}

TEST_CASE("handle slides preserve the invariant triple") {
    int done = 0;
    for (int iter = 0; iter < 200 && done < 60; ++iter) {
        auto d = random_diagram(4);
        if (d.size() < 2) continue;
        std::uniform_int_distribution<int> pick(0, d.size() - 1);
        int i = pick(g_rng), j = pick(g_rng);
        if (i == j) continue;
        int eps = g_rng() % 2 ? 1 : -1;
        auto before = invariant_triple(d);
        auto after = invariant_triple(handle_slide(d, i, j, eps));
        CHECK(before.factors == after.factors);
        CHECK(before.branches == after.branches);
        ++done;
    }
    CHECK(done >= 60);
}

namespace {

// all sign multisets of length n (j pluses, n - j minuses)
std::vector<std::vector<int>> sign_multisets(int n) {
    std::vector<std::vector<int>> out;
    for (int j = 0; j <= n; ++j) {
        std::vector<int> s;
        for (int k = 0; k < n; ++k) s.push_back(k < j ? +1 : -1);
        out.push_back(std::move(s));
    }
    return out;
}

// branch data pooled over all stabilization choices of a family of diagrams
std::vector<std::pair<invariants::D3Value, Int>> pooled_branches(
    const std::vector<SurgeryDiagram>& ds) {
    std::vector<std::pair<invariants::D3Value, Int>> all;
    for (const auto& d : ds) {
        auto t = invariant_triple(d);
        all.insert(all.end(), t.branches.begin(), t.branches.end());
    }
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace

TEST_CASE("rolfsen twist on a 1+1/n meridian slot") {
    // single tb t strand through the unknot: becomes (t - n, r +- multiset);
    // the sign branches of the twist together recover the branch set of the
    // (1 + 1/n) slot
    for (int n = 1; n <= 3; ++n) {
        for (long long t : {-2LL, 1LL}) {
            SurgeryDiagram d({SurgeryComponent::abstract("K", t, t % 2 == 0 ? 1 : 0, Rat(-1)),
                              SurgeryComponent::abstract("U", -1, 0, Rat(1) + make_rat(1, n))},
                             IMat(2, 2));
            d.set_linking(0, 1, Int(1));
            std::vector<SurgeryDiagram> outs;
            for (const auto& signs : sign_multisets(n)) {
                auto out = rolfsen_twist_contact(d, 1, signs);
                REQUIRE(out.size() == 1);
                CHECK(out.component(0).tb == t - n);
                long long sum = 0;
                for (int s : signs) sum += s;
                CHECK(out.component(0).rot_signed == d.component(0).rot_signed + sum);
                outs.push_back(std::move(out));
            }
            auto t1 = invariant_triple(d);
            CHECK(t1.factors == invariant_triple(outs[0]).factors);
            CHECK(t1.branches == pooled_branches(outs));
        }
    }

    // empty linking: slot removed, S^3 summand
    SurgeryDiagram lonely({SurgeryComponent::abstract("U", -1, 0, Rat(1) + make_rat(1, 2)),
                           SurgeryComponent::abstract("K", -3, 0, Rat(-1))},
                          IMat(2, 2));
    std::vector<SurgeryDiagram> outs;
    for (const auto& signs : sign_multisets(2)) outs.push_back(rolfsen_twist_contact(lonely, 0, signs));
    REQUIRE(outs[0].size() == 1);
    CHECK(outs[0].component(0).tb == -3);
    // the (1 + 1/2) slot alone is S^3 in every branch: all input branches
    // coincide and match the remainder
    auto t1 = invariant_triple(lonely);
    CHECK(t1.branches.size() == 3);
    CHECK(t1.branches.front() == t1.branches.back());
    for (const auto& o : outs) {
        auto t2 = invariant_triple(o);
        CHECK(t1.factors == t2.factors);
        REQUIRE(t2.branches.size() == 1);
        CHECK(t1.branches.front() == t2.branches.front());
    }

    CHECK_THROWS_AS(rolfsen_twist_contact(lonely, 1, {+1}), surgery::SurgeryError);
}

TEST_CASE("rolfsen twist with multi-strand linking (smooth bookkeeping)") {
    // two strands through the slot and mutual linking
    SurgeryDiagram d({SurgeryComponent::abstract("A", -2, 1, Rat(-1)),
                      SurgeryComponent::abstract("B", -1, 0, make_rat(-1, 2)),
                      SurgeryComponent::abstract("U", -1, 0, Rat(1) + make_rat(1, 2))},
                     IMat(3, 3));
    d.set_linking(0, 1, Int(1));
    d.set_linking(0, 2, Int(2));
    d.set_linking(1, 2, Int(1));
    auto out = rolfsen_twist_contact(d, 2, {+1, -1});
    REQUIRE(out.size() == 2);
    CHECK(out.component(0).tb == -2 - 2 * 4);      // - n w^2 with n=2, w=2
    CHECK(out.component(1).tb == -1 - 2);          // w = 1
    CHECK(out.linking(0, 1) == 1 - 2 * 2 * 1);     // l - n w_a w_b
    std::vector<SurgeryDiagram> outs;
    for (const auto& signs : sign_multisets(2)) outs.push_back(rolfsen_twist_contact(d, 2, signs));
    auto t1 = invariant_triple(d);
    CHECK(t1.factors == invariant_triple(outs[0]).factors);
    CHECK(t1.branches == pooled_branches(outs));
}

TEST_CASE("annulus twist family") {
    AnnulusPresentation pres;  // tb 1, rot 0, passes 0
    auto d0 = annulus_twist_family(pres, 0);
    REQUIRE(d0.size() == 1);
    auto t0 = invariant_triple(d0);
    REQUIRE(t0.factors.size() == 1);
    CHECK(t0.factors[0] == 0);  // H1 = Z

    for (int n = 1; n <= 12; ++n) {
        auto dn = annulus_twist_family(pres, n);
        REQUIRE(dn.size() == 3);
        auto g = surgery::generalized_linking_matrix(dn);
        CHECK(make_rat(g.p[1], g.q[1]) == make_rat(1 - n, n));
        CHECK(make_rat(g.p[2], g.q[2]) == make_rat(-1 - n, n));
        auto tn = invariant_triple(dn);
        CHECK(tn.factors == t0.factors);
        CHECK(tn.branches == t0.branches);
        // euler class vanishes on every branch
        for (const auto& e : invariants::euler_class(dn)) CHECK(e.order == 1);
    }
}

TEST_CASE("star move: the surviving knot has tb = 1 - m") {
    AnnulusPresentation pres;
    for (int m = 1; m <= 4; ++m) {
        std::vector<int> signs(m, -1);
        auto d = star_n_move(pres, m, signs);
        REQUIRE(d.size() == 1);
        CHECK(d.component(0).tb == 1 - m);
        CHECK(d.component(0).coeff == Rat(-1));
    }
}

TEST_CASE("rgb resolutions") {
    for (int n = 0; n <= 8; ++n) {
        auto data = RGBData::family(n);
        auto kg = rgb_resolve(data, 'G');
        auto kb = rgb_resolve(data, 'B');
        CHECK(kg.tb == 2 * n - 6);
        CHECK(kb.tb == 2 * n - 6);
        auto tg = invariant_triple(rgb_resolved_diagram(data, 'G'));
        auto tb_ = invariant_triple(rgb_resolved_diagram(data, 'B'));
        CHECK(tg.factors == tb_.factors);
        CHECK(tg.branches == tb_.branches);
    }
    CHECK_THROWS_AS(rgb_resolve(RGBData::family(1), 'X'), surgery::SurgeryError);
}

TEST_CASE("front-level handle slide matches the congruence") {
    using namespace csurg::front;
    auto u = validate_front(testfronts::unknot());
    auto tre = validate_front(testfronts::rh_trefoil());
    for (const auto* kf : {&u, &tre}) {
        long long t_K = classical_invariants(*kf).tb;
        long long r_K = classical_invariants(*kf).rot_signed;
        for (int n = 1; n <= 3; ++n) {
            // slide over a split tb -1 unknot with coefficient -1/n: l = 0
            auto slid = front_handle_slide(*kf, u, n, 1);
            REQUIRE(slid.component_count() == 2);
            long long t_j = -1;
            // identify the surviving copy of j (the other component is k # J)
            int jc = -1, kc = -1;
            for (int c = 0; c < 2; ++c) {
                if (classical_invariants(slid, c).tb == t_j && jc < 0 &&
                    classical_invariants(slid, c).writhe == 0)
                    jc = c;
                else
                    kc = c;
            }
            REQUIRE(jc >= 0);
            REQUIRE(kc >= 0);
            auto inv = classical_invariants(slid, kc);
            long long dtb = -n + n * n * t_j;  // 2 eps n l + n eps_j + n^2 t_j, l = 0
            CHECK(inv.tb == t_K + dtb);
            // new linking with the slid-over component: l + eps(eps_j + n t_j)
            CHECK(abs(slid.linking(kc, jc)) == abs(int_of(-1 + n * t_j)));
            CHECK(std::llabs(inv.rot_signed) == std::llabs(r_K));  // rot_j = 0 here
        }
    }
}

TEST_CASE("scripted replay") {
    auto d = pair_diagram(Rat(1), Rat(-1));
    std::vector<Move> script;
    Move m;
    m.kind = Move::Kind::Cancel;
    m.i = 0;
    m.j = 1;
    script.push_back(m);
    auto out = replay(d, script);
    CHECK(out.size() == 0);
}
