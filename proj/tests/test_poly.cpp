#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csurg/front.hpp"
#include "csurg/pd.hpp"
#include "csurg/poly.hpp"
#include "fronts_common.hpp"

using namespace csurg;
using namespace csurg::poly;
using testfronts::rh_trefoil;
using testfronts::unknot;

namespace {

LaurentPoly lm(std::initializer_list<std::tuple<int, int, int>> terms) {
    LaurentPoly p(2);
    for (auto [a, b, c] : terms) p.add_term({a, b}, Int(c));
    return p;
}

LaurentPoly zpoly(std::initializer_list<std::pair<int, int>> terms) {
    LaurentPoly p(1);
    for (auto [e, c] : terms) p.add_term({e}, Int(c));
    return p;
}

pd::PDCode pd_of(const std::vector<front::FrontEvent>& ev) {
    return front::front_to_pd(front::validate_front(ev));
}

}  // namespace

TEST_CASE("laurent polynomial arithmetic") {
    auto a = lm({{1, 0, 2}, {0, 1, -1}});
    auto b = lm({{-1, 0, 1}});
    CHECK((a * b) == lm({{0, 0, 2}, {-1, 1, -1}}));
    CHECK((a + a) == lm({{1, 0, 4}, {0, 1, -2}}));
    CHECK((a - a).is_zero());
    CHECK(a.shifted({2, 2}) == lm({{3, 2, 2}, {2, 3, -1}}));
}

TEST_CASE("homfly normalization and unlinks") {
    CHECK(homfly(pd_of(unknot())) == LaurentPoly::constant(2, 1));
    // two-component unlink: delta = -(l + l^-1)/m
    pd::PDCode two;
    two.unknots = 2;
    CHECK(homfly(two) == lm({{1, -1, -1}, {-1, -1, -1}}));
}

TEST_CASE("homfly of small links against hand-computed skein values") {
    // negative Hopf link from the unknot 2-copy (lk = -1):
    // P = (l^3 + l) m^-1 - l m
    auto u2 = front::reeb_pushoff(front::validate_front(unknot()), 2);
    CHECK(homfly(front::front_to_pd(u2)) == lm({{3, -1, 1}, {1, -1, 1}, {1, 1, -1}}));

    // maximal right trefoil: switch one crossing -> unknot, smooth -> Hopf+:
    // P = l^-2 m^2 - 2 l^-2 - l^-4
    CHECK(homfly(pd_of(rh_trefoil())) == lm({{-2, 2, 1}, {-2, 0, -2}, {-4, 0, -1}}));

    // the (-1,2)-cable of the standard unknot is the left trefoil:
    // mirror polynomial l^2 m^2 - 2 l^2 - l^4
    auto lh = front::legendrian_satellite(front::validate_front(unknot()),
                                          front::cable_pattern(-1, 2));
    CHECK(homfly(front::front_to_pd(lh)) == lm({{2, 2, 1}, {2, 0, -2}, {4, 0, -1}}));
}

TEST_CASE("conway and alexander") {
    CHECK(conway(pd_of(unknot())) == LaurentPoly::constant(1, 1));
    CHECK(conway(pd_of(rh_trefoil())) == zpoly({{2, 1}, {0, 1}}));  // z^2 + 1

    // split links vanish
    pd::PDCode two;
    two.unknots = 2;
    CHECK(conway(two).is_zero());

    // trefoil alexander: t - 1 + 1/t (exponents in t^(1/2) units)
    auto alex = alexander(pd_of(rh_trefoil()));
    CHECK(alex == zpoly({{2, 1}, {0, -1}, {-2, 1}}));

    // mirror-invariance of conway on the two trefoils
    auto lh = front::legendrian_satellite(front::validate_front(unknot()),
                                          front::cable_pattern(-1, 2));
    CHECK(conway(front::front_to_pd(lh)) == zpoly({{2, 1}, {0, 1}}));
}

TEST_CASE("homfly specializes to conway") {
    std::vector<pd::PDCode> corpus{
        pd_of(unknot()), pd_of(rh_trefoil()),
        front::front_to_pd(front::reeb_pushoff(front::validate_front(unknot()), 2)),
        front::front_to_pd(front::legendrian_satellite(front::validate_front(unknot()),
                                                       front::cable_pattern(-1, 2))),
        front::front_to_pd(front::legendrian_satellite(front::validate_front(rh_trefoil()),
                                                       front::cable_pattern(+1, 2)))};
    for (const auto& pd : corpus) CHECK(homfly_to_conway(homfly(pd)) == conway(pd));
}

TEST_CASE("canonical pd") {
    auto t = pd_of(rh_trefoil());
    // relabel all edges by a rotation
    pd::PDCode shifted = t;
    int m = 0;
    for (auto& c : shifted.crossings)
        for (int v : c) m = std::max(m, v);
    for (auto& c : shifted.crossings)
        for (auto& v : c) v = v % m + 1;
    CHECK(pd::canonical_pd(t) == pd::canonical_pd(shifted));

    auto lh = front::front_to_pd(front::legendrian_satellite(front::validate_front(unknot()),
                                                             front::cable_pattern(-1, 2)));
    auto lh5 = pd::canonical_pd(lh);
    // mirror trefoil has a different canonical form; compare via 3-crossing
    // subrepresentatives by checking the polynomials differ
    CHECK(homfly(lh) != homfly(t));

    // invariance of the polynomial under relabeling
    CHECK(homfly(shifted) == homfly(t));

    // stable canonical form for the unknot token
    pd::PDCode u;
    u.unknots = 1;
    CHECK(pd::canonical_pd(u) == u);
}

TEST_CASE("resource guard") {
    auto big = front::reeb_pushoff(front::validate_front(rh_trefoil()), 3);
    CHECK_THROWS_AS(homfly(front::front_to_pd(big)), SkeinError);
}

TEST_CASE("homfly is invariant under front moves") {
    auto base = rh_trefoil();
    auto p0 = homfly(pd_of(base));
    auto birthed = front::move_swallowtail_birth(base, 3, 1, true);
    REQUIRE(birthed.has_value());
    CHECK(homfly(pd_of(*birthed)) == p0);
    auto pushed = front::move_rcusp_up(base, 5);
    REQUIRE(pushed.has_value());
    CHECK(homfly(pd_of(*pushed)) == p0);
}
