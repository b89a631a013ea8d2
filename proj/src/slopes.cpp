#include "csurg/slopes.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace csurg::slopes {

using invariants::d3;
using invariants::D3Value;
using invariants::euler_class;
using surgery::SurgeryComponent;
using surgery::SurgeryDiagram;

bool KnotClass::realizable(long long t, long long r) const {
    for (auto [t0, r0] : peaks) {
        if (t > t0) continue;
        long long k = t0 - t;
        if (std::llabs(r - r0) <= k && (r - r0 + k) % 2 == 0) return true;
    }
    return false;
}

std::vector<long long> KnotClass::rots_at(long long t) const {
    std::set<long long> rs;
    for (auto [t0, r0] : peaks) {
        if (t > t0) continue;
        long long k = t0 - t;
        for (long long r = r0 - k; r <= r0 + k; r += 2) rs.insert(r);
    }
    return {rs.begin(), rs.end()};
}

long long KnotClass::max_tb() const {
    long long m = peaks.front().first;
    for (auto& p : peaks) m = std::max(m, p.first);
    return m;
}

KnotClass KnotClass::get(KnotTag t) {
    KnotClass k;
    k.tag = t;
    k.smooth_characterized = true;
    switch (t) {
        case KnotTag::Unknot:
            k.name = "unknot";
            k.peaks = {{-1, 0}};
            k.definite_filling_gate = true;
            break;
        case KnotTag::RHTrefoil:
            k.name = "rh_trefoil";
            k.peaks = {{1, 0}};
            break;
        case KnotTag::LHTrefoil:
            k.name = "lh_trefoil";
            k.peaks = {{-6, 1}, {-6, -1}};
            break;
        case KnotTag::Fig8:
            k.name = "fig8";
            k.peaks = {{-3, 0}};
            break;
        case KnotTag::Custom:
            throw SlopeError(SlopeError::Code::UnknownClass, "custom class needs an explicit table");
    }
    return k;
}

KnotClass KnotClass::custom(std::string name,
                            std::vector<std::pair<long long, long long>> peaks) {
    if (peaks.empty())
        throw SlopeError(SlopeError::Code::UnknownClass, "custom class without peaks");
    KnotClass k;
    k.tag = KnotTag::Custom;
    k.name = std::move(name);
    k.peaks = std::move(peaks);
    k.smooth_characterized = false;
    return k;
}

namespace {

SurgeryDiagram single(long long t, long long r, const Rat& slope) {
    std::vector<SurgeryComponent> comps{SurgeryComponent::abstract("L", t, r, slope)};
    return SurgeryDiagram(std::move(comps), IMat(1, 1));
}

Int homology_order(long long t, const Rat& slope) {
    Rat topo = slope + Rat(int_of(t));
    return abs(num(topo));  // |p + q t|
}

std::vector<D3Value> d3_set(long long t, long long r, const Rat& slope) {
    return d3(single(t, r, slope));
}

std::multiset<D3Value> d3_multiset(long long t, long long r, const Rat& slope) {
    auto v = d3_set(t, r, slope);
    return {v.begin(), v.end()};
}

// euler orders over branches, plus coordinate multisets mod the homology
// order with both orientation signs
struct EulerData {
    std::multiset<Int> orders;
    std::multiset<std::vector<Int>> coords;
};

EulerData euler_data(long long t, long long r, const Rat& slope) {
    EulerData e;
    for (const auto& el : euler_class(single(t, r, slope))) {
        e.orders.insert(el.order);
        e.coords.insert(el.coords);
    }
    return e;
}

std::string rat_or_marker(const D3Value& v) {
    return v.torsion ? rat_str(v.value) : std::string("nontorsion");
}

}  // namespace

std::vector<long long> homology_candidates(long long t, const Rat& slope) {
    if (slope == 0) throw SlopeError(SlopeError::Code::BadSlope, "slope must be nonzero");
    Int p = num(slope), q = den(slope);
    std::vector<long long> out{t};
    // p + q t' = -(p + q t)  =>  t' = (-2p - q t) / q
    Int numr = -2 * p - q * int_of(t);
    if (numr % q == 0) {
        long long t2 = Int(numr / q).get_si();
        if (t2 != t) out.push_back(t2);
    }
    if (p + q * int_of(t) == 0) return {t};
    return out;
}

DiophantineResult d3_diophantine(long long t, long long r, const Rat& slope, long long t_dual) {
    DiophantineResult res;
    // d3 on the dual branch as a function of rot^2: evaluate at rot = 0, 1
    auto base = d3_set(t_dual, 0, slope);
    auto bump = d3_set(t_dual, 1, slope);
    if (base.size() != 1 || bump.size() != 1 || !base[0].torsion || !bump[0].torsion)
        throw SlopeError(SlopeError::Code::BadSlope,
                         "diophantine reduction needs a single torsion branch");
    Rat a = base[0].value;
    Rat b = bump[0].value - a;
    auto target = d3_set(t, r, slope);
    if (target.size() != 1 || !target[0].torsion)
        throw SlopeError(SlopeError::Code::BadSlope, "query d3 is not a single torsion value");
    res.rhs = (target[0].value - a) / b;
    res.rhs.canonicalize();
    if (is_integer(res.rhs) && res.rhs >= 0) {
        Int root;
        if (perfect_square(num(res.rhs), root)) {
            long long rr = root.get_si();
            if (((rr - (t_dual + 1)) % 2 + 2) % 2 == 0) {
                res.integral = true;
                res.roots.push_back(rr);
            }
        }
    }
    return res;
}

bool euler_eliminates(long long t, long long r, long long t2, long long r2, const Rat& slope) {
    Int H = homology_order(t, slope);
    Int w = den(slope);  // meridian weight n
    auto mod = [&](Int x) {
        if (H == 0) return x;  // free part: compare on the nose
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), H.get_mpz_t());
        return x;
    };
    Int e1 = mod(w * int_of(r)), e1m = mod(-w * int_of(r));
    Int e2 = mod(w * int_of(r2)), e2m = mod(-w * int_of(r2));
    bool match = (e2 == e1) || (e2 == e1m) || (e2m == e1) || (e2m == e1m);
    return !match;
}

ObstructionReport check_characterizing(const KnotClass& cls, long long t, long long r,
                                       const Rat& slope) {
    if (slope == 0) throw SlopeError(SlopeError::Code::BadSlope, "slope must be nonzero");
    ObstructionReport rep;
    rep.cls = cls.tag;
    rep.class_name = cls.name;
    rep.tb = t;
    rep.rot = r;
    rep.slope = slope;

    if (!cls.realizable(t, r)) {
        rep.chain.push_back({"realizable", "fail", "no such Legendrian representative"});
        rep.verdict = Verdict::OutOfScope;
        return rep;
    }
    if (!cls.smooth_characterized) {
        rep.chain.push_back({"smooth_gate", "unavailable", "class lacks a smooth characterization"});
        rep.verdict = Verdict::OutOfScope;
        return rep;
    }
    // special slopes on the unknot: topological 0 (property R) and 1/q
    // (Gordon-Luecke) pin the smooth type regardless of the slope's size
    Rat topo = slope + Rat(int_of(t));
    bool special_s3 = cls.tag == KnotTag::Unknot && (topo == 0 || abs(num(topo)) == 1);
    if (special_s3) {
        rep.chain.push_back({"smooth_gate", "ok",
                             topo == 0 ? "property R pins the surgery description"
                                       : "Gordon-Luecke pins the surgery description"});
    } else if (slope >= 4) {
        // positive surgeries on stabilized knots turn overtwisted; the tight
        // obstruction chain has no traction out here
        std::ostringstream os;
        os << "contact slope " << rat_str(slope) << " >= 4: outside the method's range";
        rep.chain.push_back({"slope_range", "fail", os.str()});
        rep.verdict = Verdict::OutOfScope;
        return rep;
    }

    auto cands = homology_candidates(t, slope);
    {
        std::ostringstream os;
        os << "t' in {";
        for (size_t i = 0; i < cands.size(); ++i) os << (i ? ", " : "") << cands[i];
        os << "}";
        rep.chain.push_back({"homology", "ok", os.str()});
    }

    Int p = num(slope), q = den(slope);
    auto my_d3 = d3_multiset(t, r, slope);
    auto my_euler = euler_data(t, r, slope);

    for (long long t2 : cands) {
        if (t2 == t) {
            // same topological slope: the smooth characterization pins the
            // knot type, the classification pins the range of r'
            rep.chain.push_back({"smooth_gate", "ok", "same-slope branch confined to the class"});
            for (long long r2 : cls.rots_at(t)) {
                if (r2 == r || r2 == -r) continue;
                if (euler_eliminates(t, r, t, r2, slope)) {
                    std::ostringstream os;
                    os << "r' = " << r2 << " eliminated mod " << homology_order(t, slope).get_str();
                    rep.chain.push_back({"euler", "eliminated", os.str()});
                    continue;
                }
                if (d3_multiset(t, r2, slope) != my_d3) {
                    std::ostringstream os;
                    os << "r' = " << r2 << " eliminated by d3";
                    rep.chain.push_back({"d3", "eliminated", os.str()});
                    continue;
                }
                auto other = euler_data(t, r2, slope);
                if (other.orders != my_euler.orders) {
                    std::ostringstream os;
                    os << "r' = " << r2 << " eliminated by euler branch data";
                    rep.chain.push_back({"euler_set", "eliminated", os.str()});
                    continue;
                }
                rep.survivors.push_back({t, r2});
                std::ostringstream os;
                os << "(" << t << ", " << r2 << ") not separated";
                rep.chain.push_back({"same_tb", "survives", os.str()});
            }
            continue;
        }
        // dual homology branch
        if (special_s3) {
            // the dual knot is again an unknot; compare the branch data over
            // its realizable rotation numbers
            bool any = false;
            for (long long r2 : cls.rots_at(t2)) {
                if (d3_multiset(t2, r2, slope) != my_d3) continue;
                auto other = euler_data(t2, r2, slope);
                if (other.orders != my_euler.orders) continue;
                rep.survivors.push_back({t2, r2});
                any = true;
            }
            std::ostringstream os;
            os << "dual unknot branch t' = " << t2 << (any ? " has survivors" : " eliminated by d3");
            rep.chain.push_back({"dual_branch", any ? "survives" : "eliminated", os.str()});
            continue;
        }
        if (q == 1 && slope <= -1 && cls.definite_filling_gate) {
            rep.chain.push_back({"definite_filling", "eliminated",
                                 "dual branch bounds a definite filling of a lens space"});
            continue;
        }
        if (q > 2) continue;  // no integral dual tb
        if (q == 2) {
            // lens space surgeries on a torus knot need contact coefficient
            // >= 4 on the positive side and < -4 smooth on the negative side
            if (slope < 4) {
                rep.chain.push_back(
                    {"cyclic_surgery", "eliminated",
                     "half-integer dual needs a torus knot; slope arithmetic rules it out"});
                continue;
            }
        }
        if (q == 1) {
            DiophantineResult dio = d3_diophantine(t, r, slope, t2);
            if (!dio.integral) {
                std::ostringstream os;
                os << "r'^2 = " << rat_str(dio.rhs) << " has no admissible integer root";
                rep.chain.push_back({"d3_diophantine", "eliminated", os.str()});
                continue;
            }
            for (long long r2 : dio.roots) {
                if (euler_eliminates(t, r, t2, r2, slope) &&
                    euler_eliminates(t, r, t2, -r2, slope)) {
                    std::ostringstream os;
                    os << "r' = " << r2 << " eliminated mod " << homology_order(t, slope).get_str();
                    rep.chain.push_back({"euler", "eliminated", os.str()});
                    continue;
                }
                rep.survivors.push_back({t2, r2});
                std::ostringstream os;
                os << "(" << t2 << ", " << r2 << ") passes homology, d3 and euler";
                rep.chain.push_back({"dual_branch", "survives", os.str()});
            }
        }
    }

    rep.verdict = rep.survivors.empty() ? Verdict::Certified : Verdict::Survives;
    return rep;
}

OvertwistedVerdict overtwisted_equality(long long t, long long r, long long t2, long long r2,
                                        const Rat& slope) {
    if (slope <= 0) throw SlopeError(SlopeError::Code::BadSlope, "rule applies to positive slopes");
    if (homology_order(t, slope) != homology_order(t2, slope)) return OvertwistedVerdict::Inconclusive;
    auto d1 = d3_multiset(t, r, slope);
    auto d2 = d3_multiset(t2, r2, slope);
    if (d1 != d2) return OvertwistedVerdict::Inconclusive;
    auto e1 = euler_data(t, r, slope);
    auto e2 = euler_data(t2, r2, slope);
    if (e1.orders != e2.orders) return OvertwistedVerdict::Inconclusive;
    // coordinate comparison up to a global orientation flip
    auto flip = [](const std::multiset<std::vector<Int>>& s, const Int& H) {
        std::multiset<std::vector<Int>> out;
        for (auto v : s) {
            for (auto& x : v) {
                x = -x;
                if (H != 0) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), H.get_mpz_t());
            }
            out.insert(v);
        }
        return out;
    };
    Int H = homology_order(t, slope);
    if (e1.coords != e2.coords && flip(e1.coords, H) != e2.coords)
        return OvertwistedVerdict::Inconclusive;
    return OvertwistedVerdict::Contactomorphic;
}

RecoveryReport lemma41_recovery(int n, long long t, long long r, long long grid) {
    RecoveryReport rep;
    rep.n = n;
    rep.tb = t;
    rep.rot = r;
    std::set<std::pair<long long, long long>> found;
    for (int s : {+1, -1}) {
        Rat slope = make_rat(s, n);
        auto my = d3_multiset(t, r, slope);
        Int H = homology_order(t, slope);
        for (long long t2 = -grid; t2 <= grid; ++t2) {
            if (homology_order(t2, slope) != H) continue;
            for (long long r2 = -grid; r2 <= grid; ++r2) {
                if (((r2 - (t2 + 1)) % 2 + 2) % 2 != 0) continue;
                if (d3_multiset(t2, r2, slope) == my) found.insert({t2, std::llabs(r2)});
            }
        }
    }
    for (auto [a, b] : found) rep.matches.push_back({a, b});
    rep.unique = found.size() == 1 && found.count({t, std::llabs(r)}) == 1;
    return rep;
}

}  // namespace csurg::slopes
