#include "csurg/poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace csurg::poly {

LaurentPoly LaurentPoly::constant(int arity, const Int& c) {
    LaurentPoly p(arity);
    p.add_term(Exp(arity, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const Exp& e, const Int& c) {
    LaurentPoly p(int(e.size()));
    p.add_term(e, c);
    return p;
}

void LaurentPoly::add_term(const Exp& e, const Int& c) {
    if (int(e.size()) != arity_) throw SkeinError("exponent arity mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r(arity_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exp e(arity_);
            for (int i = 0; i < arity_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

LaurentPoly LaurentPoly::shifted(const Exp& e) const {
    LaurentPoly r(arity_);
    for (const auto& [e1, c] : terms_) {
        Exp e2(arity_);
        for (int i = 0; i < arity_; ++i) e2[i] = e1[i] + e[i];
        r.add_term(e2, c);
    }
    return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
    LaurentPoly r = constant(arity_, 1);
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
}

LaurentPoly LaurentPoly::substitute_single(const LaurentPoly& value) const {
    if (arity_ != 1 || value.arity() != 1) throw SkeinError("substitute needs 1-variable input");
    LaurentPoly r(1);
    for (const auto& [e, c] : terms_) {
        int k = e[0];
        if (k < 0) throw SkeinError("negative power in substitution");
        r = r + value.pow(k) * constant(1, c);
    }
    return r;
}

std::string LaurentPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int a = c;
        if (!first) os << (a >= 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        first = false;
        if (a < 0) a = -a;
        bool unit = a == 1;
        bool any_var = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
        if (!unit || !any_var) os << a.get_str();
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << names[i];
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

namespace {

using pd::Crossing;
using pd::Diagram;
using pd::PDCode;

// Renumbered working diagram: edges consecutive along traversal, closed
// circles without crossings folded into `unknots`, component walk order
// fixed by smallest edge.
Diagram tidy(const Diagram& d) {
    // entering map over original edge ids
    std::map<int, std::pair<int, bool>> enters;  // edge -> (crossing, under?)
    for (int k = 0; k < int(d.crossings.size()); ++k) {
        enters[d.crossings[k].under_in] = {k, true};
        enters[d.crossings[k].over_in] = {k, false};
    }
    Diagram out;
    out.unknots = d.unknots;
    out.crossings.assign(d.crossings.size(), Crossing{});
    for (size_t k = 0; k < d.crossings.size(); ++k) out.crossings[k].sign = d.crossings[k].sign;

    std::map<int, bool> seen;
    std::vector<int> starts;  // segment starts: out-edges of crossings
    for (const auto& c : d.crossings) {
        starts.push_back(c.under_out);
        starts.push_back(c.over_out);
    }
    std::sort(starts.begin(), starts.end());

    int next_label = 1;
    for (int s : starts) {
        if (seen.count(s)) continue;
        // passes of this component, in traversal order from s
        std::vector<std::pair<int, bool>> passes;
        int e = s;
        do {
            seen[e] = true;
            auto it = enters.find(e);
            if (it == enters.end()) {
                e = d.next_edge.at(e);
            } else {
                auto [k, under] = it->second;
                passes.emplace_back(k, under);
                e = under ? d.crossings[k].under_out : d.crossings[k].over_out;
            }
        } while (e != s);
        int first = next_label;
        int m = int(passes.size());
        for (int i = 0; i < m; ++i) {
            auto [k, under] = passes[i];
            int in_label = first + i;
            int out_label = first + (i + 1) % m;
            if (under) {
                out.crossings[k].under_in = in_label;
                out.crossings[k].under_out = out_label;
            } else {
                out.crossings[k].over_in = in_label;
                out.crossings[k].over_out = out_label;
            }
        }
        next_label = first + m;
    }
    // circles with no crossing at all
    for (int e = 0; e < int(d.next_edge.size()); ++e) {
        if (d.next_edge[e] == 0 || seen.count(e)) continue;
        int x = e;
        while (!seen.count(x)) {
            seen[x] = true;
            x = d.next_edge.at(x);
        }
        ++out.unknots;
    }
    out.edge_count = next_label - 1;
    out.next_edge.assign(out.edge_count + 1, 0);
    for (const auto& c : out.crossings) {
        out.next_edge[c.under_in] = c.under_out;
        out.next_edge[c.over_in] = c.over_out;
    }
    return out;
}

// first crossing met on its under strand along the canonical traversal,
// or -1 when the diagram is descending
int first_bad_crossing(const Diagram& d) {
    std::map<int, std::pair<int, bool>> enters;
    for (int k = 0; k < int(d.crossings.size()); ++k) {
        enters[d.crossings[k].under_in] = {k, true};
        enters[d.crossings[k].over_in] = {k, false};
    }
    std::vector<bool> visited(d.crossings.size(), false);
    std::vector<bool> edge_seen(d.edge_count + 1, false);
    for (int s = 1; s <= d.edge_count; ++s) {
        if (edge_seen[s] || d.next_edge[s] == 0) continue;
        int e = s;
        do {
            edge_seen[e] = true;
            auto [k, under] = enters.at(e);
            if (!visited[k]) {
                if (under) return k;
                visited[k] = true;
            }
            e = under ? d.crossings[k].under_out : d.crossings[k].over_out;
        } while (e != s);
    }
    return -1;
}

Diagram switch_crossing(const Diagram& d, int k) {
    Diagram out = d;
    auto& c = out.crossings[k];
    std::swap(c.under_in, c.over_in);
    std::swap(c.under_out, c.over_out);
    c.sign = -c.sign;
    return out;
}

Diagram smooth_crossing(const Diagram& d, int k) {
    Diagram out = d;
    const auto& c = d.crossings[k];
    out.next_edge[c.under_in] = c.over_out;
    out.next_edge[c.over_in] = c.under_out;
    out.crossings.erase(out.crossings.begin() + k);
    return out;
}

int circle_count(const Diagram& d) { return d.component_count() + d.unknots; }

template <typename Engine>
LaurentPoly skein_eval(const PDCode& pd, Engine&& eng, int max_crossings) {
    Diagram d0 = pd::resolve(pd);
    if (int(d0.crossings.size()) > max_crossings)
        throw SkeinError("diagram too large for the skein engine (" +
                         std::to_string(d0.crossings.size()) + " crossings)");
    if (d0.crossings.empty() && d0.unknots == 0)
        throw SkeinError("empty link");
    std::map<std::string, LaurentPoly> memo;
    std::function<LaurentPoly(const Diagram&)> rec = [&](const Diagram& din) -> LaurentPoly {
        Diagram d = tidy(din);
        PDCode as_pd = pd::to_pd(d);
        std::string key;
        if (circle_count(d) <= 3) {
            PDCode canon = pd::canonical_pd(as_pd);
            canon.unknots = d.unknots;
            key = pd::pd_key(canon);
        } else {
            key = pd::pd_key(as_pd);
        }
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        LaurentPoly result;
        int bad = first_bad_crossing(d);
        if (bad < 0) {
            result = eng.unlink(circle_count(d));
        } else {
            int sign = d.crossings[bad].sign;
            LaurentPoly ps = rec(switch_crossing(d, bad));
            LaurentPoly p0 = rec(smooth_crossing(d, bad));
            result = eng.combine(sign, ps, p0);
        }
        memo.emplace(std::move(key), result);
        return result;
    };
    return rec(d0);
}

struct HomflyEngine {
    // delta = -(l + l^-1) / m
    LaurentPoly delta() const {
        LaurentPoly p(2);
        p.add_term({1, -1}, -1);
        p.add_term({-1, -1}, -1);
        return p;
    }
    LaurentPoly unlink(int circles) const {
        LaurentPoly r = LaurentPoly::constant(2, 1);
        for (int i = 1; i < circles; ++i) r = r * delta();
        return r;
    }
    LaurentPoly combine(int sign, const LaurentPoly& switched, const LaurentPoly& smoothed) const {
        LaurentPoly r(2);
        if (sign > 0) {
            // P+ = -l^-2 P- - l^-1 m P0
            r = r - switched.shifted({-2, 0}) - smoothed.shifted({-1, 1});
        } else {
            // P- = -l^2 P+ - l m P0
            r = r - switched.shifted({2, 0}) - smoothed.shifted({1, 1});
        }
        return r;
    }
};

struct ConwayEngine {
    LaurentPoly unlink(int circles) const {
        return circles == 1 ? LaurentPoly::constant(1, 1) : LaurentPoly(1);
    }
    LaurentPoly combine(int sign, const LaurentPoly& switched, const LaurentPoly& smoothed) const {
        // P+ - P- = z P0
        if (sign > 0) return switched + smoothed.shifted({1});
        return switched - smoothed.shifted({1});
    }
};

}  // namespace

LaurentPoly homfly(const pd::PDCode& pd, int max_crossings) {
    return skein_eval(pd, HomflyEngine{}, max_crossings);
}

LaurentPoly conway(const pd::PDCode& pd, int max_crossings) {
    return skein_eval(pd, ConwayEngine{}, max_crossings);
}

LaurentPoly alexander(const pd::PDCode& pd, int max_crossings) {
    LaurentPoly c = conway(pd, max_crossings);
    LaurentPoly s(1);
    s.add_term({1}, 1);
    s.add_term({-1}, -1);  // t^(1/2) - t^(-1/2)
    return c.substitute_single(s);
}

LaurentPoly homfly_to_conway(const LaurentPoly& h) {
    if (h.arity() != 2) throw SkeinError("homfly_to_conway expects a 2-variable polynomial");
    // l = i, m = -i z over Gaussian integers; the imaginary part must vanish.
    std::map<int, std::pair<Int, Int>> acc;  // z-power -> (re, im)
    for (const auto& [e, c] : h.terms()) {
        int a = e[0], b = e[1];
        // i^(a+b) * (-1)^b
        int r = ((a + b) % 4 + 4) % 4;
        Int re(0), im(0);
        switch (r) {
            case 0: re = 1; break;
            case 1: im = 1; break;
            case 2: re = -1; break;
            case 3: im = -1; break;
        }
        if (b % 2 != 0) { re = -re; im = -im; }
        acc[b].first += c * re;
        acc[b].second += c * im;
    }
    LaurentPoly out(1);
    for (const auto& [k, ri] : acc) {
        if (ri.second != 0) throw SkeinError("homfly specialization has nonzero imaginary part");
        if (ri.first != 0) out.add_term({k}, ri.first);
    }
    return out;
}

}  // namespace csurg::poly
